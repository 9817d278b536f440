#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multireduce/halfspace.hpp"
#include "multireduce/sample.hpp"

namespace multireduce::synth {

enum class DistKind { PointClasses, CirclePoints, Sector3, RandomPoints, Simplex };

// Seeded synthetic distribution over R^d x [k]. For the point-concentrated
// kinds each class i sits at centers[i-1] (plus optional Gaussian jitter);
// Sector3 draws x uniformly from the unit disc and labels by 120-degree sector.
struct SyntheticDistribution {
    DistKind kind = DistKind::PointClasses;
    int k = 2;
    int d = 2;
    std::vector<std::vector<double>> centers;       // one per class, unused for Sector3
    std::vector<double> class_probabilities;        // sums to 1
    double jitter = 0.0;

    double max_class_mass() const;
    // Lemma-style regime used by the label-map experiments: max_i p_i <= bound/k.
    bool within_mass_regime(double bound = 10.0) const;
};

SyntheticDistribution point_classes(std::vector<std::vector<double>> centers,
                                    std::vector<double> probabilities = {}, double jitter = 0.0);

// The two separated classes at (0, 0.7) and (0.7, 0).
SyntheticDistribution two_points();

// k classes at angles 2*pi*i/k on the unit circle, uniform class mass.
SyntheticDistribution circle_points(int k);

// d=2, k=3; x uniform in the unit disc, label = index of its 120-degree sector.
SyntheticDistribution sector3();

// k class centers sampled once from the seed (d=1: uniform on [-1,1];
// d=2: uniform in the unit disc). with_center replaces the last center by the
// centroid of the others, which puts one class strictly inside their hull.
SyntheticDistribution random_points(int k, int d, std::uint64_t seed, bool with_center = false);

// k classes spread round-robin over num_locations seeded centers (d=2).
SyntheticDistribution cluster_points(int k, int num_locations, std::uint64_t seed);

// d+1 classes on affinely independent points (origin plus unit vectors),
// uniform class mass 1/(d+1).
SyntheticDistribution simplex(int d);

MulticlassSample sample(const SyntheticDistribution& dist, int n, std::uint64_t seed);

// Exact finite-support view of a point-concentrated distribution: one sample
// point per class at its center. Only valid when jitter is zero and the class
// masses are uniform; used to evaluate errors on the distribution itself.
MulticlassSample support_sample(const SyntheticDistribution& dist);

enum class LabelMapRule { Iid, Exact };

// Random sign assignment phi: [k] -> {-1,+1}.
// Iid: each sign is -1 independently with probability mu.
// Exact: uniformly among assignments with exactly round(mu*k) entries -1.
struct LabelMap {
    std::vector<int> signs;  // index 0 holds phi(1)
    LabelMapRule rule = LabelMapRule::Exact;

    int operator()(int label) const { return signs[label - 1]; }
};

LabelMap random_label_map(int k, double mu, LabelMapRule rule, std::uint64_t seed);

halfspace::BinarySample apply_label_map(const MulticlassSample& sample, const LabelMap& map);

}  // namespace multireduce::synth
