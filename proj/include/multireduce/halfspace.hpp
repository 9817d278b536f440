#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace multireduce::halfspace {

// Linear separator over R^d with bias: predicts sign(<w, (x,1)>), sign(0) = +1.
// weights has length d+1, the last coordinate being the bias.
struct Halfspace {
    std::vector<double> weights;

    int dim() const { return static_cast<int>(weights.size()) - 1; }
};

// Labeled binary sample; labels are -1/+1 and all points share one dimension.
struct BinarySample {
    std::vector<std::vector<double>> xs;
    std::vector<int> ys;

    std::size_t size() const { return xs.size(); }
    int dim() const { return xs.empty() ? 0 : static_cast<int>(xs[0].size()); }
};

double raw_score(const Halfspace& h, const std::vector<double>& x);
int predict(const Halfspace& h, const std::vector<double>& x);

// Fraction of misclassified points. Throws on an empty sample.
double empirical_error(const Halfspace& h, const BinarySample& sample);

struct LearnerConfig {
    std::int64_t perceptron_budget = 1'000'000;  // mistake updates before giving up
    int restarts = 8;
    int epochs = 60;
    double step0 = 1.0;
};

// Perceptron run to consistency. Returns a zero-training-error halfspace or
// throws not_realizable_error once the update budget is exhausted (which does
// not prove non-separability).
Halfspace train_realizable(const BinarySample& sample, std::int64_t budget = 1'000'000);

// Best-of-restarts subgradient descent on the hinge surrogate with 1/sqrt(t)
// steps; the returned candidate is selected by 0-1 training error (the two
// constant classifiers are always in the candidate pool). Deterministic in seed.
Halfspace train_erm_approx(const BinarySample& sample, const LearnerConfig& cfg, std::uint64_t seed);

// Exact minimum weighted 0-1 error over all halfspaces, d in {1,2} only.
// Duplicate points are coalesced into weighted points first; the enumeration
// is over all combinatorially distinct separators (d=1: all prefix/suffix
// threshold classifiers; d=2: lines through point pairs with +-eps normal
// shifts and +-theta rotations about each endpoint, both orientations, plus
// the two constants).
struct OracleResult {
    double error = 0.0;
    Halfspace h;
};
OracleResult exact_best_error(const BinarySample& sample);

}  // namespace multireduce::halfspace
