#include "multireduce/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "multireduce/rng.hpp"

namespace multireduce::synth {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> uniform_probs(int k) {
    return std::vector<double>(k, 1.0 / static_cast<double>(k));
}

void validate(const SyntheticDistribution& d) {
    if (d.k < 2) throw std::invalid_argument("distribution: k must be >= 2");
    if (d.d < 1) throw std::invalid_argument("distribution: d must be >= 1");
    if (static_cast<int>(d.class_probabilities.size()) != d.k)
        throw std::invalid_argument("distribution: probability vector must have length k");
    double s = std::accumulate(d.class_probabilities.begin(), d.class_probabilities.end(), 0.0);
    if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument("distribution: probabilities must sum to 1");
    if (d.kind != DistKind::Sector3) {
        if (static_cast<int>(d.centers.size()) != d.k)
            throw std::invalid_argument("distribution: need one center per class");
        for (const auto& c : d.centers)
            if (static_cast<int>(c.size()) != d.d)
                throw std::invalid_argument("distribution: center dimension mismatch");
    }
}
}  // namespace

double SyntheticDistribution::max_class_mass() const {
    return *std::max_element(class_probabilities.begin(), class_probabilities.end());
}

bool SyntheticDistribution::within_mass_regime(double bound) const {
    return max_class_mass() <= bound / static_cast<double>(k) + 1e-12;
}

SyntheticDistribution point_classes(std::vector<std::vector<double>> centers,
                                    std::vector<double> probabilities, double jitter) {
    SyntheticDistribution d;
    d.kind = DistKind::PointClasses;
    d.k = static_cast<int>(centers.size());
    d.d = centers.empty() ? 0 : static_cast<int>(centers[0].size());
    d.centers = std::move(centers);
    d.class_probabilities = probabilities.empty() ? uniform_probs(d.k) : std::move(probabilities);
    d.jitter = jitter;
    validate(d);
    return d;
}

SyntheticDistribution two_points() { return point_classes({{0.0, 0.7}, {0.7, 0.0}}); }

SyntheticDistribution circle_points(int k) {
    if (k < 2) throw std::invalid_argument("circle_points: k must be >= 2");
    std::vector<std::vector<double>> centers;
    centers.reserve(k);
    for (int i = 0; i < k; ++i) {
        double a = kTwoPi * i / k;
        centers.push_back({std::cos(a), std::sin(a)});
    }
    auto d = point_classes(std::move(centers));
    d.kind = DistKind::CirclePoints;
    return d;
}

SyntheticDistribution sector3() {
    SyntheticDistribution d;
    d.kind = DistKind::Sector3;
    d.k = 3;
    d.d = 2;
    d.class_probabilities = uniform_probs(3);
    return d;
}

SyntheticDistribution random_points(int k, int d, std::uint64_t seed, bool with_center) {
    if (k < 2) throw std::invalid_argument("random_points: k must be >= 2");
    if (d != 1 && d != 2) throw std::invalid_argument("random_points: d must be 1 or 2");
    Rng rng = make_rng(seed);
    std::vector<std::vector<double>> centers;
    centers.reserve(k);
    for (int i = 0; i < k; ++i) {
        if (d == 1) {
            centers.push_back({uniform_real(rng, -1.0, 1.0)});
        } else {
            auto [x, y] = uniform_disc(rng);
            centers.push_back({x, y});
        }
    }
    if (with_center) {
        std::vector<double> c(d, 0.0);
        for (int i = 0; i + 1 < k; ++i)
            for (int j = 0; j < d; ++j) c[j] += centers[i][j] / static_cast<double>(k - 1);
        centers.back() = c;
    }
    auto dist = point_classes(std::move(centers));
    dist.kind = DistKind::RandomPoints;
    return dist;
}

SyntheticDistribution cluster_points(int k, int num_locations, std::uint64_t seed) {
    if (num_locations < 1 || num_locations > k)
        throw std::invalid_argument("cluster_points: need 1 <= locations <= k");
    Rng rng = make_rng(seed);
    std::vector<std::vector<double>> locs;
    for (int i = 0; i < num_locations; ++i) {
        auto [x, y] = uniform_disc(rng);
        locs.push_back({x, y});
    }
    std::vector<std::vector<double>> centers(k);
    for (int i = 0; i < k; ++i) centers[i] = locs[i % num_locations];
    return point_classes(std::move(centers));
}

SyntheticDistribution simplex(int d) {
    if (d < 1) throw std::invalid_argument("simplex: d must be >= 1");
    std::vector<std::vector<double>> centers;
    centers.push_back(std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i) {
        std::vector<double> e(d, 0.0);
        e[i] = 1.0;
        centers.push_back(e);
    }
    auto dist = point_classes(std::move(centers));
    dist.kind = DistKind::Simplex;
    return dist;
}

namespace {
int sector_of(double x, double y) {
    double a = std::atan2(y, x);
    if (a < 0) a += kTwoPi;
    int s = static_cast<int>(a / (kTwoPi / 3.0));
    return std::min(s, 2) + 1;
}
}  // namespace

MulticlassSample sample(const SyntheticDistribution& dist, int n, std::uint64_t seed) {
    validate(dist);
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    Rng rng = make_rng(seed);
    MulticlassSample out;
    out.num_classes = dist.k;
    out.xs.reserve(n);
    out.ys.reserve(n);
    std::vector<double> cum(dist.k);
    double acc = 0.0;
    for (int i = 0; i < dist.k; ++i) {
        acc += dist.class_probabilities[i];
        cum[i] = acc;
    }
    for (int t = 0; t < n; ++t) {
        if (dist.kind == DistKind::Sector3) {
            auto [x, y] = uniform_disc(rng);
            out.xs.push_back({x, y});
            out.ys.push_back(sector_of(x, y));
            continue;
        }
        double u = uniform_real(rng, 0.0, 1.0);
        int cls = static_cast<int>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
        cls = std::min(cls, dist.k - 1);
        std::vector<double> x = dist.centers[cls];
        if (dist.jitter > 0)
            for (auto& c : x) c += gaussian(rng, 0.0, dist.jitter);
        out.xs.push_back(std::move(x));
        out.ys.push_back(cls + 1);
    }
    return out;
}

MulticlassSample support_sample(const SyntheticDistribution& dist) {
    validate(dist);
    if (dist.kind == DistKind::Sector3)
        throw std::invalid_argument("support_sample: distribution has continuous support");
    if (dist.jitter != 0.0)
        throw std::invalid_argument("support_sample: jitter must be zero");
    for (double p : dist.class_probabilities)
        if (std::abs(p - 1.0 / dist.k) > 1e-12)
            throw std::invalid_argument("support_sample: class masses must be uniform");
    MulticlassSample out;
    out.num_classes = dist.k;
    for (int i = 0; i < dist.k; ++i) {
        out.xs.push_back(dist.centers[i]);
        out.ys.push_back(i + 1);
    }
    return out;
}

LabelMap random_label_map(int k, double mu, LabelMapRule rule, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("random_label_map: k must be >= 1");
    if (!(mu > 0.0 && mu <= 0.5)) throw std::invalid_argument("random_label_map: mu must be in (0, 1/2]");
    Rng rng = make_rng(seed);
    LabelMap map;
    map.rule = rule;
    map.signs.assign(k, 1);
    if (rule == LabelMapRule::Iid) {
        for (int i = 0; i < k; ++i) map.signs[i] = uniform_real(rng, 0.0, 1.0) < mu ? -1 : 1;
    } else {
        int negatives = static_cast<int>(std::lround(mu * k));
        if (negatives < 1) throw std::invalid_argument("random_label_map: round(mu*k) must be >= 1");
        auto perm = random_permutation(k, rng);
        for (int i = 0; i < negatives; ++i) map.signs[perm[i]] = -1;
    }
    return map;
}

halfspace::BinarySample apply_label_map(const MulticlassSample& sample, const LabelMap& map) {
    halfspace::BinarySample out;
    out.xs = sample.xs;
    out.ys.reserve(sample.size());
    for (int y : sample.ys) {
        if (y < 1 || y > static_cast<int>(map.signs.size()))
            throw std::invalid_argument("apply_label_map: label out of range");
        out.ys.push_back(map(y));
    }
    return out;
}

}  // namespace multireduce::synth
