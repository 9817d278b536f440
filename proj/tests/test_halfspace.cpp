#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "multireduce/errors.hpp"
#include "multireduce/halfspace.hpp"
#include "multireduce/rng.hpp"

using namespace multireduce;
using halfspace::BinarySample;
using halfspace::Halfspace;

namespace {

BinarySample xor_sample() {
    BinarySample s;
    s.xs = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    s.ys = {1, 1, -1, -1};
    return s;
}

BinarySample random_sample(int n, int d, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    BinarySample s;
    for (int i = 0; i < n; ++i) {
        std::vector<double> x(d);
        for (auto& c : x) c = uniform_real(rng, -1, 1);
        s.xs.push_back(std::move(x));
        s.ys.push_back(rademacher(rng));
    }
    return s;
}

// independent d=1 reference: the 2(n+1) threshold classifiers over gaps
double best_threshold_error_1d(const BinarySample& s) {
    std::vector<double> xs;
    for (const auto& x : s.xs) xs.push_back(x[0]);
    std::vector<double> cuts = {*std::min_element(xs.begin(), xs.end()) - 1};
    std::vector<double> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) cuts.push_back((sorted[i] + sorted[i + 1]) / 2);
    cuts.push_back(sorted.back() + 1);
    double best = 1.0;
    for (double c : cuts) {
        for (int orient : {1, -1}) {
            int wrong = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                int pred = orient * (xs[i] - c) >= 0 ? 1 : -1;
                wrong += (pred != s.ys[i]);
            }
            best = std::min(best, static_cast<double>(wrong) / s.size());
        }
    }
    return best;
}

}  // namespace

TEST_CASE("halfspace prediction conventions") {
    Halfspace zero{{0, 0, 0}};
    CHECK(halfspace::predict(zero, {3.0, -2.0}) == 1);  // sign(0) = +1

    Halfspace w{{1, 0}};
    CHECK(halfspace::predict(w, {-3.0}) == -1);
    CHECK(halfspace::predict(w, {2.0}) == 1);

    Halfspace bias{{0, 1}};
    CHECK(halfspace::predict(bias, {-100.0}) == 1);

    CHECK_THROWS_AS(halfspace::predict(w, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("positive scaling never changes predictions") {
    Rng rng = make_rng(1);
    for (int t = 0; t < 30; ++t) {
        Halfspace h{{gaussian(rng), gaussian(rng), gaussian(rng)}};
        Halfspace scaled = h;
        double c = uniform_real(rng, 0.1, 10.0);
        for (auto& w : scaled.weights) w *= c;
        std::vector<double> x = {gaussian(rng), gaussian(rng)};
        CHECK(halfspace::predict(h, x) == halfspace::predict(scaled, x));
    }
}

TEST_CASE("realizable training finds consistent separators") {
    BinarySample s;
    s.xs = {{-1.0}, {1.0}};
    s.ys = {-1, 1};
    auto h = halfspace::train_realizable(s);
    CHECK(halfspace::empirical_error(h, s) == 0.0);

    BinarySample single;
    single.xs = {{0.3, -0.4}};
    single.ys = {-1};
    CHECK(halfspace::empirical_error(halfspace::train_realizable(single), single) == 0.0);

    CHECK_THROWS_AS(halfspace::train_realizable(xor_sample(), 20000), not_realizable_error);
    CHECK_THROWS_AS(halfspace::train_realizable(BinarySample{}), std::invalid_argument);
}

TEST_CASE("approximate training on easy and impossible samples") {
    BinarySample allpos;
    allpos.xs = {{0.0, 0.0}, {1.0, 2.0}, {-3.0, 0.5}};
    allpos.ys = {1, 1, 1};
    auto h = halfspace::train_erm_approx(allpos, {}, 3);
    CHECK(halfspace::empirical_error(h, allpos) == 0.0);

    auto hx = halfspace::train_erm_approx(xor_sample(), {}, 5);
    CHECK(halfspace::empirical_error(hx, xor_sample()) == doctest::Approx(0.25));

    // separable: matches the realizable trainer
    Rng rng = make_rng(9);
    for (int t = 0; t < 5; ++t) {
        BinarySample s;
        for (int i = 0; i < 60; ++i) {
            double x = uniform_real(rng, -1, 1), y = uniform_real(rng, -1, 1);
            s.xs.push_back({x, y});
            s.ys.push_back(x + 2 * y - 0.1 >= 0 ? 1 : -1);
        }
        auto ha = halfspace::train_erm_approx(s, {}, 100 + t);
        CHECK(halfspace::empirical_error(ha, s) == 0.0);
    }
}

TEST_CASE("approximate training is deterministic in the seed") {
    auto s = random_sample(50, 2, 4);
    auto a = halfspace::train_erm_approx(s, {}, 11);
    auto b = halfspace::train_erm_approx(s, {}, 11);
    CHECK(a.weights == b.weights);
}

TEST_CASE("exact oracle on canonical configurations") {
    BinarySample sep;
    sep.xs = {{0.0, 0.0}, {1.0, 1.0}};
    sep.ys = {-1, 1};
    CHECK(halfspace::exact_best_error(sep).error == 0.0);

    auto r = halfspace::exact_best_error(xor_sample());
    CHECK(r.error == doctest::Approx(0.25));

    // identical points with a 30/70 label split: only constants matter
    BinarySample split;
    for (int i = 0; i < 10; ++i) {
        split.xs.push_back({0.5, -0.5});
        split.ys.push_back(i < 3 ? -1 : 1);
    }
    CHECK(halfspace::exact_best_error(split).error == doctest::Approx(0.3));

    // collinear +,-,+ forces one mistake
    BinarySample line;
    line.xs = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    line.ys = {1, -1, 1};
    CHECK(halfspace::exact_best_error(line).error == doctest::Approx(1.0 / 3));

    BinarySample bad;
    bad.xs = {{1.0, 2.0, 3.0}};
    bad.ys = {1};
    CHECK_THROWS_AS(halfspace::exact_best_error(bad), std::invalid_argument);
}

TEST_CASE("exact oracle matches the independent threshold sweep in 1-d") {
    for (int t = 0; t < 25; ++t) {
        auto s = random_sample(2 + t % 40, 1, 600 + t);
        auto r = halfspace::exact_best_error(s);
        CHECK(r.error == doctest::Approx(best_threshold_error_1d(s)));
        CHECK(halfspace::empirical_error(r.h, s) == doctest::Approx(r.error));
    }
}

TEST_CASE("exact oracle returns an achieving halfspace in 2-d") {
    for (int t = 0; t < 15; ++t) {
        auto s = random_sample(20, 2, 800 + t);
        auto r = halfspace::exact_best_error(s);
        CHECK(halfspace::empirical_error(r.h, s) == doctest::Approx(r.error));
    }
}

TEST_CASE("oracle lower-bounds trained error") {
    for (int t = 0; t < 10; ++t) {
        auto s = random_sample(40, 2, 900 + t);
        auto oracle = halfspace::exact_best_error(s).error;
        auto trained = halfspace::empirical_error(halfspace::train_erm_approx(s, {}, t), s);
        CHECK(oracle <= trained + 1e-12);
    }
}

TEST_CASE("oracle is symmetric under a global label flip") {
    for (int t = 0; t < 10; ++t) {
        auto s = random_sample(30, 2, 1000 + t);
        BinarySample flipped = s;
        for (auto& y : flipped.ys) y = -y;
        CHECK(halfspace::exact_best_error(s).error ==
              doctest::Approx(halfspace::exact_best_error(flipped).error));
    }
}

TEST_CASE("oracle never exceeds a random-search upper bound") {
    Rng rng = make_rng(2024);
    for (int t = 0; t < 8; ++t) {
        auto s = random_sample(25, 2, 1100 + t);
        double upper = 1.0;
        for (int i = 0; i < 500; ++i) {
            Halfspace h{{gaussian(rng), gaussian(rng), gaussian(rng)}};
            upper = std::min(upper, halfspace::empirical_error(h, s));
        }
        CHECK(halfspace::exact_best_error(s).error <= upper + 1e-12);
    }
}
