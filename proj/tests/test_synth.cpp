#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "multireduce/rng.hpp"
#include "multireduce/synth.hpp"

using namespace multireduce;

TEST_CASE("sampling is bit-deterministic in the seed") {
    auto d = synth::circle_points(9);
    auto a = synth::sample(d, 500, 7);
    auto b = synth::sample(d, 500, 7);
    CHECK(a.xs == b.xs);
    CHECK(a.ys == b.ys);
    auto c = synth::sample(d, 500, 8);
    CHECK(a.xs != c.xs);
}

TEST_CASE("circle points sit on the unit circle at equal angles") {
    auto d = synth::circle_points(9);
    REQUIRE(d.centers.size() == 9);
    for (int i = 0; i < 9; ++i) {
        double ang = 2 * M_PI * i / 9;
        CHECK(d.centers[i][0] == doctest::Approx(std::cos(ang)));
        CHECK(d.centers[i][1] == doctest::Approx(std::sin(ang)));
    }
    CHECK(d.within_mass_regime(10.0));
}

TEST_CASE("two point fixture") {
    auto s = synth::sample(synth::two_points(), 100, 3);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.ys[i] == 1) CHECK(s.xs[i] == std::vector<double>{0.0, 0.7});
        if (s.ys[i] == 2) CHECK(s.xs[i] == std::vector<double>{0.7, 0.0});
    }
}

TEST_CASE("sector labels follow angle arithmetic") {
    auto s = synth::sample(synth::sector3(), 3000, 11);
    int counts[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < s.size(); ++i) {
        double a = std::atan2(s.xs[i][1], s.xs[i][0]);
        if (a < 0) a += 2 * M_PI;
        int sector = std::min(static_cast<int>(a / (2 * M_PI / 3)), 2) + 1;
        CHECK(s.ys[i] == sector);
        CHECK(s.xs[i][0] * s.xs[i][0] + s.xs[i][1] * s.xs[i][1] <= 1.0 + 1e-12);
        counts[s.ys[i]]++;
    }
    for (int c = 1; c <= 3; ++c)
        CHECK(static_cast<double>(counts[c]) / s.size() == doctest::Approx(1.0 / 3).epsilon(0.15));
}

TEST_CASE("random points and the centroid flag") {
    auto plain = synth::random_points(9, 2, 21);
    auto again = synth::random_points(9, 2, 21);
    CHECK(plain.centers == again.centers);
    CHECK(plain.centers != synth::random_points(9, 2, 22).centers);
    for (const auto& c : plain.centers) CHECK(c[0] * c[0] + c[1] * c[1] <= 1.0);

    auto forced = synth::random_points(9, 2, 21, true);
    std::vector<double> centroid(2, 0.0);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 2; ++j) centroid[j] += forced.centers[i][j] / 8.0;
    CHECK(forced.centers[8][0] == doctest::Approx(centroid[0]));
    CHECK(forced.centers[8][1] == doctest::Approx(centroid[1]));
}

TEST_CASE("simplex distribution") {
    auto d = synth::simplex(3);
    CHECK(d.k == 4);
    CHECK(d.centers[0] == std::vector<double>{0, 0, 0});
    CHECK(d.centers[2] == std::vector<double>{0, 1, 0});
    for (double p : d.class_probabilities) CHECK(p == doctest::Approx(0.25));
    CHECK(d.within_mass_regime(10.0));
}

TEST_CASE("cluster layout spreads classes over few locations") {
    auto d = synth::cluster_points(128, 2, 5);
    std::set<std::vector<double>> locations(d.centers.begin(), d.centers.end());
    CHECK(locations.size() == 2);
    CHECK(d.within_mass_regime(10.0));
}

TEST_CASE("exact label maps hit the requested negative count") {
    auto phi = synth::random_label_map(4, 0.5, synth::LabelMapRule::Exact, 9);
    int neg = 0;
    for (int s : phi.signs) neg += (s == -1);
    CHECK(neg == 2);

    auto two = synth::random_label_map(2, 0.5, synth::LabelMapRule::Exact, 1);
    int n2 = 0;
    for (int s : two.signs) n2 += (s == -1);
    CHECK(n2 == 1);

    CHECK_THROWS_AS(synth::random_label_map(4, 0.0, synth::LabelMapRule::Iid, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(synth::random_label_map(4, 0.7, synth::LabelMapRule::Iid, 1),
                    std::invalid_argument);
}

TEST_CASE("iid label maps have the right negative frequency") {
    int neg = 0, total = 0;
    for (int s = 0; s < 100; ++s) {
        auto phi = synth::random_label_map(100, 0.3, synth::LabelMapRule::Iid, 400 + s);
        for (int v : phi.signs) {
            neg += (v == -1);
            ++total;
        }
    }
    CHECK(static_cast<double>(neg) / total == doctest::Approx(0.3).epsilon(0.07));
}

TEST_CASE("label maps relabel samples pointwise") {
    auto sample = synth::sample(synth::circle_points(4), 200, 3);
    synth::LabelMap all_pos{{1, 1, 1, 1}, synth::LabelMapRule::Iid};
    auto bin = synth::apply_label_map(sample, all_pos);
    for (int y : bin.ys) CHECK(y == 1);

    synth::LabelMap mixed{{1, -1, 1, -1}, synth::LabelMapRule::Iid};
    synth::LabelMap flipped{{-1, 1, -1, 1}, synth::LabelMapRule::Iid};
    auto a = synth::apply_label_map(sample, mixed);
    auto b = synth::apply_label_map(sample, flipped);
    for (std::size_t i = 0; i < a.ys.size(); ++i) CHECK(a.ys[i] == -b.ys[i]);
}

TEST_CASE("support sample views the finite distribution exactly") {
    auto d = synth::circle_points(5);
    auto s = synth::support_sample(d);
    CHECK(s.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(s.xs[i] == d.centers[i]);
        CHECK(s.ys[i] == i + 1);
    }
    CHECK_THROWS_AS(synth::support_sample(synth::sector3()), std::invalid_argument);
}
