#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "multireduce/codes.hpp"
#include "multireduce/errors.hpp"
#include "multireduce/rng.hpp"

using namespace multireduce;
using codes::BinaryVector;
using codes::CodeMatrix;

namespace {
// independent reference decoder: integer scores, first-max row, label map applied
int decode_reference(const CodeMatrix& m, const BinaryVector& u) {
    long best = -1000000;
    int arg = 0;
    for (int i = 0; i < m.num_classes(); ++i) {
        long s = 0;
        for (int j = 0; j < m.code_length(); ++j) s += static_cast<long>(m.entry(i, j)) * u[j];
        if (s > best) {
            best = s;
            arg = i;
        }
    }
    return m.label_of_row(arg);
}
}  // namespace

TEST_CASE("one-vs-all code layout") {
    auto m2 = codes::ova_code(2);
    CHECK(m2.entry(0, 0) == 1.0);
    CHECK(m2.entry(0, 1) == -1.0);
    CHECK(m2.entry(1, 0) == -1.0);
    CHECK(m2.entry(1, 1) == 1.0);

    auto m3 = codes::ova_code(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m3.entry(i, j) == (i == j ? 1.0 : -1.0));

    for (int k : {2, 3, 5, 9}) CHECK(codes::code_distance(codes::ova_code(k)) == 2);
    // each column has +1 exactly at its own row
    auto m5 = codes::ova_code(5);
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 5; ++i) CHECK((m5.entry(i, j) == 1.0) == (i == j));

    CHECK_THROWS_AS(codes::ova_code(1), std::invalid_argument);
}

TEST_CASE("all-pairs code layout") {
    auto m2 = codes::ap_code(2);
    CHECK(m2.code_length() == 1);
    CHECK(m2.entry(0, 0) == -1.0);
    CHECK(m2.entry(1, 0) == 1.0);

    // columns (1,2),(1,3),(2,3): expanded by hand from the definition
    auto m3 = codes::ap_code(3);
    CHECK(m3.code_length() == 3);
    const double want[3][3] = {{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m3.entry(i, j) == want[i][j]);

    for (int k : {2, 3, 4, 7}) {
        auto m = codes::ap_code(k);
        CHECK(m.code_length() == k * (k - 1) / 2);
        for (int j = 0; j < m.code_length(); ++j) {
            int pos = 0, neg = 0;
            double sum = 0;
            for (int i = 0; i < k; ++i) {
                sum += m.entry(i, j);
                pos += m.entry(i, j) == 1.0;
                neg += m.entry(i, j) == -1.0;
            }
            CHECK(pos == 1);
            CHECK(neg == 1);
            CHECK(sum == 0.0);
        }
    }
    CHECK_THROWS_AS(codes::ap_code(1), std::invalid_argument);
}

TEST_CASE("random codes are deterministic in the seed") {
    auto a = codes::random_code(5, 12, 42);
    auto b = codes::random_code(5, 12, 42);
    CHECK(a.entries() == b.entries());
    auto c = codes::random_code(5, 12, 43);
    CHECK(a.entries() != c.entries());

    for (double e : a.entries()) CHECK((e == 1.0 || e == -1.0));

    auto wide = codes::random_code(4, 64, 7, {true, false});
    CHECK(codes::code_distance(wide) > 0);
}

TEST_CASE("random code entry frequency is near one half") {
    int plus = 0, total = 0;
    for (int s = 0; s < 20; ++s) {
        auto m = codes::random_code(5, 100, 1000 + s);
        for (double e : m.entries()) {
            plus += (e == 1.0);
            ++total;
        }
    }
    double frac = static_cast<double>(plus) / total;
    CHECK(frac == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("decode scores and tie-breaking") {
    auto m3 = codes::ova_code(3);
    CHECK(codes::decode(m3, {1, -1, -1}) == 1);  // scores 3,-1,-1
    CHECK(codes::decode(m3, {-1, 1, -1}) == 2);
    CHECK(codes::decode(m3, {-1, -1, -1}) == 1);  // full tie at k-2, minimal row

    // deliberate tie between rows 2 and 3 of a custom code
    CodeMatrix tie(3, 2, {1, 1, 1, -1, 1, -1}, {});
    CHECK(codes::decode(tie, {-1, 1}) == 2);  // scores 0, 2, 2 -> minimal of the maximal

    CHECK_THROWS_AS(codes::decode(m3, {1, -1}), std::invalid_argument);
}

TEST_CASE("decode respects the label bijection") {
    CodeMatrix m(3, 3, codes::ova_code(3).entries(), {3, 1, 2});
    CHECK(codes::decode(m, {1, -1, -1}) == 3);
    CHECK(codes::decode(m, {-1, 1, -1}) == 1);
}

TEST_CASE("decode is invariant under appending a zero column") {
    Rng rng = make_rng(5);
    for (int t = 0; t < 20; ++t) {
        auto m = codes::random_code(4, 6, 100 + t);
        BinaryVector u(6);
        for (auto& x : u) x = rademacher(rng);
        std::vector<double> wider = m.entries();
        std::vector<double> padded;
        for (int i = 0; i < 4; ++i) {
            padded.insert(padded.end(), wider.begin() + i * 6, wider.begin() + (i + 1) * 6);
            padded.push_back(0.0);
        }
        CodeMatrix mp(4, 7, padded, {});
        BinaryVector up = u;
        up.push_back(rademacher(rng));
        CHECK(codes::decode(m, u) == codes::decode(mp, up));
    }
}

TEST_CASE("decode is invariant under joint column permutation") {
    Rng rng = make_rng(6);
    for (int t = 0; t < 20; ++t) {
        auto m = codes::random_code(4, 6, 300 + t);
        BinaryVector u(6);
        for (auto& x : u) x = rademacher(rng);
        auto perm = random_permutation(6, rng);
        std::vector<double> entries(4 * 6);
        BinaryVector up(6);
        for (int j = 0; j < 6; ++j) {
            up[j] = u[perm[j]];
            for (int i = 0; i < 4; ++i) entries[i * 6 + j] = m.entry(i, perm[j]);
        }
        CHECK(codes::decode(m, u) == codes::decode(CodeMatrix(4, 6, entries, {}), up));
    }
}

TEST_CASE("hamming distance") {
    CHECK(codes::hamming_distance({1, 1, -1}, {1, -1, 1}) == 2);
    BinaryVector u = {1, -1, 1, 1, -1};
    CHECK(codes::hamming_distance(u, u) == 0);
    BinaryVector neg;
    for (int x : u) neg.push_back(-x);
    CHECK(codes::hamming_distance(u, neg) == 5);
    CHECK_THROWS_AS(codes::hamming_distance({1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("code distance and max-min distance") {
    // rows (+,+,+,+), (-,-,+,+), (-,-,-,-): pairwise distances 2,4,2
    CodeMatrix m(3, 4, {1, 1, 1, 1, -1, -1, 1, 1, -1, -1, -1, -1}, {});
    CHECK(codes::code_distance(m) == 2);
    CHECK(codes::max_min_distance(m) == 2);

    CodeMatrix dup(2, 3, {1, -1, 1, 1, -1, 1}, {});
    CHECK(codes::code_distance(dup) == 0);
    CHECK(codes::max_min_distance(dup) == 0);

    CHECK(codes::max_min_distance(codes::ova_code(4)) == 2);

    CodeMatrix real_code(2, 2, {0.5, 1, -1, 1}, {});
    CHECK_THROWS_AS(codes::code_distance(real_code), std::invalid_argument);

    for (int t = 0; t < 30; ++t) {
        auto r = codes::random_code(5, 8, 900 + t);
        int delta = codes::code_distance(r);
        int Delta = codes::max_min_distance(r);
        CHECK(delta <= Delta);
        CHECK(Delta <= 8);
    }
}

TEST_CASE("sensitivity of the one-vs-all all-negative vector") {
    for (int k = 3; k <= 8; ++k) {
        auto m = codes::ova_code(k);
        BinaryVector u(k, -1);
        auto s = codes::sensitivity(m, u);
        CHECK(s.q == k - 1);
        // every coordinate except the first flips the decode
        for (int j = 1; j < k; ++j)
            CHECK(std::find(s.coords.begin(), s.coords.end(), j) != s.coords.end());
    }
}

TEST_CASE("sensitivity of the all-pairs half-window vector") {
    for (int k : {3, 5, 7, 9}) {
        auto m = codes::ap_code(k);
        BinaryVector u(m.code_length());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                u[codes::ap_column_index(k, i, j)] = (j - i) <= (k - 1) / 2 ? 1 : -1;
        CHECK(codes::decode(m, u) == 1);  // all scores zero, tie to the first row
        auto s = codes::sensitivity(m, u);
        CHECK(s.q >= (k - 1) * (k - 2) / 2);
    }
}

TEST_CASE("single-coordinate sensitivity") {
    CodeMatrix m(2, 1, {1, -1}, {});
    auto s = codes::sensitivity(m, {1});
    CHECK(s.q == 1);
}

TEST_CASE("sensitive vector construction") {
    CodeMatrix m(3, 4, {1, 1, 1, 1, -1, -1, 1, 1, -1, -1, -1, -1}, {});
    auto u = codes::sensitive_vector(m);
    CHECK(codes::sensitivity(m, u).q >= 1);

    auto o3 = codes::ova_code(3);
    CHECK(codes::sensitivity(o3, codes::sensitive_vector(o3)).q >= 1);

    CodeMatrix dup(2, 3, {1, -1, 1, 1, -1, 1}, {});
    CHECK_THROWS_AS(codes::sensitive_vector(dup), no_sensitive_guarantee_error);
}

TEST_CASE("sensitive vector meets the half-Delta guarantee on random codes") {
    Rng rng = make_rng(77);
    int tested = 0;
    for (int t = 0; t < 100; ++t) {
        int k = static_cast<int>(uniform_int(rng, 2, 8));
        int l = static_cast<int>(uniform_int(rng, 1, 10));
        auto m = codes::random_code(k, l, 5000 + t);
        int Delta = codes::max_min_distance(m);
        if (Delta == 0) continue;
        auto u = codes::sensitive_vector(m);
        CHECK(codes::sensitivity(m, u).q >= (Delta + 1) / 2);
        ++tested;
    }
    CHECK(tested >= 90);
}

TEST_CASE("code text round trip") {
    auto m = codes::random_code(4, 6, 11, {false, true});
    std::stringstream ss;
    codes::write_code(ss, m);
    auto back = codes::read_code(ss);
    CHECK(back.entries() == m.entries());
    CHECK(back.label_map() == m.label_map());

    std::stringstream ap;
    codes::write_code(ap, codes::ap_code(3));
    auto ap_back = codes::read_code(ap);
    CHECK(ap_back.is_ternary());
    CHECK_FALSE(ap_back.is_binary());
}

TEST_CASE("decode agrees with an independent integer scorer") {
    Rng rng = make_rng(33);
    for (int t = 0; t < 50; ++t) {
        auto m = codes::random_code(5, 7, 700 + t, {false, t % 2 == 1});
        BinaryVector u(7);
        for (auto& x : u) x = rademacher(rng);
        CHECK(codes::decode(m, u) == decode_reference(m, u));
    }
}
