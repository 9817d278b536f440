#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multireduce/codes.hpp"
#include "multireduce/halfspace.hpp"
#include "multireduce/reducers.hpp"

namespace multireduce::shatter {

// Explicit table of functions over a finite indexed domain. Values are small
// integers (+-1 for binary classes, labels 1..k for composed multiclass ones);
// tables are stored flat, one row of domain_size values per function.
class FiniteFunctionClass {
  public:
    FiniteFunctionClass(int domain_size, std::vector<std::int16_t> values);

    int domain_size() const { return domain_size_; }
    int size() const { return static_cast<int>(values_.size() / domain_size_); }
    std::int16_t value(int fn, int point) const {
        return values_[static_cast<std::size_t>(fn) * domain_size_ + point];
    }
    const std::vector<std::int16_t>& values() const { return values_; }

    // distinct values appearing anywhere in the class
    std::vector<int> label_set() const;
    bool is_binary() const;
    FiniteFunctionClass deduplicated() const;

  private:
    int domain_size_;
    std::vector<std::int16_t> values_;
};

using Witness = std::vector<std::int16_t>;  // value per point of the candidate set

// G-shattering of S by H with witness f: every T subseteq S has some g in H
// agreeing with f on T and differing from f everywhere on S \ T.
bool check_g_shatter(const FiniteFunctionClass& h, const std::vector<int>& set, const Witness& f);

// N-shattering with witnesses f1, f2 (pointwise different on S): every
// T subseteq S has some g equal to f1 on T and to f2 on S \ T.
bool check_n_shatter(const FiniteFunctionClass& h, const std::vector<int>& set, const Witness& f1,
                     const Witness& f2);

// Exact dimensions by exhaustive subset search. Witness candidates range over
// the class's own restrictions to the subset, which is complete: taking T = S
// (and T = empty) in the definitions forces every witness to be realized.
int natarajan_dimension(const FiniteFunctionClass& h);
int graph_dimension(const FiniteFunctionClass& h);
int vc_dimension(const FiniteFunctionClass& h);  // binary classes only

// The witness classes over [d] x [l] (point (u,v) has index u*l + v).
// build_F: f^{i,j}(u,v) = f(u) if v = i else j, over all f in {+-1}^[d],
// i in [l], j in {+-1}. build_G: g^{i,j}(u,v) = g(u) if v = i, j if v > i,
// -j if v < i. build_G_tilde keeps only j = +1. All are deduplicated.
FiniteFunctionClass build_F(int d, int l);
FiniteFunctionClass build_G(int d, int l);
FiniteFunctionClass build_G_tilde(int d, int l);

// All composed predictors decode(M, (h_1(x),...,h_l(x))) for tuples over a
// binary class; values are labels 1..k. Deduplicated; throws
// budget_exceeded_error when |H|^l exceeds the tuple budget.
FiniteFunctionClass compose_with_code(const FiniteFunctionClass& h, const codes::CodeMatrix& code,
                                      std::int64_t tuple_budget = 100'000'000);

// All composed tree predictors over assignments of class members to internal
// nodes; leaves are labeled by leaf_labels (1..k).
FiniteFunctionClass compose_with_tree(const FiniteFunctionClass& h,
                                      const reducers::TreeShape& shape,
                                      const std::vector<int>& leaf_labels,
                                      std::int64_t tuple_budget = 100'000'000);

// Verifies that [d] x {sensitive coords of u} is N-shattered by the
// composition of F^l with the code, using the witnesses g1 = decode(M,u),
// g2(x,y) = decode(M, u xor e_y). Vacuously true when u has no sensitive
// coordinates.
bool thm13_check(const codes::CodeMatrix& code, const codes::BinaryVector& u, int d,
                 std::int64_t tuple_budget = 100'000'000);

// Verifies that [d] x N(T) is N-shattered by the composition of G^{k-1} with
// the tree, with internal nodes ordered so that left-subtree nodes precede a
// node and right-subtree nodes follow it, and the witnesses the two
// one-turn paths (right-then-left / left-then-right) out of each node.
bool thm3_check(const reducers::TreeShape& shape, int d,
                std::int64_t tuple_budget = 100'000'000);

struct EmbeddingReport {
    std::vector<std::vector<double>> points;  // embedded point per (u,v), index u*l + v
    int num_functions = 0;
    int realized = 0;
    double perturbation = 0.0;  // radius used around each direction (F only)
    double margin = 0.0;        // smallest |score| over functions and points
    int attempts = 1;
    bool all_realized() const { return realized == num_functions; }
};

// Halfspace embedding of F^l for d >= 2: l seeded random unit directions,
// d affinely independent points on each tangent hyperplane close to the
// direction; every member of F^l is certified realizable by perceptron
// training on the embedded points. Resamples up to 20 times, then throws
// embedding_invalid_error.
EmbeddingReport embed_F_halfspaces(int d, int l, std::uint64_t seed);

// Deterministic embedding of G^l for d >= 2: affinely independent base points
// stacked at heights 1..l; certified the same way. slope is the bias constant
// applied to the height term.
EmbeddingReport embed_G_halfspaces(int d, int l, double slope = 10.0);

// Plain-text formats used by the CLI: class files are "domain_size num_fns"
// followed by one table per line.
FiniteFunctionClass read_class(std::istream& is);
void write_class(std::ostream& os, const FiniteFunctionClass& h);

}  // namespace multireduce::shatter
