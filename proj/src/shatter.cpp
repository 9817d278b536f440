#include "multireduce/shatter.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include "multireduce/errors.hpp"
#include "multireduce/parallel.hpp"
#include "multireduce/rng.hpp"

namespace multireduce::shatter {

namespace {

// minimal open-addressing set for packed function signatures
class U64Set {
  public:
    U64Set() { slots_.assign(64, kEmpty); }

    bool insert(std::uint64_t key) {
        if ((size_ + 1) * 10 >= slots_.size() * 7) grow();
        std::size_t mask = slots_.size() - 1;
        std::size_t i = hash(key) & mask;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return false;
            i = (i + 1) & mask;
        }
        slots_[i] = key;
        ++size_;
        return true;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t s : slots_)
            if (s != kEmpty) fn(s);
    }

    std::size_t size() const { return size_; }

  private:
    static constexpr std::uint64_t kEmpty = ~0ULL;

    static std::size_t hash(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
    void grow() {
        std::vector<std::uint64_t> old = std::move(slots_);
        slots_.assign(old.size() * 2, kEmpty);
        size_ = 0;
        for (std::uint64_t s : old)
            if (s != kEmpty) insert(s);
    }

    std::vector<std::uint64_t> slots_;
    std::size_t size_ = 0;
};

}  // namespace

FiniteFunctionClass::FiniteFunctionClass(int domain_size, std::vector<std::int16_t> values)
    : domain_size_(domain_size), values_(std::move(values)) {
    if (domain_size_ < 1) throw std::invalid_argument("FiniteFunctionClass: empty domain");
    if (values_.empty() || values_.size() % domain_size_ != 0)
        throw std::invalid_argument("FiniteFunctionClass: table size must be a multiple of the domain");
}

std::vector<int> FiniteFunctionClass::label_set() const {
    std::set<int> s(values_.begin(), values_.end());
    return {s.begin(), s.end()};
}

bool FiniteFunctionClass::is_binary() const {
    return std::all_of(values_.begin(), values_.end(), [](std::int16_t v) { return v == 1 || v == -1; });
}

FiniteFunctionClass FiniteFunctionClass::deduplicated() const {
    std::set<std::vector<std::int16_t>> seen;
    std::vector<std::int16_t> out;
    std::vector<std::int16_t> row(domain_size_);
    for (int f = 0; f < size(); ++f) {
        std::copy_n(values_.begin() + static_cast<std::size_t>(f) * domain_size_, domain_size_,
                    row.begin());
        if (seen.insert(row).second) out.insert(out.end(), row.begin(), row.end());
    }
    return FiniteFunctionClass(domain_size_, std::move(out));
}

namespace {

void check_witness(const FiniteFunctionClass& h, const std::vector<int>& set, const Witness& f,
                   const char* who) {
    if (set.size() > 20) throw budget_exceeded_error(std::string(who) + ": set larger than 20");
    if (f.size() != set.size()) throw std::invalid_argument(std::string(who) + ": witness size mismatch");
    for (int p : set)
        if (p < 0 || p >= h.domain_size())
            throw std::invalid_argument(std::string(who) + ": set point outside the domain");
}

// collects the subsets T realized against (f1, f2); a null f2 means G-style
// (off-T values must merely differ from f1)
std::vector<bool> achieved_masks(const FiniteFunctionClass& h, const std::vector<int>& set,
                                 const Witness& f1, const Witness* f2) {
    const std::size_t bits = set.size();
    std::vector<bool> got(std::size_t(1) << bits, false);
    for (int g = 0; g < h.size(); ++g) {
        std::uint32_t mask = 0;
        bool ok = true;
        for (std::size_t b = 0; b < bits; ++b) {
            std::int16_t v = h.value(g, set[b]);
            if (v == f1[b]) {
                mask |= (1u << b);
            } else if (f2 && v != (*f2)[b]) {
                ok = false;
                break;
            }
        }
        if (ok) got[mask] = true;
    }
    return got;
}

bool all_true(const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

bool check_g_shatter(const FiniteFunctionClass& h, const std::vector<int>& set, const Witness& f) {
    check_witness(h, set, f, "check_g_shatter");
    return all_true(achieved_masks(h, set, f, nullptr));
}

bool check_n_shatter(const FiniteFunctionClass& h, const std::vector<int>& set, const Witness& f1,
                     const Witness& f2) {
    check_witness(h, set, f1, "check_n_shatter");
    if (f2.size() != set.size()) throw std::invalid_argument("check_n_shatter: witness size mismatch");
    for (std::size_t i = 0; i < set.size(); ++i)
        if (f1[i] == f2[i]) throw std::invalid_argument("check_n_shatter: witnesses must differ pointwise");
    return all_true(achieved_masks(h, set, f1, &f2));
}

namespace {

// distinct restrictions of the class to `set`
std::vector<Witness> restrictions(const FiniteFunctionClass& h, const std::vector<int>& set) {
    std::set<Witness> out;
    Witness w(set.size());
    for (int g = 0; g < h.size(); ++g) {
        for (std::size_t b = 0; b < set.size(); ++b) w[b] = h.value(g, set[b]);
        out.insert(w);
    }
    return {out.begin(), out.end()};
}

bool subset_n_shattered(const FiniteFunctionClass& h, const std::vector<int>& set) {
    auto r = restrictions(h, set);
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (i == j) continue;
            bool pointwise = true;
            for (std::size_t b = 0; b < set.size() && pointwise; ++b) pointwise = (r[i][b] != r[j][b]);
            if (!pointwise) continue;
            if (all_true(achieved_masks(h, set, r[i], &r[j]))) return true;
        }
    }
    return false;
}

bool subset_g_shattered(const FiniteFunctionClass& h, const std::vector<int>& set) {
    for (const auto& f : restrictions(h, set))
        if (all_true(achieved_masks(h, set, f, nullptr))) return true;
    return false;
}

template <typename Pred>
int max_shattered_size(const FiniteFunctionClass& h, Pred&& shattered) {
    const int n = h.domain_size();
    if (n > 16) throw budget_exceeded_error("dimension search: domain larger than 16");
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        std::vector<int> set;
        for (int p = 0; p < n; ++p)
            if (mask & (1u << p)) set.push_back(p);
        if (shattered(set)) best = size;
    }
    return best;
}

}  // namespace

int natarajan_dimension(const FiniteFunctionClass& h) {
    return max_shattered_size(h, [&](const std::vector<int>& s) { return subset_n_shattered(h, s); });
}

int graph_dimension(const FiniteFunctionClass& h) {
    return max_shattered_size(h, [&](const std::vector<int>& s) { return subset_g_shattered(h, s); });
}

int vc_dimension(const FiniteFunctionClass& h) {
    if (!h.is_binary()) throw std::invalid_argument("vc_dimension: class is not binary");
    return max_shattered_size(h, [&](const std::vector<int>& s) {
        auto r = restrictions(h, s);
        return r.size() == (std::size_t(1) << s.size());
    });
}

namespace {
FiniteFunctionClass build_fg(int d, int l, bool tree_style, bool plus_only) {
    if (d < 1 || l < 1) throw std::invalid_argument("build class: need d >= 1 and l >= 1");
    if (d > 20 || d * l > 16) throw budget_exceeded_error("build class: domain budget exceeded");
    const int n = d * l;
    std::vector<std::int16_t> values;
    for (std::uint32_t fbits = 0; fbits < (1u << d); ++fbits) {
        for (int i = 0; i < l; ++i) {
            for (int j : {1, -1}) {
                if (plus_only && j != 1) continue;
                for (int u = 0; u < d; ++u) {
                    for (int v = 0; v < l; ++v) {
                        std::int16_t val;
                        if (v == i)
                            val = (fbits & (1u << u)) ? 1 : -1;
                        else if (!tree_style)
                            val = static_cast<std::int16_t>(j);
                        else
                            val = static_cast<std::int16_t>(v > i ? j : -j);
                        values.push_back(val);
                    }
                }
            }
        }
    }
    return FiniteFunctionClass(n, std::move(values)).deduplicated();
}
}  // namespace

FiniteFunctionClass build_F(int d, int l) { return build_fg(d, l, false, false); }
FiniteFunctionClass build_G(int d, int l) { return build_fg(d, l, true, false); }
FiniteFunctionClass build_G_tilde(int d, int l) { return build_fg(d, l, true, true); }

namespace {

// Exhaustive composition: for every tuple in H^width, each point's label is
// lut[bits], where bit j holds digit j's value at the point; distinct packed
// tables are collected. Labels must be 1..16 and the domain at most 16 points.
FiniteFunctionClass enumerate_compose(const FiniteFunctionClass& h, int width,
                                      const std::vector<std::int16_t>& lut, int num_labels,
                                      std::int64_t tuple_budget) {
    const int n = h.domain_size();
    const int hsize = h.size();
    if (n > 16) throw budget_exceeded_error("compose: domain larger than 16 points");
    if (num_labels > 16) throw budget_exceeded_error("compose: more than 16 labels");
    double total = 1;
    for (int i = 0; i < width; ++i) total *= hsize;
    if (total > static_cast<double>(tuple_budget))
        throw budget_exceeded_error("compose: |H|^width exceeds the tuple budget");

    // per-function plane: bit p set when the function is +1 at point p
    std::vector<std::uint32_t> plane(hsize, 0);
    for (int f = 0; f < hsize; ++f)
        for (int p = 0; p < n; ++p)
            if (h.value(f, p) == 1) plane[f] |= (1u << p);

    const int workers = std::max(1, std::min(thread_budget(), hsize));
    std::vector<U64Set> partial(static_cast<std::size_t>(workers));

    // split the tuple space by the leading digit
    parallel_for(workers, [&](std::int64_t wi) {
        U64Set& seen = partial[static_cast<std::size_t>(wi)];
        std::vector<int> digits(width, 0);
        std::vector<std::uint32_t> idx(n, 0);
        for (int lead = static_cast<int>(wi); lead < hsize; lead += workers) {
            std::fill(digits.begin(), digits.end(), 0);
            digits[0] = lead;
            for (int p = 0; p < n; ++p) {
                std::uint32_t v = (plane[lead] >> p) & 1u;
                for (int j = 1; j < width; ++j) v |= ((plane[0] >> p) & 1u) << j;
                idx[p] = v;
            }
            while (true) {
                std::uint64_t packed = 0;
                for (int p = 0; p < n; ++p)
                    packed |= static_cast<std::uint64_t>(lut[idx[p]] - 1) << (4 * p);
                seen.insert(packed);
                int j = 1;
                for (; j < width; ++j) {
                    int was = digits[j];
                    int now = was + 1 == hsize ? 0 : was + 1;
                    digits[j] = now;
                    std::uint32_t diff = plane[was] ^ plane[now];
                    if (diff)
                        for (int p = 0; p < n; ++p) idx[p] ^= ((diff >> p) & 1u) << j;
                    if (now != 0) break;
                }
                if (j == width) break;
            }
        }
    });

    U64Set merged = std::move(partial[0]);
    for (std::size_t i = 1; i < partial.size(); ++i)
        partial[i].for_each([&](std::uint64_t k) { merged.insert(k); });

    std::vector<std::uint64_t> keys;
    keys.reserve(merged.size());
    merged.for_each([&](std::uint64_t k) { keys.push_back(k); });
    std::sort(keys.begin(), keys.end());
    std::vector<std::int16_t> values;
    values.reserve(keys.size() * n);
    for (std::uint64_t key : keys)
        for (int p = 0; p < n; ++p)
            values.push_back(static_cast<std::int16_t>(((key >> (4 * p)) & 0xF) + 1));
    return FiniteFunctionClass(n, std::move(values));
}

}  // namespace

FiniteFunctionClass compose_with_code(const FiniteFunctionClass& h, const codes::CodeMatrix& code,
                                      std::int64_t tuple_budget) {
    if (!h.is_binary()) throw std::invalid_argument("compose_with_code: class must be binary");
    const int l = code.code_length();
    if (l > 20) throw budget_exceeded_error("compose_with_code: code length above 20");
    std::vector<std::int16_t> lut(std::size_t(1) << l);
    codes::BinaryVector u(l);
    for (std::uint32_t bits = 0; bits < (1u << l); ++bits) {
        for (int j = 0; j < l; ++j) u[j] = (bits & (1u << j)) ? 1 : -1;
        lut[bits] = static_cast<std::int16_t>(codes::decode(code, u));
    }
    return enumerate_compose(h, l, lut, code.num_classes(), tuple_budget);
}

FiniteFunctionClass compose_with_tree(const FiniteFunctionClass& h,
                                      const reducers::TreeShape& shape,
                                      const std::vector<int>& leaf_labels,
                                      std::int64_t tuple_budget) {
    if (!h.is_binary()) throw std::invalid_argument("compose_with_tree: class must be binary");
    const int m = shape.num_internal();
    if (m > 20) throw budget_exceeded_error("compose_with_tree: too many internal nodes");
    if (static_cast<int>(leaf_labels.size()) != shape.num_leaves)
        throw std::invalid_argument("compose_with_tree: leaf label count mismatch");
    // bit j of the LUT input is the output of the classifier at internal node j;
    // which tuple digit feeds which node does not change the composed class
    std::vector<std::int16_t> lut(std::size_t(1) << m);
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        int child = 0;
        while (!reducers::TreeShape::is_leaf(child))
            child = (bits & (1u << child)) ? shape.nodes[child].right : shape.nodes[child].left;
        lut[bits] = static_cast<std::int16_t>(leaf_labels[reducers::TreeShape::leaf_id(child)]);
    }
    return enumerate_compose(h, m, lut, shape.num_leaves, tuple_budget);
}

bool thm13_check(const codes::CodeMatrix& code, const codes::BinaryVector& u, int d,
                 std::int64_t tuple_budget) {
    auto sens = codes::sensitivity(code, u);
    if (sens.q == 0) return true;
    const int l = code.code_length();
    auto composed = compose_with_code(build_F(d, l), code, tuple_budget);

    std::vector<int> set;
    Witness f1, f2;
    const int base = codes::decode(code, u);
    codes::BinaryVector v = u;
    for (int x = 0; x < d; ++x) {
        for (int y : sens.coords) {
            set.push_back(x * l + y);
            f1.push_back(static_cast<std::int16_t>(base));
            v[y] = -v[y];
            f2.push_back(static_cast<std::int16_t>(codes::decode(code, v)));
            v[y] = -v[y];
        }
    }
    return check_n_shatter(composed, set, f1, f2);
}

namespace {
// in-order positions of internal nodes: left-subtree nodes come before a node,
// right-subtree nodes after
std::vector<int> inorder_positions(const reducers::TreeShape& shape) {
    std::vector<int> pos(shape.num_internal(), -1);
    int next = 0;
    auto walk = [&](auto&& self, int child) -> void {
        if (reducers::TreeShape::is_leaf(child)) return;
        self(self, shape.nodes[child].left);
        pos[child] = next++;
        self(self, shape.nodes[child].right);
    };
    walk(walk, 0);
    return pos;
}

// leaf reached from `node` by one step in `dir`, then the opposite way down
int one_turn_leaf(const reducers::TreeShape& shape, int node, int dir) {
    int child = dir > 0 ? shape.nodes[node].right : shape.nodes[node].left;
    while (!reducers::TreeShape::is_leaf(child))
        child = dir > 0 ? shape.nodes[child].left : shape.nodes[child].right;
    return reducers::TreeShape::leaf_id(child);
}
}  // namespace

bool thm3_check(const reducers::TreeShape& shape, int d, std::int64_t tuple_budget) {
    const int k = shape.num_leaves;
    const int l = k - 1;
    if (l < 1) throw std::invalid_argument("thm3_check: need at least 2 leaves");
    auto labels = reducers::identity_leaf_labels(k);
    auto composed = compose_with_tree(build_G(d, l), shape, labels, tuple_budget);

    auto pos = inorder_positions(shape);
    std::vector<int> node_at(l);
    for (int v = 0; v < l; ++v) node_at[pos[v]] = v;

    std::vector<int> set;
    Witness f1, f2;
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < l; ++y) {
            set.push_back(x * l + y);
            int node = node_at[y];
            f1.push_back(static_cast<std::int16_t>(labels[one_turn_leaf(shape, node, +1)]));
            f2.push_back(static_cast<std::int16_t>(labels[one_turn_leaf(shape, node, -1)]));
        }
    }
    return check_n_shatter(composed, set, f1, f2);
}

namespace {
// orthonormal basis of the hyperplane orthogonal to unit vector e
std::vector<std::vector<double>> orthonormal_complement(const std::vector<double>& e) {
    const int d = static_cast<int>(e.size());
    std::vector<std::vector<double>> basis;
    for (int c = 0; c < d && static_cast<int>(basis.size()) < d - 1; ++c) {
        std::vector<double> v(d, 0.0);
        v[c] = 1.0;
        double dot = 0.0;
        for (int i = 0; i < d; ++i) dot += v[i] * e[i];
        for (int i = 0; i < d; ++i) v[i] -= dot * e[i];
        for (const auto& b : basis) {
            double bd = 0.0;
            for (int i = 0; i < d; ++i) bd += v[i] * b[i];
            for (int i = 0; i < d; ++i) v[i] -= bd * b[i];
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-8) continue;
        for (double& x : v) x /= norm;
        basis.push_back(std::move(v));
    }
    return basis;
}
}  // namespace

EmbeddingReport embed_F_halfspaces(int d, int l, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("embed_F_halfspaces: needs d >= 2");
    auto f_class = build_F(d, l);
    const double rho = 1e-2;
    const int max_attempts = 20;

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Rng rng = make_rng(seed + static_cast<std::uint64_t>(attempt - 1));
        // l distinct unit directions
        std::vector<std::vector<double>> dirs(l, std::vector<double>(d));
        for (auto& e : dirs) {
            double norm = 0.0;
            do {
                norm = 0.0;
                for (auto& x : e) {
                    x = gaussian(rng);
                    norm += x * x;
                }
                norm = std::sqrt(norm);
            } while (norm < 1e-6);
            for (auto& x : e) x /= norm;
        }
        bool separated = true;
        for (int i = 0; i < l && separated; ++i)
            for (int j = i + 1; j < l && separated; ++j) {
                double dot = 0.0;
                for (int c = 0; c < d; ++c) dot += dirs[i][c] * dirs[j][c];
                separated = dot < 1.0 - 1e-3;
            }
        if (!separated) continue;

        // d affinely independent points on each tangent hyperplane, close to e_i
        EmbeddingReport report;
        report.attempts = attempt;
        report.perturbation = rho;
        report.points.assign(static_cast<std::size_t>(d) * l, {});
        bool feasible = true;
        for (int i = 0; i < l; ++i) {
            auto basis = orthonormal_complement(dirs[i]);
            for (int u = 0; u < d; ++u) {
                std::vector<double> x = dirs[i];
                if (u < d - 1)
                    for (int c = 0; c < d; ++c) x[c] += rho * basis[u][c];
                for (int i2 = 0; i2 < l && feasible; ++i2) {
                    if (i2 == i) continue;
                    double dot = 0.0;
                    for (int c = 0; c < d; ++c) dot += x[c] * dirs[i2][c];
                    feasible = dot < 1.0 - 1e-9;
                }
                report.points[static_cast<std::size_t>(u) * l + i] = std::move(x);
            }
        }
        if (!feasible) continue;

        report.num_functions = f_class.size();
        report.margin = std::numeric_limits<double>::infinity();
        bool all_ok = true;
        for (int f = 0; f < f_class.size() && all_ok; ++f) {
            halfspace::BinarySample sample;
            for (int p = 0; p < f_class.domain_size(); ++p) {
                sample.xs.push_back(report.points[p]);
                sample.ys.push_back(f_class.value(f, p));
            }
            try {
                auto h = halfspace::train_realizable(sample, 500'000);
                double norm = 0.0;
                for (double w : h.weights) norm += w * w;
                norm = std::sqrt(norm);
                for (std::size_t p = 0; p < sample.size(); ++p)
                    report.margin =
                        std::min(report.margin, std::abs(halfspace::raw_score(h, sample.xs[p])) / norm);
                ++report.realized;
            } catch (const not_realizable_error&) {
                all_ok = false;
            }
        }
        if (all_ok) return report;
    }
    throw embedding_invalid_error("embed_F_halfspaces: no feasible embedding after resampling");
}

EmbeddingReport embed_G_halfspaces(int d, int l, double slope) {
    if (d < 2) throw std::invalid_argument("embed_G_halfspaces: needs d >= 2");
    if (slope <= 1.0) throw std::invalid_argument("embed_G_halfspaces: slope must exceed 1");
    EmbeddingReport report;
    report.points.assign(static_cast<std::size_t>(d) * l, {});
    // base points: unit vectors of R^{d-1} plus the origin, stacked at heights 1..l
    auto base_point = [&](int m) {
        std::vector<double> e(d - 1, 0.0);
        if (m < d - 1) e[m] = 1.0;
        return e;
    };
    for (int m = 0; m < d; ++m) {
        for (int i = 0; i < l; ++i) {
            std::vector<double> x = base_point(m);
            x.push_back(static_cast<double>(i + 1));
            report.points[static_cast<std::size_t>(m) * l + i] = std::move(x);
        }
    }

    auto g_class = build_G(d, l);
    report.num_functions = g_class.size();
    report.margin = std::numeric_limits<double>::infinity();
    std::set<std::vector<std::int16_t>> verified;

    // iterate the raw parametrization: the affine witness needs (g, i, j)
    for (std::uint32_t gbits = 0; gbits < (1u << d); ++gbits) {
        for (int i = 0; i < l; ++i) {
            for (int j : {1, -1}) {
                // A(base_m) = g(m); with these base points the affine map is
                // b = g(d-1), coeff_m = g(m) - b
                const double b = (gbits & (1u << (d - 1))) ? 1.0 : -1.0;
                halfspace::Halfspace h;
                h.weights.resize(d + 1);
                for (int m = 0; m < d - 1; ++m)
                    h.weights[m] = ((gbits & (1u << m)) ? 1.0 : -1.0) - b;
                h.weights[d - 1] = slope * j;
                h.weights[d] = b - slope * j * static_cast<double>(i + 1);

                std::vector<std::int16_t> table(static_cast<std::size_t>(d) * l);
                bool ok = true;
                for (int m = 0; m < d && ok; ++m) {
                    for (int v = 0; v < l && ok; ++v) {
                        std::int16_t want = v == i ? ((gbits & (1u << m)) ? 1 : -1)
                                                   : static_cast<std::int16_t>(v > i ? j : -j);
                        const auto& x = report.points[static_cast<std::size_t>(m) * l + v];
                        double s = halfspace::raw_score(h, x);
                        ok = (s >= 0 ? 1 : -1) == want;
                        report.margin = std::min(report.margin, std::abs(s));
                        table[static_cast<std::size_t>(m) * l + v] = want;
                    }
                }
                if (!ok)
                    throw embedding_invalid_error("embed_G_halfspaces: affine witness failed a sign");
                verified.insert(table);
            }
        }
    }
    report.realized = static_cast<int>(verified.size());
    if (!report.all_realized())
        throw embedding_invalid_error("embed_G_halfspaces: some class members were not certified");
    return report;
}

FiniteFunctionClass read_class(std::istream& is) {
    int n = 0, m = 0;
    if (!(is >> n >> m) || n < 1 || m < 1) throw std::invalid_argument("read_class: bad header");
    std::vector<std::int16_t> values(static_cast<std::size_t>(n) * m);
    for (auto& v : values) {
        int x;
        if (!(is >> x)) throw std::invalid_argument("read_class: truncated table");
        v = static_cast<std::int16_t>(x);
    }
    return FiniteFunctionClass(n, std::move(values));
}

void write_class(std::ostream& os, const FiniteFunctionClass& h) {
    os << h.domain_size() << ' ' << h.size() << '\n';
    for (int f = 0; f < h.size(); ++f) {
        for (int p = 0; p < h.domain_size(); ++p) {
            if (p) os << ' ';
            os << h.value(f, p);
        }
        os << '\n';
    }
}

}  // namespace multireduce::shatter
