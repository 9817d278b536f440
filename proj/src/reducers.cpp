#include "multireduce/reducers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "multireduce/errors.hpp"
#include "multireduce/parallel.hpp"
#include "multireduce/rng.hpp"

namespace multireduce::reducers {

namespace {

// builds a shape by recursive leaf-count splitting; split_of(n) in [1, n-1]
template <typename SplitFn>
TreeShape build_shape(int k, SplitFn&& split_of) {
    TreeShape shape;
    shape.num_leaves = k;
    int next_leaf = 0;
    // returns child encoding
    auto rec = [&](auto&& self, int leaves) -> int {
        if (leaves == 1) return ~(next_leaf++);
        int id = static_cast<int>(shape.nodes.size());
        shape.nodes.push_back({});
        int left_count = split_of(leaves);
        int l = self(self, left_count);
        int r = self(self, leaves - left_count);
        shape.nodes[id].left = l;
        shape.nodes[id].right = r;
        return id;
    };
    rec(rec, k);
    return shape;
}

}  // namespace

TreeShape balanced_tree(int k) {
    if (k < 2) throw std::invalid_argument("balanced_tree: k must be >= 2");
    return build_shape(k, [](int n) { return (n + 1) / 2; });
}

TreeShape random_tree(int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("random_tree: k must be >= 2");
    Rng rng = make_rng(seed);
    return build_shape(k, [&rng](int n) { return static_cast<int>(uniform_int(rng, 1, n - 1)); });
}

std::vector<TreeShape> all_tree_shapes(int k) {
    if (k < 1) throw std::invalid_argument("all_tree_shapes: k must be >= 1");
    if (k > 10) throw budget_exceeded_error("all_tree_shapes: k too large to enumerate");
    // enumerate split sequences recursively; a shape is rebuilt per sequence
    std::vector<TreeShape> out;
    std::vector<std::vector<int>> splits_per_count(k + 1);
    // recursive enumeration: all shapes over n leaves as (left shape, right shape)
    // represent shapes structurally via the nested builder
    struct Builder {
        std::vector<std::vector<std::vector<int>>> memo;  // n -> list of preorder split lists
        Builder(int kmax) : memo(kmax + 1) {}
        const std::vector<std::vector<int>>& lists(int n) {
            if (!memo[n].empty() || n == 1) {
                if (n == 1 && memo[n].empty()) memo[n].push_back({});
                return memo[n];
            }
            for (int lc = 1; lc < n; ++lc) {
                for (const auto& L : lists(lc)) {
                    for (const auto& R : lists(n - lc)) {
                        std::vector<int> s;
                        s.push_back(lc);
                        s.insert(s.end(), L.begin(), L.end());
                        s.insert(s.end(), R.begin(), R.end());
                        memo[n].push_back(std::move(s));
                    }
                }
            }
            return memo[n];
        }
    } builder(k);
    for (const auto& seq : builder.lists(k)) {
        std::size_t pos = 0;
        auto shape = build_shape(k, [&](int) { return seq[pos++]; });
        out.push_back(std::move(shape));
    }
    return out;
}

int tree_depth(const TreeShape& shape) {
    auto depth = [&](auto&& self, int child) -> int {
        if (TreeShape::is_leaf(child)) return 0;
        return 1 + std::max(self(self, shape.nodes[child].left), self(self, shape.nodes[child].right));
    };
    return shape.nodes.empty() ? 0 : depth(depth, 0);
}

std::vector<int> identity_leaf_labels(int k) {
    std::vector<int> l(k);
    for (int i = 0; i < k; ++i) l[i] = i + 1;
    return l;
}

std::vector<int> random_leaf_labels(int k, std::uint64_t seed) {
    Rng rng = make_rng(seed);
    auto perm = random_permutation(k, rng);
    std::vector<int> l(k);
    for (int i = 0; i < k; ++i) l[i] = perm[i] + 1;
    return l;
}

int msvm_predict(const WeightMatrix& w, const std::vector<double>& x) {
    if (w.num_classes() < 1) throw std::invalid_argument("msvm_predict: empty weight matrix");
    if (static_cast<int>(x.size()) != w.dim())
        throw std::invalid_argument("msvm_predict: dimension mismatch");
    int best = 0;
    long double best_score = -std::numeric_limits<long double>::infinity();
    for (int i = 0; i < w.num_classes(); ++i) {
        long double s = w.rows[i].back();
        for (std::size_t c = 0; c < x.size(); ++c) s += w.rows[i][c] * static_cast<long double>(x[c]);
        if (s > best_score) {
            best_score = s;
            best = i;
        }
    }
    return best + 1;
}

int tree_predict(const TreeModel& t, const std::vector<double>& x) {
    if (t.shape.nodes.empty()) throw std::invalid_argument("tree_predict: tree has no internal nodes");
    int node = 0;
    while (true) {
        int child = halfspace::predict(t.node_classifiers[node], x) > 0 ? t.shape.nodes[node].right
                                                                        : t.shape.nodes[node].left;
        if (TreeShape::is_leaf(child)) return t.leaf_labels[TreeShape::leaf_id(child)];
        node = child;
    }
}

int ecoc_predict(const EcocModel& e, const std::vector<double>& x) {
    codes::BinaryVector u(e.code.code_length());
    for (int j = 0; j < e.code.code_length(); ++j)
        u[j] = halfspace::predict(e.column_classifiers[j], x);
    return codes::decode(e.code, u);
}

int predict(const MulticlassModel& m, const std::vector<double>& x) {
    return std::visit(
        [&](const auto& model) {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, WeightMatrix>)
                return msvm_predict(model, x);
            else if constexpr (std::is_same_v<T, TreeModel>)
                return tree_predict(model, x);
            else
                return ecoc_predict(model, x);
        },
        m);
}

namespace {
template <typename Model>
double error_impl(const Model& model, const MulticlassSample& sample) {
    if (sample.size() == 0) throw std::invalid_argument("multiclass_error: empty sample");
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        int p;
        if constexpr (std::is_same_v<Model, WeightMatrix>)
            p = msvm_predict(model, sample.xs[i]);
        else if constexpr (std::is_same_v<Model, TreeModel>)
            p = tree_predict(model, sample.xs[i]);
        else
            p = ecoc_predict(model, sample.xs[i]);
        wrong += (p != sample.ys[i]);
    }
    return static_cast<double>(wrong) / static_cast<double>(sample.size());
}
}  // namespace

double multiclass_error(const WeightMatrix& w, const MulticlassSample& s) { return error_impl(w, s); }
double multiclass_error(const TreeModel& t, const MulticlassSample& s) { return error_impl(t, s); }
double multiclass_error(const EcocModel& e, const MulticlassSample& s) { return error_impl(e, s); }
double multiclass_error(const MulticlassModel& m, const MulticlassSample& s) {
    return std::visit([&](const auto& model) { return multiclass_error(model, s); }, m);
}

namespace {

halfspace::Halfspace constant_majority(const halfspace::BinarySample& sample, int dim) {
    long pos = 0, neg = 0;
    for (int y : sample.ys) (y > 0 ? pos : neg)++;
    halfspace::Halfspace h;
    h.weights.assign(dim + 1, 0.0);
    h.weights[dim] = pos >= neg ? 1.0 : -1.0;
    return h;
}

// Binary training shared by the reductions: constants for degenerate problems,
// perceptron first when allowed, hinge descent otherwise.
halfspace::Halfspace train_binary(const halfspace::BinarySample& sample, int dim,
                                  const TrainConfig& cfg, std::uint64_t seed) {
    bool has_pos = false, has_neg = false;
    for (int y : sample.ys) (y > 0 ? has_pos : has_neg) = true;
    if (sample.size() == 0 || !has_pos || !has_neg) return constant_majority(sample, dim);
    if (cfg.try_realizable) {
        try {
            return halfspace::train_realizable(sample, cfg.base.perceptron_budget);
        } catch (const not_realizable_error&) {
        }
    }
    return halfspace::train_erm_approx(sample, cfg.base, seed);
}

void check_labels(const MulticlassSample& sample, int k, const char* who) {
    if (sample.size() == 0) throw std::invalid_argument(std::string(who) + ": empty sample");
    for (int y : sample.ys)
        if (y < 1 || y > k) throw std::invalid_argument(std::string(who) + ": label out of range");
}

}  // namespace

EcocModel train_ecoc(const codes::CodeMatrix& code, const MulticlassSample& sample,
                     const TrainConfig& cfg, std::uint64_t seed) {
    if (!code.is_ternary())
        throw std::invalid_argument("train_ecoc: code entries must lie in {-1,0,+1}");
    check_labels(sample, code.num_classes(), "train_ecoc");
    const int d = sample.dim();
    const int l = code.code_length();
    std::vector<halfspace::Halfspace> clf(l);
    parallel_for(l, [&](std::int64_t j) {
        halfspace::BinarySample bin;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            double e = code.entry(code.row_of_label(sample.ys[i]), static_cast<int>(j));
            if (e == 0.0) continue;
            bin.xs.push_back(sample.xs[i]);
            bin.ys.push_back(e > 0 ? 1 : -1);
        }
        clf[j] = train_binary(bin, d, cfg, seed + static_cast<std::uint64_t>(j));
    });
    return EcocModel{code, std::move(clf)};
}

EcocModel train_ova(const MulticlassSample& sample, const TrainConfig& cfg, std::uint64_t seed) {
    check_labels(sample, sample.num_classes, "train_ova");
    return train_ecoc(codes::ova_code(sample.num_classes), sample, cfg, seed);
}

TreeModel train_tree(const TreeShape& shape, const std::vector<int>& leaf_labels,
                     const MulticlassSample& sample, const TrainConfig& cfg, std::uint64_t seed) {
    const int k = shape.num_leaves;
    if (static_cast<int>(leaf_labels.size()) != k)
        throw std::invalid_argument("train_tree: leaf label count must equal leaf count");
    check_labels(sample, k, "train_tree");
    const int d = sample.dim();

    // label -> side (-1 left / +1 right / 0 outside) per internal node
    const int m = shape.num_internal();
    std::vector<std::vector<int>> side(m, std::vector<int>(k + 1, 0));
    auto mark = [&](auto&& self, int child, int node, int s) -> void {
        if (TreeShape::is_leaf(child)) {
            side[node][leaf_labels[TreeShape::leaf_id(child)]] = s;
            return;
        }
        self(self, shape.nodes[child].left, node, s);
        self(self, shape.nodes[child].right, node, s);
    };
    for (int v = 0; v < m; ++v) {
        mark(mark, shape.nodes[v].left, v, -1);
        mark(mark, shape.nodes[v].right, v, +1);
    }

    std::vector<halfspace::Halfspace> clf(m);
    parallel_for(m, [&](std::int64_t v) {
        halfspace::BinarySample bin;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            int s = side[v][sample.ys[i]];
            if (s == 0) continue;
            bin.xs.push_back(sample.xs[i]);
            bin.ys.push_back(s);
        }
        clf[v] = train_binary(bin, d, cfg, seed + static_cast<std::uint64_t>(v));
    });
    return TreeModel{shape, leaf_labels, std::move(clf)};
}

WeightMatrix train_msvm(const MulticlassSample& sample, MsvmMode mode, const TrainConfig& cfg,
                        std::uint64_t seed) {
    const int k = sample.num_classes;
    if (k < 2) throw std::invalid_argument("train_msvm: need at least 2 classes");
    check_labels(sample, k, "train_msvm");
    const int d = sample.dim();
    const std::size_t n = sample.size();

    auto scores_argmax = [&](const WeightMatrix& w, const std::vector<double>& x) {
        return msvm_predict(w, x);
    };

    if (mode == MsvmMode::Realizable) {
        WeightMatrix w;
        w.rows.assign(k, std::vector<long double>(d + 1, 0.0L));
        std::int64_t updates = 0;
        while (true) {
            bool clean = true;
            for (std::size_t i = 0; i < n; ++i) {
                int yhat = scores_argmax(w, sample.xs[i]);
                int y = sample.ys[i];
                if (yhat == y) continue;
                clean = false;
                for (int c = 0; c < d; ++c) {
                    w.rows[y - 1][c] += sample.xs[i][c];
                    w.rows[yhat - 1][c] -= sample.xs[i][c];
                }
                w.rows[y - 1][d] += 1.0L;
                w.rows[yhat - 1][d] -= 1.0L;
                if (++updates >= cfg.base.perceptron_budget)
                    throw not_realizable_error("train_msvm: update budget exhausted");
            }
            if (clean) return w;
        }
    }

    // Crammer-Singer style subgradient on the multiclass hinge
    WeightMatrix best;
    best.rows.assign(k, std::vector<long double>(d + 1, 0.0L));
    double best_err = multiclass_error(best, sample);
    for (int r = 0; r < cfg.base.restarts && best_err > 0.0; ++r) {
        Rng rng = make_rng(seed + static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ULL);
        WeightMatrix w;
        w.rows.assign(k, std::vector<long double>(d + 1));
        for (auto& row : w.rows)
            for (auto& c : row) c = gaussian(rng);
        std::int64_t t = 0;
        for (int epoch = 0; epoch < cfg.base.epochs; ++epoch) {
            auto order = random_permutation(static_cast<int>(n), rng);
            for (int idx : order) {
                ++t;
                const int y = sample.ys[idx];
                const auto& x = sample.xs[idx];
                long double sy = w.rows[y - 1].back();
                for (int c = 0; c < d; ++c) sy += w.rows[y - 1][c] * x[c];
                int rstar = -1;
                long double srstar = -std::numeric_limits<long double>::infinity();
                for (int rr = 0; rr < k; ++rr) {
                    if (rr == y - 1) continue;
                    long double s = w.rows[rr].back();
                    for (int c = 0; c < d; ++c) s += w.rows[rr][c] * x[c];
                    if (s > srstar) {
                        srstar = s;
                        rstar = rr;
                    }
                }
                if (rstar >= 0 && 1.0L + srstar - sy > 0.0L) {
                    const double eta = cfg.base.step0 / std::sqrt(static_cast<double>(t));
                    for (int c = 0; c < d; ++c) {
                        w.rows[y - 1][c] += eta * x[c];
                        w.rows[rstar][c] -= eta * x[c];
                    }
                    w.rows[y - 1][d] += eta;
                    w.rows[rstar][d] -= eta;
                }
            }
            double e = multiclass_error(w, sample);
            if (e < best_err) {
                best_err = e;
                best = w;
                if (best_err == 0.0) break;
            }
        }
    }
    return best;
}

WeightMatrix tree_to_msvm(const TreeModel& tree, const std::vector<std::vector<double>>& reference,
                          double epsilon) {
    const int k = tree.num_classes();
    const int m = tree.shape.num_internal();
    if (reference.empty()) throw std::invalid_argument("tree_to_msvm: empty reference");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("tree_to_msvm: epsilon must be in (0,1)");
    const int d = static_cast<int>(reference[0].size());
    const std::size_t n = reference.size();

    // unit-normalized node classifiers (positive scaling never changes the tree)
    std::vector<std::vector<double>> w(m);
    for (int v = 0; v < m; ++v) {
        const auto& c = tree.node_classifiers[v].weights;
        if (static_cast<int>(c.size()) != d + 1)
            throw std::invalid_argument("tree_to_msvm: classifier dimension mismatch");
        double norm = 0.0;
        for (double x : c) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::invalid_argument("tree_to_msvm: zero node classifier");
        w[v].resize(d + 1);
        for (int i = 0; i <= d; ++i) w[v][i] = c[i] / norm;
    }

    // raw node scores per reference point
    std::vector<std::vector<double>> score(n, std::vector<double>(m));
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(reference[i].size()) != d)
            throw std::invalid_argument("tree_to_msvm: reference dimension mismatch");
        double nr = 1.0;
        for (double x : reference[i]) nr += x * x;
        norms[i] = std::sqrt(nr);
        for (int v = 0; v < m; ++v) {
            double s = w[v][d];
            for (int c = 0; c < d; ++c) s += w[v][c] * reference[i][c];
            score[i][v] = s;
        }
    }

    const std::size_t allowed = static_cast<std::size_t>(std::floor(epsilon / 2.0 * n));
    auto min_margin = [&](std::size_t i, double g) {
        double mm = std::numeric_limits<double>::infinity();
        for (int v = 0; v < m; ++v) mm = std::min(mm, std::abs(score[i][v] + g));
        return mm;
    };
    auto quantile = [&](double g) {
        std::vector<double> mm(n);
        for (std::size_t i = 0; i < n; ++i) mm[i] = min_margin(i, g);
        std::nth_element(mm.begin(), mm.begin() + allowed, mm.end());
        return mm[allowed];
    };

    double gamma = quantile(0.0) / 2.0;
    bool ok = false;
    for (int it = 0; it < 50 && gamma > 0.0; ++it) {
        std::size_t bad = 0;
        for (std::size_t i = 0; i < n; ++i) bad += (min_margin(i, gamma) < gamma);
        if (bad <= allowed) {
            ok = true;
            break;
        }
        gamma = quantile(gamma) / 2.0;
    }
    if (!ok || gamma <= 0.0)
        throw tolerance_unachievable_error(
            "tree_to_msvm: no positive margin gamma covers the reference within eps/2");

    std::vector<double> sorted_norms = norms;
    std::sort(sorted_norms.begin(), sorted_norms.end());
    double r = sorted_norms[n - 1 - allowed];
    double max_wt = 0.0;
    for (int v = 0; v < m; ++v) {
        double nr = 0.0;
        for (int c = 0; c < d; ++c) nr += w[v][c] * w[v][c];
        double b = w[v][d] + gamma;
        nr = std::sqrt(nr + b * b);
        max_wt = std::max(max_wt, nr);
    }
    r = std::max(r, max_wt * 1.0000001);

    const long double a = 2.0L * r * r / gamma + 1.0L;
    const int depth = tree_depth(tree.shape);
    const long double bits_needed =
        (depth - 1) * std::log2l(a) + std::log2l(4.0L * r * r / gamma);
    if (bits_needed > 60.0L)
        throw tolerance_unachievable_error(
            "tree_to_msvm: tree too deep for the margin; argmax would not be resolvable");

    // root-to-leaf paths
    WeightMatrix out;
    out.rows.assign(k, std::vector<long double>(d + 1, 0.0L));
    std::vector<std::pair<int, int>> path;  // (node, direction)
    auto walk = [&](auto&& self, int child) -> void {
        if (TreeShape::is_leaf(child)) {
            const int label = tree.leaf_labels[TreeShape::leaf_id(child)];
            auto& row = out.rows[label - 1];
            long double aj = 1.0L;
            for (const auto& [v, b] : path) {
                aj /= a;
                for (int c = 0; c < d; ++c) row[c] += aj * b * static_cast<long double>(w[v][c]);
                row[d] += aj * b * static_cast<long double>(w[v][d] + gamma);
            }
            return;
        }
        path.emplace_back(child, -1);
        self(self, tree.shape.nodes[child].left);
        path.back().second = +1;
        self(self, tree.shape.nodes[child].right);
        path.pop_back();
    };
    walk(walk, 0);
    return out;
}

EcocModel msvm_to_ap(const WeightMatrix& w) {
    const int k = w.num_classes();
    if (k < 2) throw std::invalid_argument("msvm_to_ap: need at least 2 classes");
    const int d = w.dim();
    auto code = codes::ap_code(k);
    std::vector<halfspace::Halfspace> clf(code.code_length());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            halfspace::Halfspace h;
            h.weights.resize(d + 1);
            for (int c = 0; c <= d; ++c)
                h.weights[c] = static_cast<double>(w.rows[j][c] - w.rows[i][c]);
            clf[codes::ap_column_index(k, i, j)] = std::move(h);
        }
    }
    return EcocModel{std::move(code), std::move(clf)};
}

}  // namespace multireduce::reducers
