#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "multireduce/codes.hpp"
#include "multireduce/halfspace.hpp"
#include "multireduce/sample.hpp"

namespace multireduce::reducers {

// Multiclass linear predictor: label = argmax_i <rows[i], (x,1)>, minimal
// index on ties. Rows are kept in extended precision because the tree
// conversion builds geometrically decaying row sums whose argmax comparisons
// need more than double resolution.
struct WeightMatrix {
    std::vector<std::vector<long double>> rows;  // k rows of length d+1

    int num_classes() const { return static_cast<int>(rows.size()); }
    int dim() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()) - 1; }
};

// Full binary tree shape. Internal nodes are indexed in preorder (root = 0);
// a negative child encodes leaf ~child, leaves numbered 0..k-1 left to right.
struct TreeShape {
    struct Node {
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int num_leaves = 0;

    int num_internal() const { return static_cast<int>(nodes.size()); }
    static bool is_leaf(int child) { return child < 0; }
    static int leaf_id(int child) { return ~child; }
};

TreeShape balanced_tree(int k);
TreeShape random_tree(int k, std::uint64_t seed);
// Every full binary tree shape over k leaves (Catalan(k-1) of them).
std::vector<TreeShape> all_tree_shapes(int k);
int tree_depth(const TreeShape& shape);

struct TreeModel {
    TreeShape shape;
    std::vector<int> leaf_labels;  // leaf id -> label in 1..k, bijective
    std::vector<halfspace::Halfspace> node_classifiers;  // per internal node

    int num_classes() const { return shape.num_leaves; }
};

// Identity leaf labeling (leaf i -> label i+1) or a seeded random bijection.
std::vector<int> identity_leaf_labels(int k);
std::vector<int> random_leaf_labels(int k, std::uint64_t seed);

struct EcocModel {
    codes::CodeMatrix code;
    std::vector<halfspace::Halfspace> column_classifiers;

    int num_classes() const { return code.num_classes(); }
};

using MulticlassModel = std::variant<WeightMatrix, TreeModel, EcocModel>;

int msvm_predict(const WeightMatrix& w, const std::vector<double>& x);
int tree_predict(const TreeModel& t, const std::vector<double>& x);
int ecoc_predict(const EcocModel& e, const std::vector<double>& x);
int predict(const MulticlassModel& m, const std::vector<double>& x);

double multiclass_error(const WeightMatrix& w, const MulticlassSample& sample);
double multiclass_error(const TreeModel& t, const MulticlassSample& sample);
double multiclass_error(const EcocModel& e, const MulticlassSample& sample);
double multiclass_error(const MulticlassModel& m, const MulticlassSample& sample);

// Binary training used per column / per node: perceptron-to-consistency first,
// hinge best-of-restarts as the fallback. Degenerate (empty or one-sided)
// binary problems get the constant-majority classifier.
struct TrainConfig {
    halfspace::LearnerConfig base;
    bool try_realizable = true;
};

EcocModel train_ova(const MulticlassSample& sample, const TrainConfig& cfg, std::uint64_t seed);
EcocModel train_ecoc(const codes::CodeMatrix& code, const MulticlassSample& sample,
                     const TrainConfig& cfg, std::uint64_t seed);
TreeModel train_tree(const TreeShape& shape, const std::vector<int>& leaf_labels,
                     const MulticlassSample& sample, const TrainConfig& cfg, std::uint64_t seed);

enum class MsvmMode { Realizable, Approximate };

// Realizable: multiclass perceptron run to consistency (throws
// not_realizable_error when the update budget runs out).
// Approximate: Crammer–Singer style subgradient on the multiclass hinge,
// best-of-restarts selected by 0-1 training error.
WeightMatrix train_msvm(const MulticlassSample& sample, MsvmMode mode, const TrainConfig& cfg,
                        std::uint64_t seed);

// Constructive conversion of a tree into an equivalent-up-to-epsilon linear
// predictor: row i = sum_j a^{-j} b_{i,j} wt(v_{i,j}) over the root-to-leaf
// path of label i, where wt(v) is the unit-normalized node classifier with
// gamma added to the bias, b is the step direction, and a = 2 r^2/gamma + 1.
// gamma is found by a fixed-point search so that at most an eps/2 fraction of
// the reference points has any node score in (-2 gamma, 0), and r covers both
// the (1 - eps/2) quantile of |(x,1)| and every |wt(v)|. Throws
// tolerance_unachievable_error when no positive gamma works or when the
// required argmax resolution exceeds extended precision.
WeightMatrix tree_to_msvm(const TreeModel& tree, const std::vector<std::vector<double>>& reference,
                          double epsilon);

// All-pairs model with column (i,j) classifier W[j] - W[i]; agrees with
// msvm_predict wherever no pairwise score ties occur.
EcocModel msvm_to_ap(const WeightMatrix& w);

}  // namespace multireduce::reducers
