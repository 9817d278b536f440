#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace multireduce::codes {

// Output-code bit vector, entries in {-1,+1}.
using BinaryVector = std::vector<int>;

// A k x l output code plus a row->label bijection. Labels are 1..k.
// Entries are real in general; the distance and sensitivity operations
// require entries in {-1,+1} and decode switches to exact integer scoring
// whenever all entries lie in {-1,0,+1}.
class CodeMatrix {
  public:
    CodeMatrix(int num_classes, int code_length, std::vector<double> entries,
               std::vector<int> label_map);

    int num_classes() const { return k_; }
    int code_length() const { return l_; }
    double entry(int row, int col) const { return entries_[static_cast<std::size_t>(row) * l_ + col]; }
    const std::vector<double>& entries() const { return entries_; }
    // label_map()[row] is the class label (1..k) attached to that row.
    const std::vector<int>& label_map() const { return label_map_; }
    int label_of_row(int row) const { return label_map_[row]; }
    int row_of_label(int label) const { return row_of_label_[label - 1]; }

    bool is_binary() const { return binary_; }
    bool is_ternary() const { return ternary_; }  // entries in {-1,0,+1}

    // Row as a +-1 vector; throws unless the code is binary.
    BinaryVector row(int i) const;

  private:
    int k_;
    int l_;
    std::vector<double> entries_;   // row-major k x l
    std::vector<int> label_map_;    // size k, values 1..k, bijective
    std::vector<int> row_of_label_; // inverse map
    bool binary_ = false;
    bool ternary_ = false;
};

// One-vs-All code: k x k, +1 on the diagonal, -1 elsewhere, identity labels.
CodeMatrix ova_code(int k);

// All-Pairs code: k x C(k,2). Columns indexed by pairs (i,j), i<j, in
// lexicographic order; column (i,j) holds -1 at row i, +1 at row j, 0 elsewhere.
CodeMatrix ap_code(int k);

// Column index of pair (i,j), 0-based rows i<j, within ap_code(k).
int ap_column_index(int k, int i, int j);

struct RandomCodeOptions {
    bool distinct_rows = false;   // resample until all rows are distinct
    bool randomize_labels = false;  // shuffle the row->label bijection
};

// Uniform +-1 entries, deterministic in seed.
CodeMatrix random_code(int k, int l, std::uint64_t seed, RandomCodeOptions opts = {});

// argmax_i sum_j M[i][j] u[j], minimal row on ties, mapped through the label map.
int decode(const CodeMatrix& m, const BinaryVector& u);

// Row index chosen by decode, before the label map is applied.
int decode_row(const CodeMatrix& m, const BinaryVector& u);

int hamming_distance(const BinaryVector& u, const BinaryVector& v);

// delta(M): minimum pairwise Hamming distance between rows. Binary codes only.
int code_distance(const CodeMatrix& m);

// Delta(M) = max_i min_{j != i} hamming(row i, row j) >= delta(M).
int max_min_distance(const CodeMatrix& m);

struct Sensitivity {
    int q = 0;
    std::vector<int> coords;  // 0-based coordinates whose flip changes the decode
};

// Coordinates j with decode(M, u) != decode(M, u ^ e_j).
Sensitivity sensitivity(const CodeMatrix& m, const BinaryVector& u);

// Constructive q-sensitive vector with q >= ceil(Delta(M)/2).
// Picks the minimal row index attaining Delta(M), its nearest row (minimal
// index among ties), and copies the smaller-indexed row on the first
// ceil(Delta/2) differing coordinates and the larger-indexed row elsewhere.
// Throws no_sensitive_guarantee_error when Delta(M) = 0.
BinaryVector sensitive_vector(const CodeMatrix& m);

// Text format: "k l" line, k rows of l entries, one line of k labels.
void write_code(std::ostream& os, const CodeMatrix& m);
CodeMatrix read_code(std::istream& is);

}  // namespace multireduce::codes
