#include "multireduce/codes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "multireduce/errors.hpp"
#include "multireduce/rng.hpp"

namespace multireduce::codes {

CodeMatrix::CodeMatrix(int num_classes, int code_length, std::vector<double> entries,
                       std::vector<int> label_map)
    : k_(num_classes), l_(code_length), entries_(std::move(entries)), label_map_(std::move(label_map)) {
    if (k_ < 2) throw std::invalid_argument("CodeMatrix: need at least 2 classes");
    if (l_ < 1) throw std::invalid_argument("CodeMatrix: need code length >= 1");
    if (entries_.size() != static_cast<std::size_t>(k_) * l_)
        throw std::invalid_argument("CodeMatrix: entry count does not match k*l");
    if (label_map_.empty()) {
        label_map_.resize(k_);
        for (int i = 0; i < k_; ++i) label_map_[i] = i + 1;
    }
    if (static_cast<int>(label_map_.size()) != k_)
        throw std::invalid_argument("CodeMatrix: label map size must be k");
    row_of_label_.assign(k_, -1);
    for (int i = 0; i < k_; ++i) {
        int lab = label_map_[i];
        if (lab < 1 || lab > k_ || row_of_label_[lab - 1] != -1)
            throw std::invalid_argument("CodeMatrix: label map must be a bijection onto 1..k");
        row_of_label_[lab - 1] = i;
    }
    for (double e : entries_) {
        if (!std::isfinite(e)) throw std::invalid_argument("CodeMatrix: entries must be finite");
    }
    binary_ = std::all_of(entries_.begin(), entries_.end(), [](double e) { return e == 1.0 || e == -1.0; });
    ternary_ = std::all_of(entries_.begin(), entries_.end(),
                           [](double e) { return e == 1.0 || e == -1.0 || e == 0.0; });
}

BinaryVector CodeMatrix::row(int i) const {
    if (!binary_) throw std::invalid_argument("CodeMatrix::row: code is not binary");
    BinaryVector r(l_);
    for (int j = 0; j < l_; ++j) r[j] = entry(i, j) > 0 ? 1 : -1;
    return r;
}

CodeMatrix ova_code(int k) {
    if (k < 2) throw std::invalid_argument("ova_code: k must be >= 2");
    std::vector<double> e(static_cast<std::size_t>(k) * k, -1.0);
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i) * k + i] = 1.0;
    return CodeMatrix(k, k, std::move(e), {});
}

int ap_column_index(int k, int i, int j) {
    // pairs (0,1),(0,2),...,(0,k-1),(1,2),... in lexicographic order
    if (i < 0 || j <= i || j >= k) throw std::invalid_argument("ap_column_index: bad pair");
    return i * k - i * (i + 1) / 2 + (j - i - 1);
}

CodeMatrix ap_code(int k) {
    if (k < 2) throw std::invalid_argument("ap_code: k must be >= 2");
    int l = k * (k - 1) / 2;
    std::vector<double> e(static_cast<std::size_t>(k) * l, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            int col = ap_column_index(k, i, j);
            e[static_cast<std::size_t>(i) * l + col] = -1.0;
            e[static_cast<std::size_t>(j) * l + col] = 1.0;
        }
    }
    return CodeMatrix(k, l, std::move(e), {});
}

CodeMatrix random_code(int k, int l, std::uint64_t seed, RandomCodeOptions opts) {
    if (k < 2) throw std::invalid_argument("random_code: k must be >= 2");
    if (l < 1) throw std::invalid_argument("random_code: l must be >= 1");
    Rng rng = make_rng(seed);
    std::vector<double> e(static_cast<std::size_t>(k) * l);
    const int max_resamples = 10000;
    for (int attempt = 0;; ++attempt) {
        for (auto& x : e) x = static_cast<double>(rademacher(rng));
        if (!opts.distinct_rows) break;
        bool dup = false;
        for (int i = 0; i < k && !dup; ++i)
            for (int j = i + 1; j < k && !dup; ++j) {
                bool eq = true;
                for (int c = 0; c < l; ++c)
                    if (e[static_cast<std::size_t>(i) * l + c] != e[static_cast<std::size_t>(j) * l + c]) {
                        eq = false;
                        break;
                    }
                dup = eq;
            }
        if (!dup) break;
        if (attempt >= max_resamples)
            throw std::invalid_argument("random_code: could not sample distinct rows (l too small for k?)");
    }
    std::vector<int> labels;
    if (opts.randomize_labels) {
        auto perm = random_permutation(k, rng);
        labels.resize(k);
        for (int i = 0; i < k; ++i) labels[i] = perm[i] + 1;
    }
    return CodeMatrix(k, l, std::move(e), std::move(labels));
}

int decode_row(const CodeMatrix& m, const BinaryVector& u) {
    if (static_cast<int>(u.size()) != m.code_length())
        throw std::invalid_argument("decode: vector length does not match code length");
    const int k = m.num_classes();
    const int l = m.code_length();
    int best = 0;
    if (m.is_ternary()) {
        std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
        for (int i = 0; i < k; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < l; ++j) {
                double e = m.entry(i, j);
                if (e != 0.0) s += (e > 0 ? u[j] : -u[j]);
            }
            if (s > best_score) {
                best_score = s;
                best = i;
            }
        }
    } else {
        double best_score = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < k; ++i) {
            double s = 0.0;
            for (int j = 0; j < l; ++j) s += m.entry(i, j) * u[j];
            if (s > best_score) {
                best_score = s;
                best = i;
            }
        }
    }
    return best;
}

int decode(const CodeMatrix& m, const BinaryVector& u) { return m.label_of_row(decode_row(m, u)); }

int hamming_distance(const BinaryVector& u, const BinaryVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]);
    return d;
}

static void require_binary(const CodeMatrix& m, const char* who) {
    if (!m.is_binary()) throw std::invalid_argument(std::string(who) + ": code entries must be +-1");
}

int code_distance(const CodeMatrix& m) {
    require_binary(m, "code_distance");
    int best = m.code_length();
    for (int i = 0; i < m.num_classes(); ++i) {
        auto ri = m.row(i);
        for (int j = i + 1; j < m.num_classes(); ++j) best = std::min(best, hamming_distance(ri, m.row(j)));
    }
    return best;
}

int max_min_distance(const CodeMatrix& m) {
    require_binary(m, "max_min_distance");
    int best = 0;
    for (int i = 0; i < m.num_classes(); ++i) {
        auto ri = m.row(i);
        int nearest = m.code_length() + 1;
        for (int j = 0; j < m.num_classes(); ++j) {
            if (j == i) continue;
            nearest = std::min(nearest, hamming_distance(ri, m.row(j)));
        }
        best = std::max(best, nearest);
    }
    return best;
}

Sensitivity sensitivity(const CodeMatrix& m, const BinaryVector& u) {
    if (static_cast<int>(u.size()) != m.code_length())
        throw std::invalid_argument("sensitivity: vector length does not match code length");
    Sensitivity out;
    const int base = decode(m, u);
    BinaryVector v = u;
    for (int j = 0; j < m.code_length(); ++j) {
        v[j] = -v[j];
        if (decode(m, v) != base) out.coords.push_back(j);
        v[j] = -v[j];
    }
    out.q = static_cast<int>(out.coords.size());
    return out;
}

BinaryVector sensitive_vector(const CodeMatrix& m) {
    require_binary(m, "sensitive_vector");
    const int k = m.num_classes();
    const int l = m.code_length();
    std::vector<BinaryVector> rows(k);
    for (int i = 0; i < k; ++i) rows[i] = m.row(i);

    // i1 = minimal row index whose nearest-row distance attains Delta(M)
    int delta = -1, i1 = 0;
    std::vector<int> nearest_dist(k);
    for (int i = 0; i < k; ++i) {
        int nd = l + 1;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            nd = std::min(nd, hamming_distance(rows[i], rows[j]));
        }
        nearest_dist[i] = nd;
        if (nd > delta) {
            delta = nd;
            i1 = i;
        }
    }
    if (delta == 0)
        throw no_sensitive_guarantee_error("sensitive_vector: Delta(M) = 0, every row has a duplicate");

    // i2 = minimal index among rows nearest to i1
    int i2 = -1;
    for (int j = 0; j < k; ++j) {
        if (j == i1) continue;
        if (hamming_distance(rows[i1], rows[j]) == delta) {
            i2 = j;
            break;
        }
    }

    const int lo = std::min(i1, i2), hi = std::max(i1, i2);
    int head = (delta + 1) / 2;  // ceil(Delta/2)
    BinaryVector u = rows[hi];
    for (int j = 0; j < l && head > 0; ++j) {
        if (rows[i1][j] != rows[i2][j]) {
            u[j] = rows[lo][j];
            --head;
        }
    }
    return u;
}

void write_code(std::ostream& os, const CodeMatrix& m) {
    os << m.num_classes() << ' ' << m.code_length() << '\n';
    for (int i = 0; i < m.num_classes(); ++i) {
        for (int j = 0; j < m.code_length(); ++j) {
            if (j) os << ' ';
            double e = m.entry(i, j);
            if (e == static_cast<std::int64_t>(e))
                os << static_cast<std::int64_t>(e);
            else
                os << e;
        }
        os << '\n';
    }
    for (int i = 0; i < m.num_classes(); ++i) {
        if (i) os << ' ';
        os << m.label_of_row(i);
    }
    os << '\n';
}

CodeMatrix read_code(std::istream& is) {
    int k = 0, l = 0;
    if (!(is >> k >> l)) throw std::invalid_argument("read_code: missing header");
    if (k < 2 || l < 1) throw std::invalid_argument("read_code: bad dimensions");
    std::vector<double> e(static_cast<std::size_t>(k) * l);
    for (auto& x : e)
        if (!(is >> x)) throw std::invalid_argument("read_code: truncated matrix");
    std::vector<int> labels(k);
    for (auto& x : labels)
        if (!(is >> x)) throw std::invalid_argument("read_code: truncated label map");
    return CodeMatrix(k, l, std::move(e), std::move(labels));
}

}  // namespace multireduce::codes
