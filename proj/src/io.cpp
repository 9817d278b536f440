#include "multireduce/io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "multireduce/codes.hpp"

namespace multireduce::io {

namespace {

void write_double(std::ostream& os, double v) {
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
}

void write_ldouble(std::ostream& os, long double v) {
    os << std::setprecision(std::numeric_limits<long double>::max_digits10) << v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

template <typename LabelCheck>
std::pair<std::vector<std::vector<double>>, std::vector<int>> read_csv_points(std::istream& is,
                                                                              LabelCheck&& check) {
    std::vector<std::vector<double>> xs;
    std::vector<int> ys;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (first) {
            first = false;
            if (!fields.empty() && !fields[0].empty() && fields[0][0] == 'x') continue;  // header
        }
        if (fields.size() < 2) throw std::invalid_argument("sample csv: need at least x1 and y");
        std::vector<double> x(fields.size() - 1);
        for (std::size_t i = 0; i + 1 < fields.size(); ++i) x[i] = std::stod(fields[i]);
        int y = std::stoi(fields.back());
        check(y);
        if (!xs.empty() && xs.back().size() != x.size())
            throw std::invalid_argument("sample csv: inconsistent dimension");
        xs.push_back(std::move(x));
        ys.push_back(y);
    }
    return {std::move(xs), std::move(ys)};
}

}  // namespace

void write_sample_csv(std::ostream& os, const MulticlassSample& sample) {
    for (int c = 0; c < sample.dim(); ++c) os << 'x' << (c + 1) << ',';
    os << "y\n";
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (double v : sample.xs[i]) {
            write_double(os, v);
            os << ',';
        }
        os << sample.ys[i] << '\n';
    }
}

MulticlassSample read_sample_csv(std::istream& is) {
    MulticlassSample s;
    auto [xs, ys] = read_csv_points(is, [](int y) {
        if (y < 1) throw std::invalid_argument("sample csv: labels must be >= 1");
    });
    s.xs = std::move(xs);
    s.ys = std::move(ys);
    for (int y : s.ys) s.num_classes = std::max(s.num_classes, y);
    return s;
}

void write_binary_csv(std::ostream& os, const halfspace::BinarySample& sample) {
    for (int c = 0; c < sample.dim(); ++c) os << 'x' << (c + 1) << ',';
    os << "y\n";
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (double v : sample.xs[i]) {
            write_double(os, v);
            os << ',';
        }
        os << sample.ys[i] << '\n';
    }
}

halfspace::BinarySample read_binary_csv(std::istream& is) {
    halfspace::BinarySample s;
    auto [xs, ys] = read_csv_points(is, [](int y) {
        if (y != 1 && y != -1) throw std::invalid_argument("binary csv: labels must be -1 or +1");
    });
    s.xs = std::move(xs);
    s.ys = std::move(ys);
    return s;
}

namespace {

void write_halfspace_line(std::ostream& os, const halfspace::Halfspace& h) {
    for (std::size_t i = 0; i < h.weights.size(); ++i) {
        if (i) os << ' ';
        write_double(os, h.weights[i]);
    }
    os << '\n';
}

halfspace::Halfspace read_halfspace(std::istream& is, int dplus1) {
    halfspace::Halfspace h;
    h.weights.resize(dplus1);
    for (auto& w : h.weights)
        if (!(is >> w)) throw std::invalid_argument("model: truncated classifier weights");
    return h;
}

void write_tree_preorder(std::ostream& os, const reducers::TreeModel& t, int child) {
    if (reducers::TreeShape::is_leaf(child)) {
        os << "leaf " << t.leaf_labels[reducers::TreeShape::leaf_id(child)] << '\n';
        return;
    }
    os << "node ";
    write_halfspace_line(os, t.node_classifiers[child]);
    write_tree_preorder(os, t, t.shape.nodes[child].left);
    write_tree_preorder(os, t, t.shape.nodes[child].right);
}

int read_tree_preorder(std::istream& is, int dplus1, reducers::TreeShape& shape,
                       std::vector<int>& labels, std::vector<halfspace::Halfspace>& clf) {
    std::string tok;
    if (!(is >> tok)) throw std::invalid_argument("model: truncated tree");
    if (tok == "leaf") {
        int label = 0;
        if (!(is >> label)) throw std::invalid_argument("model: truncated leaf label");
        labels.push_back(label);
        ++shape.num_leaves;
        return ~(static_cast<int>(labels.size()) - 1);
    }
    if (tok != "node") throw std::invalid_argument("model: unexpected tree token '" + tok + "'");
    int id = static_cast<int>(shape.nodes.size());
    shape.nodes.push_back({});
    clf.push_back(read_halfspace(is, dplus1));
    int l = read_tree_preorder(is, dplus1, shape, labels, clf);
    int r = read_tree_preorder(is, dplus1, shape, labels, clf);
    shape.nodes[id].left = l;
    shape.nodes[id].right = r;
    return id;
}

}  // namespace

void write_model(std::ostream& os, const reducers::MulticlassModel& model) {
    if (const auto* w = std::get_if<reducers::WeightMatrix>(&model)) {
        os << "msvm " << w->num_classes() << ' ' << (w->dim() + 1) << '\n';
        for (const auto& row : w->rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ' ';
                write_ldouble(os, row[i]);
            }
            os << '\n';
        }
        return;
    }
    if (const auto* e = std::get_if<reducers::EcocModel>(&model)) {
        int dplus1 = e->column_classifiers.empty() ? 0
                                                   : static_cast<int>(e->column_classifiers[0].weights.size());
        os << "ecoc " << e->num_classes() << ' ' << e->code.code_length() << ' ' << dplus1 << '\n';
        codes::write_code(os, e->code);
        for (const auto& h : e->column_classifiers) write_halfspace_line(os, h);
        return;
    }
    const auto& t = std::get<reducers::TreeModel>(model);
    int dplus1 =
        t.node_classifiers.empty() ? 0 : static_cast<int>(t.node_classifiers[0].weights.size());
    os << "tree " << t.num_classes() << ' ' << dplus1 << '\n';
    write_tree_preorder(os, t, 0);
}

reducers::MulticlassModel read_model(std::istream& is) {
    std::string kind;
    if (!(is >> kind)) throw std::invalid_argument("model: empty input");
    if (kind == "msvm") {
        int k = 0, dplus1 = 0;
        if (!(is >> k >> dplus1) || k < 1 || dplus1 < 1)
            throw std::invalid_argument("model: bad msvm header");
        reducers::WeightMatrix w;
        w.rows.assign(k, std::vector<long double>(dplus1));
        for (auto& row : w.rows)
            for (auto& v : row)
                if (!(is >> v)) throw std::invalid_argument("model: truncated weight matrix");
        return w;
    }
    if (kind == "ecoc") {
        int k = 0, l = 0, dplus1 = 0;
        if (!(is >> k >> l >> dplus1)) throw std::invalid_argument("model: bad ecoc header");
        auto code = codes::read_code(is);
        if (code.num_classes() != k || code.code_length() != l)
            throw std::invalid_argument("model: ecoc header does not match its code");
        std::vector<halfspace::Halfspace> clf;
        clf.reserve(l);
        for (int j = 0; j < l; ++j) clf.push_back(read_halfspace(is, dplus1));
        return reducers::EcocModel{std::move(code), std::move(clf)};
    }
    if (kind == "tree") {
        int k = 0, dplus1 = 0;
        if (!(is >> k >> dplus1)) throw std::invalid_argument("model: bad tree header");
        reducers::TreeShape shape;
        std::vector<int> labels;
        std::vector<halfspace::Halfspace> clf;
        read_tree_preorder(is, dplus1, shape, labels, clf);
        if (shape.num_leaves != k) throw std::invalid_argument("model: tree leaf count mismatch");
        return reducers::TreeModel{std::move(shape), std::move(labels), std::move(clf)};
    }
    throw std::invalid_argument("model: unknown kind '" + kind + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace multireduce::io
