#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "multireduce/codes.hpp"
#include "multireduce/halfspace.hpp"
#include "multireduce/io.hpp"
#include "multireduce/lab.hpp"
#include "multireduce/reducers.hpp"
#include "multireduce/shatter.hpp"
#include "multireduce/synth.hpp"

namespace py = pybind11;
using namespace multireduce;

namespace {

std::vector<std::vector<double>> code_entries(const codes::CodeMatrix& m) {
    std::vector<std::vector<double>> rows(m.num_classes(), std::vector<double>(m.code_length()));
    for (int i = 0; i < m.num_classes(); ++i)
        for (int j = 0; j < m.code_length(); ++j) rows[i][j] = m.entry(i, j);
    return rows;
}

synth::LabelMapRule rule_of(const std::string& name) {
    if (name == "iid") return synth::LabelMapRule::Iid;
    if (name == "exact") return synth::LabelMapRule::Exact;
    throw std::invalid_argument("rule must be 'iid' or 'exact'");
}

}  // namespace

PYBIND11_MODULE(_multireduce, m) {
    m.doc() = "Multiclass-to-binary reduction library: codes, halfspaces, shattering, experiments";

    py::register_exception<not_realizable_error>(m, "NotRealizableError");
    py::register_exception<tolerance_unachievable_error>(m, "ToleranceUnachievableError");
    py::register_exception<embedding_invalid_error>(m, "EmbeddingInvalidError");
    py::register_exception<budget_exceeded_error>(m, "BudgetExceededError");
    py::register_exception<no_sensitive_guarantee_error>(m, "NoSensitiveGuaranteeError");

    py::class_<codes::CodeMatrix>(m, "CodeMatrix")
        .def_property_readonly("num_classes", &codes::CodeMatrix::num_classes)
        .def_property_readonly("code_length", &codes::CodeMatrix::code_length)
        .def_property_readonly("entries", &code_entries)
        .def_property_readonly("label_map", &codes::CodeMatrix::label_map)
        .def("__repr__", [](const codes::CodeMatrix& c) {
            std::ostringstream ss;
            ss << "CodeMatrix(k=" << c.num_classes() << ", l=" << c.code_length() << ")";
            return ss.str();
        });

    m.def("ova_code", &codes::ova_code, py::arg("k"));
    m.def("ap_code", &codes::ap_code, py::arg("k"));
    m.def(
        "random_code",
        [](int k, int l, std::uint64_t seed, bool distinct_rows, bool random_labels) {
            return codes::random_code(k, l, seed, {distinct_rows, random_labels});
        },
        py::arg("k"), py::arg("l"), py::arg("seed"), py::arg("distinct_rows") = false,
        py::arg("random_labels") = false);
    m.def("decode", &codes::decode, py::arg("code"), py::arg("u"));
    m.def("hamming_distance", &codes::hamming_distance);
    m.def("code_distance", &codes::code_distance);
    m.def("max_min_distance", &codes::max_min_distance);
    m.def(
        "sensitivity",
        [](const codes::CodeMatrix& c, const codes::BinaryVector& u) {
            auto s = codes::sensitivity(c, u);
            return py::make_tuple(s.q, s.coords);
        },
        py::arg("code"), py::arg("u"));
    m.def("sensitive_vector", &codes::sensitive_vector, py::arg("code"));

    py::class_<halfspace::Halfspace>(m, "Halfspace")
        .def(py::init([](std::vector<double> w) { return halfspace::Halfspace{std::move(w)}; }))
        .def_readonly("weights", &halfspace::Halfspace::weights);
    m.def("predict_halfspace", &halfspace::predict, py::arg("h"), py::arg("x"));
    m.def(
        "exact_best_error",
        [](std::vector<std::vector<double>> xs, std::vector<int> ys) {
            halfspace::BinarySample s{std::move(xs), std::move(ys)};
            auto r = halfspace::exact_best_error(s);
            return py::make_tuple(r.error, r.h);
        },
        py::arg("xs"), py::arg("ys"));
    m.def(
        "train_erm_approx",
        [](std::vector<std::vector<double>> xs, std::vector<int> ys, std::uint64_t seed) {
            halfspace::BinarySample s{std::move(xs), std::move(ys)};
            return halfspace::train_erm_approx(s, {}, seed);
        },
        py::arg("xs"), py::arg("ys"), py::arg("seed") = 0);

    py::class_<MulticlassSample>(m, "MulticlassSample")
        .def_readonly("xs", &MulticlassSample::xs)
        .def_readonly("ys", &MulticlassSample::ys)
        .def_readonly("num_classes", &MulticlassSample::num_classes)
        .def("__len__", [](const MulticlassSample& s) { return s.size(); });

    m.def(
        "gen_circle",
        [](int k, int n, std::uint64_t seed) { return synth::sample(synth::circle_points(k), n, seed); },
        py::arg("k"), py::arg("n"), py::arg("seed"));
    m.def(
        "gen_sector3",
        [](int n, std::uint64_t seed) { return synth::sample(synth::sector3(), n, seed); },
        py::arg("n"), py::arg("seed"));
    m.def(
        "random_label_map",
        [](int k, double mu, const std::string& rule, std::uint64_t seed) {
            return synth::random_label_map(k, mu, rule_of(rule), seed).signs;
        },
        py::arg("k"), py::arg("mu"), py::arg("rule"), py::arg("seed"));

    py::class_<reducers::WeightMatrix>(m, "WeightMatrix")
        .def_property_readonly("rows",
                               [](const reducers::WeightMatrix& w) {
                                   std::vector<std::vector<double>> out;
                                   for (const auto& r : w.rows)
                                       out.emplace_back(r.begin(), r.end());
                                   return out;
                               })
        .def_property_readonly("num_classes", &reducers::WeightMatrix::num_classes);
    py::class_<reducers::TreeModel>(m, "TreeModel")
        .def_property_readonly("num_classes", &reducers::TreeModel::num_classes);
    py::class_<reducers::EcocModel>(m, "EcocModel")
        .def_property_readonly("num_classes", &reducers::EcocModel::num_classes);

    m.def("msvm_predict", &reducers::msvm_predict, py::arg("w"), py::arg("x"));
    m.def("tree_predict", &reducers::tree_predict, py::arg("tree"), py::arg("x"));
    m.def("ecoc_predict", &reducers::ecoc_predict, py::arg("ecoc"), py::arg("x"));
    m.def(
        "train_msvm",
        [](const MulticlassSample& s, const std::string& mode, std::uint64_t seed) {
            auto md = mode == "realizable" ? reducers::MsvmMode::Realizable
                                           : reducers::MsvmMode::Approximate;
            return reducers::train_msvm(s, md, {}, seed);
        },
        py::arg("sample"), py::arg("mode") = "realizable", py::arg("seed") = 0);
    m.def(
        "train_ova",
        [](const MulticlassSample& s, std::uint64_t seed) { return reducers::train_ova(s, {}, seed); },
        py::arg("sample"), py::arg("seed") = 0);
    m.def(
        "train_ecoc",
        [](const codes::CodeMatrix& code, const MulticlassSample& s, std::uint64_t seed) {
            return reducers::train_ecoc(code, s, {}, seed);
        },
        py::arg("code"), py::arg("sample"), py::arg("seed") = 0);
    m.def(
        "train_tree",
        [](const MulticlassSample& s, const std::string& shape_kind, std::uint64_t tree_seed,
           std::uint64_t lambda_seed, std::uint64_t seed) {
            auto shape = shape_kind == "balanced" ? reducers::balanced_tree(s.num_classes)
                                                  : reducers::random_tree(s.num_classes, tree_seed);
            auto labels = lambda_seed == 0 ? reducers::identity_leaf_labels(s.num_classes)
                                           : reducers::random_leaf_labels(s.num_classes, lambda_seed);
            return reducers::train_tree(shape, labels, s, {}, seed);
        },
        py::arg("sample"), py::arg("shape") = "balanced", py::arg("tree_seed") = 0,
        py::arg("lambda_seed") = 0, py::arg("seed") = 0);
    m.def(
        "tree_to_msvm",
        [](const reducers::TreeModel& t, const std::vector<std::vector<double>>& ref, double eps) {
            return reducers::tree_to_msvm(t, ref, eps);
        },
        py::arg("tree"), py::arg("reference"), py::arg("epsilon") = 0.01);
    m.def("msvm_to_ap", &reducers::msvm_to_ap, py::arg("w"));
    m.def(
        "multiclass_error",
        [](const reducers::WeightMatrix& w, const MulticlassSample& s) {
            return reducers::multiclass_error(w, s);
        },
        py::arg("model"), py::arg("sample"));
    m.def(
        "tree_error",
        [](const reducers::TreeModel& t, const MulticlassSample& s) {
            return reducers::multiclass_error(t, s);
        },
        py::arg("model"), py::arg("sample"));
    m.def(
        "ecoc_error",
        [](const reducers::EcocModel& e, const MulticlassSample& s) {
            return reducers::multiclass_error(e, s);
        },
        py::arg("model"), py::arg("sample"));

    py::class_<shatter::FiniteFunctionClass>(m, "FiniteFunctionClass")
        .def_property_readonly("domain_size", &shatter::FiniteFunctionClass::domain_size)
        .def("__len__", [](const shatter::FiniteFunctionClass& c) { return c.size(); });
    m.def("build_F", &shatter::build_F, py::arg("d"), py::arg("l"));
    m.def("build_G", &shatter::build_G, py::arg("d"), py::arg("l"));
    m.def("natarajan_dimension", &shatter::natarajan_dimension);
    m.def("graph_dimension", &shatter::graph_dimension);
    m.def("vc_dimension", &shatter::vc_dimension);
    m.def(
        "thm13_check",
        [](const codes::CodeMatrix& code, const codes::BinaryVector& u, int d) {
            return shatter::thm13_check(code, u, d);
        },
        py::arg("code"), py::arg("u"), py::arg("d"));
    m.def(
        "thm3_check",
        [](int k, std::uint64_t shape_seed, int d) {
            return shatter::thm3_check(reducers::random_tree(k, shape_seed), d);
        },
        py::arg("k"), py::arg("shape_seed"), py::arg("d"));

    m.def(
        "run_experiment_json",
        [](const std::string& config_json) {
            auto cfg = lab::config_from_json(config_json);
            auto result = lab::run_experiment(cfg);
            py::dict summary;
            for (const auto& [name, value] : result.summary) summary[py::str(name)] = value;
            return summary;
        },
        py::arg("config_json"));
}
