#include "multireduce/lab.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "multireduce/errors.hpp"
#include "multireduce/halfspace.hpp"
#include "multireduce/io.hpp"
#include "multireduce/rng.hpp"

namespace multireduce::lab {

using nlohmann::json;

namespace {

synth::SyntheticDistribution dist_from_json(const json& j) {
    const std::string kind = j.value("kind", "");
    if (kind == "two_points") return synth::two_points();
    if (kind == "circle") return synth::circle_points(j.value("k", 9));
    if (kind == "sector3") return synth::sector3();
    if (kind == "random_points")
        return synth::random_points(j.value("k", 9), j.value("d", 2), j.value("seed", 0ULL),
                                    j.value("with_center", false));
    if (kind == "clusters")
        return synth::cluster_points(j.value("k", 128), j.value("locations", 2), j.value("seed", 0ULL));
    if (kind == "simplex") return synth::simplex(j.value("d", 2));
    if (kind == "points") {
        std::vector<std::vector<double>> centers = j.at("centers");
        std::vector<double> probs;
        if (j.contains("probabilities")) probs = j["probabilities"].get<std::vector<double>>();
        return synth::point_classes(std::move(centers), std::move(probs), j.value("jitter", 0.0));
    }
    throw std::invalid_argument("distribution: unknown kind '" + kind + "'");
}

double frac_at_least(const std::vector<double>& v, double threshold) {
    if (v.empty()) return 0.0;
    std::size_t c = 0;
    for (double x : v) c += (x >= threshold);
    return static_cast<double>(c) / static_cast<double>(v.size());
}

double frac_greater(const std::vector<double>& v, double threshold) {
    if (v.empty()) return 0.0;
    std::size_t c = 0;
    for (double x : v) c += (x > threshold);
    return static_cast<double>(c) / static_cast<double>(v.size());
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// exact finite view when available, otherwise a large sample
MulticlassSample reference_of(const synth::SyntheticDistribution& dist, int fallback_n,
                              std::uint64_t seed, std::vector<std::string>& notes) {
    if (dist.kind != synth::DistKind::Sector3 && dist.jitter == 0.0) {
        bool uniform = true;
        for (double p : dist.class_probabilities)
            uniform = uniform && std::abs(p - 1.0 / dist.k) <= 1e-12;
        if (uniform) {
            notes.push_back("reference=exact finite support (" + std::to_string(dist.k) + " atoms)");
            return synth::support_sample(dist);
        }
    }
    notes.push_back("reference=sample n=" + std::to_string(fallback_n));
    return synth::sample(dist, fallback_n, seed);
}

void note_mass_regime(const synth::SyntheticDistribution& dist, std::vector<std::string>& notes) {
    if (!dist.within_mass_regime(10.0))
        notes.push_back("regime-warning: some class mass exceeds 10/k");
}

void note_k_regime(int k, int d, double nu, std::vector<std::string>& notes) {
    // desk-scale surrogate of the k >= C (d + ln(1/delta)) / nu^2 premise
    if (static_cast<double>(k) * nu * nu < static_cast<double>(d) + 3.0)
        notes.push_back("regime-warning: k*nu^2 below d+3, asymptotic premise not met at this scale");
}

void require_distribution(const ExperimentConfig& cfg) {
    if (!cfg.has_distribution)
        throw std::invalid_argument("experiment '" + cfg.experiment + "' needs a distribution");
}

reducers::WeightMatrix train_msvm_auto(const MulticlassSample& sample,
                                       const reducers::TrainConfig& cfg, std::uint64_t seed) {
    if (cfg.try_realizable) {
        try {
            return reducers::train_msvm(sample, reducers::MsvmMode::Realizable, cfg, seed);
        } catch (const not_realizable_error&) {
        }
    }
    return reducers::train_msvm(sample, reducers::MsvmMode::Approximate, cfg, seed);
}

codes::CodeMatrix with_label_map(const codes::CodeMatrix& code, const std::vector<int>& labels) {
    return codes::CodeMatrix(code.num_classes(), code.code_length(), code.entries(), labels);
}

std::vector<int> leaf_permutation_labels(int k, std::uint64_t seed) {
    return reducers::random_leaf_labels(k, seed);
}

}  // namespace

double ExperimentResult::summary_value(const std::string& name) const {
    for (const auto& [n, v] : summary)
        if (n == name) return v;
    throw std::invalid_argument("summary metric not found: " + name);
}

ExperimentConfig config_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    ExperimentConfig cfg;
    cfg.experiment = j.at("experiment").get<std::string>();
    if (j.contains("distribution")) {
        cfg.distribution = dist_from_json(j["distribution"]);
        cfg.has_distribution = true;
    }
    cfg.trials = j.value("trials", cfg.trials);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.mu = j.value("mu", cfg.mu);
    cfg.nu = j.value("nu", cfg.nu);
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    if (j.contains("rule")) {
        const std::string rule = j["rule"].get<std::string>();
        if (rule == "iid")
            cfg.rule = synth::LabelMapRule::Iid;
        else if (rule == "exact")
            cfg.rule = synth::LabelMapRule::Exact;
        else
            throw std::invalid_argument("config: rule must be iid or exact");
    }
    cfg.train_size = j.value("train_size", cfg.train_size);
    cfg.test_size = j.value("test_size", cfg.test_size);
    cfg.code_length = j.value("code_length", cfg.code_length);
    cfg.tree_kind = j.value("tree_kind", cfg.tree_kind);
    if (j.contains("m_grid")) cfg.m_grid = j["m_grid"].get<std::vector<int>>();
    if (j.contains("methods")) cfg.methods = j["methods"].get<std::vector<std::string>>();
    cfg.train.base.perceptron_budget = j.value("budget", cfg.train.base.perceptron_budget);
    cfg.train.base.restarts = j.value("restarts", cfg.train.base.restarts);
    cfg.train.base.epochs = j.value("epochs", cfg.train.base.epochs);
    cfg.train.try_realizable = j.value("try_realizable", cfg.train.try_realizable);
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    return cfg;
}

ExperimentResult lemma10_experiment(const ExperimentConfig& cfg) {
    require_distribution(cfg);
    ExperimentResult out;
    out.experiment = "lemma10";
    const auto& dist = cfg.distribution;
    note_mass_regime(dist, out.notes);
    note_k_regime(dist.k, dist.d, cfg.nu, out.notes);
    MulticlassSample base = reference_of(dist, cfg.train_size, cfg.seed ^ 0xabcdULL, out.notes);

    std::vector<double> errs;
    for (int t = 0; t < cfg.trials; ++t) {
        auto phi = synth::random_label_map(dist.k, cfg.mu, cfg.rule, cfg.seed + t);
        auto bin = synth::apply_label_map(base, phi);
        auto oracle = halfspace::exact_best_error(bin);
        errs.push_back(oracle.error);
        out.records.push_back({t, "certified_error", oracle.error});
    }
    const double threshold = cfg.mu - cfg.nu;
    out.summary = {{"mean_certified_error", mean_of(errs)},
                   {"min_certified_error", *std::min_element(errs.begin(), errs.end())},
                   {"threshold", threshold},
                   {"frac_certified_ge_threshold", frac_at_least(errs, threshold)}};
    return out;
}

ExperimentResult lemma10_tightness_experiment(const ExperimentConfig& cfg) {
    require_distribution(cfg);
    ExperimentResult out;
    out.experiment = "lemma10_tightness";
    const auto& dist = cfg.distribution;
    if (dist.kind != synth::DistKind::Simplex)
        throw std::invalid_argument("lemma10_tightness: distribution kind must be simplex");
    const int k = dist.k;
    if (k > 16) throw budget_exceeded_error("lemma10_tightness: too many sign maps to enumerate");
    MulticlassSample base = synth::support_sample(dist);

    double max_err = 0.0;
    int maps = 0;
    for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
        halfspace::BinarySample bin;
        bin.xs = base.xs;
        bin.ys.resize(base.size());
        for (std::size_t i = 0; i < base.size(); ++i)
            bin.ys[i] = (bits & (1u << (base.ys[i] - 1))) ? 1 : -1;
        double err;
        if (dist.d <= 2) {
            err = halfspace::exact_best_error(bin).error;
        } else {
            // certificate by exhibiting a consistent halfspace
            auto h = halfspace::train_realizable(bin, 1'000'000);
            err = halfspace::empirical_error(h, bin);
        }
        max_err = std::max(max_err, err);
        ++maps;
    }
    out.records.push_back({0, "max_certified_error", max_err});
    out.summary = {{"max_certified_error", max_err}, {"num_maps", static_cast<double>(maps)}};
    return out;
}

ExperimentResult corollary11_experiment(const ExperimentConfig& cfg) {
    require_distribution(cfg);
    ExperimentResult out;
    out.experiment = "corollary11";
    const auto& dist = cfg.distribution;
    const int k = dist.k;
    note_mass_regime(dist, out.notes);
    note_k_regime(k, dist.d, cfg.nu, out.notes);
    auto shape = cfg.tree_kind == "random" ? reducers::random_tree(k, cfg.seed)
                                           : reducers::balanced_tree(k);

    // leaves under the root's left child
    std::vector<bool> leaf_on_left(k, false);
    {
        auto mark = [&](auto&& self, int child) -> void {
            if (reducers::TreeShape::is_leaf(child)) {
                leaf_on_left[reducers::TreeShape::leaf_id(child)] = true;
                return;
            }
            self(self, shape.nodes[child].left);
            self(self, shape.nodes[child].right);
        };
        mark(mark, shape.nodes[0].left);
    }
    int k_left = static_cast<int>(std::count(leaf_on_left.begin(), leaf_on_left.end(), true));
    const double mu = std::min(k_left, k - k_left) / static_cast<double>(k);
    const double threshold = mu - cfg.nu;

    MulticlassSample support = reference_of(dist, cfg.train_size, cfg.seed ^ 0xabcdULL, out.notes);
    MulticlassSample train = synth::sample(dist, cfg.train_size, cfg.seed ^ 0x7777ULL);
    MulticlassSample test = synth::sample(dist, cfg.test_size, cfg.seed ^ 0x8888ULL);

    std::vector<double> certified, trained;
    for (int t = 0; t < cfg.trials; ++t) {
        auto labels = leaf_permutation_labels(k, cfg.seed + t);  // leaf -> label
        // root split as a label map: -1 when the label's leaf hangs left
        synth::LabelMap phi;
        phi.signs.assign(k, 1);
        for (int leaf = 0; leaf < k; ++leaf)
            if (leaf_on_left[leaf]) phi.signs[labels[leaf] - 1] = -1;
        auto bin = synth::apply_label_map(support, phi);
        double cert = halfspace::exact_best_error(bin).error;
        certified.push_back(cert);
        out.records.push_back({t, "root_certified_error", cert});

        auto tree = reducers::train_tree(shape, labels, train, cfg.train, cfg.seed + t);
        double terr = reducers::multiclass_error(tree, test);
        trained.push_back(terr);
        out.records.push_back({t, "trained_tree_error", terr});
    }
    out.summary = {{"mu", mu},
                   {"threshold", threshold},
                   {"mean_root_certified_error", mean_of(certified)},
                   {"frac_certified_ge_threshold", frac_at_least(certified, threshold)},
                   {"mean_trained_tree_error", mean_of(trained)}};
    return out;
}

ExperimentResult corollary12_experiment(const ExperimentConfig& cfg) {
    require_distribution(cfg);
    ExperimentResult out;
    out.experiment = "corollary12";
    const auto& dist = cfg.distribution;
    const int k = dist.k;
    const int l = cfg.code_length;
    note_mass_regime(dist, out.notes);
    note_k_regime(k, dist.d * l, cfg.nu, out.notes);

    auto code = codes::random_code(k, l, cfg.seed);
    MulticlassSample support = reference_of(dist, cfg.train_size, cfg.seed ^ 0xabcdULL, out.notes);
    MulticlassSample train = synth::sample(dist, cfg.train_size, cfg.seed ^ 0x7777ULL);
    MulticlassSample test = synth::sample(dist, cfg.test_size, cfg.seed ^ 0x8888ULL);

    std::vector<double> trained, column_means;
    for (int t = 0; t < cfg.trials; ++t) {
        Rng rng = make_rng(cfg.seed + t);
        auto labels = random_permutation(k, rng);
        for (auto& lab : labels) ++lab;  // 1..k
        auto coded = with_label_map(code, labels);

        auto model = reducers::train_ecoc(coded, train, cfg.train, cfg.seed + t);
        double terr = reducers::multiclass_error(model, test);
        trained.push_back(terr);
        out.records.push_back({t, "trained_multiclass_error", terr});

        if (dist.d <= 2) {
            std::vector<double> col;
            for (int j = 0; j < l; ++j) {
                halfspace::BinarySample bin;
                for (std::size_t i = 0; i < support.size(); ++i) {
                    double e = coded.entry(coded.row_of_label(support.ys[i]), j);
                    if (e == 0.0) continue;
                    bin.xs.push_back(support.xs[i]);
                    bin.ys.push_back(e > 0 ? 1 : -1);
                }
                if (bin.size() == 0) continue;
                col.push_back(halfspace::exact_best_error(bin).error);
            }
            double cm = mean_of(col);
            column_means.push_back(cm);
            out.records.push_back({t, "mean_column_certified_error", cm});
        }
    }
    out.summary = {{"mean_trained_multiclass_error", mean_of(trained)},
                   {"mean_column_certified_error", mean_of(column_means)},
                   {"threshold", 0.5 - cfg.nu}};
    return out;
}

namespace {

struct ShowcaseFixture {
    std::string name;
    synth::SyntheticDistribution dist;
};

}  // namespace

ExperimentResult showcase_table(const ExperimentConfig& cfg) {
    ExperimentResult out;
    out.experiment = "showcase";
    std::vector<ShowcaseFixture> fixtures = {
        {"two_points", synth::two_points()},
        {"circle9", synth::circle_points(9)},
        {"random_center", synth::random_points(9, 2, cfg.seed ^ 0x5151ULL, true)},
    };

    for (const auto& fx : fixtures) {
        MulticlassSample train = synth::sample(fx.dist, cfg.train_size, cfg.seed ^ 0x7777ULL);

        auto msvm = train_msvm_auto(train, cfg.train, cfg.seed);
        out.summary.emplace_back(fx.name + "_msvm_train_error", reducers::multiclass_error(msvm, train));

        auto ova = reducers::train_ova(train, cfg.train, cfg.seed);
        out.summary.emplace_back(fx.name + "_ova_train_error", reducers::multiclass_error(ova, train));

        // trees and random codes: one deterministic instance for the separable
        // fixture, cfg.trials random (shape, lambda, code) draws otherwise
        const int k = fx.dist.k;
        std::vector<double> tree_errs, ecoc_errs;
        for (int t = 0; t < (k == 2 ? 1 : cfg.trials); ++t) {
            auto shape = k == 2 ? reducers::balanced_tree(2) : reducers::random_tree(k, cfg.seed + t);
            auto labels = leaf_permutation_labels(k, cfg.seed + 31 * t + 1);
            auto tree = reducers::train_tree(shape, labels, train, cfg.train, cfg.seed + t);
            tree_errs.push_back(reducers::multiclass_error(tree, train));

            codes::RandomCodeOptions opts;
            opts.distinct_rows = true;
            opts.randomize_labels = true;
            auto code = codes::random_code(k, std::max(cfg.code_length, 2), cfg.seed + 77 * t + 3, opts);
            auto ecoc = reducers::train_ecoc(code, train, cfg.train, cfg.seed + t);
            ecoc_errs.push_back(reducers::multiclass_error(ecoc, train));
        }
        for (std::size_t t = 0; t < tree_errs.size(); ++t) {
            out.records.push_back({static_cast<int>(t), fx.name + "_tree_train_error", tree_errs[t]});
            out.records.push_back({static_cast<int>(t), fx.name + "_ecoc_train_error", ecoc_errs[t]});
        }
        out.summary.emplace_back(fx.name + "_tree_mean_error", mean_of(tree_errs));
        out.summary.emplace_back(fx.name + "_ecoc_mean_error", mean_of(ecoc_errs));
        out.summary.emplace_back(fx.name + "_frac_tree_error_gt_02", frac_greater(tree_errs, 0.2));
        out.summary.emplace_back(fx.name + "_frac_ecoc_error_gt_02", frac_greater(ecoc_errs, 0.2));

        if (fx.name == "random_center") {
            // OvA failure certificate: the forced-center class vs the rest
            MulticlassSample support = synth::support_sample(fx.dist);
            halfspace::BinarySample bin;
            bin.xs = support.xs;
            for (int y : support.ys) bin.ys.push_back(y == k ? 1 : -1);
            out.summary.emplace_back("random_center_ova_center_certified_error",
                                     halfspace::exact_best_error(bin).error);
        }
    }
    return out;
}

ExperimentResult containment_check(const ExperimentConfig& cfg) {
    ExperimentResult out;
    out.experiment = "containment";
    auto dist = cfg.has_distribution ? cfg.distribution : synth::circle_points(9);

    const int k = dist.k;
    MulticlassSample train = synth::sample(dist, cfg.train_size, cfg.seed ^ 0x7777ULL);
    MulticlassSample test = synth::sample(dist, cfg.test_size, cfg.seed ^ 0x8888ULL);

    std::vector<double> disagreements;
    for (int t = 0; t < cfg.trials; ++t) {
        auto shape = cfg.tree_kind == "random" ? reducers::random_tree(k, cfg.seed + 900 + t)
                                               : reducers::balanced_tree(k);
        auto labels = leaf_permutation_labels(k, cfg.seed + t);
        auto tree = reducers::train_tree(shape, labels, train, cfg.train, cfg.seed + t);
        auto w = reducers::tree_to_msvm(tree, train.xs, cfg.epsilon);
        std::size_t dis = 0;
        for (std::size_t i = 0; i < test.size(); ++i)
            dis += (reducers::tree_predict(tree, test.xs[i]) != reducers::msvm_predict(w, test.xs[i]));
        double rate = static_cast<double>(dis) / static_cast<double>(test.size());
        disagreements.push_back(rate);
        out.records.push_back({t, "tree_msvm_disagreement", rate});
    }
    out.summary.emplace_back("max_tree_msvm_disagreement",
                             *std::max_element(disagreements.begin(), disagreements.end()));
    out.summary.emplace_back("epsilon", cfg.epsilon);

    // MSVM -> AP exact agreement on fresh points
    std::vector<double> agreements;
    const int d = dist.d;
    for (int t = 0; t < cfg.trials; ++t) {
        Rng rng = make_rng(cfg.seed + 40 + t);
        reducers::WeightMatrix w;
        w.rows.assign(k, std::vector<long double>(d + 1));
        for (auto& row : w.rows)
            for (auto& c : row) c = gaussian(rng);
        auto ap = reducers::msvm_to_ap(w);
        std::size_t agree = 0;
        const int npts = cfg.test_size;
        for (int i = 0; i < npts; ++i) {
            std::vector<double> x(d);
            for (auto& c : x) c = uniform_real(rng, -1.0, 1.0);
            agree += (reducers::msvm_predict(w, x) == reducers::ecoc_predict(ap, x));
        }
        double rate = static_cast<double>(agree) / npts;
        agreements.push_back(rate);
        out.records.push_back({t, "msvm_ap_agreement", rate});
    }
    out.summary.emplace_back("min_msvm_ap_agreement",
                             *std::min_element(agreements.begin(), agreements.end()));

    // strictness on the three-sector distribution: linear predictors fit it,
    // no halfspace root split does
    auto sector = synth::sector3();
    MulticlassSample sector_train = synth::sample(sector, std::min(cfg.train_size, 800), cfg.seed ^ 0x99ULL);
    auto msvm = train_msvm_auto(sector_train, cfg.train, cfg.seed);
    out.summary.emplace_back("sector3_msvm_train_error", reducers::multiclass_error(msvm, sector_train));
    double min_split = std::numeric_limits<double>::infinity();
    for (int pos = 1; pos <= 3; ++pos) {
        halfspace::BinarySample bin;
        bin.xs = sector_train.xs;
        for (int y : sector_train.ys) bin.ys.push_back(y == pos ? 1 : -1);
        min_split = std::min(min_split, halfspace::exact_best_error(bin).error);
    }
    out.summary.emplace_back("sector3_min_root_split_error", min_split);
    return out;
}

ExperimentResult error_curve(const ExperimentConfig& cfg) {
    require_distribution(cfg);
    ExperimentResult out;
    out.experiment = "error_curve";
    auto dist = cfg.distribution;
    const int k = dist.k;
    std::vector<std::string> methods =
        cfg.methods.empty() ? std::vector<std::string>{"msvm", "ova", "ap", "tree", "ecoc"} : cfg.methods;
    std::vector<int> grid = cfg.m_grid.empty() ? std::vector<int>{20, 50, 100, 200, 400} : cfg.m_grid;
    MulticlassSample test = synth::sample(dist, cfg.test_size, cfg.seed ^ 0x8888ULL);

    for (std::size_t mi = 0; mi < grid.size(); ++mi) {
        const int m = grid[mi];
        MulticlassSample train = synth::sample(dist, m, cfg.seed + 131 * mi);
        out.records.push_back({static_cast<int>(mi), "m", static_cast<double>(m)});
        for (const auto& method : methods) {
            double err;
            if (method == "msvm") {
                err = reducers::multiclass_error(train_msvm_auto(train, cfg.train, cfg.seed), test);
            } else if (method == "ova") {
                err = reducers::multiclass_error(reducers::train_ova(train, cfg.train, cfg.seed), test);
            } else if (method == "ap") {
                err = reducers::multiclass_error(
                    reducers::train_ecoc(codes::ap_code(k), train, cfg.train, cfg.seed), test);
            } else if (method == "tree") {
                auto shape = cfg.tree_kind == "random" ? reducers::random_tree(k, cfg.seed)
                                                       : reducers::balanced_tree(k);
                err = reducers::multiclass_error(
                    reducers::train_tree(shape, reducers::identity_leaf_labels(k), train, cfg.train,
                                         cfg.seed),
                    test);
            } else if (method == "ecoc") {
                codes::RandomCodeOptions opts;
                opts.distinct_rows = true;
                auto code = codes::random_code(k, cfg.code_length, cfg.seed, opts);
                err = reducers::multiclass_error(reducers::train_ecoc(code, train, cfg.train, cfg.seed),
                                                 test);
            } else {
                throw std::invalid_argument("error_curve: unknown method '" + method + "'");
            }
            out.records.push_back({static_cast<int>(mi), method + "_test_error", err});
        }
    }
    out.summary.emplace_back("num_points", static_cast<double>(grid.size()));
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.experiment == "lemma10") return lemma10_experiment(cfg);
    if (cfg.experiment == "lemma10_tightness") return lemma10_tightness_experiment(cfg);
    if (cfg.experiment == "corollary11") return corollary11_experiment(cfg);
    if (cfg.experiment == "corollary12") return corollary12_experiment(cfg);
    if (cfg.experiment == "showcase") return showcase_table(cfg);
    if (cfg.experiment == "containment") return containment_check(cfg);
    if (cfg.experiment == "error_curve") return error_curve(cfg);
    throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
}

namespace {
void write_value(std::ostream& os, double v) {
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
}
}  // namespace

void write_records_csv(std::ostream& os, const ExperimentResult& result) {
    os << "experiment,trial,metric,value\n";
    for (const auto& r : result.records) {
        os << result.experiment << ',' << r.trial << ',' << r.metric << ',';
        write_value(os, r.value);
        os << '\n';
    }
}

void write_summary_csv(std::ostream& os, const ExperimentResult& result) {
    for (const auto& n : result.notes) os << "# " << n << '\n';
    os << "metric,value\n";
    for (const auto& [name, value] : result.summary) {
        os << name << ',';
        write_value(os, value);
        os << '\n';
    }
}

void write_curve_svg(std::ostream& os, const ExperimentResult& result) {
    // collect series: metric -> (m, value) ordered by trial index
    std::vector<double> ms;
    std::map<std::string, std::vector<double>> series;
    for (const auto& r : result.records) {
        if (r.metric == "m")
            ms.push_back(r.value);
        else
            series[r.metric].push_back(r.value);
    }
    const double width = 800, height = 500, margin = 60;
    double max_m = 1, max_e = 0.0;
    for (double m : ms) max_m = std::max(max_m, m);
    for (const auto& [_, vs] : series)
        for (double v : vs) max_e = std::max(max_e, v);
    max_e = std::max(max_e, 1e-9);
    const char* colors[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#2c3e50"};

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
       << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
       << height - margin << "\" stroke=\"black\"/>\n";
    int ci = 0;
    for (const auto& [name, vs] : series) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[ci % 6] << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < vs.size() && i < ms.size(); ++i) {
            double x = margin + (width - 2 * margin) * (ms[i] / max_m);
            double y = height - margin - (height - 2 * margin) * (vs[i] / max_e);
            os << x << ',' << y << ' ';
        }
        os << "\"/>\n";
        os << "<text x=\"" << width - margin + 4 << "\" y=\"" << margin + 16 * ci
           << "\" font-size=\"12\" fill=\"" << colors[ci % 6] << "\">" << name << "</text>\n";
        ++ci;
    }
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - margin / 3
       << "\" font-size=\"14\">training set size</text>\n";
    os << "<text x=\"" << margin / 3 << "\" y=\"" << height / 2
       << "\" font-size=\"14\" transform=\"rotate(-90 " << margin / 3 << ' ' << height / 2
       << ")\">test error</text>\n";
    os << "</svg>\n";
}

}  // namespace multireduce::lab
