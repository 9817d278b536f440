#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "multireduce/codes.hpp"
#include "multireduce/errors.hpp"
#include "multireduce/io.hpp"
#include "multireduce/lab.hpp"
#include "multireduce/parallel.hpp"
#include "multireduce/reducers.hpp"
#include "multireduce/shatter.hpp"
#include "multireduce/synth.hpp"

namespace fs = std::filesystem;
using namespace multireduce;

namespace {

// usage-level failure (bad paths etc.) -> exit code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MULTIREDUCE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void require_input_file(const std::string& path) {
    if (!fs::exists(path)) throw UsageError("input file does not exist: " + path);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        io::write_file(out_path, content);
}

std::string slurp(const std::string& path) {
    require_input_file(path);
    return io::read_file(path);
}

int run_code(const std::string& kind, int k, int l, std::uint64_t seed, bool distinct_rows,
             bool random_labels, const std::string& out) {
    codes::CodeMatrix code = [&] {
        if (kind == "ova") return codes::ova_code(k);
        if (kind == "ap") return codes::ap_code(k);
        codes::RandomCodeOptions opts;
        opts.distinct_rows = distinct_rows;
        opts.randomize_labels = random_labels;
        return codes::random_code(k, l, seed, opts);
    }();
    std::ostringstream ss;
    codes::write_code(ss, code);
    emit(out, ss.str());
    return 0;
}

int run_gen(const std::string& kind, int k, int d, int n, std::uint64_t seed, bool with_center,
            int locations, double jitter, const std::string& out) {
    synth::SyntheticDistribution dist = [&] {
        if (kind == "two-points") return synth::two_points();
        if (kind == "circle") return synth::circle_points(k);
        if (kind == "sector3") return synth::sector3();
        if (kind == "random") return synth::random_points(k, d, seed, with_center);
        if (kind == "clusters") return synth::cluster_points(k, locations, seed);
        if (kind == "simplex") return synth::simplex(d);
        throw UsageError("unknown distribution kind: " + kind);
    }();
    if (jitter > 0) dist.jitter = jitter;
    auto sample = synth::sample(dist, n, seed + 1);
    std::ostringstream ss;
    io::write_sample_csv(ss, sample);
    emit(out, ss.str());
    return 0;
}

int run_train(const std::string& method, const std::string& data_path, const std::string& code_path,
              std::uint64_t tree_seed, std::uint64_t lambda_seed, std::uint64_t seed,
              const std::string& mode, const std::string& tree_shape, reducers::TrainConfig cfg,
              const std::string& out) {
    std::istringstream data_in(slurp(data_path));
    auto sample = io::read_sample_csv(data_in);
    const int k = sample.num_classes;
    reducers::MulticlassModel model = [&]() -> reducers::MulticlassModel {
        if (method == "msvm") {
            if (mode == "realizable")
                return reducers::train_msvm(sample, reducers::MsvmMode::Realizable, cfg, seed);
            if (mode == "approx")
                return reducers::train_msvm(sample, reducers::MsvmMode::Approximate, cfg, seed);
            try {
                return reducers::train_msvm(sample, reducers::MsvmMode::Realizable, cfg, seed);
            } catch (const not_realizable_error&) {
                return reducers::train_msvm(sample, reducers::MsvmMode::Approximate, cfg, seed);
            }
        }
        if (method == "ova") return reducers::train_ova(sample, cfg, seed);
        if (method == "ap") return reducers::train_ecoc(codes::ap_code(k), sample, cfg, seed);
        if (method == "ecoc") {
            if (code_path.empty()) throw UsageError("train ecoc requires --code");
            std::istringstream code_in(slurp(code_path));
            return reducers::train_ecoc(codes::read_code(code_in), sample, cfg, seed);
        }
        if (method == "tree") {
            auto shape = tree_shape == "balanced" ? reducers::balanced_tree(k)
                                                  : reducers::random_tree(k, tree_seed);
            auto labels = lambda_seed == 0 ? reducers::identity_leaf_labels(k)
                                           : reducers::random_leaf_labels(k, lambda_seed);
            return reducers::train_tree(shape, labels, sample, cfg, seed);
        }
        throw UsageError("unknown training method: " + method);
    }();
    std::ostringstream ss;
    io::write_model(ss, model);
    emit(out, ss.str());
    return 0;
}

int run_eval(const std::string& model_path, const std::string& data_path) {
    std::istringstream model_in(slurp(model_path));
    auto model = io::read_model(model_in);
    std::istringstream data_in(slurp(data_path));
    auto sample = io::read_sample_csv(data_in);
    std::ostringstream ss;
    ss << "error," << std::setprecision(17) << reducers::multiclass_error(model, sample) << '\n';
    std::cout << ss.str();
    return 0;
}

int run_lab(const std::string& config_path, const std::string& out_dir) {
    auto cfg = lab::config_from_json(slurp(config_path));
    auto result = lab::run_experiment(cfg);
    fs::create_directories(out_dir);
    {
        std::ostringstream ss;
        lab::write_records_csv(ss, result);
        io::write_file((fs::path(out_dir) / "records.csv").string(), ss.str());
    }
    {
        std::ostringstream ss;
        lab::write_summary_csv(ss, result);
        io::write_file((fs::path(out_dir) / "summary.csv").string(), ss.str());
    }
    if (result.experiment == "error_curve") {
        std::ostringstream ss;
        lab::write_curve_svg(ss, result);
        io::write_file((fs::path(out_dir) / "curve.svg").string(), ss.str());
    }
    for (const auto& n : result.notes) std::cerr << "note: " << n << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiclass-to-binary reductions: codes, halfspace learners, shattering checks, experiments"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();
    int threads = 0;
    app.add_option("--seed", seed, "global random seed (default: MULTIREDUCE_SEED or 0)");
    app.add_option("--threads", threads, "cap on worker threads (0 = all cores)");

    // code
    auto* code_cmd = app.add_subcommand("code", "emit a code matrix");
    std::string code_kind, code_out;
    int code_k = 3, code_l = 8;
    bool distinct_rows = false, random_labels = false;
    code_cmd->add_option("kind", code_kind, "ova | ap | random")->required();
    code_cmd->add_option("--k", code_k, "number of classes")->required();
    code_cmd->add_option("--l", code_l, "code length (random codes)");
    code_cmd->add_flag("--distinct-rows", distinct_rows, "resample until all rows are distinct");
    code_cmd->add_flag("--random-labels", random_labels, "shuffle the row-to-label bijection");
    code_cmd->add_option("--out", code_out, "output path (default: stdout)");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "sample a synthetic dataset to CSV");
    std::string gen_kind, gen_out;
    int gen_k = 9, gen_d = 2, gen_n = 1000, gen_locations = 2;
    bool gen_center = false;
    double gen_jitter = 0.0;
    gen_cmd->add_option("kind", gen_kind, "two-points | circle | sector3 | random | clusters | simplex")
        ->required();
    gen_cmd->add_option("--k", gen_k, "number of classes");
    gen_cmd->add_option("--d", gen_d, "dimension");
    gen_cmd->add_option("--n", gen_n, "sample size")->required();
    gen_cmd->add_flag("--with-center", gen_center, "force one class center to the centroid");
    gen_cmd->add_option("--locations", gen_locations, "locations for the clusters kind");
    gen_cmd->add_option("--jitter", gen_jitter, "gaussian jitter around class centers");
    gen_cmd->add_option("--out", gen_out, "output path (default: stdout)");

    // train
    auto* train_cmd = app.add_subcommand("train", "train a multiclass model");
    std::string train_method, train_data, train_code, train_mode = "auto", train_shape = "random",
                train_out;
    std::uint64_t tree_seed = 0, lambda_seed = 0;
    reducers::TrainConfig tcfg;
    train_cmd->add_option("method", train_method, "msvm | ova | ap | ecoc | tree")->required();
    train_cmd->add_option("--data", train_data, "training CSV")->required();
    train_cmd->add_option("--code", train_code, "code matrix file (ecoc)");
    train_cmd->add_option("--tree-seed", tree_seed, "random tree shape seed");
    train_cmd->add_option("--lambda-seed", lambda_seed, "leaf labeling seed (0 = identity)");
    train_cmd->add_option("--mode", train_mode, "msvm mode: realizable | approx | auto");
    train_cmd->add_option("--tree-shape", train_shape, "balanced | random");
    train_cmd->add_option("--budget", tcfg.base.perceptron_budget, "perceptron update budget");
    train_cmd->add_option("--restarts", tcfg.base.restarts, "hinge restarts");
    train_cmd->add_option("--epochs", tcfg.base.epochs, "hinge epochs per restart");
    train_cmd->add_option("--out", train_out, "output model path (default: stdout)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a model on a CSV dataset");
    std::string eval_model, eval_data;
    eval_cmd->add_option("--model", eval_model, "model file")->required();
    eval_cmd->add_option("--data", eval_data, "dataset CSV")->required();

    // shatter
    auto* shatter_cmd = app.add_subcommand("shatter", "shattering and dimension checks");
    shatter_cmd->require_subcommand(1);
    auto* thm3_cmd = shatter_cmd->add_subcommand("thm3", "tree composition N-shattering check");
    int s_k = 4, s_d = 2, s_l = 4;
    bool all_shapes = false;
    thm3_cmd->add_option("--k", s_k, "number of classes")->required();
    thm3_cmd->add_option("--d", s_d, "index-set dimension")->required();
    thm3_cmd->add_flag("--all-shapes", all_shapes, "check every full tree shape");
    auto* thm13_cmd = shatter_cmd->add_subcommand("thm13", "code sensitivity N-shattering check");
    std::string thm13_code_path;
    thm13_cmd->add_option("--code", thm13_code_path, "code file (default: random from --k/--l/--seed)");
    thm13_cmd->add_option("--k", s_k, "classes for a random code");
    thm13_cmd->add_option("--l", s_l, "length for a random code");
    thm13_cmd->add_option("--d", s_d, "index-set dimension")->required();
    auto* dims_cmd = shatter_cmd->add_subcommand("dims", "Natarajan/Graph/VC dimensions of a class file");
    std::string dims_path;
    dims_cmd->add_option("--class", dims_path, "finite class file")->required();
    auto* embed_cmd = shatter_cmd->add_subcommand("embed", "halfspace embedding certificates");
    std::string embed_family = "F";
    double embed_slope = 10.0;
    embed_cmd->add_option("family", embed_family, "F | G")->required();
    embed_cmd->add_option("--d", s_d, "dimension")->required();
    embed_cmd->add_option("--l", s_l, "index count")->required();
    embed_cmd->add_option("--slope", embed_slope, "bias slope for the G embedding");

    // lab
    auto* lab_cmd = app.add_subcommand("lab", "experiment harness");
    lab_cmd->require_subcommand(1);
    auto* lab_run = lab_cmd->add_subcommand("run", "run an experiment from a JSON config");
    std::string lab_config, lab_out = "lab_out";
    lab_run->add_option("--config", lab_config, "JSON config path")->required();
    lab_run->add_option("--out", lab_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    set_thread_budget(threads);
    try {
        if (*code_cmd)
            return run_code(code_kind, code_k, code_l, seed, distinct_rows, random_labels, code_out);
        if (*gen_cmd)
            return run_gen(gen_kind, gen_k, gen_d, gen_n, seed, gen_center, gen_locations, gen_jitter,
                           gen_out);
        if (*train_cmd)
            return run_train(train_method, train_data, train_code, tree_seed, lambda_seed, seed,
                             train_mode, train_shape, tcfg, train_out);
        if (*eval_cmd) return run_eval(eval_model, eval_data);
        if (*shatter_cmd) {
            if (*thm3_cmd) {
                bool all_ok = true;
                if (all_shapes) {
                    for (const auto& shape : reducers::all_tree_shapes(s_k))
                        all_ok = all_ok && shatter::thm3_check(shape, s_d);
                } else {
                    all_ok = shatter::thm3_check(reducers::random_tree(s_k, seed), s_d);
                }
                std::cout << "thm3," << (all_ok ? "true" : "false") << '\n';
                return all_ok ? 0 : 1;
            }
            if (*thm13_cmd) {
                codes::CodeMatrix code = [&] {
                    if (!thm13_code_path.empty()) {
                        std::istringstream in(slurp(thm13_code_path));
                        return codes::read_code(in);
                    }
                    return codes::random_code(s_k, s_l, seed);
                }();
                auto u = codes::sensitive_vector(code);
                bool ok = shatter::thm13_check(code, u, s_d);
                std::cout << "thm13," << (ok ? "true" : "false") << '\n';
                return ok ? 0 : 1;
            }
            if (*dims_cmd) {
                std::istringstream in(slurp(dims_path));
                auto cls = shatter::read_class(in);
                std::cout << "natarajan," << shatter::natarajan_dimension(cls) << '\n';
                std::cout << "graph," << shatter::graph_dimension(cls) << '\n';
                if (cls.is_binary()) std::cout << "vc," << shatter::vc_dimension(cls) << '\n';
                return 0;
            }
            if (*embed_cmd) {
                auto report = embed_family == "G" ? shatter::embed_G_halfspaces(s_d, s_l, embed_slope)
                                                  : shatter::embed_F_halfspaces(s_d, s_l, seed);
                std::cout << "family," << embed_family << '\n'
                          << "functions," << report.num_functions << '\n'
                          << "realized," << report.realized << '\n'
                          << "margin," << report.margin << '\n'
                          << "perturbation," << report.perturbation << '\n'
                          << "attempts," << report.attempts << '\n';
                return report.all_realized() ? 0 : 1;
            }
        }
        if (*lab_cmd && *lab_run) return run_lab(lab_config, lab_out);
        std::cerr << "usage error: no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
