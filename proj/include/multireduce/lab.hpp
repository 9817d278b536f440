#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "multireduce/reducers.hpp"
#include "multireduce/synth.hpp"

namespace multireduce::lab {

// Desk-scale experiment harness. Every experiment is deterministic in its
// config: trial t uses seed + t, so trial subsets reproduce independently.
struct ExperimentConfig {
    std::string experiment;  // lemma10 | lemma10_tightness | corollary11 |
                             // corollary12 | showcase | containment | error_curve
    synth::SyntheticDistribution distribution;
    bool has_distribution = false;
    int trials = 20;
    std::uint64_t seed = 1;
    double mu = 0.5;
    double nu = 0.1;
    double epsilon = 0.01;
    synth::LabelMapRule rule = synth::LabelMapRule::Exact;
    int train_size = 2000;
    int test_size = 2000;
    int code_length = 7;        // corollary12 / showcase ECOC
    std::string tree_kind = "balanced";  // balanced | random
    std::vector<int> m_grid;             // error_curve training-set sizes
    std::vector<std::string> methods;    // error_curve: subset of msvm|ova|ap|tree|ecoc
    reducers::TrainConfig train;
};

struct MetricRecord {
    int trial = 0;
    std::string metric;
    double value = 0.0;
};

struct ExperimentResult {
    std::string experiment;
    std::vector<MetricRecord> records;
    std::vector<std::pair<std::string, double>> summary;
    std::vector<std::string> notes;  // regime warnings and config echoes

    double summary_value(const std::string& name) const;
};

ExperimentConfig config_from_json(const std::string& json_text);

ExperimentResult lemma10_experiment(const ExperimentConfig& cfg);
ExperimentResult lemma10_tightness_experiment(const ExperimentConfig& cfg);
ExperimentResult corollary11_experiment(const ExperimentConfig& cfg);
ExperimentResult corollary12_experiment(const ExperimentConfig& cfg);
ExperimentResult showcase_table(const ExperimentConfig& cfg);
ExperimentResult containment_check(const ExperimentConfig& cfg);
ExperimentResult error_curve(const ExperimentConfig& cfg);

// Dispatch on cfg.experiment.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// records CSV: "experiment,trial,metric,value"; summary CSV: "metric,value";
// notes go to "# ..." comment lines at the top of the summary.
void write_records_csv(std::ostream& os, const ExperimentResult& result);
void write_summary_csv(std::ostream& os, const ExperimentResult& result);

// Plain SVG polyline plot of error-vs-m curves (error_curve results only).
void write_curve_svg(std::ostream& os, const ExperimentResult& result);

}  // namespace multireduce::lab
