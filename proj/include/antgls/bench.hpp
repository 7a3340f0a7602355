#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antgls/gls.hpp"
#include "antgls/tsplib.hpp"
#include "json.hpp"

namespace antgls {

// Optimal tour lengths of the benchmark instances shipped in data/.
std::optional<Cost> known_optimum(const std::string& instance_name);

enum class OutputFormat { json, csv, text };

OutputFormat parse_output_format(const std::string& s);

struct ExperimentSpec {
  int runs = 30;
  SolverConfig config;  // config.seed is the base seed; run r uses base + r
  std::optional<Cost> known_optimum;
  int jobs = 1;
};

struct AggregateStats {
  Cost best = 0;
  double average = 0.0;
  Cost worst = 0;
  std::optional<double> best_quality;
  std::optional<double> average_quality;
  std::optional<double> worst_quality;
  double average_time_s = 0.0;
};

struct ExperimentResult {
  std::string instance;
  ExperimentSpec spec;
  std::vector<RunReport> runs;  // ordered by run index
  AggregateStats aggregate;
};

AggregateStats aggregate_runs(const std::vector<RunReport>& runs, std::optional<Cost> optimum);

ExperimentResult run_experiment(const Problem& problem, const ExperimentSpec& spec);

nlohmann::json run_to_json(const RunReport& run, std::optional<Cost> optimum, bool include_time = true);
nlohmann::json config_to_json(const SolverConfig& config);
nlohmann::json experiment_to_json(const ExperimentResult& result);
std::string experiment_to_csv(const ExperimentResult& result);
std::string experiment_to_text(const ExperimentResult& result);

// ---- classify benchmark -----------------------------------------------------

struct ClassifyBenchSpec {
  int tours = 30;
  int repeats = 30;  // independent classify_ls applications per tour
  int classify_K = 4;
  std::uint64_t seed = 1;
};

struct ClassifyBenchResult {
  std::string instance;
  ClassifyBenchSpec spec;
  double average_initial_cost = 0.0;
  double average_final_cost = 0.0;
  // (avg before - avg after) / avg before * 100
  double percent_of_improving_in_average = 0.0;
  // max over applications of (before - after) / before * 100
  double percent_of_improving_at_best_case = 0.0;
  double time_s = 0.0;  // mean wall time per classify_ls application
};

ClassifyBenchResult run_classify_bench(const Problem& problem, const ClassifyBenchSpec& spec);

nlohmann::json classify_to_json(const ClassifyBenchResult& r);
std::string classify_to_csv(const ClassifyBenchResult& r);
std::string classify_to_text(const ClassifyBenchResult& r);

// Step traces of the worked 8-city examples (PBX and classify), with
// 1-based city labels.
std::string trace_figures();

}  // namespace antgls
