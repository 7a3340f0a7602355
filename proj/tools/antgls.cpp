// Command-line front end: solver replicates, classify benchmark, figure traces.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "antgls/bench.hpp"
#include "antgls/pbx.hpp"

namespace {

using namespace antgls;

// Observes the first replicate: crossover steps to stderr and/or the final
// pheromone matrix to a CSV file.
class FirstRunObserver : public SearchObserver {
 public:
  FirstRunObserver(bool trace, std::string dump_path) : trace_(trace), dump_path_(std::move(dump_path)) {}

  void on_transition(const TransitionTrace& t) override {
    if (trace_) std::cerr << format_transition(t) << '\n';
  }
  void on_generation(int, const Population&, const PheromoneMatrix& tau) override {
    if (dump_path_.empty()) return;
    std::ofstream out(dump_path_);
    if (!out) throw std::runtime_error("cannot write '" + dump_path_ + "'");
    tau.write_csv(out);
  }

 private:
  bool trace_;
  std::string dump_path_;
};

void emit(const std::string& s) { std::cout << s; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ant-based genetic local search for the symmetric TSP"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "run solver replicates and report best, average and worst lengths");
  std::string instance_path;
  ExperimentSpec spec;
  double time_limit = 0.0;
  long long optimum = 0;
  std::string format = "text";
  bool trace = false;
  std::string pheromone_dump;
  solve->add_option("--instance", instance_path, "TSPLIB (EUC_2D) or matrix fixture file")->required();
  solve->add_option("--runs", spec.runs, "independent replicates")->check(CLI::PositiveNumber);
  solve->add_option("--seed", spec.config.seed, "base seed; run r uses seed + r");
  solve->add_option("--pop-size", spec.config.population_size, "population size");
  solve->add_option("--gen-size", spec.config.generation_size, "children per while-iteration");
  solve->add_option("--beta", spec.config.acs.beta, "heuristic exponent");
  solve->add_option("--q0", spec.config.acs.q0, "exploitation threshold");
  solve->add_option("--rho", spec.config.acs.rho, "local evaporation");
  solve->add_option("--alpha", spec.config.acs.alpha, "global evaporation");
  solve->add_option("--pointers", spec.config.pointers_k, "pointers per parent");
  solve->add_option("--classify-k", spec.config.classify_K, "classify repetitions for the initial population");
  solve->add_option("--ls-patience", spec.config.ls_patience, "failed trials before 2-opt/3-opt stop (0 = n)");
  solve->add_option("--max-iterations", spec.config.max_while_iterations, "cap on while-iterations");
  solve->add_option("--time-limit", time_limit, "per-run wall clock limit in seconds");
  solve->add_option("--optimum", optimum, "known optimum, enables quality columns");
  solve->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  solve->add_option("--jobs", spec.jobs, "concurrent replicates")->check(CLI::PositiveNumber);
  solve->add_flag("--trace", trace, "print crossover steps of the first run to stderr");
  solve->add_option("--pheromone-dump", pheromone_dump, "write the first run's final pheromone matrix as CSV");

  // classify-bench
  auto* classify = app.add_subcommand("classify-bench", "random-tour improvement by classify local search");
  std::string classify_path;
  ClassifyBenchSpec cspec;
  std::string cformat = "text";
  classify->add_option("--instance", classify_path, "TSPLIB (EUC_2D) or matrix fixture file")->required();
  classify->add_option("--seed", cspec.seed, "seed");
  classify->add_option("--tours", cspec.tours, "random tours")->check(CLI::PositiveNumber);
  classify->add_option("--repeats", cspec.repeats, "applications per tour")->check(CLI::PositiveNumber);
  classify->add_option("--classify-k", cspec.classify_K, "classify repetitions per application")
      ->check(CLI::PositiveNumber);
  classify->add_option("--format", cformat, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  app.add_subcommand("trace-figures", "print step traces of the worked 8-city examples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const Problem problem = load_problem(instance_path);
      if (time_limit > 0.0) spec.config.time_limit = std::chrono::duration<double>(time_limit);
      if (optimum > 0) spec.known_optimum = optimum;

      if (trace || !pheromone_dump.empty()) {
        // Runs are deterministic in their seed, so re-running replicate 0
        // in the foreground observes exactly what the experiment computes.
        FirstRunObserver observer(trace, pheromone_dump);
        run_gls(problem.distances, spec.config, &observer);
      }

      const auto result = run_experiment(problem, spec);
      switch (parse_output_format(format)) {
        case OutputFormat::json: emit(experiment_to_json(result).dump(2) + "\n"); break;
        case OutputFormat::csv: emit(experiment_to_csv(result)); break;
        case OutputFormat::text: emit(experiment_to_text(result)); break;
      }
    } else if (classify->parsed()) {
      const Problem problem = load_problem(classify_path);
      const auto result = run_classify_bench(problem, cspec);
      switch (parse_output_format(cformat)) {
        case OutputFormat::json: emit(classify_to_json(result).dump(2) + "\n"); break;
        case OutputFormat::csv: emit(classify_to_csv(result)); break;
        case OutputFormat::text: emit(classify_to_text(result)); break;
      }
    } else {
      emit(trace_figures());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
