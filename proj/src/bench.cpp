#include "antgls/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "antgls/figures.hpp"
#include "antgls/local_search.hpp"
#include "antgls/pbx.hpp"

namespace antgls {

std::optional<Cost> known_optimum(const std::string& instance_name) {
  static const std::map<std::string, Cost> optima = {
      {"eil51", 426},
      {"eil76", 538},
      {"kroA100", 21282},
      {"a280", 2579},
  };
  auto it = optima.find(instance_name);
  if (it == optima.end()) return std::nullopt;
  return it->second;
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format '" + s + "'");
}

AggregateStats aggregate_runs(const std::vector<RunReport>& runs, std::optional<Cost> optimum) {
  if (runs.empty()) throw std::invalid_argument("aggregate_runs: no runs");
  AggregateStats s;
  s.best = runs.front().best_cost;
  s.worst = runs.front().best_cost;
  double total = 0.0;
  double time = 0.0;
  for (const auto& r : runs) {
    s.best = std::min(s.best, r.best_cost);
    s.worst = std::max(s.worst, r.best_cost);
    total += static_cast<double>(r.best_cost);
    time += r.wall_time_s;
  }
  s.average = total / static_cast<double>(runs.size());
  s.average_time_s = time / static_cast<double>(runs.size());
  if (optimum) {
    const auto opt = static_cast<double>(*optimum);
    s.best_quality = compute_quality(s.best, *optimum);
    s.worst_quality = compute_quality(s.worst, *optimum);
    s.average_quality = (s.average - opt) / opt * 100.0;
  }
  return s;
}

ExperimentResult run_experiment(const Problem& problem, const ExperimentSpec& spec) {
  if (spec.runs < 1) throw std::invalid_argument("runs must be at least 1");
  spec.config.validate(problem.distances.size());

  ExperimentResult result;
  result.instance = problem.name;
  result.spec = spec;
  result.runs.resize(static_cast<std::size_t>(spec.runs));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int r = next++; r < spec.runs; r = next++) {
      try {
        SolverConfig cfg = spec.config;
        cfg.seed = spec.config.seed + static_cast<std::uint64_t>(r);
        result.runs[static_cast<std::size_t>(r)] = run_gls(problem.distances, cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp(spec.jobs, 1, spec.runs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.aggregate = aggregate_runs(result.runs, spec.known_optimum);
  return result;
}

// ---- serialization ----------------------------------------------------------

nlohmann::json config_to_json(const SolverConfig& c) {
  nlohmann::json j = {
      {"pop_size", c.population_size},
      {"gen_size", c.generation_size},
      {"pointers", c.pointers_k},
      {"alpha", c.acs.alpha},
      {"beta", c.acs.beta},
      {"rho", c.acs.rho},
      {"q0", c.acs.q0},
      {"classify_k", c.classify_K},
      {"ls_patience", c.ls_patience},
      {"seed", c.seed},
      {"max_while_iterations", c.max_while_iterations},
  };
  j["time_limit_s"] = c.time_limit ? nlohmann::json(c.time_limit->count()) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json run_to_json(const RunReport& run, std::optional<Cost> optimum, bool include_time) {
  nlohmann::json history = nlohmann::json::array();
  for (const auto& [it, cost] : run.cost_history) history.push_back({it, cost});
  nlohmann::json j = {
      {"seed", run.seed},
      {"best_cost", run.best_cost},
      {"iterations", run.iterations_completed},
      {"children", run.children_generated},
      {"stop_reason", to_string(run.stop_reason)},
      {"cost_history", std::move(history)},
      {"best_tour", run.best_tour.order},
  };
  if (optimum) j["quality"] = compute_quality(run.best_cost, *optimum);
  if (include_time) j["time_s"] = run.wall_time_s;
  return j;
}

namespace {

nlohmann::json aggregate_to_json(const AggregateStats& a) {
  nlohmann::json j = {
      {"best_length", a.best},
      {"average_length", a.average},
      {"worst_length", a.worst},
      {"average_time_s", a.average_time_s},
  };
  if (a.best_quality) {
    j["best_quality"] = *a.best_quality;
    j["average_quality"] = *a.average_quality;
    j["worst_quality"] = *a.worst_quality;
  }
  return j;
}

std::string fmt_real(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string fmt_fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

nlohmann::json experiment_to_json(const ExperimentResult& result) {
  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t i = 0; i < result.runs.size(); ++i) {
    auto j = run_to_json(result.runs[i], result.spec.known_optimum);
    j["run"] = i;
    runs.push_back(std::move(j));
  }
  nlohmann::json out = {
      {"instance", result.instance},
      {"config", config_to_json(result.spec.config)},
      {"runs", std::move(runs)},
      {"aggregate", aggregate_to_json(result.aggregate)},
  };
  out["known_optimum"] = result.spec.known_optimum ? nlohmann::json(*result.spec.known_optimum) : nlohmann::json(nullptr);
  return out;
}

std::string experiment_to_csv(const ExperimentResult& result) {
  const bool q = result.spec.known_optimum.has_value();
  std::ostringstream os;
  os << "run,seed,best_cost" << (q ? ",quality" : "") << ",time_s,iterations,children,stop_reason\n";
  for (std::size_t i = 0; i < result.runs.size(); ++i) {
    const auto& r = result.runs[i];
    os << i << ',' << r.seed << ',' << r.best_cost;
    if (q) os << ',' << fmt_real(compute_quality(r.best_cost, *result.spec.known_optimum));
    os << ',' << fmt_real(r.wall_time_s) << ',' << r.iterations_completed << ',' << r.children_generated << ','
       << to_string(r.stop_reason) << '\n';
  }
  const auto& a = result.aggregate;
  os << '\n';
  os << "best_length" << (q ? ",best_quality" : "") << ",average_length" << (q ? ",average_quality" : "")
     << ",worst_length" << (q ? ",worst_quality" : "") << ",average_time_s\n";
  os << a.best;
  if (q) os << ',' << fmt_real(*a.best_quality);
  os << ',' << fmt_real(a.average);
  if (q) os << ',' << fmt_real(*a.average_quality);
  os << ',' << a.worst;
  if (q) os << ',' << fmt_real(*a.worst_quality);
  os << ',' << fmt_real(a.average_time_s) << '\n';
  return os.str();
}

std::string experiment_to_text(const ExperimentResult& result) {
  const auto& a = result.aggregate;
  auto cell = [](const std::string& v, const std::optional<double>& q) {
    return q ? v + " (" + fmt_fixed(*q, 2) + "%)" : v;
  };
  std::ostringstream os;
  os << result.instance << ": " << result.runs.size() << " runs, pop " << result.spec.config.population_size
     << ", gen " << result.spec.config.generation_size << ", base seed " << result.spec.config.seed << '\n';
  for (std::size_t i = 0; i < result.runs.size(); ++i) {
    const auto& r = result.runs[i];
    os << "  run " << i << " seed " << r.seed << ": " << r.best_cost << " after " << r.iterations_completed
       << " iterations (" << to_string(r.stop_reason) << "), " << fmt_fixed(r.wall_time_s, 2) << " s\n";
  }
  os << "best length:    " << cell(std::to_string(a.best), a.best_quality) << '\n';
  os << "average length: " << cell(fmt_fixed(a.average, 2), a.average_quality) << '\n';
  os << "worst length:   " << cell(std::to_string(a.worst), a.worst_quality) << '\n';
  os << "average time:   " << fmt_fixed(a.average_time_s, 2) << " s\n";
  return os.str();
}

// ---- classify benchmark -----------------------------------------------------

ClassifyBenchResult run_classify_bench(const Problem& problem, const ClassifyBenchSpec& spec) {
  if (spec.tours < 1 || spec.repeats < 1 || spec.classify_K < 1) {
    throw std::invalid_argument("tours, repeats and K must be positive");
  }
  const auto& d = problem.distances;
  RandomSource rng(spec.seed);
  double before_sum = 0.0;
  double after_sum = 0.0;
  double best = 0.0;
  double elapsed = 0.0;
  for (int t = 0; t < spec.tours; ++t) {
    const Tour initial = random_tour(d.size(), d, rng);
    for (int r = 0; r < spec.repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const Tour improved = classify_ls(initial, d, spec.classify_K, rng);
      elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const auto before = static_cast<double>(initial.cost);
      const auto after = static_cast<double>(improved.cost);
      before_sum += before;
      after_sum += after;
      best = std::max(best, (before - after) / before * 100.0);
    }
  }
  const double count = static_cast<double>(spec.tours) * spec.repeats;
  ClassifyBenchResult res;
  res.instance = problem.name;
  res.spec = spec;
  res.average_initial_cost = before_sum / count;
  res.average_final_cost = after_sum / count;
  res.percent_of_improving_in_average =
      (res.average_initial_cost - res.average_final_cost) / res.average_initial_cost * 100.0;
  res.percent_of_improving_at_best_case = best;
  res.time_s = elapsed / count;
  return res;
}

nlohmann::json classify_to_json(const ClassifyBenchResult& r) {
  return {
      {"instance", r.instance},
      {"tours", r.spec.tours},
      {"repeats", r.spec.repeats},
      {"classify_k", r.spec.classify_K},
      {"seed", r.spec.seed},
      {"average_initial_cost", r.average_initial_cost},
      {"average_final_cost", r.average_final_cost},
      {"percent_of_improving_in_average", r.percent_of_improving_in_average},
      {"percent_of_improving_at_best_case", r.percent_of_improving_at_best_case},
      {"time_s", r.time_s},
  };
}

std::string classify_to_csv(const ClassifyBenchResult& r) {
  std::ostringstream os;
  os << "instance,tours,repeats,classify_k,seed,average_initial_cost,average_final_cost,"
        "percent_of_improving_in_average,percent_of_improving_at_best_case,time_s\n";
  os << r.instance << ',' << r.spec.tours << ',' << r.spec.repeats << ',' << r.spec.classify_K << ','
     << r.spec.seed << ',' << fmt_real(r.average_initial_cost) << ',' << fmt_real(r.average_final_cost) << ','
     << fmt_real(r.percent_of_improving_in_average) << ',' << fmt_real(r.percent_of_improving_at_best_case) << ','
     << fmt_real(r.time_s) << '\n';
  return os.str();
}

std::string classify_to_text(const ClassifyBenchResult& r) {
  std::ostringstream os;
  os << r.instance << ": " << r.spec.tours << " random tours x " << r.spec.repeats << " applications, K="
     << r.spec.classify_K << '\n';
  os << "percent of improving in average:  " << fmt_fixed(r.percent_of_improving_in_average, 2) << '\n';
  os << "percent of improving at best case: " << fmt_fixed(r.percent_of_improving_at_best_case, 2) << '\n';
  os << "time per application (s):          " << std::setprecision(3) << r.time_s << '\n';
  return os.str();
}

// ---- figure traces ----------------------------------------------------------

namespace {

class TraceWriter : public SearchObserver {
 public:
  explicit TraceWriter(std::ostream& os) : os_(os) {}
  void on_transition(const TransitionTrace& t) override {
    os_ << "step " << ++step_ << ": " << format_transition(t, 1) << '\n';
  }

 private:
  std::ostream& os_;
  int step_ = 0;
};

void write_labels(std::ostream& os, const Tour& t) {
  for (std::size_t i = 0; i < t.order.size(); ++i) os << (i ? " " : "") << t.order[i] + 1;
  os << " (cost " << t.cost << ")";
}

}  // namespace

std::string trace_figures() {
  using namespace figures;
  const auto d = eight_city_matrix();
  std::ostringstream os;

  const Tour father = tour_from_labels(kPbxFather, d);
  const Tour mother = tour_from_labels(kPbxMother, d);
  os << "PBX greedy crossover, 3 pointers per parent, start city " << kPbxStartLabel << '\n';
  os << "father: ";
  write_labels(os, father);
  os << "\nmother: ";
  write_labels(os, mother);
  os << '\n';
  {
    TraceWriter w(os);
    const Tour child = pbx_crossover_from(father, mother, kPbxStartLabel - 1, 3, d, &w);
    os << "child: ";
    write_labels(os, child);
    os << "\n\n";
  }

  const Tour input = tour_from_labels(kClassifyInput, d);
  os << "classify method, second pointer at position " << kClassifySecondStart << " (city "
     << kClassifyInput[kClassifySecondStart] << ")\n";
  os << "input:  ";
  write_labels(os, input);
  os << '\n';
  {
    TraceWriter w(os);
    const Tour out = classify_method_at(input, kClassifySecondStart, d, &w);
    os << "output: ";
    write_labels(os, out);
    os << '\n';
  }
  return os.str();
}

}  // namespace antgls
