// Command-line entry point: scramble metrics, synthetic data, GA tuning,
// evaluation reports, the session server and log export.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "cast/error.hpp"
#include "cast/evaluation.hpp"
#include "cast/fis_config.hpp"
#include "cast/ga.hpp"
#include "cast/http_api.hpp"
#include "cast/iwd_model.hpp"
#include "cast/records.hpp"
#include "cast/scramble.hpp"
#include "cast/session.hpp"
#include "cast/simulate.hpp"
#include "cast/word_tasks.hpp"

namespace {

using namespace cast;

std::vector<WordTask> load_tasks(const std::string& source) {
  if (source.empty() || source == "default") return default_tasks();
  return read_tasks_csv(std::filesystem::path(source));
}

FisConfig load_model(const std::string& source) {
  if (source.empty() || source == "heuristic" || source == "default") return default_fis_config();
  return load_fis_config(source);
}

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string metrics_csv(const std::vector<WordTask>& tasks) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "word,scramble,degree_of_scramble,normalized_hamming\n";
  std::vector<double> s, h;
  for (const auto& t : tasks) {
    s.push_back(degree_of_scramble(t.word, t.scramble));
    h.push_back(normalized_hamming(t.word, t.scramble));
    out << t.word << ',' << t.scramble << ',' << s.back() << ',' << h.back() << '\n';
  }
  out << "# pearson_r," << pearson(s, h) << '\n';
  return out.str();
}

HttpService* g_service = nullptr;

extern "C" void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-scramble difficulty toolkit"};
  app.require_subcommand(1);

  auto* metrics = app.add_subcommand("metrics", "Degree of scramble and normalized Hamming per task, plus Pearson r");
  std::string metrics_words = "default", metrics_out;
  metrics->add_option("--words", metrics_words, "'default' or a task CSV file");
  metrics->add_option("--out", metrics_out, "Output CSV (stdout if omitted)");

  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic gameplay dataset (JSONL)");
  int sim_participants = 48;
  std::uint64_t sim_seed = 0;
  std::string sim_out, sim_tasks = "default";
  simulate->add_option("--participants", sim_participants, "Number of simulated participants")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_seed, "Random seed")->required();
  simulate->add_option("--out", sim_out, "Output JSONL path")->required();
  simulate->add_option("--tasks", sim_tasks, "'default' or a task CSV file");

  auto* tune = app.add_subcommand("tune", "Fit membership functions with the genetic algorithm");
  GaSettings ga;
  std::string tune_data, tune_model = "heuristic", tune_out, tune_history, tune_participant;
  tune->add_option("--seed", ga.seed, "Random seed")->required();
  tune->add_option("--population", ga.population_size, "Population size")->default_val(200);
  tune->add_option("--generations", ga.max_generations, "Maximum generations")->default_val(100);
  tune->add_option("--stall", ga.stall_generations, "Stall window in generations (0 disables)")->default_val(20);
  tune->add_option("--threads", ga.threads, "Fitness threads (0 = all cores)");
  tune->add_option("--data", tune_data, "Training dataset (JSONL)")->required();
  tune->add_option("--model", tune_model, "Template config path or 'heuristic'");
  tune->add_option("--out", tune_out, "Tuned config output path")->required();
  tune->add_option("--history", tune_history, "Fitness history CSV (stdout if omitted)");
  tune->add_option("--participant", tune_participant, "Fit only this participant's records");

  auto* eval = app.add_subcommand("eval", "Resubstitution and leave-one-out precision/recall/F report");
  std::string eval_model = "heuristic", eval_data, eval_csv, eval_mode = "participant", eval_trainer = "heuristic";
  GaSettings eval_ga;
  eval_ga.max_generations = 10;
  eval_ga.population_size = 50;
  bool eval_seed_given = false;
  eval->add_option("--model", eval_model, "Config path or 'heuristic'");
  eval->add_option("--data", eval_data, "Dataset (JSONL)")->required();
  eval->add_option("--loo-mode", eval_mode, "Leave-one-out unit: participant, record or word");
  eval->add_option("--loo-trainer", eval_trainer, "heuristic (no refit) or ga");
  eval->add_option("--ga-generations", eval_ga.max_generations, "GA generations per fold");
  eval->add_option("--ga-population", eval_ga.population_size, "GA population per fold");
  auto* eval_seed_opt = eval->add_option("--seed", eval_ga.seed, "Seed for GA folds");
  eval->add_option("--csv", eval_csv, "Also write the table as CSV");

  auto* serve = app.add_subcommand("serve", "Run the session HTTP service");
  int serve_port = 8080;
  std::string serve_host = "0.0.0.0", serve_model = "heuristic", serve_tasks = "default", serve_data_dir;
  serve->add_option("--port", serve_port, "TCP port");
  serve->add_option("--host", serve_host, "Bind address");
  serve->add_option("--model", serve_model, "Config path or 'heuristic'");
  serve->add_option("--tasks", serve_tasks, "'default' or a task CSV file");
  serve->add_option("--data-dir", serve_data_dir, "Record log directory (default: $CAST_DATA_DIR or ./cast-data)");

  auto* export_csv = app.add_subcommand("export-csv", "Convert a JSONL record log to CSV");
  std::string export_log, export_out;
  export_csv->add_option("--log", export_log, "JSONL record log")->required();
  export_csv->add_option("--out", export_out, "Output CSV (stdout if omitted)");

  auto* dump_model = app.add_subcommand("default-model", "Write the heuristic model config");
  std::string dump_out;
  dump_model->add_option("--out", dump_out, "Output path (stdout if omitted)");

  auto* tasks_cmd = app.add_subcommand("tasks", "Write the default 28-task sequence as CSV");
  std::string tasks_out;
  tasks_cmd->add_option("--out", tasks_out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  eval_seed_given = eval_seed_opt->count() > 0;

  try {
    if (*metrics) {
      emit(metrics_out, metrics_csv(load_tasks(metrics_words)));
    } else if (*simulate) {
      const auto records = simulate_participants(sim_participants, sim_seed, AbilityModel{}, load_tasks(sim_tasks));
      write_records_jsonl(std::filesystem::path(sim_out), records);
      std::cerr << "simulate: " << records.size() << " records, seed " << sim_seed << " -> " << sim_out << '\n';
    } else if (*tune) {
      const auto tmpl = load_model(tune_model);
      auto records = rated_only(read_records_jsonl(std::filesystem::path(tune_data)));
      if (!tune_participant.empty()) {
        std::erase_if(records, [&](const GameplayRecord& r) { return r.participant_id != tune_participant; });
      }
      const auto result = run_ga(ga, tmpl, records);
      auto tuned = with_recorded_bounds(result.best_config);
      tuned.name = tmpl.name + "-tuned";
      tuned.description = "Tuned from '" + tmpl.name + "' with seed " + std::to_string(ga.seed) + ", population " +
                          std::to_string(ga.population_size) + ", " + std::to_string(result.history.size()) +
                          " generations on " + std::to_string(records.size()) + " records";
      save_fis_config(tuned, tune_out);
      std::ostringstream hist;
      hist << std::setprecision(17) << "generation,best_sse,mean_sse,step\n";
      for (const auto& g : result.history) hist << g.generation << ',' << g.best << ',' << g.mean << ',' << g.step << '\n';
      emit(tune_history, hist.str());
      std::cerr << "tune: seed " << ga.seed << ", SSE " << result.history.front().best << " -> " << result.best_fitness
                << (result.stalled ? " (stalled)" : "") << '\n';
    } else if (*eval) {
      const auto config = load_model(eval_model);
      const auto records = read_records_jsonl(std::filesystem::path(eval_data));
      Trainer trainer;
      if (eval_trainer == "heuristic") {
        trainer = heuristic_trainer();
      } else if (eval_trainer == "ga") {
        if (!eval_seed_given) throw InputError("--loo-trainer ga requires --seed");
        trainer = ga_trainer(eval_ga);
      } else {
        throw InputError("unknown --loo-trainer '" + eval_trainer + "'");
      }
      const auto resub = resubstitution(IwdModel(config), records);
      const auto loo = leave_one_out(config, records, fold_mode_from_string(eval_mode), trainer);
      std::cout << format_report_table(resub, loo);
      if (!eval_csv.empty()) emit(eval_csv, format_report_csv(resub, loo));
    } else if (*serve) {
      if (serve_data_dir.empty()) {
        const char* env = std::getenv("CAST_DATA_DIR");
        serve_data_dir = env ? env : "cast-data";
      }
      auto model = std::make_shared<const IwdModel>(load_model(serve_model));
      auto log = std::make_shared<RecordLog>(std::filesystem::path(serve_data_dir) / "records.jsonl");
      SessionManager sessions(load_tasks(serve_tasks), model, log);
      HttpService service(sessions);
      g_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "serve: http://" << serve_host << ':' << serve_port << ", log " << log->path() << '\n';
      if (!service.listen(serve_host, serve_port)) throw Error("cannot listen on port " + std::to_string(serve_port));
    } else if (*export_csv) {
      std::ostringstream out;
      write_records_csv(out, read_records_jsonl(std::filesystem::path(export_log)));
      emit(export_out, out.str());
    } else if (*tasks_cmd) {
      std::ostringstream out;
      out << "# Default word sequence, identical for every participant.\n"
          << "# The word table lists 27 legible words while the study reports 28 tasks\n"
          << "# (28 x 48 participants = 1344 records). The 28th task is a second, fully\n"
          << "# permuted hazardous; the first keeps its \"ous\" suffix in place.\n"
          << "# water keeps its published scramble tarew. Other scrambles were generated\n"
          << "# with seed " << kDefaultScrambleSeed << " + position.\n";
      write_tasks_csv(out, default_tasks());
      emit(tasks_out, out.str());
    } else if (*dump_model) {
      emit(dump_out, dump_fis_config(default_fis_config()));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
