#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "oran/errors.hpp"
#include "oran/runner.hpp"

namespace {

// Exit codes: 0 ok, 1 usage, 2 validation, 3 runtime.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kValidation = 2;
constexpr int kRuntime = 3;

void apply_seed_override(oran::ScenarioConfig& cfg) {
  const char* env = std::getenv("ALLOC_SEED");
  if (!env || !*env) return;
  try {
    cfg.seeds = {std::stoull(env)};
  } catch (const std::exception&) {
    throw oran::ValidationError(
        "validation-error: ALLOC_SEED must be an unsigned integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TWDM-PON x-haul and cloud resource allocation simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string topology_path;
  bool dump_assignments = false;
  int jobs = 1;

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "scenario config (JSON)")
        ->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--topology", topology_path,
                    "externally supplied deployment (JSON)");
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* run = app.add_subcommand("run", "execute the scenario grid");
  add_run_options(run);
  run->add_flag("--dump-assignments", dump_assignments,
                "write per-run assignment JSON");

  CLI::App* oracle =
      app.add_subcommand("oracle", "exact solvers only (size caps enforced)");
  add_run_options(oracle);

  std::string cmp_a, cmp_b, mech_a, mech_b;
  CLI::App* cmp = app.add_subcommand("compare", "diff two metrics CSVs");
  cmp->add_option("a", cmp_a, "first metrics.csv")->required();
  cmp->add_option("b", cmp_b, "second metrics.csv")->required();
  cmp->add_option("--mechanism-a", mech_a, "filter rows of the first input");
  cmp->add_option("--mechanism-b", mech_b, "filter rows of the second input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (run->parsed() || oracle->parsed()) {
      oran::ScenarioConfig cfg = oran::load_config(config_path);
      apply_seed_override(cfg);
      if (oracle->parsed()) cfg.mechanisms = {oran::Mechanism::Oracle};
      oran::RunOptions opts;
      opts.out_dir = out_dir;
      opts.dump_assignments = dump_assignments;
      opts.jobs = jobs;
      opts.topology_path = topology_path;
      const oran::RunOutput out = oran::run_scenario(cfg, opts);
      std::cout << out.rows.size() << " rows -> " << out.csv_path << '\n';
      if (!out.assignments_path.empty())
        std::cout << "assignments -> " << out.assignments_path << '\n';
    } else if (cmp->parsed()) {
      const oran::CompareSummary s =
          oran::compare_csv(cmp_a, cmp_b, mech_a, mech_b);
      oran::print_compare(s, std::cout);
    }
  } catch (const oran::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kValidation;
  } catch (const oran::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kValidation;
  } catch (const oran::SchemaError& e) {
    std::cerr << e.what() << '\n';
    return kValidation;
  } catch (const oran::InvalidParameterError& e) {
    std::cerr << e.what() << '\n';
    return kValidation;
  } catch (const oran::InfeasibleSpecError& e) {
    std::cerr << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kOk;
}
