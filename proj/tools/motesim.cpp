#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "motesim/errors.hpp"
#include "motesim/runner.hpp"

namespace {

using namespace motesim;

ScenarioConfig load_with_overrides(const std::string& path, const std::int64_t* seed) {
  ScenarioConfig config = load_scenario(path);
  if (seed && *seed >= 0) {
    config.seed = static_cast<std::uint64_t>(*seed);
  }
  return config;
}

void print_report_line(const RunReport& report) {
  std::printf("%s [%s] seed=%llu: network total %.6f mJ, %llu events\n",
              report.config.name.c_str(), report.condition.c_str(),
              static_cast<unsigned long long>(report.config.seed),
              report.energy.network_total_mj,
              static_cast<unsigned long long>(report.events_processed));
}

void print_written(const std::vector<std::string>& written) {
  for (const std::string& path : written) {
    std::printf("wrote %s\n", path.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"motesim - deterministic discrete-event simulator for low-power mesh networks"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::int64_t seed_override = -1;
  std::string out_dir = "out";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    cmd->add_option("--seed", seed_override, "Override the scenario seed");
    cmd->add_option("--out", out_dir, "Output directory (default: out)");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Execute one scenario and emit its reports");
  add_common(run_cmd);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run the scenario over several node counts");
  add_common(sweep_cmd);
  std::vector<int> counts;
  sweep_cmd->add_option("--counts", counts, "Node counts, e.g. --counts 2 4 6 8")
      ->required()
      ->delimiter(',');

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Run and compare experiment conditions on one seed");
  add_common(compare_cmd);
  std::vector<std::string> condition_names = {"baseline", "attack", "attack+ids"};
  compare_cmd->add_option("--conditions", condition_names,
                          "Subset of baseline,attack,attack+ids,baseline+ids")
      ->delimiter(',');
  bool emit_svg = false;
  compare_cmd->add_flag("--svg", emit_svg, "Also emit a grouped bar chart");

  CLI::App* report_cmd =
      app.add_subcommand("report", "Validate an emitted run CSV and recompute its summary");
  std::string csv_path;
  double capacity_mah = 2200.0;
  double voltage = 3.0;
  report_cmd->add_option("--csv", csv_path, "Run CSV to summarize")->required();
  report_cmd->add_option("--capacity-mah", capacity_mah, "Battery capacity (default 2200)");
  report_cmd->add_option("--voltage", voltage, "Battery voltage (default 3.0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      const ScenarioConfig config = load_with_overrides(scenario_path, &seed_override);
      RunOutput output = run_and_write(config, out_dir);
      print_report_line(output.report);
      print_written(output.written);
    } else if (*sweep_cmd) {
      const ScenarioConfig config = load_with_overrides(scenario_path, &seed_override);
      SweepOutput output = run_sweep(config, counts, out_dir);
      for (const auto& [count, total] : output.totals) {
        std::printf("n=%d: network total %.6f mJ\n", count, total);
      }
      print_written(output.written);
    } else if (*compare_cmd) {
      const ScenarioConfig config = load_with_overrides(scenario_path, &seed_override);
      std::vector<Condition> conditions;
      for (const std::string& name : condition_names) {
        conditions.push_back(condition_from_name(name));
      }
      CompareOutput output = run_compare(config, conditions, out_dir, emit_svg);
      for (const RunReport& report : output.reports) {
        print_report_line(report);
      }
      std::string ordering;
      for (std::size_t i = 0; i < output.summary.ordering.size(); ++i) {
        if (i > 0) ordering += " < ";
        ordering += output.summary.ordering[i];
      }
      std::printf("ordering by network total: %s\n", ordering.c_str());
      print_written(output.written);
    } else if (*report_cmd) {
      BatteryModel battery{capacity_mah, voltage};
      battery.validate();
      const CsvSummary summary = summarize_csv(read_file(csv_path), battery);
      std::printf("duration %.6f s, network total %.6f mJ\n", summary.duration_s,
                  summary.network_total_mj);
      for (const NodeEnergy& node : summary.per_node) {
        const auto lifetime = summary.lifetime_hours.find(node.node);
        std::printf("node %lld: %.6f mJ", static_cast<long long>(node.node), node.total_mj);
        if (lifetime != summary.lifetime_hours.end()) {
          std::printf(", projected lifetime %.1f h", lifetime->second);
        }
        std::printf("\n");
      }
    }
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
