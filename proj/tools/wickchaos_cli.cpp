#include "wickchaos/experiments.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

using namespace wickchaos;

namespace {

CheckStatus report(const char* name, CheckStatus status) {
  std::printf("%-12s %s\n", name, to_string(status));
  return status;
}

CheckStatus conditions(const ExperimentConfig& c, const std::string& out) {
  const auto r = run_conditions(c);
  write_conditions(out, r);
  for (const auto& row : r.report.rows) {
    std::printf("  %-26s violation=%-12.4g C=%-12.6g %s%s\n", row.id.c_str(), row.worst_violation,
                row.fitted_constant, row.pass ? "ok" : "FAILED", row.advisory ? " (advisory)" : "");
  }
  return report("conditions", r.status);
}

CheckStatus convergence(const ExperimentConfig& c, const std::string& out) {
  const auto r = run_convergence(c);
  write_convergence(out, r);
  std::printf("  delta=%.4g fitted C (rate)=%.6g fitted C (pairs)=%.6g violations=%d\n", r.delta, r.fitted_C_calc,
              r.fitted_C_41, r.lemma41_violations);
  std::printf("  median gap ratio=%.4f over %zu ratios, max |z|=%.3f\n", r.median_gap_ratio, r.gap_ratios.size(),
              r.max_abs_z);
  return report("convergence", r.status);
}

CheckStatus expansion(const ExperimentConfig& c, const std::string& out) {
  const auto r = run_expansion(c);
  write_expansion(out, r);
  for (const auto& row : r.rows) {
    std::printf("  h=%-10.6g tail=%-12.6g mc=%-12.6g z=%-7.3f ratio=%.6g\n", row.h, row.tail_exact,
                row.mc_second_moment, row.z, row.normalized_ratio);
  }
  return report("expansion", r.status);
}

CheckStatus orlicz(const ExperimentConfig& c, const std::string& out) {
  const auto r = run_orlicz(c);
  write_orlicz(out, r);
  std::printf("  gaussian psi_2 norm=%.6f (oracle %.6f), chaos norm=%.6g (half sample %.6g)\n", r.gaussian_norm,
              r.gaussian_oracle, r.chaos_norm, r.chaos_norm_half);
  return report("orlicz", r.status);
}

CheckStatus entropy(const ExperimentConfig& c, const std::string& out) {
  const auto r = run_entropy(c);
  write_entropy(out, r);
  std::printf("  fitted C=%.6g, halved grid C=%.6g (change %.3g), triangle slack=%.3g\n", r.report.fitted_C,
              r.halved.fitted_C, r.halving_change, r.triangle.max_violation);
  return report("entropy", r.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wick powers of Gaussian difference quotients: numerical experiments"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "JSON experiment configuration")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory for CSV files (overrides output_dir)");
  auto* seed_opt = app.add_option("--seed", seed, "base seed (overrides the config)");

  const char* names[] = {"conditions", "convergence", "expansion", "orlicz", "entropy", "all"};
  for (const char* name : names) {
    app.add_subcommand(name, std::string("run the ") + name + " experiment")->fallthrough();
  }
  app.get_subcommand("all")->description("run every experiment");

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
    if (*seed_opt) config.seed = seed;
    if (!out_dir.empty()) config.output_dir = out_dir;
    std::filesystem::create_directories(config.output_dir);
    std::ofstream(std::filesystem::path(config.output_dir) / "config_used.json") << to_json(config) << '\n';

    const std::string which = app.get_subcommands().front()->get_name();
    CheckStatus status = CheckStatus::pass;
    const std::string& out = config.output_dir;
    if (which == "conditions" || which == "all") status = combine(status, conditions(config, out));
    if (which == "convergence" || which == "all") status = combine(status, convergence(config, out));
    if (which == "expansion" || which == "all") status = combine(status, expansion(config, out));
    if (which == "orlicz" || which == "all") status = combine(status, orlicz(config, out));
    if (which == "entropy" || which == "all") status = combine(status, entropy(config, out));
    return static_cast<int>(status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
