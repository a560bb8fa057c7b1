#include "wickchaos/experiment_config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wickchaos {

using nlohmann::json;

namespace {

bool is_multiple(double h, double delta) {
  const double ratio = h / delta;
  return ratio >= 1.0 - 1e-9 && std::abs(ratio - std::round(ratio)) <= 1e-9 * ratio;
}

double parse_q(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    throw std::invalid_argument("config: q must be a number or \"inf\"");
  }
  return v.get<double>();
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void read_range(const json& j, const char* key, RangeSpec& out) {
  if (!j.contains(key)) return;
  const json& r = j.at(key);
  read(r, "lo", out.lo);
  read(r, "hi", out.hi);
  read(r, "count", out.count);
}

json range_json(const RangeSpec& r) { return {{"lo", r.lo}, {"hi", r.hi}, {"count", r.count}}; }

}  // namespace

IncrementVarianceModel ModelSpec::build() const {
  if (kind == "power_law") return IncrementVarianceModel::power_law(r, M);
  if (kind == "quadratic") return IncrementVarianceModel::quadratic(M);
  if (kind == "linear") return IncrementVarianceModel::linear(M);
  throw std::invalid_argument("config: unknown model kind '" + kind + "'");
}

std::vector<double> RangeSpec::log_points() const { return log_grid(lo, hi, count); }

void ExperimentConfig::validate() const {
  if (!(delta > 0.0) || n < 1) throw std::invalid_argument("config: grid.delta and grid.n must be positive");
  if (k < 1) throw std::invalid_argument("config: k must be positive");
  if (!(g_b > g_a) || g_a < 0.0) throw std::invalid_argument("config: g needs 0 <= a < b");
  double max_h = 0.0;
  std::vector<double> all(h);
  all.insert(all.end(), expansion.h.begin(), expansion.h.end());
  for (double v : all) {
    if (!is_multiple(v, delta)) throw std::invalid_argument("config: every h must be a multiple of grid.delta");
    max_h = std::max(max_h, v);
  }
  if (g_b + max_h > n * delta * (1.0 + 1e-12)) {
    throw std::invalid_argument("config: [a, b + max h] must lie inside the sampled range");
  }
  if (trials < 1) throw std::invalid_argument("config: trials must be positive");
}

ExperimentConfig parse_config(const std::string& json_text) {
  const json j = json::parse(json_text);
  ExperimentConfig c;
  if (j.contains("model")) {
    const json& m = j.at("model");
    read(m, "kind", c.model.kind);
    read(m, "r", c.model.r);
    read(m, "M", c.model.M);
  }
  read(j, "k", c.k);
  if (j.contains("grid")) {
    read(j.at("grid"), "delta", c.delta);
    read(j.at("grid"), "n", c.n);
  }
  if (j.contains("g")) {
    read(j.at("g"), "a", c.g_a);
    read(j.at("g"), "b", c.g_b);
  }
  read(j, "h", c.h);
  read(j, "seed", c.seed);
  read(j, "trials", c.trials);
  read(j, "output_dir", c.output_dir);
  if (j.contains("q")) {
    c.orlicz.q.clear();
    for (const auto& v : j.at("q")) c.orlicz.q.push_back(parse_q(v));
  }
  if (j.contains("conditions")) {
    const json& s = j.at("conditions");
    read_range(s, "s_grid", c.conditions.s_grid);
    read_range(s, "h_grid", c.conditions.h_grid);
    read(s, "tol", c.conditions.tol);
  }
  if (j.contains("convergence")) {
    const json& s = j.at("convergence");
    read(s, "h", c.convergence.h);
    read(s, "seeds", c.convergence.seeds);
    read(s, "fit_levels", c.convergence.fit_levels);
    read(s, "pathwise_delta", c.convergence.pathwise_delta);
    read(s, "pathwise_k", c.convergence.pathwise_k);
    read(s, "pathwise_r", c.convergence.pathwise_r);
  }
  if (j.contains("expansion")) {
    const json& s = j.at("expansion");
    read(s, "f", c.expansion.f);
    read(s, "order", c.expansion.order);
    read(s, "J", c.expansion.J);
    read(s, "quadrature_points", c.expansion.quadrature_points);
    read(s, "trials", c.expansion.trials);
    read(s, "h", c.expansion.h);
  }
  if (j.contains("orlicz")) {
    const json& s = j.at("orlicz");
    read(s, "gaussian_samples", c.orlicz.gaussian_samples);
    read(s, "young_max", c.orlicz.young_max);
    read(s, "young_count", c.orlicz.young_count);
  }
  if (j.contains("entropy")) {
    const json& s = j.at("entropy");
    read(s, "h0", c.entropy.h0);
    read(s, "h_min", c.entropy.h_min);
    read(s, "count", c.entropy.count);
    read_range(s, "v_grid", c.entropy.v_grid);
    read(s, "halving_study", c.entropy.halving_study);
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string to_json(const ExperimentConfig& c) {
  json q = json::array();
  for (double v : c.orlicz.q) {
    if (std::isinf(v)) q.push_back("inf");
    else q.push_back(v);
  }
  json j = {
      {"model", {{"kind", c.model.kind}, {"r", c.model.r}, {"M", c.model.M}}},
      {"k", c.k},
      {"grid", {{"delta", c.delta}, {"n", c.n}}},
      {"g", {{"a", c.g_a}, {"b", c.g_b}}},
      {"h", c.h},
      {"seed", c.seed},
      {"trials", c.trials},
      {"output_dir", c.output_dir},
      {"q", q},
      {"conditions",
       {{"s_grid", range_json(c.conditions.s_grid)},
        {"h_grid", range_json(c.conditions.h_grid)},
        {"tol", c.conditions.tol}}},
      {"convergence",
       {{"h", c.convergence.h},
        {"seeds", c.convergence.seeds},
        {"fit_levels", c.convergence.fit_levels},
        {"pathwise_delta", c.convergence.pathwise_delta},
        {"pathwise_k", c.convergence.pathwise_k},
        {"pathwise_r", c.convergence.pathwise_r}}},
      {"expansion",
       {{"f", c.expansion.f},
        {"order", c.expansion.order},
        {"J", c.expansion.J},
        {"quadrature_points", c.expansion.quadrature_points},
        {"trials", c.expansion.trials},
        {"h", c.expansion.h}}},
      {"orlicz",
       {{"gaussian_samples", c.orlicz.gaussian_samples},
        {"young_max", c.orlicz.young_max},
        {"young_count", c.orlicz.young_count}}},
      {"entropy",
       {{"h0", c.entropy.h0},
        {"h_min", c.entropy.h_min},
        {"count", c.entropy.count},
        {"v_grid", range_json(c.entropy.v_grid)},
        {"halving_study", c.entropy.halving_study}}},
  };
  return j.dump(2);
}

}  // namespace wickchaos
