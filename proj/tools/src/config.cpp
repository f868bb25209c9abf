#include "casimir/cli/config.hpp"

#include <fstream>
#include <set>

#include "casimir/error.hpp"

namespace casimir::cli {

using nlohmann::json;

std::vector<double> GridConfig::values() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    // Endpoints are hit exactly.
    out[static_cast<std::size_t>(i)] =
        i == points - 1 ? y_max : y_min + (y_max - y_min) * static_cast<double>(i) / (points - 1);
  }
  return out;
}

namespace {

class Reader {
 public:
  Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  ~Reader() = default;

  void finish(std::initializer_list<const char*> allowed) const {
    std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto& [key, value] : node_.items()) {
      if (!known.contains(key)) throw ConfigError(field(key), "unknown key");
    }
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  bool has(const char* key) const { return node_.contains(key); }

  Reader child(const char* key) const { return Reader(node_.at(key), field(key)); }

  void number(const char* key, double& out) const {
    if (!has(key)) return;
    const json& v = node_.at(key);
    if (!v.is_number()) throw ConfigError(field(key), "expected a number");
    out = v.get<double>();
  }

  void integer(const char* key, int& out) const {
    if (!has(key)) return;
    const json& v = node_.at(key);
    if (!v.is_number_integer()) throw ConfigError(field(key), "expected an integer");
    out = v.get<int>();
  }

  void optional_number(const char* key, std::optional<double>& out) const {
    if (!has(key)) return;
    double v = 0.0;
    number(key, v);
    out = v;
  }

  std::string string(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_string()) throw ConfigError(field(key), "expected a string");
    return v.get<std::string>();
  }

  const json& raw(const char* key) const { return node_.at(key); }

 private:
  const json& node_;
  std::string path_;
};

template <typename Parse>
auto parse_enum(const Reader& r, const char* key, const std::string& fallback, Parse parse) {
  const std::string text = r.string(key, fallback);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw ConfigError(r.field(key), e.what());
  }
}

void read_model(const Reader& r, ModelParams& model) {
  r.number("m", model.m);
  r.number("M", model.M);
  r.number("k", model.k);
  r.number("hbar", model.hbar);
  if (r.has("coupling")) {
    const Reader c = r.child("coupling");
    CouplingSpec& spec = model.coupling;
    spec.family = parse_enum(c, "family", std::string(to_string(spec.family)), parse_coupling_family);
    c.number("g0", spec.g0);
    c.number("lambda", spec.lambda);
    c.integer("exponent", spec.exponent);
    if (c.has("domain")) {
      const json& d = c.raw("domain");
      if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number()) {
        throw ConfigError(c.field("domain"), "expected [y_min, y_max]");
      }
      spec.domain = {d[0].get<double>(), d[1].get<double>()};
    }
    c.finish({"family", "g0", "lambda", "exponent", "domain"});
  }
  r.finish({"m", "M", "k", "hbar", "coupling"});
}

void read_grid(const Reader& r, GridConfig& grid) {
  r.number("y_min", grid.y_min);
  r.number("y_max", grid.y_max);
  r.integer("points", grid.points);
  r.finish({"y_min", "y_max", "points"});
}

void read_oracle(const Reader& r, OracleConfig& oracle) {
  r.integer("n_max", oracle.n_max);
  r.number("convergence_tol", oracle.convergence_tol);
  r.optional_number("y", oracle.y);
  if (r.has("annihilation_orders")) {
    const json& a = r.raw("annihilation_orders");
    if (!a.is_array()) throw ConfigError(r.field("annihilation_orders"), "expected an array of integers");
    oracle.annihilation_orders.clear();
    for (const json& v : a) {
      if (!v.is_number_integer()) throw ConfigError(r.field("annihilation_orders"), "expected integers");
      oracle.annihilation_orders.push_back(v.get<int>());
    }
  }
  r.finish({"n_max", "convergence_tol", "y", "annihilation_orders"});
}

void read_dynamics(const Reader& r, DynamicsConfig& d) {
  r.number("y0", d.y0);
  r.number("v0", d.v0);
  r.number("dt", d.dt);
  r.number("t_max", d.t_max);
  d.force_route = parse_enum(r, "force_route", std::string(to_string(d.force_route)), parse_force_route);
  r.integer("oracle_n_max", d.oracle_n_max);
  r.number("oracle_budget_seconds", d.oracle_budget_seconds);
  r.finish({"y0", "v0", "dt", "t_max", "force_route", "oracle_n_max", "oracle_budget_seconds"});
}

Branch parse_branch(const std::string& name) {
  if (name == "plus") return Branch::Plus;
  if (name == "minus") return Branch::Minus;
  throw Error(ErrorCode::InvalidArgument, "branch must be 'plus' or 'minus'");
}

void read_vacuum(const Reader& r, VacuumContentConfig& v) {
  r.optional_number("pair_y", v.pair_y);
  r.integer("pair_n_max", v.pair_n_max);
  v.branch = parse_enum(r, "branch", "plus", parse_branch);
  r.finish({"pair_y", "pair_n_max", "branch"});
}

void read_classical(const Reader& r, ClassicalConfig& c) {
  r.number("x1", c.initial.x1);
  r.number("x2", c.initial.x2);
  r.number("y", c.initial.y);
  r.number("p1", c.initial.p1);
  r.number("p2", c.initial.p2);
  r.number("p_y", c.initial.p_y);
  r.number("dt", c.dt);
  r.number("t_max", c.t_max);
  int order = static_cast<int>(c.order);
  r.integer("order", order);
  try {
    c.order = integrator_order_from_int(order);
  } catch (const Error& e) {
    throw ConfigError(r.field("order"), e.what());
  }
  r.integer("record_every", c.record_every);
  r.finish({"x1", "x2", "y", "p1", "p2", "p_y", "dt", "t_max", "order", "record_every"});
}

void read_output(const Reader& r, OutputConfig& o) {
  o.directory = r.string("directory", o.directory.string());
  const std::string format = r.string("format", "csv");
  if (format == "csv") {
    o.format = OutputFormat::Csv;
  } else if (format == "json") {
    o.format = OutputFormat::Json;
  } else {
    throw ConfigError(r.field("format"), "expected 'csv' or 'json'");
  }
  r.integer("precision", o.precision);
  r.finish({"directory", "format", "precision"});
}

}  // namespace

RunConfig parse_run_config(const json& document) {
  RunConfig config;
  const Reader root(document, "");
  if (root.has("model")) read_model(root.child("model"), config.model);
  if (root.has("grid")) read_grid(root.child("grid"), config.grid);
  if (root.has("oracle")) read_oracle(root.child("oracle"), config.oracle);
  if (root.has("dynamics")) read_dynamics(root.child("dynamics"), config.dynamics);
  if (root.has("vacuum")) read_vacuum(root.child("vacuum"), config.vacuum);
  if (root.has("classical")) read_classical(root.child("classical"), config.classical);
  if (root.has("output")) read_output(root.child("output"), config.output);
  root.finish({"model", "grid", "oracle", "dynamics", "vacuum", "classical", "output"});
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", std::string("invalid JSON: ") + e.what());
  }
  return parse_run_config(document);
}

void check_run_config(const RunConfig& c) {
  const Domain& domain = c.model.coupling.domain;
  if (c.grid.points < 2) throw ConfigError("grid.points", "must be >= 2");
  if (!(c.grid.y_min < c.grid.y_max)) throw ConfigError("grid", "requires y_min < y_max");
  if (!domain.contains(c.grid.y_min) || !domain.contains(c.grid.y_max)) {
    throw ConfigError("grid", "must lie inside model.coupling.domain");
  }
  if (c.output.precision < 6 || c.output.precision > 17) {
    throw ConfigError("output.precision", "must be in [6, 17]");
  }
  if (c.oracle.n_max < 1) throw ConfigError("oracle.n_max", "must be >= 1");
  if (!(c.oracle.convergence_tol > 0.0)) throw ConfigError("oracle.convergence_tol", "must be positive");
  if (c.oracle.y && !domain.contains(*c.oracle.y)) throw ConfigError("oracle.y", "outside coupling domain");
  for (int order : c.oracle.annihilation_orders) {
    if (order < 0) throw ConfigError("oracle.annihilation_orders", "orders must be >= 0");
  }
  if (c.vacuum.pair_n_max < 0) throw ConfigError("vacuum.pair_n_max", "must be >= 0");
  if (c.vacuum.pair_y && !domain.contains(*c.vacuum.pair_y)) {
    throw ConfigError("vacuum.pair_y", "outside coupling domain");
  }
  if (!(c.dynamics.dt > 0.0)) throw ConfigError("dynamics.dt", "must be positive");
  if (!(c.dynamics.t_max > 0.0)) throw ConfigError("dynamics.t_max", "must be positive");
  if (c.dynamics.oracle_n_max < 1) throw ConfigError("dynamics.oracle_n_max", "must be >= 1");
  if (!(c.classical.dt > 0.0)) throw ConfigError("classical.dt", "must be positive");
  if (!(c.classical.t_max > 0.0)) throw ConfigError("classical.t_max", "must be positive");
  if (c.classical.record_every < 1) throw ConfigError("classical.record_every", "must be >= 1");
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  const CouplingSpec& s = c.model.coupling;
  j["model"] = {{"m", c.model.m},
                {"M", c.model.M},
                {"k", c.model.k},
                {"hbar", c.model.hbar},
                {"coupling",
                 {{"family", std::string(to_string(s.family))},
                  {"g0", s.g0},
                  {"lambda", s.lambda},
                  {"exponent", s.exponent},
                  {"domain", {s.domain.y_min, s.domain.y_max}}}}};
  j["grid"] = {{"y_min", c.grid.y_min}, {"y_max", c.grid.y_max}, {"points", c.grid.points}};
  j["oracle"] = {{"n_max", c.oracle.n_max},
                 {"convergence_tol", c.oracle.convergence_tol},
                 {"annihilation_orders", c.oracle.annihilation_orders}};
  if (c.oracle.y) j["oracle"]["y"] = *c.oracle.y;
  j["dynamics"] = {{"y0", c.dynamics.y0},
                   {"v0", c.dynamics.v0},
                   {"dt", c.dynamics.dt},
                   {"t_max", c.dynamics.t_max},
                   {"force_route", std::string(to_string(c.dynamics.force_route))},
                   {"oracle_n_max", c.dynamics.oracle_n_max},
                   {"oracle_budget_seconds", c.dynamics.oracle_budget_seconds}};
  j["vacuum"] = {{"pair_n_max", c.vacuum.pair_n_max},
                 {"branch", c.vacuum.branch == Branch::Plus ? "plus" : "minus"}};
  if (c.vacuum.pair_y) j["vacuum"]["pair_y"] = *c.vacuum.pair_y;
  const PhaseState& p = c.classical.initial;
  j["classical"] = {{"x1", p.x1}, {"x2", p.x2}, {"y", p.y}, {"p1", p.p1}, {"p2", p.p2}, {"p_y", p.p_y},
                    {"dt", c.classical.dt}, {"t_max", c.classical.t_max},
                    {"order", static_cast<int>(c.classical.order)},
                    {"record_every", c.classical.record_every}};
  j["output"] = {{"directory", c.output.directory.string()},
                 {"format", c.output.format == OutputFormat::Csv ? "csv" : "json"},
                 {"precision", c.output.precision}};
  return j;
}

}  // namespace casimir::cli
