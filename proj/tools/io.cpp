#include "io.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "chebwidom/errors.hpp"

namespace chebwidom::cli {

std::string read_source(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

IntervalSet set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bands") || !j["bands"].is_array())
    throw ConfigError(R"(set must look like {"bands": [[a, b], ...]})");
  std::vector<std::pair<double, double>> raw;
  for (const json& b : j["bands"]) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number())
      throw ConfigError("each band must be a pair of numbers");
    raw.emplace_back(b[0].get<double>(), b[1].get<double>());
  }
  try {
    return IntervalSet::validate(raw);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

IntervalSet parse_set(const std::string& text) { return set_from_json(parse_json(text)); }

json set_to_json(const IntervalSet& set) {
  json bands = json::array();
  for (const Band& b : set.bands()) bands.push_back({b.lo, b.hi});
  return {{"bands", bands}};
}

JacobiParams params_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw ConfigError(R"(params must look like {"p": 2, "a": [...], "b": [...]})");
  JacobiParams p;
  try {
    p.a = j["a"].get<std::vector<double>>();
    p.b = j["b"].get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad Jacobi parameters: ") + e.what());
  }
  if (j.contains("p") && (!j["p"].is_number_integer() || j["p"].get<int>() != p.period()))
    throw ConfigError("p does not match the parameter lengths");
  try {
    p.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return p;
}

JacobiParams parse_params(const std::string& text) { return params_from_json(parse_json(text)); }

json params_to_json(const JacobiParams& p) { return {{"p", p.period()}, {"a", p.a}, {"b", p.b}}; }

json to_json(const ChebyshevResult& r) {
  const Hull h = r.set.hull();
  return {{"n", r.n},
          {"norm", r.norm},
          {"log_norm", r.log_norm},
          {"hull", {h.lo, h.hi}},
          {"coefficients", r.poly.scaled_coefficients()},
          {"alternation", r.alternation},
          {"zeros", r.zeros},
          {"residual", r.residual},
          {"iterations", r.iterations}};
}

json to_json(const EquilibriumData& eq) {
  const auto span_vec = [](auto s) { return std::vector<double>(s.begin(), s.end()); };
  return {{"capacity", eq.capacity()},
          {"robin", eq.robin()},
          {"pw_sum", eq.pw_sum()},
          {"critical_points", span_vec(eq.critical_points())},
          {"critical_values", span_vec(eq.critical_values())},
          {"band_measures", span_vec(eq.band_measures())}};
}

json to_json(const DiscriminantFrame& f) {
  const BandMasses m = f.band_masses();
  json gaps = json::array();
  for (const Gap& g : f.source().set.gaps()) {
    const GapMass gm = f.gap_mass(g);
    json z = gm.zero ? json(*gm.zero) : json(nullptr);
    gaps.push_back({{"gap", {g.left, g.right}},
                    {"mass", gm.mass},
                    {"width", gm.width},
                    {"has_zero", gm.has_zero},
                    {"zero", z},
                    {"single_interval", gm.single_interval}});
  }
  return {{"n", f.n()},
          {"edges", f.edges()},
          {"bands", set_to_json(f.bands())["bands"]},
          {"zeros", f.zeros()},
          {"band_masses", m.band},
          {"gap_masses", gaps},
          {"envelope_capacity", f.envelope_capacity()}};
}

json to_json(const WidomEntry& e) {
  if (!e.ok) return {{"n", e.n}, {"error", e.error}};
  return {{"n", e.n},
          {"log_norm", e.log_norm},
          {"widom_factor", e.widom_factor},
          {"envelope_capacity", e.envelope_capacity},
          {"q_n", e.implied_q},
          {"gap_masses", e.gap_masses},
          {"schiefermayr_slack", e.schiefermayr_slack},
          {"totik_widom_slack", e.totik_widom_slack},
          {"chain_slack", e.chain_slack},
          {"refined_slack", e.refined_slack}};
}

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

std::string widom_csv_header() {
  return "set_id,n,log_norm,widom_factor,envelope_capacity,q_n,gap_masses,"
         "schiefermayr_slack,totik_widom_slack,chain_slack,refined_slack\n";
}

std::string widom_csv_row(int set_id, const WidomEntry& e) {
  if (!e.ok) return fmt::format("{},{},nan,nan,nan,nan,,nan,nan,nan,nan\n", set_id, e.n);
  std::string gm;
  for (std::size_t j = 0; j < e.gap_masses.size(); ++j) {
    if (j) gm += ';';
    gm += fmt17(e.gap_masses[j]);
  }
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", set_id, e.n, fmt17(e.log_norm),
                     fmt17(e.widom_factor), fmt17(e.envelope_capacity), fmt17(e.implied_q), gm,
                     fmt17(e.schiefermayr_slack), fmt17(e.totik_widom_slack),
                     fmt17(e.chain_slack), fmt17(e.refined_slack));
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += fmt::format(".tmp.{}", ::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw ConfigError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ConfigError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace chebwidom::cli
