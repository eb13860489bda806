#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdlib>
#include <optional>

#include "chebwidom/errors.hpp"
#include "io.hpp"

namespace chebwidom::cli {

namespace {

constexpr double kBoundTol = 1e-8;

const char* kCsvHelp = R"(
CSV columns for verify and sweep:
  set_id              index of the set (0 for verify, corpus index for sweep)
  n                   degree
  log_norm            log ||T_n||
  widom_factor        ||T_n|| / C(e)^n
  envelope_capacity   C(e_n) = (||T_n|| / 2)^(1/n)
  q_n                 n (C(e_n) / C(e) - 1)
  gap_masses          rho_n(K_j) for each gap of e, ';'-separated
  schiefermayr_slack  W_n - 2
  totik_widom_slack   2 exp(PW) - W_n
  chain_slack         min of the two steps in log(C(e_n)/C(e)) <= sum rho_n(K_j) G(w_j) <= PW/n
  refined_slack       2 exp(PW/2 + S_n/2) - W_n, S_n over gaps holding a zero
Failed entries print nan. Set JSON: {"bands": [[a, b], ...]}.
Env CHEBWIDOM_LOG=trace|debug|info|warn|error|off sets diagnostics on stderr.)";

struct RunConfig {
  std::string set;
  std::string params;
  int n = 0;
  int n_max = 0;
  double tol = 1e-12;
  int quad_order = 2048;
  std::string format = "json";
  std::string out;
  int jobs = 0;
  std::uint64_t seed = 1;
  int count = 20;
};

std::shared_ptr<spdlog::logger> logger() {
  if (auto lg = spdlog::get("chebwidom")) return lg;
  auto lg = spdlog::stderr_color_mt("chebwidom");
  const char* env = std::getenv("CHEBWIDOM_LOG");
  lg->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
  return lg;
}

PotentialOptions potential_options(const RunConfig& c) {
  PotentialOptions o;
  o.quad_order = c.quad_order;
  o.max_quad_order = std::max(o.max_quad_order, c.quad_order);
  return o;
}

void check_config(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (c.quad_order < 256 || (c.quad_order & (c.quad_order - 1)) != 0)
    throw ConfigError("--quad-order must be a power of two >= 256");
  if (c.format != "json" && c.format != "csv") throw ConfigError("--format is json or csv");
  if (c.jobs < 0) throw ConfigError("--jobs must be >= 0");
}

void require_n(int n, const char* flag) {
  if (n < 1) throw ConfigError(fmt::format("{} must be >= 1", flag));
}

IntervalSet load_set(const RunConfig& c) {
  if (c.set.empty()) throw ConfigError("--set is required");
  return parse_set(read_source(c.set));
}

void emit(const RunConfig& c, const std::string& content, std::ostream& out) {
  if (c.out.empty()) {
    out << content;
  } else {
    atomic_write(c.out, content);
    logger()->info("wrote {}", c.out);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_cheb(const RunConfig& c, std::ostream& out) {
  require_n(c.n, "--n");
  ChebyshevSolver solver(load_set(c), potential_options(c));
  const ChebyshevResult r = solver.solve(c.n, c.tol);
  logger()->debug("T_{} converged in {} iterations, residual {:.3e}", r.n, r.iterations,
                  r.residual);
  if (c.format == "json") {
    json j = to_json(r);
    j["set"] = set_to_json(r.set);
    emit(c, dump(j), out);
    return 0;
  }
  std::string s = "x,t_n\n";
  const int per_band = 32 * c.n + 1;
  for (const Band& b : r.set.bands())
    for (int i = 0; i < per_band; ++i) {
      const double x = b.lo + b.length() * i / (per_band - 1);
      s += fmt17(x) + "," + fmt17(r.log_value(x).value()) + "\n";
    }
  emit(c, s, out);
  return 0;
}

int cmd_potential(const RunConfig& c, std::ostream& out) {
  const EquilibriumData eq(load_set(c), potential_options(c));
  if (c.format == "json") {
    json j = to_json(eq);
    j["set"] = set_to_json(eq.set());
    emit(c, dump(j), out);
    return 0;
  }
  std::string s = "x,density\n";
  constexpr int kPoints = 256;
  for (const Band& b : eq.set().bands())
    for (int i = 0; i < kPoints; ++i) {
      const double x = b.mid() - b.half() * std::cos(M_PI * (i + 0.5) / kPoints);
      s += fmt17(x) + "," + fmt17(eq.density(x)) + "\n";
    }
  emit(c, s, out);
  return 0;
}

int cmd_bands(const RunConfig& c, std::ostream& out) {
  require_n(c.n, "--n");
  ChebyshevSolver solver(load_set(c), potential_options(c));
  const DiscriminantFrame frame(solver.solve(c.n, c.tol));
  if (c.format == "json") {
    json j = to_json(frame);
    j["set"] = set_to_json(frame.source().set);
    emit(c, dump(j), out);
    return 0;
  }
  const BandMasses m = frame.band_masses();
  std::string s = "band,lo,hi,mass\n";
  for (int k = 0; k < frame.n(); ++k)
    s += fmt::format("{},{},{},{}\n", k, fmt17(frame.edges()[2 * k]),
                     fmt17(frame.edges()[2 * k + 1]), fmt17(m.band[k]));
  emit(c, s, out);
  return 0;
}

int cmd_jacobi(const RunConfig& c, std::ostream& out) {
  if (c.params.empty()) throw ConfigError("--params is required");
  const JacobiParams p = parse_params(read_source(c.params));
  const IdentityReport rep = chebyshev_identity_check(p, kBoundTol);
  const int status = rep.pass ? 0 : 2;
  if (!rep.pass) logger()->warn("Jacobi identity residuals exceed tolerance");
  if (c.format == "json") {
    const Poly d = discriminant_poly(p);
    json j = params_to_json(p);
    j["spectrum"] = set_to_json(rep.spectrum);
    j["discriminant"] = {{"hull", {d.hull().lo, d.hull().hi}},
                         {"coefficients", d.scaled_coefficients()},
                         {"zeros", discriminant_zeros(p)}};
    j["identity"] = {{"coefficient_residual", rep.coefficient_residual},
                     {"capacity_residual", rep.capacity_residual},
                     {"edge_residual", rep.edge_residual},
                     {"pass", rep.pass}};
    emit(c, dump(j), out);
    return status;
  }
  std::string s = "band,lo,hi\n";
  for (std::size_t k = 0; k < rep.spectrum.size(); ++k)
    s += fmt::format("{},{},{}\n", k, fmt17(rep.spectrum.band(k).lo),
                     fmt17(rep.spectrum.band(k).hi));
  emit(c, s, out);
  return status;
}

struct SweepChecks {
  bool schiefermayr = true, totik_widom = true, chain = true, refined = true, forms = true;
  bool errors = false;

  void add(const WidomEntry& e) {
    if (!e.ok) {
      errors = true;
      return;
    }
    schiefermayr &= e.schiefermayr_slack >= -kBoundTol;
    totik_widom &= e.totik_widom_slack >= -kBoundTol;
    chain &= e.chain_slack >= -kBoundTol;
    refined &= e.refined_slack >= -kBoundTol;
    forms &= e.form_residual <= kBoundTol;
  }
  bool pass() const { return schiefermayr && totik_widom && chain && refined && forms; }
  json to_json() const {
    return {{"schiefermayr", schiefermayr}, {"totik_widom", totik_widom}, {"chain", chain},
            {"refined", refined},           {"bound_forms", forms},       {"pass", pass()},
            {"solver_errors", errors}};
  }
};

int run_sweep(const RunConfig& c, const std::vector<IntervalSet>& sets, std::ostream& out) {
  require_n(c.n_max, "--n-max");
  SweepChecks checks;
  std::string csv = widom_csv_header();
  json sets_json = json::array();
  for (std::size_t id = 0; id < sets.size(); ++id) {
    const WidomSeries s = widom_series(sets[id], c.n_max, potential_options(c), c.tol, c.jobs);
    json entries = json::array();
    for (const WidomEntry& e : s.entries) {
      checks.add(e);
      if (!e.ok) logger()->error("set {} n={}: {}", id, e.n, e.error);
      csv += widom_csv_row(static_cast<int>(id), e);
      entries.push_back(to_json(e));
    }
    sets_json.push_back({{"set_id", id},
                         {"set", set_to_json(s.set)},
                         {"capacity", s.capacity},
                         {"pw_sum", s.pw},
                         {"entries", entries}});
  }
  if (c.format == "csv") {
    emit(c, csv, out);
  } else {
    emit(c, dump({{"sets", sets_json}, {"checks", checks.to_json()}}), out);
  }
  if (!checks.pass()) return 2;
  return checks.errors ? 1 : 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) { return run_sweep(c, {load_set(c)}, out); }

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  if (!c.set.empty()) return run_sweep(c, {load_set(c)}, out);
  if (c.count < 1) throw ConfigError("--count must be >= 1");
  return run_sweep(c, random_corpus(static_cast<std::size_t>(c.count), c.seed), out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Chebyshev polynomials and potential theory on finite unions of intervals",
               "chebwidom"};
  app.footer(kCsvHelp);
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--set", c.set, "set JSON, inline or a file path");
    sub->add_option("--tol", c.tol, "Remez stopping tolerance")->capture_default_str();
    sub->add_option("--quad-order", c.quad_order, "initial quadrature order (power of two)")
        ->capture_default_str();
    sub->add_option("--format", c.format, "json or csv")->capture_default_str();
    sub->add_option("--out", c.out, "output path (stdout when omitted)");
  };
  auto* cheb = app.add_subcommand("cheb", "Chebyshev polynomial T_n of a set");
  auto* pot = app.add_subcommand("potential", "capacity, Robin constant, critical points");
  auto* bands = app.add_subcommand("bands", "envelope set e_n, band and gap masses");
  auto* jac = app.add_subcommand("jacobi", "spectrum of a periodic Jacobi matrix");
  auto* verify = app.add_subcommand("verify", "Widom-factor bounds for n = 1..n-max");
  auto* sweep = app.add_subcommand("sweep", "verify over a seeded random corpus");
  for (auto* s : {cheb, pot, bands, jac, verify, sweep}) common(s);
  for (auto* s : {cheb, bands}) s->add_option("--n", c.n, "degree");
  for (auto* s : {verify, sweep}) {
    s->add_option("--n-max", c.n_max, "largest degree");
    s->add_option("--jobs", c.jobs, "worker threads (0: OpenMP default)")->capture_default_str();
  }
  sweep->add_option("--seed", c.seed, "corpus seed")->capture_default_str();
  sweep->add_option("--count", c.count, "corpus size")->capture_default_str();
  jac->add_option("--params", c.params, R"(JSON {"p", "a", "b"}, inline or a file path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  try {
    check_config(c);
    if (cheb->parsed()) return cmd_cheb(c, out);
    if (pot->parsed()) return cmd_potential(c, out);
    if (bands->parsed()) return cmd_bands(c, out);
    if (jac->parsed()) return cmd_jacobi(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    return cmd_sweep(c, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace chebwidom::cli
