#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freeprob/brownian.hpp"
#include "freeprob/error.hpp"
#include "freeprob/jacobi.hpp"
#include "freeprob/ncpart.hpp"
#include "freeprob/schur.hpp"
#include "freeprob/verify.hpp"

using json = nlohmann::ordered_json;
using namespace freeprob;

namespace {

struct RunConfig {
  int order = 6;
  int depth = 2;
  std::vector<std::string> t_values;
  int precision = 128;
  std::string format = "pretty";
  std::string variant;
  Rat time_scale = Rat(1);
};

struct Erratum {
  std::string id;
  std::string detail;
};

int decimal_digits(int precision_bits) {
  const int digits = static_cast<int>(precision_bits * 0.30103) - 2;
  return digits < 6 ? 6 : digits;
}

std::vector<Rat> parse_t_values(const RunConfig& cfg) {
  std::vector<Rat> ts;
  for (const std::string& s : cfg.t_values) {
    const Rat v = parse_rat(s);
    if (sgn(v) <= 0) throw DomainError("t values must be positive rationals");
    ts.push_back(v);
  }
  return ts;
}

std::string t_label(const Rat& t) { return "t=" + rat_str(t); }

json table_to_json(const CoeffTable& table, const std::vector<Rat>& ts,
                   const RunConfig& cfg, const std::vector<Erratum>& errata) {
  json entries = json::array();
  const int digits = decimal_digits(cfg.precision);
  for (int n = table.first_index; n <= table.last_index(); ++n) {
    json numeric = json::object();
    for (const Rat& t : ts)
      numeric[t_label(t)] = table.at_index(n).eval(t, cfg.precision).dec(digits);
    entries.push_back(json{{"n", n},
                           {"symbolic", table.at_index(n).str()},
                           {"numeric", numeric}});
  }
  json errs = json::array();
  for (const auto& e : errata) errs.push_back(json{{"id", e.id}, {"detail", e.detail}});
  return json{{"table", table.label},
              {"order", table.last_index()},
              {"entries", entries},
              {"provenance", table.route},
              {"errata", errs}};
}

void print_table_pretty(std::ostream& out, const CoeffTable& table,
                        const std::vector<Rat>& ts, const RunConfig& cfg,
                        const std::vector<Erratum>& errata) {
  out << "table " << table.label << " (" << table.route << ")\n";
  const int digits = decimal_digits(cfg.precision);
  for (int n = table.first_index; n <= table.last_index(); ++n) {
    out << "  " << table.label << "_" << n << " = " << table.at_index(n).str();
    for (const Rat& t : ts)
      out << "\n      [" << t_label(t)
          << "] " << table.at_index(n).eval(t, cfg.precision).dec(digits);
    out << "\n";
  }
  for (const auto& e : errata)
    out << "  erratum [" << e.id << "]: " << e.detail << "\n";
}

void print_table_csv(std::ostream& out, const CoeffTable& table,
                     const std::vector<Rat>& ts, const RunConfig& cfg,
                     const std::vector<Erratum>& errata) {
  out << "# table: " << table.label << ", provenance: " << table.route << "\n";
  for (const auto& e : errata) out << "# erratum " << e.id << ": " << e.detail << "\n";
  out << "n,symbolic";
  for (const Rat& t : ts) out << "," << t_label(t);
  out << "\n";
  const int digits = decimal_digits(cfg.precision);
  for (int n = table.first_index; n <= table.last_index(); ++n) {
    out << n << ",\"" << table.at_index(n).str() << "\"";
    for (const Rat& t : ts)
      out << "," << table.at_index(n).eval(t, cfg.precision).dec(digits);
    out << "\n";
  }
}

struct Emitter {
  RunConfig cfg;
  std::vector<Rat> ts;
  json blobs = json::array();

  void add(const CoeffTable& table, const std::vector<Erratum>& errata = {}) {
    if (cfg.format == "json") {
      blobs.push_back(table_to_json(table, ts, cfg, errata));
    } else if (cfg.format == "csv") {
      print_table_csv(std::cout, table, ts, cfg, errata);
      std::cout << "\n";
    } else {
      print_table_pretty(std::cout, table, ts, cfg, errata);
    }
  }

  void flush() {
    if (cfg.format != "json") return;
    if (blobs.size() == 1)
      std::cout << blobs[0].dump(2) << "\n";
    else
      std::cout << blobs.dump(2) << "\n";
  }
};

int env_max_order(int fallback) {
  if (const char* env = std::getenv("FREEPROB_MAX_ORDER")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return fallback;
}

void check_order(int order, int cap, const std::string& what) {
  const int limit = env_max_order(cap);
  if (order < 1 || order > limit)
    throw DomainError(what + " order must lie in [1, " + std::to_string(limit) +
                      "] (override with FREEPROB_MAX_ORDER)");
}

CoeffTable series_to_table(const Series& s, const std::string& label,
                           int first_index, const std::string& route) {
  CoeffTable t;
  t.label = label;
  t.first_index = first_index;
  t.route = route;
  for (int k = first_index; k <= s.order(); ++k) t.entries.push_back(s[k]);
  return t;
}

int run_moments(const RunConfig& cfg) {
  check_order(cfg.order, 24, "moments");
  Emitter em{cfg, parse_t_values(cfg)};
  CoeffTable m;
  m.label = "moment";
  m.route = "closed-form";
  for (int k = 1; k <= cfg.order; ++k) m.entries.push_back(fubm_moment(k, cfg.time_scale));
  em.add(m);
  em.flush();
  return 0;
}

int run_free_cumulants(const RunConfig& cfg) {
  check_order(cfg.order, 24, "free-cumulants");
  Emitter em{cfg, parse_t_values(cfg)};
  CoeffTable k;
  k.label = "kappa";
  k.route = "closed-form";
  for (int n = 1; n <= cfg.order; ++n)
    k.entries.push_back(fubm_free_cumulant(static_cast<unsigned>(n)));
  em.add(k);
  em.flush();
  return 0;
}

int run_star_cumulants(const RunConfig& cfg) {
  check_order(cfg.order, 10, "star-cumulants");
  Emitter em{cfg, parse_t_values(cfg)};
  em.add(g_table(cfg.order));
  em.add(h_table(std::min(cfg.order, 5)));
  std::vector<Erratum> errata;
  const auto rep = p_integral_representation(2, 1);
  if (!rep.match)
    errata.push_back({"p-integral-representation", rep.note});
  em.add(a_table_closed(cfg.order), errata);
  em.flush();
  return 0;
}

int run_jacobi_r(const RunConfig& cfg) {
  check_order(cfg.order, 8, "jacobi-r");
  Emitter em{cfg, parse_t_values(cfg)};
  const CoeffTable oracle = b_table_oracle(cfg.order);
  const BVariant variant =
      cfg.variant == "as-printed" ? BVariant::AsPrinted : BVariant::Corrected;
  const CoeffTable closed = b_table_closed(cfg.order, variant);
  std::vector<Erratum> errata;
  for (int n = 1; n <= cfg.order; ++n)
    if (!(closed.at_index(n) == oracle.at_index(n)))
      errata.push_back(
          {"b-closed-form-divergence",
           "closed form differs from the reversion oracle at n = " + std::to_string(n) +
               " by " + (closed.at_index(n) - oracle.at_index(n)).str() +
               "; the Pochhammer base (-1-n)/2 restores agreement"});
  const auto rep = q_integral_representation(2, 1);
  if (!rep.match)
    errata.push_back({"q-integral-representation", rep.note});
  em.add(oracle);
  em.add(closed, errata);
  em.flush();
  return 0;
}

int run_jacobi_s(const RunConfig& cfg) {
  check_order(cfg.order, 8, "jacobi-s");
  Emitter em{cfg, parse_t_values(cfg)};
  const CoeffTable oracle = c_table_oracle(cfg.order);
  CVariant variant = CVariant::Corrected;
  if (cfg.variant == "as-printed") variant = CVariant::AsPrinted;
  if (cfg.variant == "cauchy") variant = CVariant::Cauchy;
  const CoeffTable closed = c_table_closed(cfg.order, variant);
  std::vector<Erratum> errata;
  for (int n = 1; n <= cfg.order; ++n)
    if (!(closed.at_index(n) == oracle.at_index(n)))
      errata.push_back(
          {"c-closed-form-divergence",
           "closed form differs from the reversion oracle at n = " + std::to_string(n) +
               " by " + (closed.at_index(n) - oracle.at_index(n)).str() +
               "; the Cauchy pairing with sign-corrected d and H coefficients "
               "restores agreement"});
  em.add(oracle);
  em.add(closed, errata);
  em.add(s_transform(cfg.order));
  em.flush();
  return 0;
}

int run_schur(const RunConfig& cfg) {
  const int depth_cap = env_max_order(4);
  if (cfg.depth < 0 || cfg.depth > depth_cap)
    throw DomainError("schur depth must lie in [0, " + std::to_string(depth_cap) +
                      "] (override with FREEPROB_MAX_ORDER)");
  const int order = std::max(cfg.order, cfg.depth + 2);
  check_order(order, 10, "schur");
  Emitter em{cfg, parse_t_values(cfg)};
  const Series f0 = f0_closed(order);
  em.add(series_to_table(f0, "f0", 0, "closed-form"));

  const Series f1 = f1_closed(order - 1, F1Prefactor::PropositionForm);
  const Series f1_oracle = f1_schur_step(order - 1);
  std::vector<Erratum> errata;
  if (f1 == f1_oracle)
    errata.push_back({"f1-prefactor",
                      "prefactor adjudicated to t e^{-t}(1-e^{t}); the variant "
                      "t e^{-t}(1-e^{-t}) diverges already at z^0"});
  else
    errata.push_back({"f1-divergence",
                      "closed form differs from the Schur-step oracle at z^0 by " +
                          (f1[0] - f1_oracle[0]).str()});
  em.add(series_to_table(f1, "f1", 0, "closed-form"), errata);

  CoeffTable gamma;
  gamma.label = "gamma";
  gamma.first_index = 0;
  gamma.route = "oracle";
  gamma.entries = schur_algorithm(f0, cfg.depth);
  em.add(gamma);
  em.flush();
  return 0;
}

int run_verify(const RunConfig& cfg) {
  if (cfg.format == "json") {
    const SuiteOutcome outcome = run_verification(nullptr);
    json checks = json::array();
    for (const auto& [id, res] : outcome.results) {
      const char* tag = res.status == CheckStatus::Pass     ? "pass"
                        : res.status == CheckStatus::Finding ? "finding"
                                                             : "fail";
      checks.push_back(json{{"id", id}, {"status", tag}, {"detail", res.detail}});
    }
    json report{{"passed", outcome.passed},
                {"failed", outcome.failed},
                {"findings", outcome.findings},
                {"seconds", outcome.seconds},
                {"checks", checks}};
    std::cout << report.dump(2) << "\n";
    return outcome.ok() ? 0 : 1;
  }
  const SuiteOutcome outcome = run_verification(&std::cout);
  std::cout << outcome.passed << " passed, " << outcome.failed << " failed, "
            << outcome.findings << " findings in " << outcome.seconds << " s\n";
  return outcome.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "freeprob: exact tables and cross-verified identities for the free "
      "unitary Brownian motion, the free Jacobi process and their Schur "
      "parameters.  Symbolic values are rational functions in t and Q, where "
      "Q stands for exp(-t/2)."};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string time_scale_text = "1";

  auto add_common = [&](CLI::App* sub, bool with_order = true) {
    if (with_order) sub->add_option("--order", cfg.order, "Truncation order");
    sub->add_option("--t", cfg.t_values,
                    "Evaluation point t > 0 (rational; repeatable)");
    sub->add_option("--precision", cfg.precision, "Working precision in bits (>= 53)")
        ->check(CLI::Range(53, 4096));
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
  };

  CLI::App* moments = app.add_subcommand("moments", "Spectral moments phi(u_t^k)");
  add_common(moments);
  moments->add_option("--time-scale", time_scale_text,
                      "Rational time rescale c for u_{ct}");

  CLI::App* freec = app.add_subcommand("free-cumulants",
                                       "Closed-form free cumulants of u_t");
  add_common(freec);

  CLI::App* star = app.add_subcommand(
      "star-cumulants", "Alternating star cumulant tables g, h and the "
                        "inverse-characteristic coefficients a");
  add_common(star);

  CLI::App* jr = app.add_subcommand(
      "jacobi-r", "Reciprocal R-transform coefficients b of the free Jacobi "
                  "process: reversion oracle plus a closed-form variant");
  add_common(jr);
  jr->add_option("--variant", cfg.variant, "Closed-form variant")
      ->check(CLI::IsMember({"as-printed", "corrected"}));

  CLI::App* js = app.add_subcommand(
      "jacobi-s", "Inverse-moment coefficients c and the S-transform");
  add_common(js);
  js->add_option("--variant", cfg.variant, "Closed-form variant")
      ->check(CLI::IsMember({"as-printed", "cauchy", "corrected"}));

  CLI::App* schur_cmd = app.add_subcommand(
      "schur", "Schur function, its first iterate and Verblunsky coefficients");
  add_common(schur_cmd);
  schur_cmd->add_option("--depth", cfg.depth, "Schur recursion depth (gamma_0..gamma_depth)");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the full identity suite (orders pinned per check)");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    cfg.time_scale = parse_rat(time_scale_text);
    if (sgn(cfg.time_scale) <= 0)
      throw DomainError("time scale must be positive");
    if (moments->parsed()) return run_moments(cfg);
    if (freec->parsed()) return run_free_cumulants(cfg);
    if (star->parsed()) return run_star_cumulants(cfg);
    if (jr->parsed()) return run_jacobi_r(cfg);
    if (js->parsed()) return run_jacobi_s(cfg);
    if (schur_cmd->parsed()) return run_schur(cfg);
    if (verify_cmd->parsed()) return run_verify(cfg);
  } catch (const DomainError& e) {
    if (cfg.format == "json")
      std::cout << json{{"error", {{"message", e.what()}, {"code", 2}}}}.dump(2)
                << "\n";
    else
      std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (cfg.format == "json")
      std::cout << json{{"error", {{"message", e.what()}, {"code", 1}}}}.dump(2)
                << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
