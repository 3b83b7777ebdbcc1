#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "ctoda/combinatorics.hpp"
#include "ctoda/eg.hpp"
#include "ctoda/equilibrium.hpp"
#include "ctoda/errors.hpp"
#include "ctoda/oracle.hpp"
#include "ctoda/reconstruct.hpp"
#include "ctoda/toda.hpp"
#include "ctoda/two_time.hpp"

namespace ctoda::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  int nu = 2;
  int nu2 = 3;
  int genus = 0;
  int max_order = 8;
  int legs = 0;
  int vertices = 1;
  std::string target = "z";
  std::string format = "table";
  unsigned threads = 1;
  bool force = false;
  std::string out_path;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One command's result in both machine and human shape.
struct Report {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  int exit_code = kOk;
};

std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << r.json.dump(2) << "\n";
  } else if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
  } else {
    std::vector<size_t> width(r.header.size());
    for (size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
    for (const auto& row : r.rows)
      for (size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (size_t i = 0; i < cells.size(); ++i) {
        text += cells[i];
        if (i + 1 < cells.size()) text += std::string(width[i] - cells[i].size() + 2, ' ');
      }
      text.erase(text.find_last_not_of(' ') + 1);
      os << text << "\n";
    };
    for (const auto& n : r.notes) os << n << "\n";
    if (!r.header.empty()) {
      line(r.header);
      for (const auto& row : r.rows) line(row);
    }
  }
  return os.str();
}

Json coefficients_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  return a;
}

Json rational_function_json(const RationalFunction& f) {
  return Json{{"numerator", coefficients_json(f.numerator())}, {"denominator", coefficients_json(f.denominator())}};
}

Json series_json(const Series& s) {
  Json a = Json::array();
  for (const auto& c : s.coefficients()) a.push_back(c.str());
  return a;
}

Json header_json(const RunConfig& c) { return Json{{"schema", 1}, {"command", c.command}}; }

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

oracle::CensusOptions census_options(const RunConfig& c) {
  oracle::CensusOptions o;
  o.threads = c.threads;
  o.force = c.force;
  return o;
}

EgOptions eg_options(const RunConfig& c) {
  EgOptions o;
  o.census = census_options(c);
  return o;
}

std::string resonance_source(const Resonance& r, int n) {
  for (const auto& v : r.values)
    if (v.n == n) return to_string(v.source);
  return "recursion";
}

Json resonances_json(const Resonance& r) {
  Json a = Json::array();
  for (const auto& v : r.values) a.push_back(Json{{"n", v.n}, {"value", v.count.get_str()}, {"source", to_string(v.source)}});
  return a;
}

Report cmd_kappa(const RunConfig& c) {
  require(c.nu >= 2, "--nu must be at least 2");
  require(c.genus >= 0, "--genus must be nonnegative");
  require(c.max_order >= 1, "--max-order must be at least 1");
  const auto hier = HierarchyState::solve(c.nu, c.max_order, c.genus);
  const auto eg = EgState::solve(hier, c.genus, eg_options(c));
  Report r;
  r.json = header_json(c);
  r.json["nu"] = c.nu;
  r.json["genus"] = c.genus;
  Json values = Json::array();
  r.header = {"n", "kappa", "source"};
  for (int n = 1; n <= c.max_order; ++n) {
    const std::string k = eg.kappa(c.genus, n).get_str();
    values.push_back(Json{{"n", n}, {"kappa", k}});
    r.rows.push_back({std::to_string(n), k, resonance_source(eg.resonance(c.genus), n)});
  }
  r.json["values"] = values;
  r.json["resonances"] = resonances_json(eg.resonance(c.genus));
  return r;
}

Report cmd_zg(const RunConfig& c) {
  require(c.nu >= 2, "--nu must be at least 2");
  require(c.genus >= 0, "--genus must be nonnegative");
  require(c.max_order >= 1, "--max-order must be at least 1");
  const auto hier = HierarchyState::solve(c.nu, c.max_order, c.genus);
  const Series& z = hier.z(c.genus);
  Report r;
  r.json = header_json(c);
  r.json["nu"] = c.nu;
  r.json["genus"] = c.genus;
  r.json["coefficients"] = series_json(z);
  Json counts = Json::array();
  r.header = {"n", "coefficient", "two_leg_count"};
  for (int n = 0; n <= c.max_order; ++n) {
    const Rational count = z[n] * Rational(factorial(n));
    counts.push_back(count.str());
    r.rows.push_back({std::to_string(n), z[n].str(), count.str()});
  }
  r.json["two_leg_counts"] = counts;
  return r;
}

Report cmd_eg(const RunConfig& c) {
  require(c.nu >= 2, "--nu must be at least 2");
  require(c.genus >= 0, "--genus must be nonnegative");
  require(c.max_order >= 1, "--max-order must be at least 1");
  const auto hier = HierarchyState::solve(c.nu, c.max_order, c.genus);
  const auto eg = EgState::solve(hier, c.genus, eg_options(c));
  const Series& e = eg.e_hat(c.genus);
  Report r;
  r.json = header_json(c);
  r.json["nu"] = c.nu;
  r.json["genus"] = c.genus;
  r.json["coefficients"] = series_json(e);
  r.json["resonances"] = resonances_json(eg.resonance(c.genus));
  r.header = {"n", "coefficient", "kappa", "source"};
  for (int n = 0; n <= c.max_order; ++n)
    r.rows.push_back({std::to_string(n), e[n].str(), eg.kappa(c.genus, n).get_str(), resonance_source(eg.resonance(c.genus), n)});
  r.notes.push_back("coefficients of e_g(-s); kappa = n! * coefficient");
  return r;
}

// Order that leaves a four-coefficient tail beyond the ansatz.
int reconstruction_order(int nu, int genus, bool for_e) {
  if (for_e) return std::max(0, 5 * (genus - 1)) + nu + 1 + 4 + 2;
  return 5 * genus - 1 + nu + 4;
}

Report cmd_closed_form(const RunConfig& c) {
  require(c.nu >= 2, "--nu must be at least 2");
  require(c.target == "z" || c.target == "e", "--target must be z or e");
  require(c.genus >= (c.target == "z" ? 1 : 0), "--genus must be at least 1 for z and 0 for e");
  const bool for_e = c.target == "e";
  const int order = std::max(c.max_order, reconstruction_order(c.nu, c.genus, for_e));
  const auto hier = HierarchyState::solve(c.nu, order, c.genus);
  Report r;
  r.json = header_json(c);
  r.json["target"] = c.target;
  r.json["nu"] = c.nu;
  r.json["genus"] = c.genus;
  r.header = {"part", "value"};
  if (for_e) {
    const auto eg = EgState::solve(hier, c.genus, eg_options(c));
    const auto fit = reconstruct_eg(c.nu, c.genus, eg.e_hat(c.genus));
    r.json["fit"] = fit.ok ? "ok" : "failed";
    if (!fit.ok) {
      r.json["diagnostic"] = fit.diagnostic;
      r.json["series"] = series_json(eg.e_hat(c.genus));
      r.notes.push_back("no closed form found: " + fit.diagnostic);
      return r;
    }
    r.json["rational_function"] = rational_function_json(fit.form.rational);
    r.json["c_log_nu_term"] = fit.form.log_pole.str();
    r.json["d_log_z_term"] = fit.form.log_z.str();
    r.notes.push_back("e_g(-s) = N(z)/D(z) + c log(nu - (nu-1) z) + d log(z), z = z_0(s)");
    r.rows = {{"numerator", fit.form.rational.numerator().str()},
              {"denominator", fit.form.rational.denominator().str()},
              {"c", fit.form.log_pole.str()},
              {"d", fit.form.log_z.str()}};
  } else {
    const auto fit = reconstruct_zg(c.nu, c.genus, hier.z(c.genus));
    r.json["fit"] = fit.ok ? "ok" : "failed";
    if (!fit.ok) {
      r.json["diagnostic"] = fit.diagnostic;
      r.json["series"] = series_json(hier.z(c.genus));
      r.notes.push_back("no closed form found: " + fit.diagnostic);
      return r;
    }
    r.json["rational_function"] = rational_function_json(fit.form);
    r.notes.push_back("z_g = N(z)/D(z), z = z_0(s)");
    r.rows = {{"numerator", fit.form.numerator().str()}, {"denominator", fit.form.denominator().str()}};
  }
  return r;
}

Json census_json(const oracle::MapCensus& m) {
  Json by_genus = Json::object();
  for (const auto& [g, n] : m.by_genus) by_genus[std::to_string(g)] = std::to_string(n);
  return Json{{"schema", 1},
              {"nu", m.task.nu},
              {"vertices", m.task.vertices},
              {"legs", m.task.legs},
              {"total", std::to_string(m.total)},
              {"disconnected", std::to_string(m.disconnected)},
              {"by_genus", by_genus}};
}

Report cmd_oracle(const RunConfig& c) {
  require(c.nu >= 1, "--nu must be positive");
  require(c.vertices >= 1, "--vertices must be at least 1");
  require(c.legs == 0 || c.legs == 2, "--legs must be 0 or 2");
  const auto m = oracle::census(oracle::OracleTask{c.nu, c.vertices, c.legs}, census_options(c));
  Report r;
  r.json = census_json(m);
  r.header = {"genus", "count"};
  for (const auto& [g, n] : m.by_genus) r.rows.push_back({std::to_string(g), std::to_string(n)});
  r.notes.push_back("total " + std::to_string(m.total) + ", disconnected " + std::to_string(m.disconnected));
  return r;
}

Report cmd_two_time(const RunConfig& c) {
  require(c.nu >= 1 && c.nu2 >= 1, "--nu and --nu2 must be positive");
  require(c.max_order >= 1, "--max-order must be at least 1");
  const auto z = two_time_z0(c.nu, c.nu2, c.max_order);
  Report r;
  r.json = header_json(c);
  r.json["nu"] = c.nu;
  r.json["nu2"] = c.nu2;
  Json coeffs = Json::array();
  r.header = {"s1", "s2", "coefficient"};
  for (int d = 0; d <= c.max_order; ++d)
    for (int j = 0; j <= d; ++j) {
      const std::string v = z(d - j, j).str();
      coeffs.push_back(Json{{"s1", d - j}, {"s2", j}, {"value", v}});
      r.rows.push_back({std::to_string(d - j), std::to_string(j), v});
    }
  r.json["coefficients"] = coeffs;
  return r;
}

// The full battery of exact comparisons at one (nu, genus, order).
class Crosscheck {
 public:
  explicit Crosscheck(const RunConfig& c) : c_(c) {}

  Report run() {
    const int nu = c_.nu;
    const int G = c_.genus;
    const int N = c_.max_order;
    const int rec_order =
        std::max({N, G >= 1 ? reconstruction_order(nu, G, false) : 0, reconstruction_order(nu, G, true)});
    const auto hier = HierarchyState::solve(nu, rec_order, G);
    const Series z0 = hier.z(0);
    const Rational c(c_nu(nu));

    check("z0 satisfies its algebraic constraint", [&] {
      const Series residual = z0 - z0.pow(nu).shifted(1) * c - Series::constant(1, z0.order());
      require_equal_series(residual, Series(z0.order()), "constraint residual");
    });
    check("z0 coefficients are higher Catalan numbers", [&] {
      Series expect = Series::constant(1, N);
      for (int j = 1; j <= N; ++j) expect[j] = equilibrium::zeta_j(nu, j) * pow(c, j);
      require_equal_series(z0.truncated(N), expect, "z0 vs zeta_j c^j");
    });
    const auto low = HierarchyState::solve(nu, N, G);
    for (int g = 1; g <= G; ++g)
      check("forcing routes agree at genus " + std::to_string(g), [&] {
        require_equal_series(forcing_series(nu, low.z(), g, ForcingRoute::walk_sum),
                             forcing_series(nu, low.z(), g, ForcingRoute::d_V), "walk sum vs partition sum");
      });
    for (int g = 0; g <= G; ++g)
      check("walk sum reproduces z_" + std::to_string(g) + "'", [&] {
        require_equal_series(walk_sum_rhs(nu, low.z(), g), low.z(g).derivative(), "walk sum vs derivative");
      });
    for (int g = 1; g <= G; ++g)
      check("z_" + std::to_string(g) + " closed form round-trips", [&] {
        const auto fit = reconstruct_zg(nu, g, hier.z(g));
        if (!fit.ok) throw ConsistencyError(fit.diagnostic);
        require_equal_series(fit.form(z0), hier.z(g), "closed form vs series");
        if (!fit.form.numerator().divisible_by(Polynomial(std::vector<Rational>{0, -1, 1})))
          throw ConsistencyError("numerator not divisible by z(z-1)");
      });

    const auto eg = EgState::solve(hier, G, eg_options(c_));
    check("e_0 hierarchy matches the equilibrium closed form", [&] {
      const auto form = equilibrium::e0_form(nu);
      const Series one = Series::constant(1, z0.order());
      const Series closed = (z0 - one) * (z0 - one * form.r) * form.eta + log(z0) * Rational(1, 2);
      require_equal_series(eg.e_hat(0), closed, "e_0 routes");
    });
    if (G >= 1)
      check("e_1 equals -log(nu - (nu-1) z0)/12", [&] {
        const Series pole = Series::constant(nu, z0.order()) - z0 * Rational(nu - 1);
        require_equal_series(eg.e_hat(1), log(pole) * Rational(-1, 12), "e_1 closed form");
      });
    for (int g = 0; g <= G; ++g)
      check("e_" + std::to_string(g) + " closed form round-trips", [&] {
        const auto fit = reconstruct_eg(nu, g, eg.e_hat(g));
        if (!fit.ok) throw ConsistencyError(fit.diagnostic);
        require_equal_series(fit.form(z0), eg.e_hat(g), "closed form vs series");
      });
    check("map counts are nonnegative integers", [&] {
      for (int g = 0; g <= G; ++g)
        for (int n = 0; n <= N; ++n) (void)eg.kappa(g, n);
    });
    check("genus-zero counts match the closed form", [&] {
      for (int n = 1; n <= N; ++n)
        if (Rational(eg.kappa(0, n)) != equilibrium::kappa0(nu, n))
          throw ConsistencyError("n = " + std::to_string(n) + ": " + eg.kappa(0, n).get_str() + " vs " +
                                 equilibrium::kappa0(nu, n).str());
    });
    oracle::CensusOptions small = census_options(c_);
    small.force = false;
    small.budget = 3'000'000;
    for (int n = 1; n <= N; ++n) {
      if (oracle::matching_count(2 * nu * n) > BigInt(static_cast<unsigned long>(small.budget))) break;
      check("map census matches e_g at n = " + std::to_string(n), [&] {
        const auto m = oracle::census(oracle::OracleTask{nu, n, 0}, small);
        for (int g = 0; g <= G; ++g)
          if (BigInt(static_cast<unsigned long>(m.count(g))) != eg.kappa(g, n))
            throw ConsistencyError("genus " + std::to_string(g) + ": oracle " + std::to_string(m.count(g)) +
                                   " vs hierarchy " + eg.kappa(g, n).get_str());
      });
    }
    for (int n = 1; n <= N; ++n) {
      if (oracle::matching_count(2 * nu * n + 2) > BigInt(static_cast<unsigned long>(small.budget))) break;
      check("two-leg census matches z_g at n = " + std::to_string(n), [&] {
        const auto m = oracle::two_leg_census(nu, n, small);
        for (int g = 0; g <= G; ++g) {
          const Rational expect = hier.z(g)[n] * Rational(factorial(n));
          if (Rational(BigInt(static_cast<unsigned long>(m.count(g)))) != expect)
            throw ConsistencyError("genus " + std::to_string(g) + ": oracle " + std::to_string(m.count(g)) +
                                   " vs hierarchy " + expect.str());
        }
      });
    }
    check("e_0 assembles from its moments", [&] {
      const Rational edge(nu, nu - 1);
      for (const Rational& z : {Rational(1, 3), Rational(1, 2), Rational(1), (Rational(1) + edge) / Rational(2)})
        if (!equilibrium::e0_assembly_check(nu, Rational(1), z)) throw ConsistencyError("assembly fails at z = " + z.str());
    });
    check("integral recursion closed forms", [&] {
      if (!equilibrium::appendix_S_check(6, Rational(3), Rational(4))) throw ConsistencyError("recursion mismatch");
    });

    report_.json = header_json(c_);
    report_.json["nu"] = nu;
    report_.json["genus"] = G;
    report_.json["order"] = N;
    report_.json["checks"] = checks_;
    report_.json["passed"] = failures_ == 0;
    report_.header = {"status", "check", "detail"};
    report_.exit_code = failures_ == 0 ? kOk : kConsistencyFailure;
    return report_;
  }

 private:
  void check(const std::string& name, const std::function<void()>& body) {
    std::string detail;
    bool ok = true;
    try {
      body();
    } catch (const ConsistencyError& e) {
      ok = false;
      detail = e.what();
    } catch (const UnresolvedConstantError& e) {
      ok = false;
      detail = e.what();
    }
    if (!ok) ++failures_;
    checks_.push_back(Json{{"name", name}, {"passed", ok}, {"detail", detail}});
    report_.rows.push_back({ok ? "PASS" : "FAIL", name, detail});
  }

  const RunConfig& c_;
  Report report_;
  Json checks_ = Json::array();
  int failures_ = 0;
};

Report cmd_crosscheck(const RunConfig& c) {
  require(c.nu >= 2, "--nu must be at least 2");
  require(c.genus >= 0, "--genus must be nonnegative");
  require(c.max_order >= 2, "--order must be at least 2");
  return Crosscheck(c).run();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact genus expansion and map enumeration for even quartic-type potentials", "ctoda"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool with_genus, bool with_order) {
    sub->add_option("--nu", cfg.nu, "half the vertex valence")->capture_default_str();
    if (with_genus) sub->add_option("--genus", cfg.genus, "genus")->capture_default_str();
    if (with_order) sub->add_option("--max-order", cfg.max_order, "series truncation order")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads for the map census")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    sub->add_flag("--force", cfg.force, "run map censuses above the matching budget");
    sub->add_option("--out", cfg.out_path, "write output to this file");
  };

  auto* kappa = app.add_subcommand("kappa", "map counts n! [s^n] e_g(-s)");
  common(kappa, true, true);
  auto* zg = app.add_subcommand("zg", "series coefficients of z_g");
  common(zg, true, true);
  auto* eg = app.add_subcommand("eg", "series coefficients of e_g(-s)");
  common(eg, true, true);
  auto* closed = app.add_subcommand("closed-form", "closed form of z_g or e_g in z_0");
  common(closed, true, true);
  closed->add_option("--target", cfg.target, "z or e")->check(CLI::IsMember({"z", "e"}))->capture_default_str();
  auto* orc = app.add_subcommand("oracle", "brute-force map census");
  common(orc, false, false);
  orc->add_option("--vertices", cfg.vertices, "number of vertices")->capture_default_str();
  orc->add_option("--legs", cfg.legs, "0, or 2 univalent legs")->capture_default_str();
  auto* cross = app.add_subcommand("crosscheck", "run every exact consistency check");
  cross->add_option("--nu", cfg.nu, "half the vertex valence")->capture_default_str();
  cross->add_option("--genus", cfg.genus, "highest genus")->capture_default_str();
  cross->add_option("--max-order,--order", cfg.max_order, "series truncation order")->capture_default_str();
  cross->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cross->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  cross->add_option("--out", cfg.out_path, "write output to this file");
  auto* two = app.add_subcommand("two-time", "z_0 for the two-coupling potential");
  common(two, false, true);
  two->add_option("--nu2", cfg.nu2, "second valence parameter")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // With a subcommand selected this is the subcommand's help.
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const std::map<const CLI::App*, std::function<Report(const RunConfig&)>> dispatch{
      {kappa, cmd_kappa}, {zg, cmd_zg},         {eg, cmd_eg},          {closed, cmd_closed_form},
      {orc, cmd_oracle},  {cross, cmd_crosscheck}, {two, cmd_two_time}};
  const CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();

  try {
    const Report report = dispatch.at(chosen)(cfg);
    const std::string text = render(report, cfg.format);
    if (cfg.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out_path);
      if (!file) {
        err << "cannot open " << cfg.out_path << "\n";
        return kUsage;
      }
      file << text;
    }
    return report.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceededError& e) {
    err << e.what() << " (estimate " << e.estimate() << "; pass --force to run anyway)\n";
    return kBudget;
  } catch (const UnresolvedConstantError& e) {
    err << "unresolved constant: " << e.what() << "\n";
    return kConsistencyFailure;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kConsistencyFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ctoda"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ctoda::cli
