// tlpp: command-line front end to the library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tlpp/asymptotics.hpp"
#include "tlpp/compositions.hpp"
#include "tlpp/error.hpp"
#include "tlpp/json_io.hpp"
#include "tlpp/percolation.hpp"
#include "tlpp/recurrence.hpp"
#include "tlpp/series.hpp"
#include "tlpp/verify.hpp"

namespace {

using tlpp::Json;
using tlpp::Rational;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

enum class Format { kTable, kJson, kCsv };

// A usage error raised after parsing (bad values that CLI11 cannot check).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_probability(const std::string& text) {
  Rational p;
  try {
    p = Rational::parse(text);
  } catch (const tlpp::DomainError& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
  if (p.sign() < 0 || p > Rational(1)) throw UsageError("--p must lie in [0, 1], got " + text);
  return p;
}

// Rows of cells printed either as aligned columns or as CSV with a header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os, Format f) const {
    if (f == Format::kCsv) {
      print_csv_row(os, header);
      for (const auto& r : rows) print_csv_row(os, r);
      return;
    }
    std::vector<std::size_t> width(header.size(), 0);
    auto grow = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    };
    grow(header);
    for (const auto& r : rows) grow(r);
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << r[i];
        if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }

  static void print_csv_row(std::ostream& os, const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ',';
      os << r[i];
    }
    os << '\n';
  }
};

std::string join(const std::vector<Rational>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i].str();
  }
  return s;
}

std::string num(double x) { return tlpp::format_double(x); }

struct Common {
  std::string p_text = "1/2";
  Format format = Format::kTable;
  Rational p() const { return parse_probability(p_text); }
};

void add_format(CLI::App* sub, Common& c) {
  const std::map<std::string, Format> names{
      {"table", Format::kTable}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  sub->add_option("--format", c.format, "Output format: table, json or csv")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

void add_p(CLI::App* sub, Common& c, bool required = true) {
  auto* o = sub->add_option("--p", c.p_text, "Edge probability as a/b");
  if (required) o->required();
}

void emit_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heaviest paths in transitive tournaments with Bernoulli edge weights"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tlpp 0.1.0");

  Common common;
  double tol = tlpp::kDefaultTolerance;
  unsigned workers = 1;
  std::size_t n = 0;
  std::size_t n_max = 0;
  std::size_t order = 16;
  std::uint64_t count = 1000;
  std::optional<std::uint64_t> seed;
  std::string kind = "G";
  std::string formula_name = "rederived";
  unsigned limit = tlpp::kDefaultCompositionLimit;
  std::size_t exact_threshold = 64;
  std::string samples_csv;
  bool increment_check = false;
  std::size_t covariance_split = 0;
  std::vector<std::string> p_list;
  std::string fault = "none";

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "Absolute tolerance of the q-series truncation")
        ->envname("TLPP_TOL")
        ->check(CLI::PositiveNumber);
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", workers, "Sampling threads")->envname("TLPP_WORKERS")->check(CLI::PositiveNumber);
  };
  auto add_n = [&](CLI::App* sub, std::size_t min) {
    sub->add_option("--n", n, "Number of nodes")->required()->check(CLI::Range(min, std::size_t{1} << 24));
  };

  auto* exact = app.add_subcommand("exact", "Exact E[X_n] (one n, or every n up to --n-max)");
  auto* exact_n = exact->add_option("--n", n, "Number of nodes")->check(CLI::Range(1, 1 << 20));
  auto* exact_nmax = exact->add_option("--n-max", n_max, "Tabulate n = 1..n_max")->check(CLI::Range(1, 1 << 20));
  exact_n->excludes(exact_nmax);
  add_p(exact, common);
  add_format(exact, common);

  auto* dist = app.add_subcommand("dist", "Exact law of X_n from the PGF recurrence");
  add_n(dist, 1);
  add_p(dist, common);
  add_format(dist, common);

  auto* pgf = app.add_subcommand("pgf", "E[t^X_n] as a polynomial in t");
  add_n(pgf, 1);
  add_p(pgf, common);
  add_format(pgf, common);

  auto* mom = app.add_subcommand("moments", "Exact E[X_n], E[X_n^2], var(X_n) for n = 1..n_max");
  mom->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::Range(1, 1 << 16));
  add_p(mom, common);
  add_format(mom, common);

  auto* ser = app.add_subcommand("series", "Coefficients of A, B, G, H or Z up to x^order");
  ser->add_option("--kind", kind, "A, B, G, H or Z")->check(CLI::IsMember({"A", "B", "G", "H", "Z"}));
  ser->add_option("--order", order, "Truncation order")->check(CLI::Range(0, 1 << 14));
  add_p(ser, common);
  add_format(ser, common);

  auto* comp = app.add_subcommand("compositions", "1 + E[X_n] from the composition sums");
  add_n(comp, 0);
  comp->add_option("--limit", limit, "Refuse n above this (the sums have 2^(n-1) terms)");
  add_p(comp, common);
  add_format(comp, common);

  auto* beta = app.add_subcommand("beta", "Limit of E[X_n]/(n-1)");
  add_p(beta, common);
  add_tol(beta);
  add_format(beta, common);

  auto* sigma = app.add_subcommand("sigma", "Scaling constant of the CLT (json: every limit constant)");
  add_p(sigma, common);
  add_tol(sigma);
  sigma->add_option("--formula", formula_name, "rederived, six-term or inverse-cube")
      ->check(CLI::IsMember({"rederived", "six-term", "inverse-cube"}));
  add_format(sigma, common);

  auto* vs = app.add_subcommand("varslope", "var(X_n)/(n-1) from the moment recurrence");
  add_n(vs, 2);
  vs->add_option("--exact-threshold", exact_threshold, "Largest n computed with exact rationals");
  add_p(vs, common);
  add_format(vs, common);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of E[X_n] and var(X_n)");
  add_n(sim, 1);
  add_p(sim, common);
  sim->add_option("--count", count, "Number of samples")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "Seed (random when omitted; always printed)");
  add_workers(sim);
  sim->add_option("--samples-csv", samples_csv, "Also write every X_n to this CSV file");
  sim->add_flag("--increment-check", increment_check,
                "Instead count realizations with X_{n+1} - X_n outside {0, 1}");
  add_format(sim, common);

  auto* orc = app.add_subcommand("oracle", "Exact law of X_n by exhaustive enumeration (n <= 8)");
  add_n(orc, 1);
  add_p(orc, common);
  add_format(orc, common);

  auto* clt = app.add_subcommand("clt", "Standardized-sample summary of X_n");
  add_n(clt, 2);
  add_p(clt, common);
  clt->add_option("--count", count, "Number of samples")->check(CLI::Range(2ULL, 1ULL << 40));
  clt->add_option("--seed", seed, "Seed (random when omitted; always printed)");
  add_workers(clt);
  clt->add_option("--formula", formula_name, "Variance constant: rederived, six-term or inverse-cube")
      ->check(CLI::IsMember({"rederived", "six-term", "inverse-cube"}));
  clt->add_option("--covariance-split", covariance_split,
                  "Also estimate cov(X_k, X_n - X_k) at this k");
  add_format(clt, common);

  auto* ver = app.add_subcommand("verify", "Cross-check every exact route; exit 1 on any mismatch");
  ver->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(1, 24));
  ver->add_option("--p", p_list, "Edge probabilities (default 1/2, 1/3, 3/4)");
  ver->add_option("--fault", fault, "")->group("");
  add_format(ver, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "tlpp: " << e.what() << '\n';
    return kExitUsage;
  }

  const Format fmt = common.format;
  try {
    if (*exact) {
      const Rational p = common.p();
      if (!*exact_n && !*exact_nmax) throw UsageError("exact needs --n or --n-max");
      const std::size_t lo = *exact_n ? n : 1;
      const std::size_t hi = *exact_n ? n : n_max;
      if (fmt == Format::kJson) {
        Json rows = Json::array();
        for (std::size_t k = lo; k <= hi; ++k) {
          const Rational f = tlpp::expected_weight(k, p);
          rows.push_back(Json{{"n", k}, {"p", tlpp::to_json(p)}, {"expected", tlpp::to_json(f)},
                              {"approx", f.to_double()}});
        }
        emit_json(*exact_n ? rows[0] : rows);
      } else if (fmt == Format::kTable && *exact_n) {
        std::cout << tlpp::expected_weight(n, p).str() << '\n';
      } else {
        Table t{{"n", "p", "expected", "approx"}, {}};
        for (std::size_t k = lo; k <= hi; ++k) {
          const Rational f = tlpp::expected_weight(k, p);
          t.rows.push_back({std::to_string(k), p.str(), f.str(), num(f.to_double())});
        }
        t.print(std::cout, fmt);
      }
    } else if (*dist || *orc) {
      const Rational p = common.p();
      const tlpp::WeightDistribution d =
          *dist ? tlpp::distribution(n, p) : tlpp::brute_force_distribution(n, p);
      if (fmt == Format::kJson) {
        emit_json(tlpp::to_json(d, p));
      } else if (fmt == Format::kTable) {
        std::cout << join(d.probs) << '\n';
      } else {
        Table t{{"k", "probability"}, {}};
        for (std::size_t k = 0; k < d.probs.size(); ++k) t.rows.push_back({std::to_string(k), d.probs[k].str()});
        t.print(std::cout, fmt);
      }
    } else if (*pgf) {
      const Rational p = common.p();
      const tlpp::PolyInT g = tlpp::pgf(n, p);
      if (fmt == Format::kJson) {
        emit_json(Json{{"n", n}, {"p", tlpp::to_json(p)}, {"coeffs", tlpp::to_json(g)}});
      } else if (fmt == Format::kTable) {
        std::cout << g.str() << '\n';
      } else {
        Table t{{"k", "coefficient"}, {}};
        for (std::size_t k = 0; k < g.coeffs().size(); ++k) t.rows.push_back({std::to_string(k), g.coeffs()[k].str()});
        t.print(std::cout, fmt);
      }
    } else if (*mom) {
      const Rational p = common.p();
      const tlpp::MomentTable m = tlpp::moments(n_max, p);
      if (fmt == Format::kJson) {
        Json j = tlpp::to_json(m);
        j["p"] = tlpp::to_json(p);
        emit_json(j);
      } else {
        Table t{{"n", "m1", "m2", "variance"}, {}};
        for (std::size_t k = 1; k <= n_max; ++k) {
          t.rows.push_back({std::to_string(k), m.m1[k].str(), m.m2[k].str(), m.variance(k).str()});
        }
        t.print(std::cout, fmt);
      }
    } else if (*ser) {
      const Rational p = common.p();
      const Rational q = Rational(1) - p;
      if (kind == "Z") {
        const tlpp::BivariateSeries z = tlpp::series_Z(q, order);
        if (fmt == Format::kJson) {
          Json j = tlpp::to_json(z);
          j["kind"] = kind;
          j["p"] = tlpp::to_json(p);
          emit_json(j);
        } else {
          Table t{{"n", "coefficient"}, {}};
          for (std::size_t k = 0; k <= z.order(); ++k) t.rows.push_back({std::to_string(k), z[k].str()});
          t.print(std::cout, fmt);
        }
      } else {
        const tlpp::TruncatedSeries s = kind == "A"   ? tlpp::series_A(q, order)
                                        : kind == "B" ? tlpp::series_B(q, order)
                                        : kind == "H" ? tlpp::series_H(q, order)
                                                      : tlpp::series_G(q, order);
        if (fmt == Format::kJson) {
          Json j = tlpp::to_json(s);
          j["kind"] = kind;
          j["p"] = tlpp::to_json(p);
          emit_json(j);
        } else {
          Table t{{"n", "coefficient"}, {}};
          for (std::size_t k = 0; k <= s.order(); ++k) t.rows.push_back({std::to_string(k), s[k].str()});
          t.print(std::cout, fmt);
        }
      }
    } else if (*comp) {
      const Rational p = common.p();
      const Rational q = Rational(1) - p;
      const auto m = static_cast<unsigned>(n);
      const Rational g = tlpp::g_by_compositions(m, q, limit);
      const Rational g2 = tlpp::g_by_triangular_sum(m, q, limit);
      const Rational h = tlpp::h_by_compositions(m, q, limit);
      if (fmt == Format::kJson) {
        emit_json(Json{{"n", n}, {"p", tlpp::to_json(p)}, {"g", tlpp::to_json(g)},
                       {"g_triangular", tlpp::to_json(g2)}, {"h", tlpp::to_json(h)}});
      } else if (fmt == Format::kTable) {
        std::cout << g.str() << '\n';
      } else {
        Table t{{"n", "p", "g", "g_triangular", "h"}, {{std::to_string(n), p.str(), g.str(), g2.str(), h.str()}}};
        t.print(std::cout, fmt);
      }
    } else if (*beta) {
      const Rational p = common.p();
      const tlpp::HighPrecisionValue b = tlpp::beta_tr(p, tol);
      if (fmt == Format::kJson) {
        Json j = tlpp::to_json(b);
        j["p"] = tlpp::to_json(p);
        emit_json(j);
      } else if (fmt == Format::kTable) {
        std::cout << b.str() << '\n';
      } else {
        Table t{{"p", "beta", "error_bound"}, {{p.str(), b.str(), num(b.error_bound)}}};
        t.print(std::cout, fmt);
      }
    } else if (*sigma) {
      const Rational p = common.p();
      const auto formula = tlpp::parse_variance_formula(formula_name);
      if (fmt == Format::kJson) {
        emit_json(tlpp::to_json(tlpp::limit_constants(p, tol, formula)));
      } else {
        const tlpp::HighPrecisionValue s = tlpp::sigma_w(p, tol, formula);
        if (fmt == Format::kTable) {
          std::cout << s.str() << '\n';
        } else {
          Table t{{"p", "formula", "sigma_w", "error_bound"},
                  {{p.str(), formula_name, s.str(), num(s.error_bound)}}};
          t.print(std::cout, fmt);
        }
      }
    } else if (*vs) {
      const Rational p = common.p();
      const double v = tlpp::variance_slope(n, p, exact_threshold);
      if (fmt == Format::kJson) {
        emit_json(Json{{"n", n}, {"p", tlpp::to_json(p)}, {"variance_slope", v}});
      } else if (fmt == Format::kTable) {
        std::cout << num(v) << '\n';
      } else {
        Table t{{"n", "p", "variance_slope"}, {{std::to_string(n), p.str(), num(v)}}};
        t.print(std::cout, fmt);
      }
    } else if (*sim) {
      const Rational p = common.p();
      const std::uint64_t s = seed ? *seed : std::random_device{}() * 0x100000000ULL + std::random_device{}();
      if (increment_check) {
        const tlpp::IncrementCheck c = tlpp::coupled_increment_check(n, p, count, s);
        if (fmt == Format::kJson) {
          emit_json(Json{{"n", n}, {"p", tlpp::to_json(p)}, {"seed", s}, {"samples", c.samples},
                         {"violations", c.violations}, {"fraction", c.fraction()}});
        } else {
          Table t{{"n", "p", "seed", "samples", "violations"},
                  {{std::to_string(n), p.str(), std::to_string(s), std::to_string(c.samples),
                    std::to_string(c.violations)}}};
          t.print(std::cout, fmt);
        }
        return c.violations == 0 ? kExitOk : kExitVerify;
      }
      const tlpp::SampleOptions opts{count, s, workers};
      tlpp::SampleReport r;
      if (!samples_csv.empty()) {
        const auto values = tlpp::sample_values(n, p, opts);
        std::ofstream out(samples_csv);
        if (!out) throw UsageError("cannot write " + samples_csv);
        out << "sample,x\n";
        for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i] << '\n';
        r = tlpp::summarize(n, p, opts, values);
      } else {
        r = tlpp::sample(n, p, opts);
      }
      if (fmt == Format::kJson) {
        emit_json(tlpp::to_json(r));
      } else {
        Table t{{"n", "p", "count", "seed", "workers", "mean", "variance", "stderr", "normalized_mean"},
                {{std::to_string(n), p.str(), std::to_string(r.sample_count), std::to_string(r.seed),
                  std::to_string(r.worker_count), num(r.mean), num(r.variance), num(r.standard_error),
                  num(r.normalized_mean)}}};
        t.print(std::cout, fmt);
      }
    } else if (*clt) {
      const Rational p = common.p();
      const std::uint64_t s = seed ? *seed : std::random_device{}() * 0x100000000ULL + std::random_device{}();
      const auto formula = tlpp::parse_variance_formula(formula_name);
      const tlpp::CltSummary c = tlpp::clt_diagnostic(n, p, count, s, workers, formula);
      std::optional<tlpp::IncrementCovariance> cov;
      if (covariance_split != 0) cov = tlpp::increment_covariance(n, covariance_split, p, count, s);
      if (fmt == Format::kJson) {
        Json j = tlpp::to_json(c);
        if (cov) {
          j["increment_covariance"] = Json{{"split", cov->split}, {"covariance", cov->covariance},
                                           {"correlation", cov->correlation}};
        }
        emit_json(j);
      } else {
        Table t{{"n", "p", "count", "seed", "formula", "mean", "variance", "skewness", "kolmogorov"},
                {{std::to_string(n), p.str(), std::to_string(count), std::to_string(s), formula_name,
                  num(c.mean), num(c.variance), num(c.skewness), num(c.kolmogorov)}}};
        if (cov) {
          t.header.insert(t.header.end(), {"split", "covariance", "correlation"});
          t.rows[0].insert(t.rows[0].end(),
                           {std::to_string(cov->split), num(cov->covariance), num(cov->correlation)});
        }
        t.print(std::cout, fmt);
      }
    } else if (*ver) {
      tlpp::VerifyOptions o;
      if (n_max != 0) o.n_max = n_max;
      if (!p_list.empty()) {
        o.probabilities.clear();
        for (const auto& text : p_list) o.probabilities.push_back(parse_probability(text));
      }
      try {
        o.fault = tlpp::parse_fault_route(fault);
      } catch (const tlpp::DomainError& e) {
        throw UsageError(e.what());
      }
      const tlpp::VerifyReport report = tlpp::run_verify(o);
      if (fmt == Format::kJson) {
        Json checks = Json::array();
        for (const auto& c : report.checks) {
          checks.push_back(Json{{"check", c.name}, {"p", tlpp::to_json(c.p)}, {"passed", c.passed},
                                {"comparisons", c.comparisons}, {"detail", c.detail}});
        }
        emit_json(Json{{"n_max", o.n_max}, {"ok", report.ok()}, {"checks", checks}});
      } else {
        Table t{{"check", "p", "comparisons", "result", "detail"}, {}};
        for (const auto& c : report.checks) {
          t.rows.push_back({c.name, c.p.str(), std::to_string(c.comparisons), c.passed ? "ok" : "FAIL", c.detail});
        }
        t.print(std::cout, fmt);
      }
      return report.ok() ? kExitOk : kExitVerify;
    }
  } catch (const UsageError& e) {
    std::cerr << "tlpp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tlpp::DomainError& e) {
    std::cerr << "tlpp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tlpp::ConsistencyError& e) {
    std::cerr << "tlpp: consistency failure: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitOk;
}
