#include "mzv/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "mzv/certificate.hpp"
#include "mzv/identities.hpp"
#include "mzv/numeric.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/words.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace mzv::cli {

namespace {

using nlohmann::ordered_json;

struct Cell {
  std::string key;
  bool pass;
  std::string details;
};

struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<Cell> cells;

  explicit Report(std::string s) : suite(std::move(s)) {}
  void conf(const std::string& k, const std::string& v) { config.emplace_back(k, v); }
  void conf(const std::string& k, long long v) { config.emplace_back(k, std::to_string(v)); }
  void add(std::string key, bool pass, std::string details) {
    cells.push_back({std::move(key), pass, std::move(details)});
  }
};

std::string pad2(long long v) {
  std::ostringstream os;
  os << std::setw(2) << std::setfill('0') << v;
  return os.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

int finish(Report rep, std::ostream& out, std::ostream& err, const std::string& json_path,
           bool quiet, bool text = true) {
  std::stable_sort(rep.cells.begin(), rep.cells.end(),
                   [](const Cell& a, const Cell& b) { return a.key < b.key; });
  long long pass = 0, fail = 0;
  for (const auto& c : rep.cells) (c.pass ? pass : fail)++;

  if (text) {
    out << "suite: " << rep.suite << "\n";
    if (!rep.config.empty()) {
      out << "config:";
      for (const auto& [k, v] : rep.config) out << " " << k << "=" << v;
      out << "\n";
    }
    for (const auto& c : rep.cells) {
      if (quiet && c.pass) continue;
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.key << ": " << c.details << "\n";
    }
    out << "summary: pass=" << pass << " fail=" << fail << "\n";
  }

  if (!json_path.empty()) {
    ordered_json j;
    j["suite"] = rep.suite;
    j["config"] = ordered_json::object();
    for (const auto& [k, v] : rep.config) j["config"][k] = v;
    j["cells"] = ordered_json::array();
    for (const auto& c : rep.cells) {
      j["cells"].push_back({{"key", c.key}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}});
    }
    j["summary"] = {{"pass", pass}, {"fail", fail}};
    std::ofstream f(json_path);
    if (!f) {
      err << "error: cannot write JSON report to " << json_path << "\n";
      return 2;
    }
    f << j.dump(1) << "\n";
  }
  return fail > 0 ? 1 : 0;
}

Word parse_word(const std::string& s) {
  if (s == "e") return Word();
  return Word::from_string(s);
}

std::string poly_json(const WordPolynomial& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [w, c] : p.terms()) j[w.str()] = c.str();
  return j.dump();
}

std::string first_difference(const WordPolynomial& lhs, const WordPolynomial& rhs) {
  WordPolynomial diff = lhs - rhs;
  const auto& [w, c] = *diff.terms().begin();
  return "first differing term " + w.str() + " off by " + c.str();
}

std::vector<LrFamily> expand_families(const std::string& name) {
  if (name == "all") {
    return {LrFamily::power_odd, LrFamily::power_even, LrFamily::binom_odd, LrFamily::binom_even};
  }
  return {*family_from_name(name)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verifier for the exotic shuffle relation zeta({2}^m x {3,1}^n)"};
  app.require_subcommand(1);

  std::string json_path;
  std::uint64_t seed = 12345;
  bool quiet = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", json_path, "write the JSON report to this path");
    sub->add_option("--seed", seed, "seed for sampled checks (default 12345)");
    sub->add_flag("--quiet", quiet, "print only failing cells and the summary");
  };

  std::string w1_str, w2_str;
  auto* sc_shuffle = app.add_subcommand("shuffle", "print the shuffle product of two words");
  sc_shuffle->add_option("W1", w1_str, "first word over {A,B}, or e for the empty word")->required();
  sc_shuffle->add_option("W2", w2_str, "second word over {A,B}, or e for the empty word")->required();
  add_common(sc_shuffle);

  long long l2_pmax = 5, l2_qmax = 5;
  auto* sc_lemma2 = app.add_subcommand("verify-lemma2", "(AB)^p x (AB)^q against the T-sum expansion");
  sc_lemma2->add_option("--p-max", l2_pmax, "largest p (default 5)");
  sc_lemma2->add_option("--q-max", l2_qmax, "largest q (default 5)");
  add_common(sc_lemma2);

  long long l3_nmax = 4;
  auto* sc_lemma3 = app.add_subcommand("verify-lemma3", "word-level alternating-sum identity, both parities");
  sc_lemma3->add_option("--n-max", l3_nmax, "largest n; all 1 <= m <= n (default 4)");
  add_common(sc_lemma3);

  std::string id_family = "all";
  long long id_mmax = 20, id_nmax = 20;
  auto* sc_ident = app.add_subcommand("verify-identities", "exact L = R scalar identity grids");
  sc_ident->add_option("--family", id_family, "power-odd|power-even|binom-odd|binom-even|all")
      ->check(CLI::IsMember({"power-odd", "power-even", "binom-odd", "binom-even", "all"}));
  sc_ident->add_option("--m-max", id_mmax, "largest m (default 20)");
  sc_ident->add_option("--n-max", id_nmax, "largest n (default 20)");
  add_common(sc_ident);

  long long red_kmax = 15, red_mmax = 15;
  auto* sc_red = app.add_subcommand("verify-reduction", "inner-sum closed form (Chu-Vandermonde)");
  sc_red->add_option("--k-max", red_kmax, "largest k (default 15)");
  sc_red->add_option("--m-max", red_mmax, "largest m (default 15)");
  add_common(sc_red);

  long long rc_mmax = 8, rc_nmax = 15;
  auto* sc_rcl = app.add_subcommand("verify-rclosed", "closed right side against the double sum");
  sc_rcl->add_option("--m-max", rc_mmax, "largest m (default 8)");
  sc_rcl->add_option("--n-max", rc_nmax, "largest n (default 15)");
  add_common(sc_rcl);

  auto* sc_init = app.add_subcommand("verify-initial", "reference-table values for n = 1, 2, 3");
  add_common(sc_init);

  long long th_m = 0, th_n = 0;
  double th_rtol = 1e-8;
  auto* sc_thm = app.add_subcommand("verify-theorem", "numeric check of the closed form at one (m,n)");
  sc_thm->add_option("--m", th_m, "number of {2} blocks")->required();
  sc_thm->add_option("--n", th_n, "number of {3,1} blocks")->required();
  sc_thm->add_option("--rtol", th_rtol, "relative tolerance (default 1e-8)");
  add_common(sc_thm);

  long long tg_wmax = 14;
  double tg_rtol = 1e-8;
  auto* sc_grid = app.add_subcommand("verify-theorem-grid", "closed form for all m,n >= 1 with 4n+2m <= weight-max");
  sc_grid->add_option("--weight-max", tg_wmax, "largest weight 4n+2m (default 14)");
  sc_grid->add_option("--rtol", tg_rtol, "relative tolerance (default 1e-8)");
  add_common(sc_grid);

  long long x_nmax = 3;
  double x_rtol = 1e-8;
  auto* sc_x = app.add_subcommand("verify-x", "T-sum integrals against shuffle zeta values");
  sc_x->add_option("--n-max", x_nmax, "largest n (default 3)");
  sc_x->add_option("--rtol", x_rtol, "relative tolerance (default 1e-8)");
  add_common(sc_x);

  std::string dr_family = "binom-odd";
  long long dr_m = 1, dr_order = 3, dr_degree = 6, dr_fitmax = 36, dr_checkmax = 45;
  auto* sc_dr = app.add_subcommand("discover-recurrence", "fit a polynomial-coefficient recurrence to L and test it on L and R");
  sc_dr->add_option("--family", dr_family, "power-odd|power-even|binom-odd|binom-even")
      ->check(CLI::IsMember({"power-odd", "power-even", "binom-odd", "binom-even"}));
  sc_dr->add_option("--m", dr_m, "fixed m (default 1)");
  sc_dr->add_option("--order", dr_order, "recurrence order (default 3)");
  sc_dr->add_option("--degree", dr_degree, "coefficient degree bound (default 6)");
  sc_dr->add_option("--fit-max", dr_fitmax, "fit window n = 1..fit-max (default 36)");
  sc_dr->add_option("--check-max", dr_checkmax, "held-out check window (default 45)");
  add_common(sc_dr);

  std::string cc_file;
  long long cc_samples = 40;
  auto* sc_cert = app.add_subcommand("check-certificate", "verify a telescoping certificate file");
  sc_cert->add_option("--file", cc_file, "certificate JSON path")->required();
  sc_cert->add_option("--samples", cc_samples, "random sample points per family (default 40)");
  add_common(sc_cert);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sc_shuffle)) {
      WordPolynomial p = shuffle(parse_word(w1_str), parse_word(w2_str));
      out << p.str() << "\n";
      Report rep("shuffle");
      rep.conf("w1", w1_str);
      rep.conf("w2", w2_str);
      rep.add("product", true, poly_json(p));
      if (!json_path.empty()) return finish(std::move(rep), out, err, json_path, quiet, false);
      return 0;
    }

    if (app.got_subcommand(sc_lemma2)) {
      Report rep("verify-lemma2");
      rep.conf("p-max", l2_pmax);
      rep.conf("q-max", l2_qmax);
      for (long long p = 0; p <= l2_pmax; ++p) {
        for (long long q = 0; q <= l2_qmax; ++q) {
          CheckResult r = lemma2_check(p, q);
          rep.add("p=" + pad2(p) + ",q=" + pad2(q), r.ok, r.detail);
        }
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_lemma3)) {
      Report rep("verify-lemma3");
      rep.conf("n-max", l3_nmax);
      for (long long n = 1; n <= l3_nmax; ++n) {
        for (long long m = 1; m <= n; ++m) {
          for (Parity par : {Parity::odd, Parity::even}) {
            auto [lhs, rhs] = lemma3_sides(par, m, n);
            bool ok = lhs == rhs;
            std::string key = std::string("parity=") + (par == Parity::odd ? "odd" : "even") +
                              ",m=" + pad2(m) + ",n=" + pad2(n);
            rep.add(key, ok,
                    ok ? "terms=" + std::to_string(lhs.term_count()) : first_difference(lhs, rhs));
          }
        }
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_ident)) {
      Report rep("verify-identities");
      rep.conf("family", id_family);
      rep.conf("m-max", id_mmax);
      rep.conf("n-max", id_nmax);
      for (LrFamily f : expand_families(id_family)) {
        for (long long m = 1; m <= id_mmax; ++m) {
          for (long long n = 1; n <= id_nmax; ++n) {
            LrPair p = lr_sides(f, m, n);
            bool ok = p.lhs == p.rhs;
            ordered_json d{{"family", family_name(f)}, {"m", m},
                           {"n", n},                   {"equal", ok},
                           {"lhs", to_decimal(p.lhs)}, {"rhs", to_decimal(p.rhs)}};
            rep.add("family=" + family_name(f) + ",m=" + pad2(m) + ",n=" + pad2(n), ok, d.dump());
          }
        }
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_red)) {
      Report rep("verify-reduction");
      rep.conf("k-max", red_kmax);
      rep.conf("m-max", red_mmax);
      for (long long k = 1; k <= red_kmax; ++k) {
        for (long long m = 1; m <= red_mmax; ++m) {
          auto [direct, closed] = inner_sum_reduction(k, m);
          rep.add("k=" + pad2(k) + ",m=" + pad2(m), direct == closed,
                  "direct=" + to_decimal(direct) + " closed=" + to_decimal(closed));
        }
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_rcl)) {
      Report rep("verify-rclosed");
      rep.conf("m-max", rc_mmax);
      rep.conf("n-max", rc_nmax);
      for (long long m = 1; m <= rc_mmax; ++m) {
        for (long long n = 1; n <= rc_nmax; ++n) {
          BigRat closed = r_closed(m, n);
          BigRat rhs = lr_sides(LrFamily::binom_odd, m, n).rhs;
          rep.add("m=" + pad2(m) + ",n=" + pad2(n), closed == rhs,
                  "closed=" + to_decimal(closed) + " rhs=" + to_decimal(rhs));
        }
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_init)) {
      Report rep("verify-initial");
      for (const InitialCell& c : initial_values_check()) {
        rep.add("m=" + pad2(c.m) + ",n=" + pad2(c.n), c.ok,
                "expected=" + to_decimal(c.expected) + " L=" + to_decimal(c.lhs) +
                    " R=" + to_decimal(c.rhs));
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_thm) || app.got_subcommand(sc_grid)) {
      bool single = app.got_subcommand(sc_thm);
      Report rep(single ? "verify-theorem" : "verify-theorem-grid");
      double rtol = single ? th_rtol : tg_rtol;
      if (single) {
        rep.conf("m", th_m);
        rep.conf("n", th_n);
      } else {
        rep.conf("weight-max", tg_wmax);
      }
      rep.conf("rtol", fmt(rtol));
      std::vector<std::pair<long long, long long>> cells;
      if (single) {
        cells.emplace_back(th_m, th_n);
      } else {
        for (long long n = 1; 4 * n + 2 <= tg_wmax; ++n) {
          for (long long m = 1; 4 * n + 2 * m <= tg_wmax; ++m) cells.emplace_back(m, n);
        }
      }
      for (auto [m, n] : cells) {
        double rhs = theorem_rhs(m, n);
        EvalResult lhs = theorem_lhs(m, n, std::abs(rhs) * rtol / 4.0);
        double rel = std::abs(lhs.value - rhs) / std::abs(rhs);
        rep.add("m=" + pad2(m) + ",n=" + pad2(n), rel <= rtol,
                "lhs=" + fmt(lhs.value) + " rhs=" + fmt(rhs) + " relerr=" + fmt(rel) +
                    " bound=" + fmt(lhs.bound) + " terms=" + std::to_string(lhs.terms));
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_x)) {
      Report rep("verify-x");
      rep.conf("n-max", x_nmax);
      rep.conf("rtol", fmt(x_rtol));
      for (long long n = 1; n <= x_nmax; ++n) {
        for (Parity par : {Parity::odd, Parity::even}) {
          for (long long j = 1; j <= n; ++j) {
            long long reps = (par == Parity::odd) ? 2 * j - 1 : 2 * j;
            double scale = theorem_rhs(reps, n - j);
            XReport xr = x_identity_check(n, j, par, scale * x_rtol / 4.0);
            bool ok = xr.diff <= x_rtol * std::abs(xr.rhs.value);
            std::string key = "n=" + pad2(n) + ",parity=" + (par == Parity::odd ? "odd" : "even") +
                              ",j=" + pad2(j);
            rep.add(key, ok,
                    "lhs=" + fmt(xr.lhs.value) + " rhs=" + fmt(xr.rhs.value) + " diff=" +
                        fmt(xr.diff) + " words_equal=" + (xr.words_equal ? "true" : "false"));
          }
        }
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_dr)) {
      if (dr_fitmax > dr_checkmax) {
        err << "error: --fit-max must not exceed --check-max\n";
        return 2;
      }
      Report rep("discover-recurrence");
      rep.conf("family", dr_family);
      rep.conf("m", dr_m);
      rep.conf("order", dr_order);
      rep.conf("degree", dr_degree);
      rep.conf("fit-max", dr_fitmax);
      rep.conf("check-max", dr_checkmax);
      LrFamily fam = *family_from_name(dr_family);
      std::vector<BigRat> L, R;
      for (long long n = 1; n <= dr_checkmax; ++n) {
        LrPair p = lr_sides(fam, dr_m, n);
        L.push_back(p.lhs);
        R.push_back(p.rhs);
      }
      std::vector<BigRat> fit_window(L.begin(), L.begin() + dr_fitmax);
      auto rec = discover_recurrence(fit_window, dr_order, dr_degree);
      if (!rec) {
        rep.add("fit", false, "no nonzero recurrence in the searched space");
        return finish(std::move(rep), out, err, json_path, quiet);
      }
      std::string coeffs;
      for (long long j = dr_order; j >= 0; --j) {
        if (!coeffs.empty()) coeffs += "; ";
        coeffs += "c" + std::to_string(j) + " = " + (*rec)[static_cast<std::size_t>(j)].str();
      }
      rep.add("fit", true, coeffs);
      auto residual_cell = [&](const char* label, const std::vector<BigRat>& vals) {
        for (long long n = 1; n + dr_order <= dr_checkmax; ++n) {
          BigRat res = recurrence_residual(*rec, vals, n);
          if (res != 0) {
            rep.add(label, false,
                    "first nonzero residual at n=" + std::to_string(n) + ": " + to_decimal(res));
            return;
          }
        }
        rep.add(label, true,
                "residual zero for all base indices n <= " + std::to_string(dr_checkmax - dr_order));
      };
      residual_cell("holds-L", L);
      residual_cell("holds-R", R);
      return finish(std::move(rep), out, err, json_path, quiet);
    }

    if (app.got_subcommand(sc_cert)) {
      Certificate cert = load_certificate(cc_file);
      Report rep("check-certificate");
      rep.conf("file", cc_file);
      rep.conf("kind", cert.kind);
      rep.conf("order", cert.order);
      rep.conf("m", cert.m);
      rep.conf("samples", cc_samples);
      rep.conf("seed", static_cast<long long>(seed));
      for (const auto& [name, rf] : cert.families) {
        CertReport cr = verify_certificate(cert, name, cert.m, cc_samples, seed);
        for (const auto& c : cr.cells) {
          rep.add("family=" + name + ",check=" + c.key, c.ok, c.detail);
        }
      }
      return finish(std::move(rep), out, err, json_path, quiet);
    }
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand executed\n";
  return 2;
}

}  // namespace mzv::cli
