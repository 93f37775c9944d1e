#include "mzv/certificate.hpp"

#include "json.hpp"

#include <fstream>
#include <functional>
#include <initializer_list>
#include <random>
#include <sstream>

namespace mzv {

namespace {

using nlohmann::json;

IntPoly poly_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) throw CertificateError(where + ": expected a nonempty array");
  std::vector<std::string> cs;
  for (const auto& e : arr) {
    if (!e.is_string()) throw CertificateError(where + ": coefficients must be decimal strings");
    cs.push_back(e.get<std::string>());
  }
  try {
    return IntPoly::from_decimal_strings(cs);
  } catch (const std::exception& e) {
    throw CertificateError(where + ": bad integer literal (" + e.what() + ")");
  }
}

BivarPoly matrix_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty()) throw CertificateError(where + ": expected a nonempty matrix");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : arr) {
    if (!row.is_array()) throw CertificateError(where + ": matrix rows must be arrays");
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (!e.is_string()) throw CertificateError(where + ": coefficients must be decimal strings");
      r.push_back(e.get<std::string>());
    }
    rows.push_back(std::move(r));
  }
  try {
    return BivarPoly::from_decimal_matrix(rows);
  } catch (const std::exception& e) {
    throw CertificateError(where + ": bad integer literal (" + e.what() + ")");
  }
}

struct FamilyModel {
  RationalFunction sigma;  // F(n,k+1)/F(n,k) in the hypergeometric regime
  RationalFunction rho1;   // F(n+1,k)/F(n,k)
  std::function<BigRat(long long, long long)> value;
  std::function<std::pair<long long, long long>(long long)> window;
};

BivarPoly lin(long long ck, long long cn, long long c0) {
  return BivarPoly::linear(BigInt(ck), BigInt(cn), BigInt(c0));
}

BivarPoly prod(std::initializer_list<BivarPoly> fs) {
  BivarPoly r = BivarPoly::constant(1);
  for (const auto& f : fs) r = r * f;
  return r;
}

FamilyModel build_model(const std::string& kind, const std::string& family, long long m) {
  if (kind == "pascal-row-sum") {
    if (family != "F0") throw CertificateError("pascal-row-sum certificate has only family F0");
    FamilyModel mod;
    mod.sigma = RationalFunction(lin(-1, 1, 0), lin(1, 0, 1));
    mod.rho1 = RationalFunction(lin(0, 1, 1), lin(-1, 1, 1));
    mod.value = [](long long n, long long k) { return BigRat(binom(n, k)); };
    mod.window = [](long long n) { return std::make_pair(0LL, n); };
    return mod;
  }
  if (kind != "proposition-families") throw CertificateError("unknown certificate kind: " + kind);
  if (m < 1) throw CertificateError("proposition-families certificate requires m >= 1");
  FamilyModel mod;
  if (family == "F0") {
    mod.sigma = RationalFunction(prod({lin(1, 0, 1), lin(-2, 2, 0), lin(-2, 2, 1)}).scaled(-1),
                                 prod({lin(1, 0, 1 - m), lin(2, 2, 0), lin(2, 2, 1)}));
    mod.rho1 = RationalFunction(prod({lin(0, 4, 0), lin(0, 4, 1), lin(0, 4, 2), lin(0, 4, 3)}),
                                prod({lin(2, 2, 0), lin(2, 2, 1), lin(-2, 2, 2), lin(-2, 2, 3)}));
    mod.value = [m](long long n, long long k) {
      return BigRat(gen_binom(k, m) * binom(4 * n - 1, 2 * n + 2 * k - 1) * sign_pow(k),
                    2 * n - 2 * k + 1);
    };
    mod.window = [](long long n) { return std::make_pair(1 - n, n); };
    return mod;
  }
  if (family == "F1" || family == "F2") {
    mod.sigma = RationalFunction(
        prod({lin(-2, 2, 0), lin(-2, 2, 1), lin(2, 0, -m), lin(2, 0, -m - 1)}),
        prod({lin(2, 0, 0), lin(2, 0, 1), lin(1, 0, -1), lin(1, 0, 1 - m)}).scaled(4));
    mod.rho1 = RationalFunction(prod({lin(0, 2, 0), lin(0, 2, 1)}).scaled(4),
                                prod({lin(-2, 2, 2), lin(-2, 2, 3)}));
    long long low = (family == "F1") ? 2 : m;
    int sgn = (family == "F1") ? sign_pow(m + 1) : sign_pow(m);
    mod.value = [m, low, sgn](long long n, long long k) {
      return pow4(n - k) *
             BigRat(binom(2 * n - 1, 2 * k - 1) * gen_binom(2 * k - m - 2, k - low) * sgn,
                    2 * n - 2 * k + 1);
    };
    mod.window = [](long long n) { return std::make_pair(1LL, n); };
    return mod;
  }
  throw CertificateError("unknown family name: " + family);
}

BivarPoly poly_in_n(const IntPoly& p) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& c : p.coeffs()) rows.push_back({c});
  return BivarPoly(std::move(rows));
}

std::string point_str(long long n, long long k) {
  std::ostringstream os;
  os << "(n=" << n << ", k=" << k << ")";
  return os.str();
}

}  // namespace

Certificate parse_certificate(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CertificateError("certificate root must be a JSON object");
  Certificate cert;
  cert.kind = j.value("kind", std::string("proposition-families"));
  if (!j.contains("order") || !j["order"].is_number_integer()) {
    throw CertificateError("certificate needs an integer \"order\"");
  }
  cert.order = j["order"].get<long long>();
  if (cert.order < 1) throw CertificateError("certificate order must be >= 1");
  if (!j.contains("coeffs") || !j["coeffs"].is_array() ||
      static_cast<long long>(j["coeffs"].size()) != cert.order + 1) {
    throw CertificateError("certificate needs \"coeffs\" with order+1 polynomials");
  }
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i) {
    cert.coeffs.push_back(poly_from_json(j["coeffs"][i], "coeffs[" + std::to_string(i) + "]"));
  }
  if (!j.contains("families") || !j["families"].is_object() || j["families"].empty()) {
    throw CertificateError("certificate needs a nonempty \"families\" object");
  }
  for (const auto& [name, fam] : j["families"].items()) {
    if (!fam.is_object() || !fam.contains("num") || !fam.contains("den")) {
      throw CertificateError("family " + name + " needs \"num\" and \"den\" matrices");
    }
    BivarPoly num = matrix_from_json(fam["num"], "families." + name + ".num");
    BivarPoly den = matrix_from_json(fam["den"], "families." + name + ".den");
    if (den.is_zero()) throw CertificateError("family " + name + " has a zero denominator");
    cert.families.emplace(name, RationalFunction(std::move(num), std::move(den)));
  }
  if (!j.contains("m") || !j["m"].is_number_integer()) {
    throw CertificateError("certificate needs an integer \"m\"");
  }
  cert.m = j["m"].get<long long>();
  return cert;
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CertificateError("cannot read certificate file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

bool CertReport::ok() const {
  for (const auto& c : cells) {
    if (!c.ok) return false;
  }
  return true;
}

CertReport verify_certificate(const Certificate& cert, const std::string& family, long long m,
                              long long samples, std::uint64_t seed) {
  auto fam_it = cert.families.find(family);
  if (fam_it == cert.families.end()) {
    throw CertificateError("certificate carries no family named " + family);
  }
  const RationalFunction& R = fam_it->second;
  FamilyModel model = build_model(cert.kind, family, m);
  const long long order = cert.order;
  CertReport report;

  std::vector<RationalFunction> rho;
  rho.push_back(RationalFunction::from_poly(BivarPoly::constant(1)));
  for (long long jj = 1; jj <= order; ++jj) {
    rho.push_back(model.rho1.shift_n(jj - 1) * rho.back());
  }
  RationalFunction lhs;
  for (long long jj = 0; jj <= order; ++jj) {
    RationalFunction term = RationalFunction::from_poly(poly_in_n(cert.coeffs[static_cast<std::size_t>(jj)])) * rho[static_cast<std::size_t>(jj)];
    lhs = (sign_pow(order - jj) > 0) ? lhs + term : lhs - term;
  }
  RationalFunction rhs = R.shift_k(1) * model.sigma - R;
  report.degree_bound = lhs.degree_bound() + rhs.degree_bound();

  {
    BivarPoly diff = lhs.cross_difference(rhs);
    report.cells.push_back({"rational-identity", diff.is_zero(),
                            diff.is_zero() ? "cross-difference is the zero polynomial"
                                           : "cross-difference has a nonzero coefficient"});
  }

  {
    std::mt19937_64 rng(seed);
    const long long D = report.degree_bound;
    const long long n_span = 4 * (D + 1);
    const long long k_span = 4 * (D + 1) + 1;
    long long accepted = 0, rejected = 0;
    bool ok = true;
    std::string detail;
    while (accepted < samples) {
      long long n = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(n_span));
      long long k = -2 * (D + 1) + static_cast<long long>(rng() % static_cast<std::uint64_t>(k_span));
      auto lv = lhs.eval(n, k);
      auto rv = rhs.eval(n, k);
      if (!lv || !rv) {
        ++rejected;
        continue;
      }
      ++accepted;
      if (*lv != *rv) {
        ok = false;
        detail = "mismatch at sample " + point_str(n, k) + ": lhs=" + to_decimal(*lv) +
                 " rhs=" + to_decimal(*rv);
        break;
      }
    }
    report.samples_used = accepted;
    report.samples_rejected = rejected;
    if (ok) {
      std::ostringstream os;
      os << accepted << " samples agree (degree bound " << D << ", " << rejected
         << " draws rejected on vanishing denominators)";
      detail = os.str();
    }
    report.cells.push_back({"sampled-identity", ok, detail});
  }

  {
    bool ok = true;
    long long checked = 0, skipped = 0;
    std::string detail;
    for (long long n = 1; n <= 8 && ok; ++n) {
      for (long long k = -(n + 4); k <= n + 4 && ok; ++k) {
        auto Rk = R.eval(n, k);
        auto Rk1 = R.eval(n, k + 1);
        if (!Rk || !Rk1) {
          ++skipped;
          continue;
        }
        BigRat lhs_val = 0;
        for (long long jj = 0; jj <= order; ++jj) {
          lhs_val += cert.coeffs[static_cast<std::size_t>(jj)].eval(BigRat(n)) *
                     model.value(n + jj, k) * sign_pow(order - jj);
        }
        BigRat rhs_val = *Rk1 * model.value(n, k + 1) - *Rk * model.value(n, k);
        ++checked;
        if (lhs_val != rhs_val) {
          ok = false;
          detail = "telescoping fails at " + point_str(n, k) + ": lhs=" + to_decimal(lhs_val) +
                   " rhs=" + to_decimal(rhs_val);
        }
      }
    }
    if (ok) {
      std::ostringstream os;
      os << "checked=" << checked << " skipped=" << skipped << " (certificate pole at k or k+1)";
      detail = os.str();
    }
    report.cells.push_back({"integer-grid", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (long long n = 1; n <= 8 && ok; ++n) {
      auto [lo, hi] = model.window(n);
      for (long long k : {lo - 5, lo - 4, lo - 3, lo - 2, lo - 1, hi + 1, hi + 2, hi + 3, hi + 4, hi + 5}) {
        if (model.value(n, k) != 0) {
          ok = false;
          detail = "F does not vanish at " + point_str(n, k);
          break;
        }
      }
    }
    if (ok) detail = "F vanishes on both 5-point margins outside the support window, n <= 8";
    report.cells.push_back({"boundary", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    std::vector<BigRat> S;
    for (long long n = 1; n <= 8 + order; ++n) {
      auto [lo, hi] = model.window(n);
      BigRat s = 0;
      for (long long k = lo; k <= hi; ++k) s += model.value(n, k);
      S.push_back(s);
    }
    for (long long n = 1; n <= 8 && ok; ++n) {
      BigRat res = 0;
      for (long long jj = 0; jj <= order; ++jj) {
        res += cert.coeffs[static_cast<std::size_t>(jj)].eval(BigRat(n)) *
               S[static_cast<std::size_t>(n + jj - 1)] * sign_pow(order - jj);
      }
      if (res != 0) {
        ok = false;
        detail = "row-sum recurrence fails at n=" + std::to_string(n) + ": residual " + to_decimal(res);
      }
    }
    if (ok) detail = "row sums satisfy the recurrence for n <= 8";
    report.cells.push_back({"sum-recurrence", ok, detail});
  }

  return report;
}

}  // namespace mzv
