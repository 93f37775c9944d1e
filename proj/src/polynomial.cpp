#include "mzv/polynomial.hpp"

#include <stdexcept>

namespace mzv {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::from_decimal_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigInt> cs;
  cs.reserve(coeffs.size());
  for (const auto& s : coeffs) cs.emplace_back(s);
  return IntPoly(std::move(cs));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long IntPoly::degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

BigRat IntPoly::eval(const BigRat& n) const {
  BigRat v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * n + BigRat(*it);
  return v;
}

BigInt IntPoly::eval_int(const BigInt& n) const {
  BigInt v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * n + *it;
  return v;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return IntPoly();
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& f) const {
  std::vector<BigInt> r = coeffs_;
  for (auto& c : r) c *= f;
  return IntPoly(std::move(r));
}

std::vector<std::string> IntPoly::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  if (out.empty()) out.push_back("0");
  return out;
}

std::string IntPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (long long i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += (c < 0) ? " - " : " + ";
    else if (c < 0) s += "-";
    BigInt a = abs(c);
    if (a != 1 || i == 0) s += a.str();
    if (i > 0) s += "n";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

void make_primitive(std::vector<IntPoly>& polys, std::size_t lead) {
  BigInt g = 0;
  for (const auto& p : polys) {
    for (const auto& c : p.coeffs()) g = gcd(g, c);
  }
  if (g == 0) return;
  const auto& lc = polys[lead].coeffs();
  if (!lc.empty() && lc.back() < 0) g = -g;
  for (auto& p : polys) p = IntPoly([&] {
    std::vector<BigInt> cs = p.coeffs();
    for (auto& c : cs) c /= g;
    return cs;
  }());
}

BivarPoly::BivarPoly(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) { trim(); }

BivarPoly BivarPoly::constant(BigInt c) {
  if (c == 0) return BivarPoly();
  return BivarPoly({{std::move(c)}});
}

BivarPoly BivarPoly::linear(BigInt ck, BigInt cn, BigInt c0) {
  return BivarPoly({{std::move(c0), std::move(ck)}, {std::move(cn)}});
}

BivarPoly BivarPoly::from_decimal_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<BigInt>> r;
  r.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<BigInt> cr;
    cr.reserve(row.size());
    for (const auto& s : row) cr.emplace_back(s);
    r.push_back(std::move(cr));
  }
  return BivarPoly(std::move(r));
}

void BivarPoly::trim() {
  for (auto& row : rows_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

long long BivarPoly::degree_n() const { return static_cast<long long>(rows_.size()) - 1; }

long long BivarPoly::degree_k() const {
  long long d = -1;
  for (const auto& row : rows_) d = std::max(d, static_cast<long long>(row.size()) - 1);
  return d;
}

BigRat BivarPoly::eval(const BigRat& n, const BigRat& k) const {
  BigRat v = 0;
  for (auto rit = rows_.rbegin(); rit != rows_.rend(); ++rit) {
    BigRat rv = 0;
    for (auto cit = rit->rbegin(); cit != rit->rend(); ++cit) rv = rv * k + BigRat(*cit);
    v = v * n + rv;
  }
  return v;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  std::vector<std::vector<BigInt>> r(std::max(rows_.size(), o.rows_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::size_t w = 0;
    if (i < rows_.size()) w = std::max(w, rows_[i].size());
    if (i < o.rows_.size()) w = std::max(w, o.rows_[i].size());
    r[i].assign(w, BigInt(0));
    if (i < rows_.size()) {
      for (std::size_t j = 0; j < rows_[i].size(); ++j) r[i][j] += rows_[i][j];
    }
    if (i < o.rows_.size()) {
      for (std::size_t j = 0; j < o.rows_[i].size(); ++j) r[i][j] += o.rows_[i][j];
    }
  }
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + o.scaled(-1); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (rows_.empty() || o.rows_.empty()) return BivarPoly();
  std::vector<std::vector<BigInt>> r(rows_.size() + o.rows_.size() - 1);
  std::size_t wa = 0, wb = 0;
  for (const auto& row : rows_) wa = std::max(wa, row.size());
  for (const auto& row : o.rows_) wb = std::max(wb, row.size());
  for (auto& row : r) row.assign(wa + wb - 1, BigInt(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] == 0) continue;
      for (std::size_t p = 0; p < o.rows_.size(); ++p) {
        for (std::size_t q = 0; q < o.rows_[p].size(); ++q) {
          r[i + p][j + q] += rows_[i][j] * o.rows_[p][q];
        }
      }
    }
  }
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::scaled(const BigInt& f) const {
  if (f == 0) return BivarPoly();
  std::vector<std::vector<BigInt>> r = rows_;
  for (auto& row : r) {
    for (auto& c : row) c *= f;
  }
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::shift_n(long long d) const {
  // n^i -> sum_t C(i,t) d^{i-t} n^t
  std::vector<std::vector<BigInt>> r(rows_.size());
  std::size_t w = 0;
  for (const auto& row : rows_) w = std::max(w, row.size());
  for (auto& row : r) row.assign(w, BigInt(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t t = 0; t <= i; ++t) {
      BigInt f = binom(static_cast<long long>(i), static_cast<long long>(t)) *
                 pow_int(BigInt(d), static_cast<unsigned long long>(i - t));
      if (f == 0) continue;
      for (std::size_t j = 0; j < rows_[i].size(); ++j) r[t][j] += f * rows_[i][j];
    }
  }
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::shift_k(long long d) const {
  std::vector<std::vector<BigInt>> r(rows_.size());
  std::size_t w = 0;
  for (const auto& row : rows_) w = std::max(w, row.size());
  for (auto& row : r) row.assign(w, BigInt(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] == 0) continue;
      for (std::size_t t = 0; t <= j; ++t) {
        r[i][t] += rows_[i][j] * binom(static_cast<long long>(j), static_cast<long long>(t)) *
                   pow_int(BigInt(d), static_cast<unsigned long long>(j - t));
      }
    }
  }
  return BivarPoly(std::move(r));
}

std::vector<std::vector<std::string>> BivarPoly::to_decimal_matrix() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : rows_) {
    std::vector<std::string> r;
    for (const auto& c : row) r.push_back(c.str());
    if (r.empty()) r.push_back("0");
    out.push_back(std::move(r));
  }
  if (out.empty()) out.push_back({"0"});
  return out;
}

RationalFunction::RationalFunction(BivarPoly n_, BivarPoly d_) : num(std::move(n_)), den(std::move(d_)) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
}

RationalFunction RationalFunction::from_poly(BivarPoly p) {
  return RationalFunction(std::move(p), BivarPoly::constant(1));
}

std::optional<BigRat> RationalFunction::eval(const BigRat& n, const BigRat& k) const {
  BigRat d = den.eval(n, k);
  if (d == 0) return std::nullopt;
  return num.eval(n, k) / d;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num * o.den + o.num * den, den * o.den);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num * o.den - o.num * den, den * o.den);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num * o.num, den * o.den);
}

RationalFunction RationalFunction::shift_n(long long d) const {
  return RationalFunction(num.shift_n(d), den.shift_n(d));
}

RationalFunction RationalFunction::shift_k(long long d) const {
  return RationalFunction(num.shift_k(d), den.shift_k(d));
}

BivarPoly RationalFunction::cross_difference(const RationalFunction& o) const {
  return num * o.den - o.num * den;
}

long long RationalFunction::degree_bound() const {
  return std::max(num.degree_n() + num.degree_k(), den.degree_n() + den.degree_k());
}

}  // namespace mzv
