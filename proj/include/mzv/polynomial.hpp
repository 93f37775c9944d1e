#pragma once

#include "mzv/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mzv {

// Univariate polynomial in n, arbitrary-precision integer coefficients,
// ascending powers, trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(BigInt c);
  static IntPoly from_decimal_strings(const std::vector<std::string>& coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  long long degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return coeffs_.empty(); }

  BigRat eval(const BigRat& n) const;
  BigInt eval_int(const BigInt& n) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const BigInt& f) const;
  bool operator==(const IntPoly& o) const = default;

  std::vector<std::string> to_decimal_strings() const;
  std::string str() const;  // "3n^2 - n + 5"

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

// Divide a list of polynomials by the gcd of all their coefficients and fix the
// sign so that `lead`'s leading coefficient is positive. Used to put recurrence
// coefficient vectors in a canonical primitive form.
void make_primitive(std::vector<IntPoly>& polys, std::size_t lead);

// Bivariate polynomial in (n, k): coeff_[i][j] multiplies n^i k^j.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<std::vector<BigInt>> rows);
  static BivarPoly constant(BigInt c);
  static BivarPoly linear(BigInt ck, BigInt cn, BigInt c0);  // ck*k + cn*n + c0
  static BivarPoly from_decimal_matrix(const std::vector<std::vector<std::string>>& rows);

  bool is_zero() const { return rows_.empty(); }
  long long degree_n() const;
  long long degree_k() const;
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

  BigRat eval(const BigRat& n, const BigRat& k) const;

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly scaled(const BigInt& f) const;
  bool operator==(const BivarPoly& o) const = default;

  // Substitute n -> n + d or k -> k + d (binomial expansion).
  BivarPoly shift_n(long long d) const;
  BivarPoly shift_k(long long d) const;

  std::vector<std::vector<std::string>> to_decimal_matrix() const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  void trim();
};

// Quotient of bivariate polynomials; denominator not identically zero.
// No gcd cancellation is performed: arithmetic is exact cross-multiplication.
struct RationalFunction {
  BivarPoly num;
  BivarPoly den;

  RationalFunction() : num(), den(BivarPoly::constant(1)) {}
  RationalFunction(BivarPoly n_, BivarPoly d_);

  static RationalFunction from_poly(BivarPoly p);

  // nullopt when the denominator vanishes at (n, k).
  std::optional<BigRat> eval(const BigRat& n, const BigRat& k) const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;

  RationalFunction shift_n(long long d) const;
  RationalFunction shift_k(long long d) const;

  // The numerator of this - o over the common denominator; identically zero
  // iff the two rational functions are equal as rational functions.
  BivarPoly cross_difference(const RationalFunction& o) const;

  long long degree_bound() const;  // max over num/den of (deg_n + deg_k)
};

}  // namespace mzv
