#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/polynomial.hpp"
#include "mzv/rational.hpp"
#include "mzv/shuffle.hpp"

namespace mzv {

enum class LrFamily { power_odd, power_even, binom_odd, binom_even };

std::string family_name(LrFamily f);
std::optional<LrFamily> family_from_name(const std::string& name);

// a_{2m-1,j} (odd) or a_{2m,j} (even); integer-valued, zero for j > m.
BigRat a_coeff(Parity parity, long long m, long long j);

struct LrPair {
  BigRat lhs;
  BigRat rhs;
};

LrPair lr_sides(LrFamily family, long long m, long long n);

// Extending the outer j-sum of the power-family right side past j = m must not
// change the value; each extra term is individually zero.
CheckResult replace_outer_sum_check(Parity parity, long long m, long long n, long long jmax);

// direct: sum_{j=1-k}^{k} (-1)^j C(j,m) C(2k-1,k-j)
// closed: (-1)^m [C(2k-m-2,k-m) - C(2k-m-2,k-2)]
std::pair<BigRat, BigRat> inner_sum_reduction(long long k, long long m);

// sum_{k=1}^{n} (-1)^m 4^{n-k}/(2n-2k+1) C(2n-1,2k-1) [C(2k-m-2,k-m) - C(2k-m-2,k-2)]
BigRat r_closed(long long m, long long n);

struct InitialCell {
  long long m;
  long long n;
  BigRat expected;
  BigRat lhs;
  BigRat rhs;
  bool ok;
};

// Reference-table comparison for the binom-odd family, n = 1..3, m = 1..12.
std::vector<InitialCell> initial_values_check();

// Fits c_0..c_order (polynomials in n of degree <= degree) with
// sum_j (-1)^{order-j} c_j(n) A(n+j) = 0 for all window positions,
// values[i] = A(i+1). Returns the primitive normalized coefficient list,
// or nullopt if only the zero solution exists.
std::optional<std::vector<IntPoly>> discover_recurrence(const std::vector<BigRat>& values,
                                                        long long order, long long degree);

// Residual of the fitted relation at base index n (1-based into values).
BigRat recurrence_residual(const std::vector<IntPoly>& coeffs, const std::vector<BigRat>& values,
                           long long n);

// Scalar shadow of the word-level identity: substituting 1/(2r+1)! for each
// (AB)^r factor turns both lemma3_sides polynomials into the power-family
// sides divided by (4n-1)! resp. (4n+1)!.
CheckResult layer_consistency_check(Parity parity, long long m, long long n);

}  // namespace mzv
