#include "mzv/identities.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mzv {

namespace {

void require_odd_nonzero(long long d, const char* where) {
  if (d == 0 || d % 2 == 0) throw std::logic_error(std::string(where) + ": denominator not odd");
}

BigRat signed_power(long long k, long long e) {
  return BigRat(pow_int(BigInt(k), static_cast<unsigned long long>(e)));
}

BigRat power_lhs(Parity parity, long long m, long long n) {
  BigRat sum = 0;
  if (parity == Parity::odd) {
    for (long long k = 1 - n; k <= n; ++k) {
      long long d = 2 * n - 2 * k + 1;
      require_odd_nonzero(d, "power_lhs");
      sum += signed_power(k, 2 * m - 1) * sign_pow(k) * BigRat(binom(4 * n - 1, 2 * n + 2 * k - 1), d);
    }
  } else {
    for (long long k = -n; k <= n; ++k) {
      long long d = 2 * n - 2 * k + 1;
      require_odd_nonzero(d, "power_lhs");
      sum += signed_power(k, 2 * m) * sign_pow(k) * BigRat(binom(4 * n + 1, 2 * n + 2 * k + 1), d);
    }
  }
  return sum;
}

BigRat power_rhs_term(Parity parity, long long m, long long n, long long j) {
  long long d = 2 * n - 2 * j + 1;
  require_odd_nonzero(d, "power_rhs");
  BigRat inner = 0;
  if (parity == Parity::odd) {
    for (long long k = 1 - j; k <= j; ++k) {
      inner += signed_power(k, 2 * m - 1) * sign_pow(k) * BigRat(binom(2 * j - 1, j - k));
    }
    return pow4(n - j) * inner * BigRat(binom(2 * n - 1, 2 * j - 1), d);
  }
  for (long long k = -j; k <= j; ++k) {
    inner += signed_power(k, 2 * m) * sign_pow(k) * BigRat(binom(2 * j, j - k));
  }
  return pow4(n - j) * inner * BigRat(binom(2 * n, 2 * j), d);
}

BigRat power_rhs(Parity parity, long long m, long long n) {
  BigRat sum = 0;
  for (long long j = 1; j <= m; ++j) sum += power_rhs_term(parity, m, n, j);
  return sum;
}

BigRat binom_lhs(bool odd, long long m, long long n) {
  BigRat sum = 0;
  long long lo = odd ? 1 - n : -n;
  for (long long k = lo; k <= n; ++k) {
    long long d = 2 * n - 2 * k + 1;
    require_odd_nonzero(d, "binom_lhs");
    BigInt top = odd ? binom(4 * n - 1, 2 * n + 2 * k - 1) : binom(4 * n + 1, 2 * n + 2 * k + 1);
    sum += BigRat(gen_binom(k, m) * top, d) * sign_pow(k);
  }
  return sum;
}

BigRat binom_rhs_term(bool odd, long long m, long long n, long long k) {
  long long d = 2 * n - 2 * k + 1;
  require_odd_nonzero(d, "binom_rhs");
  BigRat inner = 0;
  long long lo = odd ? 1 - k : -k;
  for (long long j = lo; j <= k; ++j) {
    BigInt w = odd ? binom(2 * k - 1, k - j) : binom(2 * k, k - j);
    inner += BigRat(gen_binom(j, m) * w) * sign_pow(j);
  }
  BigInt outer = odd ? binom(2 * n - 1, 2 * k - 1) : binom(2 * n, 2 * k);
  return pow4(n - k) * inner * BigRat(outer, d);
}

BigRat binom_rhs(bool odd, long long m, long long n) {
  long long cutoff = std::max(m, n) + 2;
  BigRat sum = 0;
  for (long long k = 1; k <= cutoff; ++k) sum += binom_rhs_term(odd, m, n, k);
  for (long long k = cutoff + 1; k <= cutoff + 2; ++k) {
    if (binom_rhs_term(odd, m, n, k) != 0) {
      throw std::logic_error("binom_rhs: truncated tail term is nonzero");
    }
  }
  return sum;
}

}  // namespace

std::string family_name(LrFamily f) {
  switch (f) {
    case LrFamily::power_odd: return "power-odd";
    case LrFamily::power_even: return "power-even";
    case LrFamily::binom_odd: return "binom-odd";
    case LrFamily::binom_even: return "binom-even";
  }
  throw std::logic_error("family_name: bad enum");
}

std::optional<LrFamily> family_from_name(const std::string& name) {
  if (name == "power-odd") return LrFamily::power_odd;
  if (name == "power-even") return LrFamily::power_even;
  if (name == "binom-odd") return LrFamily::binom_odd;
  if (name == "binom-even") return LrFamily::binom_even;
  return std::nullopt;
}

BigRat a_coeff(Parity parity, long long m, long long j) {
  if (m < 1 || j < 1) throw std::invalid_argument("a_coeff: m and j must be positive");
  BigRat sum = 0;
  if (parity == Parity::odd) {
    for (long long k = 1 - j; k <= j; ++k) {
      sum += signed_power(k, 2 * m - 1) * sign_pow(k) * BigRat(binom(2 * j - 1, j - k));
    }
  } else {
    for (long long k = -j; k <= j; ++k) {
      sum += signed_power(k, 2 * m) * sign_pow(k) * BigRat(binom(2 * j, j - k));
    }
  }
  return sum;
}

LrPair lr_sides(LrFamily family, long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("lr_sides: m and n must be positive");
  switch (family) {
    case LrFamily::power_odd:
      return {power_lhs(Parity::odd, m, n), power_rhs(Parity::odd, m, n)};
    case LrFamily::power_even:
      return {power_lhs(Parity::even, m, n), power_rhs(Parity::even, m, n)};
    case LrFamily::binom_odd:
      return {binom_lhs(true, m, n), binom_rhs(true, m, n)};
    case LrFamily::binom_even:
      return {binom_lhs(false, m, n), binom_rhs(false, m, n)};
  }
  throw std::logic_error("lr_sides: bad enum");
}

CheckResult replace_outer_sum_check(Parity parity, long long m, long long n, long long jmax) {
  if (jmax < m) throw std::invalid_argument("replace_outer_sum_check: jmax must be >= m");
  BigRat base = power_rhs(parity, m, n);
  BigRat extended = base;
  for (long long j = m + 1; j <= jmax; ++j) {
    BigRat t = power_rhs_term(parity, m, n, j);
    extended += t;
    if (t != 0) {
      std::ostringstream os;
      os << "extra term j=" << j << " is " << to_decimal(t) << ", expected 0";
      return {false, os.str()};
    }
  }
  if (extended != base) return {false, "extended sum differs from base sum"};
  std::ostringstream os;
  os << "sum unchanged through jmax=" << jmax;
  return {true, os.str()};
}

std::pair<BigRat, BigRat> inner_sum_reduction(long long k, long long m) {
  if (k < 1 || m < 1) throw std::invalid_argument("inner_sum_reduction: k and m must be positive");
  BigRat direct = 0;
  for (long long j = 1 - k; j <= k; ++j) {
    direct += BigRat(gen_binom(j, m) * binom(2 * k - 1, k - j)) * sign_pow(j);
  }
  BigRat closed = BigRat(gen_binom(2 * k - m - 2, k - m) - gen_binom(2 * k - m - 2, k - 2)) * sign_pow(m);
  return {direct, closed};
}

BigRat r_closed(long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("r_closed: m and n must be positive");
  BigRat sum = 0;
  for (long long k = 1; k <= n; ++k) {
    long long d = 2 * n - 2 * k + 1;
    require_odd_nonzero(d, "r_closed");
    BigInt bracket = gen_binom(2 * k - m - 2, k - m) - gen_binom(2 * k - m - 2, k - 2);
    sum += pow4(n - k) * BigRat(binom(2 * n - 1, 2 * k - 1) * bracket, d) * sign_pow(m);
  }
  return sum;
}

std::vector<InitialCell> initial_values_check() {
  std::vector<InitialCell> cells;
  for (long long n = 1; n <= 3; ++n) {
    for (long long m = 1; m <= 12; ++m) {
      BigRat expected;
      if (n == 1) {
        expected = (m == 1) ? BigRat(-1) : BigRat(0);
      } else if (n == 2) {
        expected = BigRat(m == 1 ? -5 : 0) - BigRat(sign_pow(m));
      } else if (m == 1) {
        expected = -16;
      } else if (m == 2) {
        expected = 0;
      } else if (m == 3) {
        expected = BigRat(40, 3);
      } else {
        expected = (BigRat(m) - BigRat(52, 3)) * sign_pow(m);
      }
      LrPair p = lr_sides(LrFamily::binom_odd, m, n);
      cells.push_back({m, n, expected, p.lhs, p.rhs, p.lhs == expected && p.rhs == expected});
    }
  }
  return cells;
}

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(std::vector<std::vector<BigRat>>& mat) {
  std::vector<std::size_t> pivots;
  if (mat.empty()) return pivots;
  std::size_t rows = mat.size(), cols = mat[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (mat[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(mat[r], mat[sel]);
    BigRat inv = BigRat(1) / mat[r][c];
    for (std::size_t j = c; j < cols; ++j) mat[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || mat[i][c] == 0) continue;
      BigRat f = mat[i][c];
      for (std::size_t j = c; j < cols; ++j) mat[i][j] -= f * mat[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<IntPoly>> discover_recurrence(const std::vector<BigRat>& values,
                                                        long long order, long long degree) {
  if (order < 1 || degree < 0) throw std::invalid_argument("discover_recurrence: bad order/degree");
  long long len = static_cast<long long>(values.size());
  long long need = (order + 1) * (degree + 1) + order + 4;
  if (len < need) {
    std::ostringstream os;
    os << "discover_recurrence: need at least " << need << " values, got " << len;
    throw std::invalid_argument(os.str());
  }
  std::size_t unknowns = static_cast<std::size_t>((order + 1) * (degree + 1));
  std::vector<std::vector<BigRat>> mat;
  for (long long n = 1; n + order <= len; ++n) {
    std::vector<BigRat> row(unknowns);
    for (long long j = 0; j <= order; ++j) {
      BigRat v = values[static_cast<std::size_t>(n + j - 1)] * sign_pow(order - j);
      BigRat np = 1;
      for (long long t = 0; t <= degree; ++t) {
        row[static_cast<std::size_t>(j * (degree + 1) + t)] = v * np;
        np *= n;
      }
    }
    mat.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = rref(mat);
  if (pivots.size() == unknowns) return std::nullopt;
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<BigRat> sol(unknowns, BigRat(0));
  sol[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = -mat[r][free_col];

  BigInt den_lcm = 1;
  for (const auto& x : sol) den_lcm = lcm(den_lcm, denominator(x));
  std::vector<IntPoly> polys;
  for (long long j = 0; j <= order; ++j) {
    std::vector<BigInt> cs;
    for (long long t = 0; t <= degree; ++t) {
      const BigRat& x = sol[static_cast<std::size_t>(j * (degree + 1) + t)];
      cs.push_back(numerator(x) * (den_lcm / denominator(x)));
    }
    polys.emplace_back(std::move(cs));
  }
  std::size_t lead = static_cast<std::size_t>(order);
  while (lead > 0 && polys[lead].is_zero()) --lead;
  make_primitive(polys, lead);
  return polys;
}

BigRat recurrence_residual(const std::vector<IntPoly>& coeffs, const std::vector<BigRat>& values,
                           long long n) {
  long long order = static_cast<long long>(coeffs.size()) - 1;
  if (n < 1 || n + order > static_cast<long long>(values.size())) {
    throw std::out_of_range("recurrence_residual: base index out of range");
  }
  BigRat res = 0;
  for (long long j = 0; j <= order; ++j) {
    res += coeffs[static_cast<std::size_t>(j)].eval(BigRat(n)) *
           values[static_cast<std::size_t>(n + j - 1)] * sign_pow(order - j);
  }
  return res;
}

CheckResult layer_consistency_check(Parity parity, long long m, long long n) {
  if (m < 1 || n < m) throw std::invalid_argument("layer_consistency_check: need 1 <= m <= n");
  auto zfac = [](long long r) { return BigRat(1, factorial(2 * r + 1)); };
  BigRat lhs = 0, rhs = 0;
  long long norm_arg = 0;
  if (parity == Parity::odd) {
    for (long long k = 1 - n; k <= n; ++k) {
      lhs += signed_power(k, 2 * m - 1) * sign_pow(k) * zfac(n - k) * zfac(n - 1 + k);
    }
    for (long long j = 1; j <= m; ++j) {
      rhs += pow4(n - j) * a_coeff(Parity::odd, m, j) *
             BigRat(binom(2 * n - 1, 2 * j - 1), (2 * n - 2 * j + 1)) / BigRat(factorial(4 * n - 1));
    }
    norm_arg = 4 * n - 1;
  } else {
    for (long long k = -n; k <= n; ++k) {
      lhs += signed_power(k, 2 * m) * sign_pow(k) * zfac(n - k) * zfac(n + k);
    }
    for (long long j = 1; j <= m; ++j) {
      rhs += pow4(n - j) * a_coeff(Parity::even, m, j) *
             BigRat(binom(2 * n, 2 * j), (2 * n - 2 * j + 1)) / BigRat(factorial(4 * n + 1));
    }
    norm_arg = 4 * n + 1;
  }
  LrPair scaled = lr_sides(parity == Parity::odd ? LrFamily::power_odd : LrFamily::power_even, m, n);
  BigRat norm = BigRat(1, factorial(norm_arg));
  if (lhs != scaled.lhs * norm) return {false, "factorial-weighted left side disagrees with scalar identity"};
  if (rhs != scaled.rhs * norm) return {false, "factorial-weighted right side disagrees with scalar identity"};
  if (lhs != rhs) return {false, "weighted sides disagree"};
  std::ostringstream os;
  os << "both sides equal " << to_decimal(lhs);
  return {true, os.str()};
}

}  // namespace mzv
