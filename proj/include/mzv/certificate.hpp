#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzv/polynomial.hpp"
#include "mzv/rational.hpp"

namespace mzv {

struct CertificateError : std::runtime_error {
  explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

// Telescoping certificate for a recurrence
//   sum_{j=0}^{order} (-1)^{order-j} c_j(n) F(n+j,k) = G(n,k+1) - G(n,k)
// with G = R * F, one rational function R per summand family.
// kind selects the summand model the verifier checks against:
//   "pascal-row-sum":       F0 = C(n,k)                second member of the fixture set
//   "proposition-families": F0, F1, F2 of the shared order-3 recurrence, parameter m
struct Certificate {
  std::string kind;
  long long order = 0;
  std::vector<IntPoly> coeffs;  // c_0 .. c_order
  std::map<std::string, RationalFunction> families;
  long long m = 0;
};

// Throws CertificateError on I/O failure, malformed JSON, or schema violations.
Certificate load_certificate(const std::string& path);
Certificate parse_certificate(const std::string& json_text);

struct CertCell {
  std::string key;
  bool ok = false;
  std::string detail;
};

struct CertReport {
  std::vector<CertCell> cells;
  long long degree_bound = 0;
  long long samples_used = 0;
  long long samples_rejected = 0;
  bool ok() const;
};

// Checks, for the named family:
//   1. the telescoping relation as an exact rational-function identity in (n,k),
//   2. the same identity at `samples` seeded random points (degree bound declared),
//   3. exact term-level telescoping on the integer grid 1 <= n <= 8, |k| <= n+4
//      (points where R is undefined at (n,k) or (n,k+1) are skipped and counted),
//   4. vanishing of F outside its support window,
//   5. the implied recurrence on the exact row sums S(n) = sum_k F(n,k).
CertReport verify_certificate(const Certificate& cert, const std::string& family, long long m,
                              long long samples, std::uint64_t seed);

}  // namespace mzv
