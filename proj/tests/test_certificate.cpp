#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/certificate.hpp"
#include "mzv/polynomial.hpp"

#include <string>

using namespace mzv;

namespace {

const std::string kDataDir = MZV_DATA_DIR;

Certificate load_pascal() { return load_certificate(kDataDir + "/certificates/pascal_row_sum.json"); }
Certificate load_prop() { return load_certificate(kDataDir + "/certificates/proposition_m1.json"); }

}  // namespace

TEST_CASE("pascal fixture loads and has the declared shape") {
  Certificate cert = load_pascal();
  CHECK(cert.kind == "pascal-row-sum");
  CHECK(cert.order == 1);
  CHECK(cert.coeffs.size() == 2);
  CHECK(cert.coeffs[0] == IntPoly::constant(2));
  CHECK(cert.coeffs[1] == IntPoly::constant(1));
  CHECK(cert.families.count("F0") == 1);
}

TEST_CASE("pascal fixture verifies") {
  Certificate cert = load_pascal();
  CertReport rep = verify_certificate(cert, "F0", cert.m, 40, 2026);
  for (const CertCell& c : rep.cells) {
    CAPTURE(c.key);
    CAPTURE(c.detail);
    CHECK(c.ok);
  }
  CHECK(rep.ok());
  CHECK(rep.samples_used > 0);
}

TEST_CASE("perturbing a pascal coefficient is caught") {
  Certificate cert = load_pascal();
  cert.coeffs[0] = cert.coeffs[0] + IntPoly::constant(1);
  CertReport rep = verify_certificate(cert, "F0", cert.m, 40, 2026);
  CHECK_FALSE(rep.ok());
  bool rational_failed = false;
  for (const CertCell& c : rep.cells) {
    if (c.key == "rational-identity") rational_failed = !c.ok;
  }
  CHECK(rational_failed);
}

TEST_CASE("perturbing the pascal multiplier is caught on the grid") {
  Certificate cert = load_pascal();
  RationalFunction& rf = cert.families.at("F0");
  rf.num = rf.num + BivarPoly::constant(1);
  CertReport rep = verify_certificate(cert, "F0", cert.m, 40, 2026);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("telescoping certificate for the three summand families verifies") {
  Certificate cert = load_prop();
  CHECK(cert.kind == "proposition-families");
  CHECK(cert.order == 3);
  CHECK(cert.m == 1);
  for (const std::string& fam : {"F0", "F1", "F2"}) {
    CertReport rep = verify_certificate(cert, fam, cert.m, 40, 2026);
    for (const CertCell& c : rep.cells) {
      CAPTURE(fam);
      CAPTURE(c.key);
      CAPTURE(c.detail);
      CHECK(c.ok);
    }
    CHECK(rep.ok());
  }
}

TEST_CASE("seeded sampling is deterministic") {
  Certificate cert = load_prop();
  CertReport a = verify_certificate(cert, "F0", cert.m, 25, 77);
  CertReport b = verify_certificate(cert, "F0", cert.m, 25, 77);
  CHECK(a.samples_used == b.samples_used);
  CHECK(a.samples_rejected == b.samples_rejected);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].key == b.cells[i].key);
    CHECK(a.cells[i].ok == b.cells[i].ok);
    CHECK(a.cells[i].detail == b.cells[i].detail);
  }
}

TEST_CASE("unknown family name is rejected") {
  Certificate cert = load_pascal();
  CHECK_THROWS_AS(verify_certificate(cert, "F9", cert.m, 5, 1), CertificateError);
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(load_certificate(kDataDir + "/certificates/does_not_exist.json"),
                  CertificateError);
  CHECK_THROWS_AS(parse_certificate("not json at all"), CertificateError);
  CHECK_THROWS_AS(parse_certificate("{}"), CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"order": 1, "coeffs": [["2"]], "families": {}, "m": 1})"),
                  CertificateError);
  // coeffs must hold order+1 polynomials
  CHECK_THROWS_AS(parse_certificate(R"({
    "order": 2,
    "coeffs": [["2"], ["1"]],
    "families": {"F0": {"num": [["1"]], "den": [["1"]]}},
    "m": 1
  })"),
                  CertificateError);
  // denominator must not be identically zero
  CHECK_THROWS_AS(parse_certificate(R"({
    "order": 1,
    "coeffs": [["2"], ["1"]],
    "families": {"F0": {"num": [["1"]], "den": [["0"]]}},
    "m": 1
  })"),
                  CertificateError);
}
