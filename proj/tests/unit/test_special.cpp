#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "cnmf/special.hpp"

using namespace cnmf;

TEST_SUITE_BEGIN("special");

// Reference values from 50-digit numerical integration of the defining
// integrals (mpmath); see tests/tools/make_reference_values.py.

TEST_CASE("log U at (1,1,1) matches e*E1(1)") {
  CHECK(log_kummer_u(1, 1, 1) == doctest::Approx(-0.51693195900204561).epsilon(1e-12));
}

TEST_CASE("U(a, a+1, z) = z^-a closed form") {
  CHECK(log_kummer_u(2, 3, 5) == doctest::Approx(-std::log(25.0)).epsilon(1e-12));
}

TEST_CASE("large-parameter U") {
  CHECK(log_kummer_u(201, -50, 2) ==
        doctest::Approx(-998.46376060269280297).epsilon(1e-11));
  CHECK(log_kummer_u(41, -58, 0.02) ==
        doctest::Approx(-178.69204765181562783).epsilon(1e-11));
}

TEST_CASE("identity U(a, a+1, z) = z^-a over a parameter grid") {
  for (const double a : {0.5, 1.0, 3.0, 20.0, 150.0}) {
    for (const double z : {0.01, 0.5, 1.0, 30.0}) {
      const double got = log_kummer_u(a, a + 1.0, z);
      const double want = -a * std::log(z);
      CHECK(std::fabs(got - want) <= 1e-10 * std::max(1.0, std::fabs(want)));
    }
  }
}

TEST_CASE("U domain errors") {
  CHECK_THROWS_AS(log_kummer_u(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(log_kummer_u(1.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(log_kummer_u(-2.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("2F1 is 1 at z = 0") {
  CHECK(log_gauss_2f1(3.7, 1.2, 4.4, 0.0) == 0.0);
}

TEST_CASE("2F1(1,1;2;-1) = ln 2") {
  CHECK(log_gauss_2f1(1, 1, 2, -1) ==
        doctest::Approx(std::log(std::log(2.0))).epsilon(1e-12));
}

TEST_CASE("2F1(3,2;5;-0.7) against high-precision reference") {
  CHECK(log_gauss_2f1(3, 2, 5, -0.7) ==
        doctest::Approx(-0.67026770048790580433).epsilon(1e-12));
}

TEST_CASE("2F1 with fractional parameters (integrable endpoint singularity)") {
  CHECK(log_gauss_2f1(0.5, 0.5, 48, -3) ==
        doctest::Approx(std::log(0.98533647807160158930)).epsilon(1e-11));
}

TEST_CASE("2F1 domain errors") {
  CHECK_THROWS_AS(log_gauss_2f1(1, 2, 2, -1), std::domain_error);   // c == b
  CHECK_THROWS_AS(log_gauss_2f1(1, -1, 2, -1), std::domain_error);  // b <= 0
  CHECK_THROWS_AS(log_gauss_2f1(1, 1, 3, 0.5), std::domain_error);  // z > 0
}

TEST_SUITE_END();
