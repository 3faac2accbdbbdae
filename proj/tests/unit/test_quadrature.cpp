#include <doctest.h>

#include <cmath>
#include <numeric>

#include "lanheat/errors.hpp"
#include "lanheat/quadrature.hpp"

using namespace lanheat;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (std::size_t n : {2u, 5u, 16u, 104u}) {
    const GaussLegendre rule(n);
    CHECK(rule.order() == n);
    const double wsum = std::accumulate(rule.weights().begin(), rule.weights().end(), 0.0);
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    const int degree = static_cast<int>(std::min<std::size_t>(2 * n - 1, 31));
    for (int p = 0; p <= degree; ++p) {
      const double exact = (std::pow(2.0, p + 1) - std::pow(-1.0, p + 1)) / (p + 1);
      CHECK(rule.integrate([p](double x) { return std::pow(x, p); }, -1.0, 2.0) ==
            doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("Gauss-Legendre nodes are symmetric and inside the interval") {
  const GaussLegendre rule(104);
  const auto& x = rule.nodes();
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(x[i]) < 1.0);
    CHECK(std::abs(x[i] + x[x.size() - 1 - i]) < 1e-14);
  }
}

TEST_CASE("composite panels") {
  const GaussLegendre rule(24);
  const double v = rule.integrate_panels([](double x) { return std::abs(x); }, {-1.0, 0.0, 0.0, 2.0});
  CHECK(v == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(rule.integrate_panels([](double x) { return std::exp(-x); }, {0, 1, 3, 10, 40}) ==
        doctest::Approx(1.0 - std::exp(-40.0)).epsilon(1e-12));
}

TEST_CASE("order below two is rejected") {
  CHECK_THROWS_AS(GaussLegendre(1), ValidationError);
  CHECK_THROWS_AS(GaussLegendre(0), ValidationError);
}

TEST_CASE("scaled complementary error function") {
  for (double x = -3.0; x < 6.0; x += 0.25) CHECK(erfcx(x) == doctest::Approx(std::exp(x * x) * std::erfc(x)).epsilon(1e-12));
  CHECK(erfcx(0.0) == 1.0);
  // Continuity across the switch to the asymptotic series.
  CHECK(erfcx(25.0 - 1e-9) == doctest::Approx(erfcx(25.0 + 1e-9)).epsilon(1e-10));
  CHECK(erfcx(25.0) == doctest::Approx(0.022549572432641359).epsilon(1e-13));
  // Leading behaviour 1/(x sqrt(pi)).
  CHECK(erfcx(1e6) * 1e6 * std::sqrt(M_PI) == doctest::Approx(1.0).epsilon(1e-10));
  double previous = erfcx(-2.0);
  for (double x = -1.9; x < 100.0; x += 0.1) {
    CHECK(erfcx(x) < previous);
    previous = erfcx(x);
  }
}
