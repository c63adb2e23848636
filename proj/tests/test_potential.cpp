#include <doctest.h>

#include <cmath>
#include <random>

#include "compscal/condensates.hpp"
#include "compscal/errors.hpp"
#include "compscal/potential.hpp"
#include "compscal/vacuum.hpp"

using namespace compscal;

namespace {

SingletPotential synthetic(double mu2, double lam, double c_lin, double c_cub,
                           double sigma = 1.0) {
    return {PotentialCoeffs{mu2, lam, c_lin, c_cub, sigma}, 2};
}

} // namespace

TEST_CASE("potential_coeffs reference values, m_asym = 0") {
    const ModelParams p = derived_params(3, 1.0, 0.0);
    const PotentialCoeffs c = potential_coeffs(p, 0.0, 1.0);
    CHECK(c.mu2 == doctest::Approx(0.09855995912576229).epsilon(1e-14));
    CHECK(c.lam == doctest::Approx(0.07599088773175333).epsilon(1e-15));
    CHECK(c.c_lin == 0.0);
    CHECK(c.c_cub == 0.0);
    CHECK(c.sigma == 1.0);
}

TEST_CASE("potential_coeffs reference values, m_asym = 0.3") {
    const ModelParams p = derived_params(3, 1.0, 0.3);
    const double c_q = condensates_forward(3, 1.0, 0.3).c_q;
    const PotentialCoeffs c = potential_coeffs(p, c_q, 0.5);
    CHECK(c.mu2 == doctest::Approx(0.06556832430176314).epsilon(1e-14));
    CHECK(c.lam == doctest::Approx(0.037995443865876666).epsilon(1e-15));
    CHECK(c.c_lin == doctest::Approx(-0.03435838675132529).epsilon(1e-14));
    CHECK(c.c_cub == doctest::Approx(0.017940050678198594).epsilon(1e-14));
}

TEST_CASE("all potential coefficients vanish at the compositeness scale") {
    const ModelParams p = derived_params(3, 1.0, 0.3);
    const double c_q = condensates_forward(3, 1.0, 0.3).c_q;
    const PotentialCoeffs c = potential_coeffs(p, c_q, 0.0);
    CHECK(c.mu2 == 0.0);
    CHECK(c.lam == 0.0);
    CHECK(c.c_lin == 0.0);
    CHECK(c.c_cub == 0.0);
}

TEST_CASE("strict mode rejects a c_q inconsistent with the parameters") {
    const ModelParams p = derived_params(3, 1.0, 0.3);
    const double c_q = condensates_forward(3, 1.0, 0.3).c_q;
    CHECK_THROWS_AS(potential_coeffs(p, c_q * 1.001, 0.5), Error);
    try {
        potential_coeffs(p, 0.0, 0.5);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Inconsistent);
    }
    // Non-strict accepts any value (exploratory use).
    const PotentialCoeffs c = potential_coeffs(p, c_q * 1.001, 0.5, false);
    CHECK(c.c_lin == doctest::Approx(-0.03435838675132529 * 1.001).epsilon(1e-12));
}

TEST_CASE("potential_value on a literal coefficient set") {
    // U(1) = -2 mu2 + lam for the pure (mu2, lam) potential.
    const SingletPotential pot = synthetic(0.0985666, 0.0759909, 0.0, 0.0);
    const double expected = -2.0 * 0.0985666 + 0.0759909;
    CHECK(potential_value(pot, 1.0) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(potential_value(pot, 1.0) == doctest::Approx(-0.1211423).epsilon(1e-9));
}

TEST_CASE("potential_value domain and growth") {
    const ModelParams p = derived_params(3, 1.0, 0.0);
    const SingletPotential pot = singlet_potential(p, 0.0, 1.0);
    CHECK_THROWS_AS(potential_value(pot, 0.0), Error);
    CHECK_THROWS_AS(potential_value(pot, -1.0), Error);
    // Quartic dominance far above the scale.
    CHECK(potential_value(pot, 10.0) > 0.0);
    CHECK(potential_value(pot, 100.0) > potential_value(pot, 10.0));
}

TEST_CASE("potential_derivatives match finite differences") {
    for (double ratio : {0.0, 0.3}) {
        const ModelParams p = derived_params(3, 1.0, ratio);
        const double c_q = condensates_forward(3, 1.0, ratio).c_q;
        const SingletPotential pot = singlet_potential(p, c_q, 0.7);
        for (double s : {0.5, 1.0, 2.0}) {
            const double h = 1e-5 * s;
            const double up = potential_value(pot, s + h);
            const double um = potential_value(pot, s - h);
            const double uc = potential_value(pot, s);
            const PotentialDerivs d = potential_derivatives(pot, s);
            const double fd1 = (up - um) / (2 * h);
            const double fd2 = (up - 2 * uc + um) / (h * h);
            CHECK(std::abs(fd1 - d.first) / std::max(1.0, std::abs(d.first)) < 1e-6);
            CHECK(std::abs(fd2 - d.second) / std::max(1.0, std::abs(d.second)) < 1e-6);
        }
    }
}

TEST_CASE("first derivative vanishes at the m_asym = 0 vacuum") {
    const ModelParams p = derived_params(3, 1.0, 0.0);
    const SingletPotential pot = singlet_potential(p, 0.0, 1.0);
    const double phi0 = vacuum_closed_form_m0(p, 1.0);
    CHECK(std::abs(potential_derivatives(pot, phi0).first) < 1e-10);
    // U'' at that vacuum reduces to 8 lam phi0^2.
    CHECK(potential_derivatives(pot, phi0).second ==
          doctest::Approx(0.7884796730060982).epsilon(1e-12));
}

TEST_CASE("U' is 4 lam times the monic stationarity cubic") {
    const ModelParams p = derived_params(3, 1.0, 0.3);
    const double c_q = condensates_forward(3, 1.0, 0.3).c_q;
    const SingletPotential pot = singlet_potential(p, c_q, 0.5);
    const CubicCoefficients cc = cubic_coefficients(p, c_q, 0.5);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.05, 3.0);
    for (int i = 0; i < 10; ++i) {
        const double s = dist(rng);
        const double cubic = ((s + cc.a2) * s + cc.a1) * s + cc.a0;
        const double lhs = potential_derivatives(pot, s).first;
        const double rhs = 4.0 * pot.coeffs.lam * cubic;
        CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)) < 1e-12);
    }
}

TEST_CASE("kinetic_constant values and scaling") {
    const ModelParams p = derived_params(3, 1.0, 0.0);
    CHECK(kinetic_constant(p, 1.0, 1.0) ==
          doctest::Approx(0.15198177546350666).epsilon(1e-15));
    CHECK(kinetic_constant(p, 0.0, 1.7) == 0.0);
    // Quadratic in phi0, linear in sigma.
    CHECK(kinetic_constant(p, 1.0, 2.0) ==
          doctest::Approx(4.0 * kinetic_constant(p, 1.0, 1.0)).epsilon(1e-15));
    CHECK(kinetic_constant(p, 0.5, 1.0) ==
          doctest::Approx(0.5 * kinetic_constant(p, 1.0, 1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(kinetic_constant(p, 1.0, 0.0), Error);
    CHECK_THROWS_AS(kinetic_constant(p, -0.5, 1.0), Error);
}

TEST_CASE("quartic_coupling is shared with the shift outputs") {
    CHECK(quartic_coupling(3, 1.0) ==
          doctest::Approx(0.07599088773175333).epsilon(1e-15));
    CHECK(quartic_coupling(3, 0.0) == 0.0);
}
