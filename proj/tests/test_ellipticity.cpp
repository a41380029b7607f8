#include "doctest.h"
#include "support.hpp"
#include "ucb/ellipticity.hpp"
#include "ucb/errors.hpp"

using namespace ucb;
using testing_support::blaschke_direct;
using testing_support::Rng;

TEST_CASE("t and u") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(t_of_s(n, inner_radius(n)) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(u_of_s(n, inner_radius(n)) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(t_of_s(n, 1.0 - 1e-9) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(u_of_s(n, 1.0 - 1e-9) == doctest::Approx(-1.0).epsilon(1e-7));
    CHECK_THROWS_AS(t_of_s(n, inner_radius(n) - 0.01), PreconditionError);
    CHECK_THROWS_AS(u_of_s(n, 1.0), PreconditionError);
  }
  CHECK(t_of_s(2, 0.5) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(u_of_s(2, 0.5) == doctest::Approx(-0.875).epsilon(1e-15));
}

TEST_CASE("the arc K") {
  CHECK(k_arc(2, 0.2, 0.0).kind == CircleArc::Kind::Empty);
  const CircleArc pt = k_arc(2, 1.0 / 3.0, 0.0);
  CHECK(pt.kind == CircleArc::Kind::Point);
  CHECK(pt.phi1 == doctest::Approx(kPi));

  const CircleArc k = k_arc(2, 0.5, 0.0);
  REQUIRE(k.kind == CircleArc::Kind::Arc);
  CHECK(k.phi1 == doctest::Approx(std::acos(-0.25)).epsilon(1e-13));
  CHECK(k.phi2 == doctest::Approx(kTwoPi - std::acos(-0.25)).epsilon(1e-13));
  CHECK(k.phi1 == doctest::Approx(1.8235).epsilon(1e-4));
  CHECK(k.phi2 == doctest::Approx(4.4597).epsilon(1e-4));
  CHECK(boundary_derivative_modulus({2, 0.5}, k.phi1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k.contains(kPi));
  CHECK_FALSE(k.contains(0.0));
  CHECK(k.contains(kPi + kTwoPi));

  Rng rng(30);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(2, 6);
    const double s = rng.uniform(inner_radius(n) + 1e-3, 0.99), psi = rng.uniform(0, kTwoPi);
    const CircleArc a = k_arc(n, s, psi);
    REQUIRE(a.kind == CircleArc::Kind::Arc);
    CHECK(a.phi1 >= psi);
    CHECK(a.phi2 < psi + kTwoPi);
    CHECK(0.5 * (a.phi1 + a.phi2) == doctest::Approx(psi + kPi).epsilon(1e-12));
    const UnicriticalBlaschke b = UnicriticalBlaschke::from_polar(n, s, psi);
    CHECK(boundary_derivative_modulus(b, a.phi1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(boundary_derivative_modulus(b, a.phi2) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("arc lengths against sampling and the lift") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(std::abs(arc_length_K(n, inner_radius(n))) < 1e-7);
    CHECK(std::abs(arc_length_BK(n, inner_radius(n))) < 1e-6);
  }
  CHECK(arc_length_K(2, 0.5) == doctest::Approx(2.6362).epsilon(1e-4));
  // 2(2π − 2 arccos(−0.875)) = 2.02144...
  CHECK(arc_length_BK(2, 0.5) == doctest::Approx(2.0214).epsilon(1e-4));

  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(2, 6);
    const double s = rng.uniform(inner_radius(n) + 0.01, 0.97);
    const cplx w = std::polar(s, rng.uniform(0, kTwoPi));
    CHECK(std::abs(arc_length_K(n, s) - testing_support::contracting_measure(n, w, 1'000'000)) <
          1e-4);
    const CircleArc k = k_arc(n, s, std::arg(w));
    const double image = testing_support::unwrapped_arg_change(n, w, k.phi1, k.phi2, 20000);
    CHECK(std::abs(arc_length_BK(n, s) - image) < 1e-4);
  }
}

TEST_CASE("arc length derivatives") {
  CHECK(p_prime(2, 0.5) == doctest::Approx(7.2296).epsilon(1e-4));
  CHECK(q_prime(2, 0.5) == doctest::Approx(2.0656).epsilon(1e-4));
  for (int n = 2; n <= 6; ++n) {
    const double lo = inner_radius(n);
    for (int k = 1; k <= 50; ++k) {
      const double s = lo + (0.99 - lo) * k / 51.0;
      const double fp = testing_support::central_difference([&](double x) { return arc_length_K(n, x); }, s);
      const double fq = testing_support::central_difference([&](double x) { return arc_length_BK(n, x); }, s);
      CHECK(std::abs(p_prime(n, s) - fp) <= 1e-5 * std::abs(fp));
      CHECK(std::abs(q_prime(n, s) - fq) <= 1e-5 * std::abs(fq));
      CHECK(p_prime(n, s) > q_prime(n, s));
    }
  }
}

TEST_CASE("special angles") {
  CHECK(is_always_elliptic_angle(2, 0.0));
  CHECK_FALSE(is_always_elliptic_angle(2, kPi));
  CHECK(is_always_elliptic_angle(3, kPi / 2));
  CHECK(is_m_point_angle(2, kPi));
  CHECK_FALSE(is_m_point_angle(2, 0.0));
  CHECK(is_m_point_angle(3, 0.0));

  // Geometric definitions: B maps the antipode of the critical direction to
  // e^{iψ} on always-elliptic rays and fixes it on m-point rays.
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k < 4 * (n - 1); ++k) {
      const double psi = kPi * k / (2 * (n - 1));
      for (double s : {0.3, 0.6, 0.9}) {
        const cplx image = blaschke_direct(n, std::polar(s, psi), unit(psi + kPi));
        if (is_always_elliptic_angle(n, psi)) CHECK(std::abs(image - unit(psi)) < 1e-12);
        if (is_m_point_angle(n, psi)) CHECK(std::abs(image - unit(psi + kPi)) < 1e-12);
      }
      CHECK_FALSE((is_m_point_angle(n, psi) && is_always_elliptic_angle(n, psi)));
    }
}

TEST_CASE("endpoint displacements") {
  const EndpointDisplacement near = endpoint_displacement(2, 0.4, kPi / 2);
  CHECK(near.d1 != 0.0);
  CHECK(near.d2 != 0.0);
  CHECK(std::signbit(near.d1) == std::signbit(near.d2));
  CHECK(fixed_point_margin(2, 0.4, kPi / 2) < 0.0);
  CHECK(fixed_point_margin(2, 0.95, kPi / 2) > 0.0);
}

TEST_CASE("s_zero") {
  RayClassification r = s_zero(2, kPi);
  CHECK(r.kind == RayClassification::Kind::ThresholdAt);
  CHECK(r.is_m_point_ray);
  CHECK(r.s0 == 1.0 / 3.0);
  CHECK(s_zero(2, 0.0).always_elliptic());

  r = s_zero(2, kPi / 2);
  REQUIRE(r.kind == RayClassification::Kind::ThresholdAt);
  CHECK(r.s0 > 1.0 / 3.0);
  CHECK(r.s0 < 1.0);
  CHECK(testing_support::orbit_escapes(2, std::polar(r.s0 - 0.01, kPi / 2)) == 0);
  CHECK(testing_support::orbit_escapes(2, std::polar(r.s0 + 0.01, kPi / 2)) == 1);

  CHECK(std::isnan(threshold_on_ray(2, 0.0)));
  CHECK(threshold_on_ray(2, kPi) == 1.0 / 3.0);
}

TEST_CASE("threshold symmetries") {
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(2, 6);
    const double psi = rng.uniform(0, kTwoPi);
    const double a = threshold_on_ray(n, psi);
    if (std::isnan(a)) continue;
    CHECK(std::abs(threshold_on_ray(n, psi + sector_angle(n)) - a) < 1e-10);
    CHECK(std::abs(threshold_on_ray(n, kTwoPi - psi) - a) < 1e-10);
  }
}

TEST_CASE("the inner-radius quadratic") {
  // |z| = 1 for z = ((1−n) + (n+1)r²)/(2r) means |(n+1)r² − (n−1)| = 2r. With
  // the + sign the roots are 1 and −(n−1)/(n+1); with the − sign −1 and
  // (n−1)/(n+1). The admissible moduli are 1 and (n−1)/(n+1).
  for (int n = 2; n <= 10; ++n) {
    const double a = n + 1, c = 1 - n;
    const double s_in = inner_radius(n);
    CHECK(std::abs(std::abs(a + c) - 2.0) < 1e-15);
    CHECK(std::abs(std::abs(a * s_in * s_in + c) - 2.0 * s_in) < 1e-14);
    const double disc = std::sqrt(4.0 - 4.0 * a * c);
    CHECK(std::abs((2.0 + disc) / (2 * a) - 1.0) < 1e-15);
    CHECK(std::abs((2.0 - disc) / (2 * a) + s_in) < 1e-15);
  }
}

TEST_CASE("classification examples") {
  BlaschkeClass c = classify_unicritical(2, 0.0);
  CHECK(c.kind == Dynamics::Elliptic);
  CHECK(std::abs(c.dw_point) < 1e-15);
  CHECK(std::abs(c.multiplier) < 1e-15);

  c = classify_unicritical(2, -1.0 / 3.0);
  CHECK(c.kind == Dynamics::Parabolic);
  CHECK(std::abs(c.dw_point - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(c.multiplier) - 1.0) < 1e-12);

  c = classify_unicritical(2, -0.5);
  CHECK(c.kind == Dynamics::Hyperbolic);
  CHECK(std::abs(std::abs(c.dw_point) - 1.0) < 1e-12);
  CHECK(std::abs(derivative({2, -0.5}, c.dw_point)) < 1.0);
  CHECK(std::abs(blaschke_direct(2, -0.5, c.dw_point) - c.dw_point) < 1e-12);
  CHECK(c.multiplier.real() > 0.0);
  CHECK(c.multiplier.real() < 1.0);
}

TEST_CASE("classification agrees with the critical orbit") {
  Rng rng(33);
  int tested = 0;
  while (tested < 150) {
    const int n = rng.integer(2, 4);
    const cplx w = rng.disk(0.97);
    const double s0 = threshold_on_ray(n, std::arg(w));
    if (!std::isnan(s0) && std::abs(std::abs(w) - s0) < 2e-2) continue;
    const int oracle = testing_support::orbit_escapes(n, w);
    if (oracle < 0) continue;
    const Dynamics d = classify_unicritical(n, w).kind;
    CHECK(d == (oracle == 0 ? Dynamics::Elliptic : Dynamics::Hyperbolic));
    ++tested;
  }
}

TEST_CASE("elliptic set along rays is an initial interval") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 32; ++k) {
      const double psi = kTwoPi * (k + 0.37) / 32;
      const double s0 = threshold_on_ray(n, psi);
      for (int j = 1; j < 40; ++j) {
        const double s = j / 40.0;
        if (!std::isnan(s0) && std::abs(s - s0) < 1e-9) continue;
        const Dynamics d = classify_unicritical(n, std::polar(s, psi)).kind;
        const bool elliptic = std::isnan(s0) || s < s0;
        CHECK(d == (elliptic ? Dynamics::Elliptic : Dynamics::Hyperbolic));
      }
    }
}

TEST_CASE("sector reduction") {
  CHECK(in_sector(3, cplx(0.1, 0.1)));
  CHECK_FALSE(in_sector(3, cplx(-0.1, -0.1)));
  CHECK(in_sector(2, cplx(-0.1, -0.1)));
  // Within 1e−12 below the upper edge counts as the seam, which belongs to 0.
  const cplx seam = std::polar(0.3, sector_angle(4) - 1e-13);
  CHECK_FALSE(in_sector(4, seam));
  CHECK(std::abs(reduce_to_sector(4, seam) - 0.3) < 1e-12);
  Rng rng(34);
  for (int k = 0; k < 100; ++k) {
    const int n = rng.integer(2, 6);
    const cplx w = rng.disk(0.99);
    const cplx r = reduce_to_sector(n, w);
    CHECK(in_sector(n, r));
    CHECK(std::abs(std::abs(r) - std::abs(w)) < 1e-15);
    const double turns = (std::arg(w) - std::arg(r)) / sector_angle(n);
    CHECK(std::abs(turns - std::round(turns)) < 1e-9);
  }
}

TEST_CASE("membership in E_n and M_n") {
  CHECK(in_E_n(2, 0.2));
  CHECK(in_M_n(2, -1.0 / 3.0));
  CHECK_FALSE(in_E_n(2, -1.0 / 3.0));
  CHECK(in_E_n(3, 0.49));
  CHECK_FALSE(in_E_n(3, 0.51));
  CHECK(in_M_n(3, 0.5));
  CHECK_THROWS_AS(in_E_n(3, cplx(-0.1, -0.1)), PreconditionError);
  CHECK(in_tilde_E_n(3, cplx(-0.1, -0.1)));
  CHECK(in_tilde_M_n(4, m_point(4) * unit(sector_angle(4))));
}

TEST_CASE("m points") {
  CHECK(m_point(2) == cplx(-1.0 / 3.0, 0.0));
  CHECK(std::abs(m_point(3) - 0.5) < 1e-15);
  CHECK(std::abs(m_point(4) - std::polar(0.6, kPi / 3)) < 1e-15);
  for (int n = 3; n <= 6; ++n) {
    const cplx w = m_point(n);
    const cplx z = unit(std::arg(w) + kPi);
    CHECK(std::abs(blaschke_direct(n, w, z) - z) < 1e-10);
    CHECK(std::abs(second_derivative({n, w}, z)) < 1e-8);
    CHECK(classify_unicritical(n, w).kind == Dynamics::Parabolic);
  }
}

TEST_CASE("parabolic Denjoy-Wolff point") {
  CHECK(std::abs(parabolic_dw_point(2, 1.0 / 3.0, kPi) - 1.0) < 1e-15);
  const RayClassification r = s_zero(3, 1.0);
  const cplx z = parabolic_dw_point(3, r.s0, 1.0);
  const cplx w = std::polar(r.s0, 1.0);
  CHECK(std::abs(blaschke_direct(3, w, z) - z) < 1e-9);
  CHECK(std::abs(std::abs(derivative({3, w}, z)) - 1.0) < 1e-6);
}
