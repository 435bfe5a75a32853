#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "steiner/errors.hpp"
#include "steiner/polynomials.hpp"
#include "steiner/specfun.hpp"

using namespace steiner;
using doctest::Approx;

namespace {

const BodyKind kAll[] = {BodyKind::Ball, BodyKind::Cube, BodyKind::CrossPolytope, BodyKind::Simplex};
constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("Minkowski polynomial examples") {
  const auto cube = minkowski_polynomial({BodyKind::Cube, 2, 1.0});
  CHECK(cube.m(0) == Approx(4.0).epsilon(1e-14));
  CHECK(cube.m(1) == Approx(8.0).epsilon(1e-14));
  CHECK(cube.m(2) == Approx(kPi).epsilon(1e-14));
  const auto ball = minkowski_polynomial({BodyKind::Ball, 3, 1.0});
  CHECK(ball.m(0) == Approx(4 * kPi / 3).epsilon(1e-14));
  CHECK(ball.m(1) == Approx(4 * kPi).epsilon(1e-14));
  CHECK(ball.m(2) == Approx(4 * kPi).epsilon(1e-14));
  CHECK(ball.m(3) == Approx(4 * kPi / 3).epsilon(1e-14));
  CHECK(minkowski_polynomial({BodyKind::Simplex, 2, 1.0}).m(1) ==
        Approx(4.2426406871).epsilon(1e-10));
  // Value at t is the tube volume: square of side 2 grown by 1.
  CHECK(cube(1.0) == Approx(4 + 8 + kPi).epsilon(1e-14));
}

TEST_CASE("renormalization examples") {
  for (int n : {1, 4, 25}) {
    const auto p = renormalized({BodyKind::Ball, n, 2.0});
    for (int l = 0; l <= n; ++l) CHECK(p.mu(l) == Approx(1.0).epsilon(1e-12));
  }
  for (int n : {2, 3, 9}) CHECK(renormalized({BodyKind::Cube, n, 1.0}).mu(2) == Approx(kPi / 4).epsilon(1e-12));
  for (BodyKind k : kAll) {
    const auto p = renormalized({k, 7, 1.0});
    CHECK(p.c(0) == Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(p.mu(0) - 1.0) < 1e-12);
    CHECK(std::abs(p.mu(1) - 1.0) < 1e-12);
  }
  const auto m = minkowski_polynomial({BodyKind::Cube, 2, 1.0});
  CHECK_THROWS_AS(renormalize(m, 0.0, 4.0), DomainError);
  CHECK_THROWS_AS(renormalize(m, 2.0, -1.0), DomainError);
  const auto r = renormalize(m, 2.0, 4.0);
  CHECK(r.c(2) == Approx(kPi / 16).epsilon(1e-14));
}

TEST_CASE("mu from quermassintegrals") {
  for (double x : mu_from_quermass(std::vector<double>(6, 1.0))) CHECK(x == Approx(1.0));
  const auto mu = mu_from_quermass(std::vector<double>{4.0, 4.0, kPi});
  CHECK(mu[0] == Approx(1.0));
  CHECK(mu[1] == Approx(1.0));
  CHECK(mu[2] == Approx(kPi / 4));
  CHECK_THROWS_AS(mu_from_quermass(std::vector<double>{4.0, 0.0, 1.0}), DomainError);
  for (BodyKind k : kAll) {
    for (int n : {3, 17, 60}) {
      const FamilyInstance body{k, n, 1.0};
      const auto from_w = mu_from_quermass(intrinsic_volumes(body));
      const auto p = renormalized(body);
      for (int l = 0; l <= n; ++l) CHECK(std::abs(from_w[l] / p.mu(l) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("closed forms") {
  const auto b2 = closed_form_renormalized(BodyKind::Ball, 2);
  CHECK(b2.c(0) == Approx(1.0));
  CHECK(b2.c(1) == Approx(1.0));
  CHECK(b2.c(2) == Approx(0.25));
  const auto q2 = closed_form_renormalized(BodyKind::Cube, 2);
  CHECK(q2.c(2) == Approx(kPi / 16).epsilon(1e-14));
  const auto big = closed_form_renormalized(BodyKind::Cube, 100000);
  for (int l = 0; l <= 5; ++l) {
    const double limit = std::pow(std::sqrt(kPi) / 2, l) / (std::tgamma(l / 2.0 + 1) * std::tgamma(l + 1.0));
    CHECK(std::abs(big.c(l) - limit) < 1e-4 * limit);
  }
}

TEST_CASE("pipeline agrees with closed forms up to n = 60") {
  for (BodyKind k : kAll) {
    for (int n = 1; n <= 60; ++n) {
      const auto p = renormalized({k, n, 1.0});
      const auto q = closed_form_renormalized(k, n);
      for (int l = 0; l <= n; ++l) {
        CHECK(std::abs(p.log_c(l) - q.log_c(l)) < 1e-9);
      }
    }
  }
}

TEST_CASE("exact ball and cube coefficients") {
  for (int n : {1, 2, 13, 60}) {
    for (BodyKind k : {BodyKind::Ball, BodyKind::Cube}) {
      const auto exact = exact_renormalized_coefficients(k, n);
      const auto p = closed_form_renormalized(k, n);
      REQUIRE(exact.size() == static_cast<std::size_t>(n + 1));
      for (int l = 0; l <= n; ++l) CHECK(std::abs(exact[l].convert_to<double>() / p.c(l) - 1.0) < 1e-12);
    }
  }
  CHECK(exact_renormalized_coefficients(BodyKind::Cube, 2)[2].convert_to<double>() == Approx(kPi / 16).epsilon(1e-15));
  CHECK_THROWS_AS(exact_renormalized_coefficients(BodyKind::Simplex, 3), DomainError);
  CHECK_THROWS_AS(exact_renormalized_coefficients(BodyKind::Ball, 0), DomainError);
}

TEST_CASE("evaluation") {
  const auto b2 = renormalized({BodyKind::Ball, 2, 1.0});
  CHECK(std::abs(evaluate(b2, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(evaluate(b2, 2.0) - 4.0) < 1e-13);
  const auto q2 = renormalized({BodyKind::Cube, 2, 1.0});
  CHECK(std::abs(evaluate(q2, 1.0) - 2.1963495408) < 1e-10);
}

TEST_CASE("mu bounds and log-concavity checks") {
  CHECK(check_lemma1(renormalized({BodyKind::Ball, 10, 1.0})).ok());
  CHECK(check_lemma1(renormalized({BodyKind::Cube, 30, 1.0})).ok());
  std::vector<double> mu = {1.0, 1.0, 1.5, 0.5};
  const auto bad = RenormalizedPolynomial::from_mu({BodyKind::Cube, 3, 1.0}, mu);
  const auto report = check_lemma1(bad);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.kind == Lemma1Violation::Kind::AboveOne && v.index == 2) found = true;
  }
  CHECK(found);
  for (BodyKind k : kAll) {
    for (int n = 1; n <= 60; ++n) CHECK(check_lemma1(renormalized({k, n, 1.0})).ok());
  }
}

TEST_CASE("scale invariance") {
  for (BodyKind k : kAll) {
    for (int n : {1, 6, 30}) {
      const auto base = renormalized({k, n, 1.0});
      for (double a : {0.5, 3.7}) {
        const auto scaled = renormalized({k, n, a});
        for (int l = 0; l <= n; ++l) CHECK(std::abs(scaled.c(l) - base.c(l)) <= 1e-12 * base.c(l));
      }
    }
  }
}

TEST_CASE("dimensional consistency of m_l") {
  // m_l has units length^{n−l}: rescaling ρ by a multiplies m_l by a^{n−l}.
  for (BodyKind k : kAll) {
    const int n = 5;
    const auto p = minkowski_polynomial({k, n, 1.0});
    const auto q = minkowski_polynomial({k, n, 2.5});
    for (int l = 0; l <= n; ++l) {
      CHECK(std::abs(q.log_m(l) - p.log_m(l) - (n - l) * std::log(2.5)) < 1e-12);
    }
  }
}

TEST_CASE("coefficient bound and the exponential evaluation bound") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> radius(0.0, 5.0), angle(0.0, 2 * kPi);
  for (BodyKind k : kAll) {
    for (int n : {1, 2, 5, 20, 60}) {
      const auto p = renormalized({k, n, 1.0});
      CHECK(coefficient_bound_violations(p).empty());
      for (int i = 0; i < 100; ++i) {
        const auto tau = std::polar(radius(rng), angle(rng));
        CHECK(std::abs(evaluate(p, tau)) <= std::exp(std::abs(tau)) * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("large dimensions stay finite") {
  const auto p = renormalized({BodyKind::Cube, 1000, 1.0});
  CHECK(std::isfinite(p.log_c(1000)));
  CHECK(std::abs(p.mu(1) - 1.0) < 1e-10);
  const auto m = minkowski_polynomial({BodyKind::Ball, 400, 1.0});
  CHECK(std::isfinite(m.log_m(0)));
}
