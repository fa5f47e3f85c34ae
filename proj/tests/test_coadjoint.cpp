#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace liecontract;
using testing_support::random_vector;

namespace {

Vector e3(std::size_t i) { return Vector::Unit(3, static_cast<Eigen::Index>(i)); }

// ad*_X μ from the pairing identity, component by component.
Eigen::VectorXd ad_star_by_pairing(const LieAlgebra& g, const Vector& X, const Eigen::VectorXd& mu) {
  Eigen::VectorXd out(mu.size());
  for (Eigen::Index k = 0; k < mu.size(); ++k) out[k] = -mu.dot(bracket(g, X, g.basis_vector(static_cast<std::size_t>(k))));
  return out;
}

// Classical RK4 on dμ/dt = ad*_X μ.
Eigen::VectorXd rk4_flow(const LieAlgebra& g, const Vector& X, Eigen::VectorXd mu, double t, int steps) {
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const auto k1 = ad_star_by_pairing(g, X, mu);
    const auto k2 = ad_star_by_pairing(g, X, mu + 0.5 * h * k1);
    const auto k3 = ad_star_by_pairing(g, X, mu + 0.5 * h * k2);
    const auto k4 = ad_star_by_pairing(g, X, mu + h * k3);
    mu += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return mu;
}

DualVector dual(const Eigen::VectorXd& v) { return DualVector(v); }

}  // namespace

TEST(AdStar, PairingIdentity) {
  for (const auto& g : testing_support::catalog_algebras()) {
    for (int trial = 0; trial < 50; ++trial) {
      const Vector xi = random_vector(3), eta = random_vector(3);
      const DualVector mu = dual(random_vector(3));
      EXPECT_NEAR(ad_star(g, xi, mu).pair(eta) + mu.pair(bracket(g, xi, eta)), 0.0, 1e-12);
    }
  }
}

TEST(AdStar, Examples) {
  // ⟨ad*_{e3} e1*, e2⟩ = -⟨e1*, [e3, e2]⟩ = -⟨e1*, -e1⟩ = 1.
  EXPECT_EQ(ad_star(su2(), e3(2), DualVector::basis(3, 0)).coeffs(), Eigen::Vector3d(0, 1, 0));
  // ⟨ad*_{e1} e3*, e2⟩ = -⟨e3*, [e1, e2]⟩ = -1.
  EXPECT_EQ(ad_star(heisenberg3(), e3(0), DualVector::basis(3, 2)).coeffs(), Eigen::Vector3d(0, -1, 0));
  EXPECT_EQ(ad_star(su2(), Vector::Zero(3), dual(random_vector(3))).coeffs(), Eigen::Vector3d::Zero());
  EXPECT_THROW(ad_star(su2(), e3(0), DualVector::zero(2)), DimensionError);
}

TEST(Stabilizer, Examples) {
  const auto s = stabilizer_subalgebra(su2(), dual(Eigen::Vector3d(0, 0, 2)));
  ASSERT_EQ(s.dim, 1u);
  EXPECT_EQ(s.orbit_dim, 2u);
  EXPECT_NEAR(std::abs(s.basis[0].dot(e3(2))), 1.0, 1e-12);
  EXPECT_EQ(stabilizer_subalgebra(su2(), DualVector::zero(3)).dim, 3u);
  const auto h = stabilizer_subalgebra(heisenberg3(), dual(Eigen::Vector3d(0, 0, 1.5)));
  ASSERT_EQ(h.dim, 1u);
  EXPECT_NEAR(std::abs(h.basis[0].dot(e3(2))), 1.0, 1e-12);
  // μ = e1* on h3 pairs to zero with the center's bracket image: stabilizer is everything.
  EXPECT_EQ(stabilizer_subalgebra(heisenberg3(), DualVector::basis(3, 0)).dim, 3u);
}

TEST(Stabilizer, OrbitDimensionIsEven) {
  for (const auto& g : testing_support::catalog_algebras()) {
    for (int trial = 0; trial < 20; ++trial) {
      const DualVector mu = dual(random_vector(3));
      const auto s = stabilizer_subalgebra(g, mu);
      EXPECT_EQ(s.orbit_dim % 2, 0u);
      for (const auto& v : s.basis) EXPECT_LE(ad_star(g, v, mu).coeffs().norm(), 1e-12);
    }
  }
}

TEST(SymplecticForm, Examples) {
  const DualVector mu = dual(Eigen::Vector3d(0, 0, 2));
  EXPECT_EQ(symplectic_form(su2(), mu, e3(0), e3(1)), 2.0);
  EXPECT_EQ(symplectic_form(su2(), mu, e3(1), e3(0)), -2.0);
  EXPECT_EQ(symplectic_form(su2(), mu, e3(2), e3(0)), 0.0);
}

TEST(CoadjointFlow, MatchesRk4) {
  for (const auto& g : testing_support::catalog_algebras()) {
    for (int trial = 0; trial < 5; ++trial) {
      const Vector X = random_vector(3);
      const Eigen::VectorXd mu = random_vector(3);
      const double t = 1.3;
      EXPECT_LE((coadjoint_flow(g, X, dual(mu), t).coeffs() - rk4_flow(g, X, mu, t, 2000)).norm(), 1e-10);
    }
  }
}

TEST(CoadjointFlow, Examples) {
  const DualVector mu = DualVector::basis(3, 0);
  EXPECT_EQ(coadjoint_flow(su2(), e3(2), mu, 0.0).coeffs(), mu.coeffs());
  // Quarter turn about e3 carries e1* to e2*.
  EXPECT_LE((coadjoint_flow(su2(), e3(2), mu, std::numbers::pi / 2).coeffs() - Eigen::Vector3d(0, 1, 0)).norm(), 1e-12);
  const DualVector m = dual(random_vector(3));
  EXPECT_LE((coadjoint_flow(heisenberg3(), e3(2), m, 5.0).coeffs() - m.coeffs()).norm(), 1e-15);
}

TEST(CoadjointFlow, OneParameterGroup) {
  for (const auto& g : testing_support::catalog_algebras()) {
    const Vector X = random_vector(3);
    const DualVector mu = dual(random_vector(3));
    const double s = 0.7, t = -1.1;
    EXPECT_LE((coadjoint_flow(g, X, mu, s + t).coeffs() - coadjoint_flow(g, X, coadjoint_flow(g, X, mu, s), t).coeffs()).norm(),
              1e-10);
  }
}

TEST(CoadjointFlow, Su2PreservesNorm) {
  for (int trial = 0; trial < 20; ++trial) {
    const Vector X = random_vector(3, 3.0);
    const DualVector mu = dual(random_vector(3));
    EXPECT_NEAR(coadjoint_flow(su2(), X, mu, 2.0).coeffs().norm(), mu.coeffs().norm(), 1e-10);
  }
}

TEST(OrbitDeform, ApproachesHeisenbergOrbit) {
  const auto spec = ContractionSpec::anti_iw({1, 1, 0});
  const std::vector<FlowSample> flows{{e3(0), 0.5}, {e3(1), -0.3}, {Eigen::Vector3d(0.2, 0.4, 1.0), 1.0}};
  double previous = 1e300;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const auto sample = orbit_deform(heisenberg3(), su2(), spec, DualVector::basis(3, 2), eps, flows);
    double worst = 0.0;
    for (std::size_t p = 0; p < flows.size(); ++p) {
      // The limit is the Heisenberg coadjoint flow, computed independently.
      const Eigen::VectorXd want = rk4_flow(heisenberg3(), flows[p].X, Eigen::Vector3d(0, 0, 1), flows[p].t, 200);
      worst = std::max(worst, (sample.points[p].coeffs() - want).norm());
      EXPECT_LE((sample.limit_points[p].coeffs() - want).norm(), 1e-10);
    }
    EXPECT_LT(worst, previous);
    previous = worst;
  }
  EXPECT_LT(previous, 1e-3);
}

TEST(OrbitDeform, CentralCoordinateStaysNearLambda) {
  const auto spec = ContractionSpec::anti_iw({1, 1, 0});
  const auto sample = orbit_deform(heisenberg3(), su2(), spec, DualVector::basis(3, 2), 1e-3, {{e3(0), 0.1}, {e3(1), 0.1}});
  for (const auto& p : sample.points) EXPECT_NEAR(p[2], 1.0, 1e-2);
  ASSERT_TRUE(sample.casimir_spread);
  // The G1-frame point is e3*/ε², so compare the spread relative to its Casimir.
  const double scale = std::abs(*quadratic_casimir(su2(), dual(Eigen::Vector3d(0, 0, 1e6))));
  EXPECT_LE(*sample.casimir_spread, 1e-12 * scale);
}

TEST(OrbitDeform, IdentityScalingStaysOnOrbit) {
  const auto spec = ContractionSpec::powers({0, 0, 0});
  const DualVector mu = dual(Eigen::Vector3d(0.3, -0.2, 0.9));
  const std::vector<FlowSample> flows{{e3(0), 0.7}, {Eigen::Vector3d(1, 2, 3), 0.4}};
  const auto sample = orbit_deform(su2(), su2(), spec, mu, 0.5, flows);
  for (std::size_t p = 0; p < flows.size(); ++p) {
    EXPECT_NEAR(sample.points[p].coeffs().norm(), mu.coeffs().norm(), 1e-12);
    EXPECT_LE((sample.points[p].coeffs() - coadjoint_flow(su2(), flows[p].X, mu, flows[p].t).coeffs()).norm(), 1e-12);
  }
}

TEST(OrbitDeform, ZeroAndErrors) {
  const auto spec = ContractionSpec::anti_iw({1, 1, 0});
  const auto sample = orbit_deform(heisenberg3(), su2(), spec, DualVector::zero(3), 0.1, {{e3(0), 1.0}});
  EXPECT_EQ(sample.points[0].coeffs(), Eigen::Vector3d::Zero());
  EXPECT_THROW(orbit_deform(heisenberg3(), su2(), spec, DualVector::zero(3), 0.0, {}), ValidationError);
  EXPECT_THROW(orbit_deform(heisenberg3(), su2(), spec, DualVector::zero(2), 0.1, {}), DimensionError);
  EXPECT_THROW(orbit_deform(heisenberg3(), su2(), ContractionSpec::powers({0, 0, 400}), DualVector::basis(3, 2), 0.01, {}),
               ValidationError);
}

TEST(CharacterLimit, Examples) {
  const auto spec = ContractionSpec::anti_iw({1, 1, 0});
  const auto schedule = geometric_schedule(1e-1, 1e-5, 5);
  const auto zero_x = character_limit(heisenberg3(), spec, DualVector::basis(3, 2), Vector::Zero(3), schedule);
  for (auto v : zero_x.values) EXPECT_EQ(v, std::complex<double>(1, 0));
  const auto zero_mu = character_limit(heisenberg3(), spec, DualVector::zero(3), e3(2), schedule);
  for (auto v : zero_mu.values) EXPECT_EQ(v, std::complex<double>(1, 0));
  // μ = λ e3*, X = e3: U_ε e3 = ε² e3, so the value is exp(iλε²).
  const double lambda = 2.5;
  const auto c = character_limit(heisenberg3(), spec, dual(Eigen::Vector3d(0, 0, lambda)), e3(2), schedule);
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    EXPECT_LE(std::abs(c.values[k] - std::polar(1.0, lambda * schedule[k] * schedule[k])), 1e-14);
    EXPECT_NEAR(std::abs(c.values[k]), 1.0, 1e-15);
  }
  EXPECT_EQ(c.verdict, Verdict::converged);
  EXPECT_LE(std::abs(c.limit - 1.0), 1e-6);
}

TEST(CharacterLimit, DivergenceIsReported) {
  const auto c = character_limit(su2(), ContractionSpec::powers({0, 0, -2}), DualVector::basis(3, 2), e3(2),
                                 geometric_schedule(1e-1, 1e-8, 8));
  EXPECT_EQ(c.verdict, Verdict::diverged);
}

TEST(SphereIntegrality, HalfIntegerSpins) {
  for (double s : {0.5, 1.0, 1.5, 2.0}) {
    const auto r = sphere_integrality(s, 128, 256);
    EXPECT_NEAR(r.integral, 4 * std::numbers::pi * s, 1e-9);
    EXPECT_NEAR(r.value, 2 * s, 1e-6);
    EXPECT_TRUE(r.quantizable);
  }
}

TEST(SphereIntegrality, NonIntegralAndScaling) {
  const auto r = sphere_integrality(0.3, 128, 256);
  EXPECT_NEAR(r.value, 0.6, 1e-6);
  EXPECT_FALSE(r.quantizable);
  EXPECT_NEAR(sphere_integrality(1.0, 128, 256, {2.0}).value, 1.0, 1e-6);
  EXPECT_THROW(sphere_integrality(0.0, 128, 256), ValidationError);
  EXPECT_THROW(sphere_integrality(-1.0, 128, 256), ValidationError);
  EXPECT_THROW(sphere_integrality(1.0, 16, 256), ValidationError);
  EXPECT_THROW(sphere_integrality(1.0, 128, 256, {0.0}), ValidationError);
}

// Area of the sphere from the Kirillov form, recomputed with a plain
// (θ, φ) trapezoid and explicit tangent-to-generator inversion for su2:
// ad*_ξ μ = ξ × μ, so ξ = (μ × v)/|μ|² for tangent v.
TEST(SphereIntegrality, IndependentQuadrature) {
  const double s = 1.5;
  const int nt = 400, np = 64;
  double total = 0.0;
  for (int a = 0; a <= nt; ++a) {
    const double th = std::numbers::pi * a / nt;
    const double w = (a == 0 || a == nt) ? 0.5 : 1.0;
    for (int b = 0; b < np; ++b) {
      const double ph = 2 * std::numbers::pi * b / np;
      const Eigen::Vector3d mu(s * std::sin(th) * std::cos(ph), s * std::sin(th) * std::sin(ph), s * std::cos(th));
      const Eigen::Vector3d dth(s * std::cos(th) * std::cos(ph), s * std::cos(th) * std::sin(ph), -s * std::sin(th));
      const Eigen::Vector3d dph(-s * std::sin(th) * std::sin(ph), s * std::sin(th) * std::cos(ph), 0);
      const Eigen::Vector3d xi_th = mu.cross(dth) / (s * s), xi_ph = mu.cross(dph) / (s * s);
      EXPECT_LE((ad_star(su2(), xi_th, dual(mu)).coeffs() - dth).norm(), 1e-12);
      total += w * std::abs(mu.dot(xi_th.cross(xi_ph)));
    }
  }
  total *= (std::numbers::pi / nt) * (2 * std::numbers::pi / np);
  EXPECT_NEAR(total, sphere_integrality(s, 128, 256).integral, 1e-4);
}

TEST(CocyclePhase, Examples) {
  EXPECT_EQ(cocycle_phase(su2(), DualVector::basis(3, 2), DualVector::basis(3, 2), Vector::Zero(3)),
            std::complex<double>(1, 0));
  const double lambda = 0.8;
  const DualVector m = dual(Eigen::Vector3d(0, 0, lambda));
  EXPECT_LE(std::abs(cocycle_phase(heisenberg3(), m, m, e3(2)) - std::polar(1.0, lambda / 2)), 1e-14);
  EXPECT_LE(std::abs(cocycle_phase(heisenberg3(), m, m, e3(2), {2.0}) - std::polar(1.0, lambda / 4)), 1e-14);
  EXPECT_THROW(cocycle_phase(su2(), m, m, e3(2), {}, 8), ValidationError);
}

TEST(CocyclePhase, UnitModulusAndConverged) {
  for (int trial = 0; trial < 20; ++trial) {
    const DualVector mu = dual(random_vector(3));
    const Vector X = random_vector(3, 2.0);
    const auto a = cocycle_phase(su2(), mu, mu, X, {}, 64);
    const auto b = cocycle_phase(su2(), mu, mu, X, {}, 128);
    EXPECT_NEAR(std::abs(a), 1.0, 1e-15);
    EXPECT_LE(std::abs(a - b), 1e-8);
  }
}
