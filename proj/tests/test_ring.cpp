#include "doctest.h"
#include "interferoq/ring.hpp"

using namespace iq;

namespace {
RingParams default_ring() { return RingParams{}; }  // hbar = m = R = 1, k0 = 50
}  // namespace

TEST_CASE("RingParams validation and derived quantities") {
  RingParams p = default_ring();
  CHECK(p.speed() == doctest::Approx(50.0).epsilon(1e-15));
  CHECK(p.effective_lmax() == 50 + 80);  // kick + ceil(8/sigma)
  CHECK_NOTHROW(p.validate());

  RingParams bad = p;
  bad.kick = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.sigma = 1.0;  // > pi/4
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.radius = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.lmax = 100;  // below kick + ceil(8/sigma)
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("wrap_angle") {
  CHECK(wrap_angle(0.1) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(M_PI).epsilon(1e-12));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI).epsilon(1e-12));
  CHECK(wrap_angle(2.0 * M_PI + 0.3) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("Gaussian packet initialization") {
  const RingParams p = default_ring();
  const WavePacket packet = init_gaussian_packet(p);
  CHECK(packet.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(packet.mean_l() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(packet.center_angle() == doctest::Approx(0.0).epsilon(1e-12));
  // coefficient ratio exp(-sigma^2 l^2 / 2): l = 10, sigma = 0.1 -> e^{-1/2}
  CHECK(std::abs(packet.coeff(10) / packet.coeff(0)) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
  CHECK(std::abs(packet.coeff(-10)) == std::abs(packet.coeff(10)));
}

TEST_CASE("kick operator") {
  const RingParams p = default_ring();
  const WavePacket packet = init_gaussian_packet(p);
  const WavePacket kicked = apply_kick(packet, +1, p);
  CHECK(kicked.mean_l() == doctest::Approx(50.0).epsilon(1e-9));
  CHECK(kicked.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  // kick then un-kick restores the packet up to the clipped far tail (~e^{-33})
  const WavePacket back = apply_kick(kicked, -1, p);
  CHECK((back.coefficients - packet.coefficients).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(apply_kick(packet, 2, p), DomainError);
  // a second forward kick pushes real mass past the cutoff
  CHECK_THROWS_AS(apply_kick(kicked, +1, p), TruncationError);
}

TEST_CASE("free evolution") {
  RingParams p = default_ring();
  p.omega = 0.02;
  const WavePacket packet = apply_kick(init_gaussian_packet(p), +1, p);
  SUBCASE("composition and norm preservation") {
    const WavePacket split = evolve_free(evolve_free(packet, 0.01, p), 0.02, p);
    const WavePacket joint = evolve_free(packet, 0.03, p);
    CHECK((split.coefficients - joint.coefficients).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(joint.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(evolve_free(packet, -0.1, p), DomainError);
  }
  SUBCASE("packet center follows theta(t) = (v/R - Omega) t") {
    const double t = 0.01;
    const double expected = wrap_angle((p.speed() / p.radius - p.omega) * t);
    CHECK(evolve_free(packet, t, p).center_angle() ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("recombination_time is pi R / v") {
  RingParams p = default_ring();
  CHECK(recombination_time(p) == doctest::Approx(M_PI / 50.0).epsilon(1e-15));
  p.kick = 25;
  CHECK(recombination_time(p) == doctest::Approx(M_PI / 25.0).epsilon(1e-15));
}

TEST_CASE("Sagnac interference") {
  SUBCASE("zero rotation gives zero phase and unit visibility") {
    const InterferenceResult r = simulate_sagnac(default_ring());
    CHECK(std::abs(r.phase_sim) < 1e-12);
    CHECK(r.visibility == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("simulated phase equals 2 m Omega pi R^2 / hbar") {
    RingParams p = default_ring();
    p.omega = 0.01;
    const InterferenceResult r = simulate_sagnac(p);
    CHECK(r.phase_predicted ==
          doctest::Approx(2.0 * M_PI * 0.01).epsilon(1e-12));
    CHECK(r.phase_sim == doctest::Approx(r.phase_predicted).epsilon(1e-9));
    // The mode-exact ring revival is perfect: visibility stays 1 at tau.
    CHECK(r.visibility == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("phase is independent of the launch speed") {
    double phases[3];
    int i = 0;
    for (int kick : {25, 50, 100}) {
      RingParams p = default_ring();
      p.kick = kick;
      p.omega = 0.01;
      phases[i++] = simulate_sagnac(p).phase_sim;
    }
    CHECK(phases[0] == doctest::Approx(phases[1]).epsilon(1e-9));
    CHECK(phases[1] == doctest::Approx(phases[2]).epsilon(1e-9));
  }
  SUBCASE("phase is linear in Omega with slope 2 m pi R^2 / hbar") {
    RingParams p = default_ring();
    p.omega = 0.01;
    const double p1 = simulate_sagnac(p).phase_sim;
    p.omega = 0.02;
    const double p2 = simulate_sagnac(p).phase_sim;
    CHECK((p2 - p1) / 0.01 == doctest::Approx(2.0 * M_PI).epsilon(1e-6));
  }
  SUBCASE("width bookkeeping and the pi/4 condition") {
    RingParams p = default_ring();  // tau = pi/50: spread 0.628 < pi/4
    const InterferenceResult fast = simulate_sagnac(p);
    CHECK(fast.width_at_tau ==
          doctest::Approx(std::hypot(0.1, (M_PI / 50.0) / 0.1)).epsilon(1e-12));
    CHECK(fast.condition_ok);
    p.kick = 25;  // tau doubles, spread 1.26 > pi/4
    CHECK_FALSE(simulate_sagnac(p).condition_ok);
  }
}

TEST_CASE("multiparticle GHZ combinations") {
  CHECK(multiparticle_phase(0.3, 4) == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(ghz_coherence_magnitude(0.9, 3) ==
        doctest::Approx(0.729).epsilon(1e-14));
  CHECK(ghz_coherence_magnitude(1.0, 7) == 1.0);
  CHECK_THROWS_AS(multiparticle_phase(0.3, 0), DomainError);
  CHECK_THROWS_AS(ghz_coherence_magnitude(0.9, 0), DomainError);
}
