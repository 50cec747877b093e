#pragma once

#include "interferoq/linalg.hpp"

namespace iq {

// Single particle on a ring of radius R, rotating frame Omega, kicked into
// counter-propagating components with integer angular momentum quantum k0.
struct RingParams {
  double hbar = 1.0;
  double mass = 1.0;
  double radius = 1.0;
  double omega = 0.0;   // rotation rate, rad/time
  int kick = 50;        // k0 = L_k/hbar = m R v / hbar, integer >= 1
  double sigma = 0.1;   // initial packet width, rad, in (0, pi/4]
  int lmax = 0;         // mode cutoff; 0 selects kick + ceil(8/sigma)

  double speed() const { return hbar * kick / (mass * radius); }
  int effective_lmax() const {
    return lmax > 0 ? lmax : kick + static_cast<int>(std::ceil(8.0 / sigma));
  }
  void validate() const;
};

// Truncated Fourier coefficient vector Psi~(l), l in [-lmax, lmax];
// Psi(theta) = (2 pi)^{-1/2} sum_l Psi~(l) e^{i l theta}.
struct WavePacket {
  Vector coefficients;  // index l + lmax
  int lmax = 0;

  Complex coeff(int l) const { return coefficients[l + lmax]; }
  double norm_sq() const { return coefficients.squaredNorm(); }
  // <l> in hbar units.
  double mean_l() const;
  // arg <e^{i theta}>: circular mean of the position density.
  double center_angle() const;
};

struct InterferenceResult {
  double phase_sim = 0.0;        // arg of the recombination coherence, (-pi, pi]
  double visibility = 0.0;       // |coherence|
  double phase_predicted = 0.0;  // 2 m Omega pi R^2 / hbar, wrapped
  double width_at_tau = 0.0;     // |sigma~(tau)| = sqrt(sigma^2 + (hbar tau/(m R^2 sigma))^2)
  bool condition_ok = false;     // width_at_tau <= pi/4
};

// Gaussian packet centered at theta = 0: coefficients ~ exp(-sigma^2 l^2 / 2).
WavePacket init_gaussian_packet(const RingParams& params);

// Exact index shift l -> l + sign * k0 (multiplication by e^{+-i k0 theta}).
WavePacket apply_kick(const WavePacket& packet, int sign, const RingParams& params);

// Mode-exact free evolution: coefficient l picks up
// exp(i Omega t l) * exp(-i hbar t l^2 / (2 m R^2)).
WavePacket evolve_free(const WavePacket& packet, double t, const RingParams& params);

// First recombination of the counter-propagating components: tau = pi R / v.
double recombination_time(const RingParams& params);

// Full pipeline: init -> +-kick -> free evolution to tau -> un-kick ->
// overlap of the two components.
InterferenceResult simulate_sagnac(const RingParams& params);

// N times the single-particle phase. The GHZ coherence magnitude is
// visibility^N; see ghz_coherence_magnitude.
double multiparticle_phase(double phase_single, int nparticles);
double ghz_coherence_magnitude(double visibility, int nparticles);

// Wrap to the principal branch (-pi, pi].
double wrap_angle(double angle);

}  // namespace iq
