#include "interferoq/ring.hpp"

#include <cmath>

namespace iq {

namespace {
constexpr double kTailTol = 1e-12;
}

void RingParams::validate() const {
  if (hbar <= 0.0 || mass <= 0.0 || radius <= 0.0)
    throw DomainError("RingParams: hbar, mass, radius must be positive");
  if (kick < 1)
    throw DomainError("RingParams: kick quantum k0 must be an integer >= 1");
  if (sigma <= 0.0 || sigma > M_PI / 4.0)
    throw DomainError("RingParams: sigma must be in (0, pi/4]");
  if (lmax > 0 && lmax < kick + static_cast<int>(std::ceil(8.0 / sigma)))
    throw DomainError("RingParams: lmax below kick + ceil(8/sigma)");
}

double WavePacket::mean_l() const {
  double acc = 0.0;
  for (int l = -lmax; l <= lmax; ++l) acc += l * std::norm(coeff(l));
  return acc;
}

double WavePacket::center_angle() const {
  Complex acc = 0.0;
  for (int l = -lmax + 1; l <= lmax; ++l)
    acc += std::conj(coeff(l)) * coeff(l - 1);
  return std::arg(acc);
}

double wrap_angle(double angle) {
  double w = std::remainder(angle, 2.0 * M_PI);
  if (w <= -M_PI) w += 2.0 * M_PI;
  return w;
}

WavePacket init_gaussian_packet(const RingParams& params) {
  params.validate();
  const int lmax = params.effective_lmax();
  WavePacket packet{Vector(2 * lmax + 1), lmax};
  for (int l = -lmax; l <= lmax; ++l)
    packet.coefficients[l + lmax] = std::exp(-0.5 * params.sigma * params.sigma * l * l);
  const double tail = std::norm(packet.coeff(-lmax)) + std::norm(packet.coeff(lmax));
  if (tail / packet.norm_sq() > kTailTol)
    throw TruncationError("init_gaussian_packet: lmax too small for this sigma");
  packet.coefficients /= std::sqrt(packet.norm_sq());
  return packet;
}

WavePacket apply_kick(const WavePacket& packet, int sign, const RingParams& params) {
  if (sign != 1 && sign != -1) throw DomainError("apply_kick: sign must be +-1");
  const int lmax = packet.lmax;
  const int shift = sign * params.kick;
  WavePacket out{Vector::Zero(2 * lmax + 1), lmax};
  double lost = 0.0;
  for (int l = -lmax; l <= lmax; ++l) {
    const int lp = l + shift;
    if (lp < -lmax || lp > lmax)
      lost += std::norm(packet.coeff(l));
    else
      out.coefficients[lp + lmax] = packet.coeff(l);
  }
  if (lost > kTailTol)
    throw TruncationError("apply_kick: kick pushes packet mass past lmax");
  return out;
}

WavePacket evolve_free(const WavePacket& packet, double t, const RingParams& params) {
  if (t < 0.0) throw DomainError("evolve_free: t < 0");
  const double kin = params.hbar * t / (2.0 * params.mass * params.radius * params.radius);
  WavePacket out = packet;
  for (int l = -packet.lmax; l <= packet.lmax; ++l)
    out.coefficients[l + packet.lmax] *=
        std::polar(1.0, params.omega * t * l - kin * double(l) * double(l));
  return out;
}

double recombination_time(const RingParams& params) {
  params.validate();
  return M_PI * params.radius / params.speed();
}

InterferenceResult simulate_sagnac(const RingParams& params) {
  const double tau = recombination_time(params);
  const WavePacket initial = init_gaussian_packet(params);
  WavePacket co = apply_kick(initial, +1, params);
  WavePacket counter = apply_kick(initial, -1, params);
  co = evolve_free(co, tau, params);
  counter = evolve_free(counter, tau, params);
  co = apply_kick(co, -1, params);
  counter = apply_kick(counter, +1, params);

  const Complex coherence = counter.coefficients.dot(co.coefficients);
  const double spread = params.hbar * tau /
                        (params.mass * params.radius * params.radius * params.sigma);
  InterferenceResult result;
  result.phase_sim = wrap_angle(std::arg(coherence));
  result.visibility = std::abs(coherence);
  result.phase_predicted = wrap_angle(
      2.0 * params.mass * params.omega * M_PI * params.radius * params.radius /
      params.hbar);
  result.width_at_tau = std::hypot(params.sigma, spread);
  result.condition_ok = result.width_at_tau <= M_PI / 4.0;
  return result;
}

double multiparticle_phase(double phase_single, int nparticles) {
  if (nparticles < 1) throw DomainError("multiparticle_phase: N < 1");
  return nparticles * phase_single;
}

double ghz_coherence_magnitude(double visibility, int nparticles) {
  if (nparticles < 1) throw DomainError("ghz_coherence_magnitude: N < 1");
  return std::pow(visibility, nparticles);
}

}  // namespace iq
