#pragma once
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "spr/packets.hpp"

// Passage geometry over the inclined grating: maximum passage time before the
// spreading packet touches the strips, the critical inclination angle beyond
// which it never does, strip-count limits and the regime parameters eta.

namespace spr {

struct GratingSpec {
  double d = 0.0;       // period, cm
  double a = 0.0;       // strip width, cm
  long n_strips = 0;    // ignored when infinite
  bool infinite = false;
  double phi_i = 0.0;   // inclination angle, rad
  double h = 0.0;       // impact parameter at z = 0, cm

  void validate() const {
    if (!(d > 0.0 && a > 0.0 && a < d)) throw std::invalid_argument("grating: need 0 < a < d");
    if (!(h > 0.0)) throw std::invalid_argument("grating: h must be positive");
    if (!(std::abs(phi_i) < constants::pi / 2)) throw std::invalid_argument("grating: |phi_i| < pi/2");
    if (!infinite && n_strips < 1) throw std::invalid_argument("grating: n_strips >= 1");
  }
};

struct CriticalAngle {
  double phi_c = 0.0;  // rad
  bool finite = true;  // false when the packet does not spread (t_d infinite)
};

// tan(phi_c) = rho0 / (beta t_d)
inline CriticalAngle critical_angle(const PacketSpec& packet) {
  packet.validate();
  const double td = spread_time(packet);
  if (!std::isfinite(td)) return {0.0, false};
  return {std::atan(initial_radius(packet) / (packet.beta * td)), true};
}

struct MaxPassageTime {
  double t = 0.0;            // cm; meaningful when !unlimited
  bool unlimited = false;
  bool near_critical = false;
};

// Positive root of  rho(t) cos(phi) = beta t sin(phi) + h.  The root exists
// for phi < phi_c; above the critical angle the packet never reaches the
// grating.  The discriminant combines to
//   t = t_d [beta t_d h s + rho0 c sqrt(h^2 - rho0^2 c^2 + beta^2 t_d^2 s^2)]
//       / (rho0^2 c^2 - beta^2 t_d^2 s^2),
// which satisfies the collision condition with equality.
inline MaxPassageTime max_passage_time(const PacketSpec& packet, const GratingSpec& grating) {
  packet.validate();
  grating.validate();
  const double td = spread_time(packet);
  const double rho0 = initial_radius(packet);
  const double c = std::cos(grating.phi_i);
  const double s = std::sin(grating.phi_i);
  const double h = grating.h;
  if (h <= rho0 * c) return {0.0, false, false};  // already touching at t = 0
  if (!std::isfinite(td)) {
    // non-spreading packet: collides only when tilted toward the grating
    if (grating.phi_i >= 0.0) return {0.0, true, false};
    return {(h - rho0 * c) / (packet.beta * -s), false, false};
  }

  const CriticalAngle ca = critical_angle(packet);
  if (std::abs(grating.phi_i - ca.phi_c) < 1e-12) return {0.0, true, true};
  const double denom = rho0 * c * rho0 * c - packet.beta * td * s * packet.beta * td * s;
  if (grating.phi_i >= ca.phi_c || denom <= 0.0) return {0.0, true, false};

  const double disc = h * h - rho0 * rho0 * c * c + packet.beta * td * s * packet.beta * td * s;
  const double t = td * (packet.beta * td * h * s + rho0 * c * std::sqrt(disc)) / denom;
  return {t, false, false};
}

struct StripCount {
  long n = 0;
  bool unlimited = false;
};

// N_max = floor(beta t_max / d); a partial strip cannot radiate a full period.
inline StripCount max_strips(const PacketSpec& packet, const GratingSpec& grating) {
  const MaxPassageTime tm = max_passage_time(packet, grating);
  if (tm.unlimited) return {0, true};
  return {static_cast<long>(std::floor(packet.beta * tm.t / grating.d)), false};
}

// decay scale sqrt(1/(gamma^2 beta^2) + cos^2(Phi) sin^2(Theta)) entering the
// line width and the effective strip count
inline double width_root(double beta, double gamma, double theta, double phi) {
  const double cs = std::cos(phi) * std::sin(theta);
  return std::sqrt(1.0 / (gamma * gamma * beta * beta) + cs * cs);
}

// N_eff = N / (1 + N sin(phi_I) sqrt(...)); infinite gratings lose the 1/N term.
inline double effective_strips(const GratingSpec& grating, double theta, double phi,
                               const PacketSpec& packet) {
  grating.validate();
  const double root = width_root(packet.beta, packet.gamma(), theta, phi);
  const double incl = std::sin(grating.phi_i) * root;
  if (grating.infinite) {
    if (incl <= 0.0) throw std::domain_error("effective strip count undefined");
    return 1.0 / incl;
  }
  const double n = static_cast<double>(grating.n_strips);
  return n / (1.0 + n * incl);
}

// h_eff = beta gamma / omega = beta gamma lambda / (2 pi)
inline double effective_impact(double beta, double gamma, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("effective_impact: omega must be positive");
  return beta * gamma / omega;
}

// h_I = 2 h cos(phi_I) + (a - d) sin(phi_I): the grating-plane combination in
// the shared exponential factor
inline double inclined_impact(const GratingSpec& grating) {
  grating.validate();
  return 2.0 * grating.h * std::cos(grating.phi_i) + (grating.a - grating.d) * std::sin(grating.phi_i);
}

struct RegimeReport {
  double eta_q = 0.0;    // quantum recoil omega/energy
  double eta_q0 = 0.0;   // quasi-classical quadrupole |Q0|/h_eff^2
  double eta_q1 = 0.0;   // ordinary non-paraxial |Q2|
  double eta_q2 = 0.0;   // dynamically enhanced N_eff^2 |Q2|
  MaxPassageTime t_max;
  CriticalAngle phi_c;
  StripCount n_max;
  double n_eff = 0.0;
  double n_max_estimate = 0.0;  // order-of-magnitude h rho0/(|ell| lambda lambda_c)
  bool multipole_valid = false; // packet radius < wavelength
  bool spread_valid = false;    // rho0^2 < lambda^2 - gamma^2 beta^2 d^2
};

// Observation here is (theta, phi, omega); omega in 1/cm.
inline RegimeReport regime_report(const PacketSpec& packet, const GratingSpec& grating,
                                  double theta, double phi, double omega) {
  packet.validate();
  grating.validate();
  RegimeReport r;
  const double gamma = packet.gamma();
  const QuadrupoleLaw law = quadrupole_law(packet);
  const double heff = effective_impact(packet.beta, gamma, omega);
  const double lambda = 2.0 * constants::pi / omega;
  const double rho0 = initial_radius(packet);

  r.eta_q = omega / packet.energy();
  r.eta_q0 = std::abs(law.q0) / (heff * heff);
  r.eta_q1 = std::abs(law.q2);
  const double neff = effective_strips(grating, theta, phi, packet);
  r.n_eff = neff;
  r.eta_q2 = neff * neff * r.eta_q1;
  r.t_max = max_passage_time(packet, grating);
  r.phi_c = critical_angle(packet);
  r.n_max = max_strips(packet, grating);
  if (packet.is_lg() && packet.lg().ell != 0) {
    r.n_max_estimate = grating.h * rho0 /
                       (std::abs(packet.lg().ell) * lambda * constants::lambda_c_cm);
  }
  r.multipole_valid = rho0 < lambda;
  const double rhs = lambda * lambda - gamma * gamma * packet.beta * packet.beta * grating.d * grating.d;
  r.spread_valid = rho0 * rho0 < rhs;
  return r;
}

}  // namespace spr
