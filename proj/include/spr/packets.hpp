#pragma once
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

#include "spr/constants.hpp"

// Wave-packet descriptions and the quadratic quadrupole-moment law
// Q(t) = Q0 + Q2 t^2 shared by every free axially symmetric packet.

namespace spr {

struct LGPacket {
  double rho0 = 0.0;  // initial mean radius, cm
  int ell = 0;        // orbital angular momentum (signed)
};

struct GaussianPacket {
  double sigma_perp = 0.0;  // transverse width, cm
  double sigma_z = 0.0;     // longitudinal width, cm
};

struct PacketSpec {
  std::variant<LGPacket, GaussianPacket> variant;
  double beta = 0.5;  // mean speed, units of c

  bool is_lg() const { return std::holds_alternative<LGPacket>(variant); }
  const LGPacket& lg() const { return std::get<LGPacket>(variant); }
  const GaussianPacket& gaussian() const { return std::get<GaussianPacket>(variant); }

  double gamma() const { return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta)); }
  // electron energy gamma*m in 1/cm, used for the recoil parameter
  double energy() const { return gamma() * constants::electron_mass; }

  void validate() const {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("packet: beta must be in (0,1)");
    if (is_lg()) {
      if (!(lg().rho0 > 0.0)) throw std::invalid_argument("packet: rho0 must be positive");
    } else {
      if (!(gaussian().sigma_perp > 0.0 && gaussian().sigma_z > 0.0))
        throw std::invalid_argument("packet: sigma_perp and sigma_z must be positive");
    }
  }
};

struct QuadrupoleLaw {
  double q0 = 0.0;  // cm^2
  double q2 = 0.0;  // dimensionless (time measured in cm)

  double at(double t_cm) const { return q0 + q2 * t_cm * t_cm; }
};

// Q0, Q2 of the axially symmetric law Q_{ab}(t) = Q(t) diag{1,1,-2}.
// The Gaussian branch follows the product form
//   Q(t) = (s_perp^2 - s_z^2)(1 - lambda_c^2 t^2/(4 s_perp^2 s_z^2)),
// i.e. Q2 carries the minus sign; gauss_q2_sign = +1 flips it for
// sensitivity studies (the two printed variants differ in this sign).
inline QuadrupoleLaw quadrupole_law(const PacketSpec& packet, int gauss_q2_sign = -1) {
  packet.validate();
  const double lc = constants::lambda_c_cm;
  if (packet.is_lg()) {
    const auto& p = packet.lg();
    const double ell2 = static_cast<double>(p.ell) * static_cast<double>(p.ell);
    return {p.rho0 * p.rho0, ell2 * lc * lc / (p.rho0 * p.rho0)};
  }
  const auto& p = packet.gaussian();
  const double dq = p.sigma_perp * p.sigma_perp - p.sigma_z * p.sigma_z;
  const double q2 = gauss_q2_sign * dq * lc * lc /
                    (4.0 * p.sigma_perp * p.sigma_perp * p.sigma_z * p.sigma_z);
  return {dq, q2};
}

// diffraction (Rayleigh) time of the vortex packet, in cm:
//   t_d = m rho0^2 / |ell| = (rho0/lambda_c)^2 t_c / |ell|
inline double diffraction_time(const PacketSpec& packet) {
  packet.validate();
  if (!packet.is_lg()) throw std::invalid_argument("diffraction_time: LG packet required");
  const auto& p = packet.lg();
  if (p.ell == 0) throw std::domain_error("no finite vortex diffraction time");
  return p.rho0 * p.rho0 / (constants::lambda_c_cm * std::abs(p.ell));
}

// Gaussian analogue: the transverse/axial pair t_i = 2 sigma_i^2/lambda_c.
// The geometry module's collision test uses the transverse one.
struct GaussianSpreadTimes {
  double t_perp = 0.0;  // cm
  double t_z = 0.0;     // cm
};

inline GaussianSpreadTimes gaussian_spread_times(const PacketSpec& packet) {
  packet.validate();
  const auto& p = packet.gaussian();
  return {2.0 * p.sigma_perp * p.sigma_perp / constants::lambda_c_cm,
          2.0 * p.sigma_z * p.sigma_z / constants::lambda_c_cm};
}

// rho(t) = rho0 sqrt(1 + t^2/t_d^2); for Gaussians the transverse width
// follows the same law with t_perp in place of t_d.
inline double mean_radius(const PacketSpec& packet, double t_cm) {
  packet.validate();
  if (t_cm < 0.0) throw std::invalid_argument("mean_radius: t must be nonnegative");
  if (packet.is_lg()) {
    const auto& p = packet.lg();
    if (p.ell == 0) return p.rho0;  // no OAM-driven uniform spreading scale
    const double td = diffraction_time(packet);
    const double r = t_cm / td;
    return p.rho0 * std::sqrt(1.0 + r * r);
  }
  const auto& p = packet.gaussian();
  const double tp = gaussian_spread_times(packet).t_perp;
  const double r = t_cm / tp;
  return p.sigma_perp * std::sqrt(1.0 + r * r);
}

// transverse size at t = 0 entering the collision geometry
inline double initial_radius(const PacketSpec& packet) {
  return packet.is_lg() ? packet.lg().rho0 : packet.gaussian().sigma_perp;
}

// spreading time scale entering the collision geometry (cm)
inline double spread_time(const PacketSpec& packet) {
  if (packet.is_lg()) {
    if (packet.lg().ell == 0) return std::numeric_limits<double>::infinity();
    return diffraction_time(packet);
  }
  return gaussian_spread_times(packet).t_perp;
}

// Diagnostic triaxial Gaussian law, Q_ii(t); the radiation pipeline accepts
// only the axially symmetric reduction.
struct TriaxialGaussian {
  double sx = 0.0, sy = 0.0, sz = 0.0;  // cm

  std::array<double, 3> q_diag(double t_cm) const {
    const double lc2 = constants::lambda_c_cm * constants::lambda_c_cm;
    auto qii = [&](double si, double sj, double sk) {
      return 2.0 * si * si - sj * sj - sk * sk +
             t_cm * t_cm * lc2 / 4.0 * (2.0 / (si * si) - 1.0 / (sj * sj) - 1.0 / (sk * sk));
    };
    return {qii(sx, sy, sz), qii(sy, sz, sx), qii(sz, sx, sy)};
  }
};

}  // namespace spr
