#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zernike {

struct DiskPoint {
  double x = 0;
  double y = 0;
};

// Upper half-sphere point, xi3 >= 0, unit norm.
struct SpherePoint {
  double xi1 = 0;
  double xi2 = 0;
  double xi3 = 1;
};

// theta in [0, pi/2], phi in (-pi, pi].
struct AnglesI {
  double theta = 0;
  double phi = 0;
};

// theta_p in [0, pi], phi_p in [0, pi].
struct AnglesII {
  double theta_p = 0;
  double phi_p = 0;
};

inline SpherePoint disk_to_sphere(DiskPoint p) {
  double r2 = p.x * p.x + p.y * p.y;
  if (r2 > 1.0 + 1e-12) throw std::domain_error("disk_to_sphere: point outside closed disk");
  return {p.x, p.y, std::sqrt(std::max(0.0, 1.0 - r2))};
}

inline DiskPoint sphere_to_disk(SpherePoint s) { return {s.xi1, s.xi2}; }

// roundoff guard for pole detection (e.g. cos(pi/2) evaluates to ~6e-17)
inline constexpr double kPoleTol = 1e-14;

inline AnglesI sphere_to_anglesI(SpherePoint s) {
  double theta = std::acos(std::clamp(s.xi3, 0.0, 1.0));
  double phi = std::hypot(s.xi1, s.xi2) < kPoleTol ? 0.0 : std::atan2(s.xi2, s.xi1);
  return {theta, phi};
}

inline SpherePoint anglesI_to_sphere(AnglesI a) {
  double st = std::sin(a.theta);
  return {st * std::cos(a.phi), st * std::sin(a.phi), std::cos(a.theta)};
}

inline AnglesII sphere_to_anglesII(SpherePoint s) {
  double theta_p = std::acos(std::clamp(s.xi1, -1.0, 1.0));
  double phi_p = std::hypot(s.xi2, s.xi3) < kPoleTol ? std::numbers::pi / 2
                                                     : std::atan2(s.xi3, s.xi2);
  return {theta_p, phi_p};
}

inline SpherePoint anglesII_to_sphere(AnglesII a) {
  double st = std::sin(a.theta_p);
  return {std::cos(a.theta_p), st * std::cos(a.phi_p), st * std::sin(a.phi_p)};
}

inline AnglesII anglesI_to_anglesII(AnglesI a) {
  double st = std::sin(a.theta), ct = std::cos(a.theta);
  double ctp = st * std::cos(a.phi);
  // cos(phi') = st*sin(phi)/sqrt(1-ctp^2), sin(phi') = ct/sqrt(1-ctp^2) >= 0;
  // atan2 on the unnormalized pair keeps the branch and avoids the acos blowup
  double y = ct, x = st * std::sin(a.phi);
  if (std::hypot(x, y) < kPoleTol) return {ctp > 0 ? 0.0 : std::numbers::pi, std::numbers::pi / 2};
  return {std::acos(std::clamp(ctp, -1.0, 1.0)), std::atan2(y, x)};
}

inline AnglesI anglesII_to_anglesI(AnglesII a) {
  double stp = std::sin(a.theta_p), ctp = std::cos(a.theta_p);
  double cpp = std::cos(a.phi_p), spp = std::sin(a.phi_p);
  double ct = stp * spp;  // xi3
  double theta = std::acos(std::clamp(ct, -1.0, 1.0));
  double xi1 = ctp, xi2 = stp * cpp;
  double phi = std::hypot(xi1, xi2) < kPoleTol ? 0.0 : std::atan2(xi2, xi1);
  return {theta, phi};
}

}  // namespace zernike
