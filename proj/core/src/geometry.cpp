#include "dronecell/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dronecell {

double distance(const Location3D& a, const Location3D& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double dz = b.z - a.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double wrap_azimuth(double azimuth) {
  double a = std::fmod(azimuth, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

Direction direction_to(const Location3D& from, const Location3D& to) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const double dz = to.z - from.z;
  const double horiz = std::hypot(dx, dy);
  if (horiz == 0.0 && dz == 0.0) {
    throw std::invalid_argument("direction_to: coincident points");
  }
  Direction d;
  d.azimuth = (horiz == 0.0) ? 0.0 : wrap_azimuth(std::atan2(dy, dx));
  d.polar = std::atan2(horiz, dz);  // [0, pi], 0 at zenith
  return d;
}

Vec3 to_unit_vector(double azimuth, double polar) {
  const double sp = std::sin(polar);
  return Vec3{sp * std::cos(azimuth), sp * std::sin(azimuth), std::cos(polar)};
}

Vec3 to_unit_vector(const Direction& d) { return to_unit_vector(d.azimuth, d.polar); }

Direction direction_from_vector(const Vec3& v) {
  const double norm = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  if (norm == 0.0) throw std::invalid_argument("direction_from_vector: zero vector");
  const double horiz = std::hypot(v.x, v.y);
  Direction d;
  d.azimuth = (horiz == 0.0) ? 0.0 : wrap_azimuth(std::atan2(v.y, v.x));
  d.polar = std::atan2(horiz, v.z);
  return d;
}

double angular_offset(const Direction& a, const Direction& b) {
  const Vec3 u = to_unit_vector(a);
  const Vec3 v = to_unit_vector(b);
  const double dot = u.x * v.x + u.y * v.y + u.z * v.z;
  const double cx = u.y * v.z - u.z * v.y;
  const double cy = u.z * v.x - u.x * v.z;
  const double cz = u.x * v.y - u.y * v.x;
  const double cross = std::sqrt(cx * cx + cy * cy + cz * cz);
  return std::atan2(cross, dot);
}

Location3D project_feasible(const Location3D& candidate, const FeasibleRegion& region) {
  Location3D p = candidate;
  p.z = std::max(p.z, region.min_altitude);

  const Location3D& c = region.center;
  const double d = distance(p, c);
  if (d <= region.radius) return p;

  // Land fractionally inside the sphere so slack checks on projected
  // points never see a negative ulp.
  const double s = region.radius * (1.0 - 1e-12) / d;
  Location3D q{c.x + (p.x - c.x) * s, c.y + (p.y - c.y) * s, c.z + (p.z - c.z) * s};
  if (q.z >= region.min_altitude) return q;

  // Radial pull crossed the floor: land on the disc cut by the floor plane.
  const double dz = region.min_altitude - c.z;
  const double rho2 = region.radius * region.radius - dz * dz;
  const double rho = rho2 > 0.0 ? std::sqrt(rho2) * (1.0 - 1e-12) : 0.0;
  double hx = p.x - c.x;
  double hy = p.y - c.y;
  const double h = std::hypot(hx, hy);
  if (h > rho) {
    const double hs = (h == 0.0) ? 0.0 : rho / h;
    hx *= hs;
    hy *= hs;
  }
  return Location3D{c.x + hx, c.y + hy, region.min_altitude};
}

bool region_contains(const FeasibleRegion& region, const Location3D& p, double tol) {
  return p.z >= region.min_altitude - tol &&
         distance(p, region.center) <= region.radius + tol;
}

Location3D nearest_feasible_point(const Location3D& target, const FeasibleRegion& region,
                                  double min_separation) {
  Location3D p = project_feasible(target, region);
  if (distance(p, target) >= min_separation) return p;
  Location3D lifted = target;
  lifted.z += min_separation;
  return project_feasible(lifted, region);
}

}  // namespace dronecell
