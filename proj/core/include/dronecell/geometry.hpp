#pragma once

namespace dronecell {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kMetersPerFoot = 0.3048;

/// Position in a local east-north-up frame. Units are meters.
struct Location3D {
  double x = 0.0;  ///< east
  double y = 0.0;  ///< north
  double z = 0.0;  ///< height above the ground plane
};

/// Transmission direction. Azimuth is measured from +x (east)
/// counterclockwise and lives in [0, 2*pi); polar is measured from the
/// zenith and lives in [0, pi], so pi/2 is horizontal and pi points down.
struct Direction {
  double azimuth = 0.0;
  double polar = kPi / 2.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Closed ball of radius `radius` around `center`, cut by the altitude
/// half-space z >= min_altitude.
struct FeasibleRegion {
  Location3D center;
  double radius = 0.0;
  double min_altitude = 0.0;
};

double distance(const Location3D& a, const Location3D& b);

/// Direction of the ray from `from` to `to`. Throws std::invalid_argument
/// when the points coincide. A target straight above or below keeps the
/// azimuth-0 convention.
Direction direction_to(const Location3D& from, const Location3D& to);

/// Angle between two pointing directions, in [0, pi].
double angular_offset(const Direction& a, const Direction& b);

Vec3 to_unit_vector(const Direction& d);
/// Accepts out-of-range angles; useful for continuous local search moves.
Vec3 to_unit_vector(double azimuth, double polar);
/// Normalizes v. Throws std::invalid_argument on the zero vector.
Direction direction_from_vector(const Vec3& v);

double wrap_azimuth(double azimuth);

/// Deterministic projection into the region: the altitude is clamped
/// first, then the point is pulled radially toward the center; if that
/// radial point dips below the floor, the result lands on the disc where
/// the floor plane cuts the ball. Idempotent.
Location3D project_feasible(const Location3D& candidate, const FeasibleRegion& region);

bool region_contains(const FeasibleRegion& region, const Location3D& p, double tol = 1e-9);

/// Region point nearest to `target`, kept at least `min_separation`
/// meters away from it so link geometry stays well defined.
Location3D nearest_feasible_point(const Location3D& target, const FeasibleRegion& region,
                                  double min_separation);

}  // namespace dronecell
