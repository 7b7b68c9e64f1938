#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ifshull {

// A point of the plane, or a complex factor. Both components are finite once
// they leave a constructor or parser of this library.
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Euclidean inner product <u, v> = Re(u * conj(v)).
inline double inner(Complex u, Complex v) { return u.real() * v.real() + u.imag() * v.imag(); }

/// z-component of the cross product u x v.
inline double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

bool is_finite(Complex z);

/// Exact rotation angle 2*pi*num/den. Stored reduced with the representative
/// in (-pi, pi], i.e. -den/2 < num <= den/2, and zero as 0/1.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double radians() const;

  // Unit complex number e^{i*angle}; exact for multiples of a quarter turn.
  Complex unit() const;

  std::string to_string() const;

  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b);
  friend RationalAngle operator-(const RationalAngle& a);
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// 1e-9 times the diameter of the point set (0 for a single point).
double default_tolerance(std::span<const Complex> points);

/// Indices of the convex hull vertices of `points`, counterclockwise, starting
/// at the lexicographically smallest (re, im) vertex. Points within `tol` of an
/// earlier one are merged into it; vertices within `tol` of the segment joining
/// their neighbours are dropped. A point or segment yields 1 or 2 vertices.
/// Throws DomainError on empty input or negative tol.
std::vector<std::size_t> convex_hull_indices(std::span<const Complex> points, double tol);

std::vector<Complex> convex_hull(std::span<const Complex> points, double tol);
std::vector<Complex> convex_hull(std::span<const Complex> points);

/// Signed distance test against a counterclockwise hull (as returned by
/// convex_hull): true when `p` lies inside or within `tol` of the boundary.
bool hull_contains(std::span<const Complex> hull, Complex p, double tol);

/// Permutation sorting points by arg(point - center) ascending in (-pi, pi].
/// Throws DomainError when a point coincides with the center.
std::vector<std::size_t> angular_order(std::span<const Complex> points, Complex center);

/// Unit vector perpendicular to e2 - e1 pointing away from `interior`.
/// Throws DomainError when e1 == e2 or interior lies on the line e1 e2.
Complex outward_normal(Complex e1, Complex e2, Complex interior);

}  // namespace ifshull
