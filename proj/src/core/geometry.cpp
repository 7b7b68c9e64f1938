#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "errors.hpp"

namespace ifshull {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ValidationError("angle denominator must be positive");
  std::int64_t r = num % den;
  if (r < 0) r += den;
  if (2 * r > den) r -= den;
  const std::int64_t g = std::gcd(r, den);
  num_ = r / g;
  den_ = den / g;
}

double RationalAngle::radians() const {
  return 2.0 * kPi * static_cast<double>(num_) / static_cast<double>(den_);
}

Complex RationalAngle::unit() const {
  // Quarter turns are represented exactly so that axis-aligned data stays exact.
  if (den_ == 1) return {1.0, 0.0};
  if (den_ == 2) return {-1.0, 0.0};
  if (den_ == 4) return num_ > 0 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
  const double a = radians();
  return {std::cos(a), std::sin(a)};
}

std::string RationalAngle::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return RationalAngle(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

RationalAngle operator-(const RationalAngle& a) { return RationalAngle(-a.num_, a.den_); }

double default_tolerance(std::span<const Complex> points) {
  if (points.empty()) return 0.0;
  double lo_re = points[0].real(), hi_re = lo_re, lo_im = points[0].imag(), hi_im = lo_im;
  for (const Complex& p : points) {
    lo_re = std::min(lo_re, p.real());
    hi_re = std::max(hi_re, p.real());
    lo_im = std::min(lo_im, p.imag());
    hi_im = std::max(hi_im, p.imag());
  }
  return 1e-9 * std::hypot(hi_re - lo_re, hi_im - lo_im);
}

namespace {

bool lex_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

// Representatives after merging points that lie within tol of an earlier one.
std::vector<std::size_t> merge_duplicates(std::span<const Complex> points, double tol) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].real() != points[b].real()) return points[a].real() < points[b].real();
    if (points[a].imag() != points[b].imag()) return points[a].imag() < points[b].imag();
    return a < b;
  });

  // Cluster id per input index; representative = smallest index of the cluster.
  std::vector<std::size_t> rep(points.size(), std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> kept;  // in x-sorted order
  for (std::size_t idx : order) {
    const Complex p = points[idx];
    std::size_t match = std::numeric_limits<std::size_t>::max();
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      const Complex q = points[*it];
      if (q.real() < p.real() - tol) break;
      if (std::abs(q - p) <= tol) {
        match = *it;
        break;
      }
    }
    if (match == std::numeric_limits<std::size_t>::max()) {
      kept.push_back(idx);
      rep[idx] = idx;
    } else {
      rep[idx] = match;
    }
  }

  // Move each cluster's representative to its first occurrence.
  std::vector<std::size_t> first(points.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < points.size(); ++i) first[rep[i]] = std::min(first[rep[i]], i);
  std::vector<std::size_t> out;
  out.reserve(kept.size());
  for (std::size_t k : kept) out.push_back(first[k]);
  return out;
}

}  // namespace

std::vector<std::size_t> convex_hull_indices(std::span<const Complex> points, double tol) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  if (!(tol >= 0.0)) throw DomainError("hull tolerance must be non-negative");

  std::vector<std::size_t> idx = merge_duplicates(points, tol);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });
  if (idx.size() <= 2) return idx;

  // Andrew's monotone chain. A middle vertex survives only when it lies more
  // than tol to the right of the chord joining its neighbours.
  auto keeps_turn = [&](std::size_t o, std::size_t a, std::size_t b) {
    const Complex chord = points[b] - points[o];
    return cross(points[a] - points[o], chord) > tol * std::abs(chord);
  };

  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && !keeps_turn(hull[k - 2], hull[k - 1], i)) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t j = idx.size() - 1; j-- > 0;) {
    const std::size_t i = idx[j];
    while (k >= lower && !keeps_turn(hull[k - 2], hull[k - 1], i)) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Complex> convex_hull(std::span<const Complex> points, double tol) {
  std::vector<Complex> out;
  for (std::size_t i : convex_hull_indices(points, tol)) out.push_back(points[i]);
  return out;
}

std::vector<Complex> convex_hull(std::span<const Complex> points) {
  return convex_hull(points, default_tolerance(points));
}

bool hull_contains(std::span<const Complex> hull, Complex p, double tol) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return std::abs(p - hull[0]) <= tol;
  if (hull.size() == 2) {
    const Complex d = hull[1] - hull[0];
    const double len2 = std::norm(d);
    double t = len2 > 0.0 ? inner(p - hull[0], d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (hull[0] + t * d)) <= tol;
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % hull.size()];
    const Complex d = b - a;
    const double len = std::abs(d);
    if (len == 0.0) continue;
    if (cross(d, p - a) / len < -tol) return false;
  }
  return true;
}

std::vector<std::size_t> angular_order(std::span<const Complex> points, Complex center) {
  std::vector<double> args(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex d = points[i] - center;
    if (d == Complex{0.0, 0.0}) throw DomainError("point coincides with the ordering center");
    double a = std::arg(d);
    if (a <= -kPi) a = kPi;
    args[i] = a;
  }
  std::vector<std::size_t> perm(points.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return args[a] < args[b]; });
  return perm;
}

Complex outward_normal(Complex e1, Complex e2, Complex interior) {
  const Complex d = e2 - e1;
  const double len = std::abs(d);
  if (len == 0.0) throw DomainError("outward normal of coincident points");
  const Complex to_interior = interior - e1;
  const double side = cross(d, to_interior);
  const double scale = len * std::max(std::abs(to_interior), len);
  if (std::abs(side) <= 1e-14 * scale) throw DomainError("interior point lies on the edge line");
  // i*d points to the left of e1->e2; flip it when the interior is on the left.
  const Complex n = Complex{0.0, 1.0} * d / len;
  return side > 0.0 ? -n : n;
}

}  // namespace ifshull
