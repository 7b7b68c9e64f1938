#pragma once

// Shared fixtures, random generators and brute-force oracles for the tests.
// Oracles deliberately avoid the library's own geometry and address code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hull_methods.hpp"

namespace testing {

using ifshull::Complex;
using ifshull::Contraction;
using ifshull::IfsSystem;
using ifshull::RationalAngle;

inline IfsSystem bifractal(double l1, std::int64_t n1, std::int64_t d1, double l2, std::int64_t n2,
                           std::int64_t d2, Complex p1 = {0, 0}, Complex p2 = {1, 0}) {
  return IfsSystem({Contraction{p1, l1, RationalAngle(n1, d1)},
                    Contraction{p2, l2, RationalAngle(n2, d2)}});
}

inline const double kHalfRoot2 = std::sqrt(0.5);

inline IfsSystem levy() { return bifractal(kHalfRoot2, -1, 8, kHalfRoot2, 1, 8); }
inline IfsSystem twindragon() { return bifractal(kHalfRoot2, -1, 8, kHalfRoot2, 3, 8); }
inline IfsSystem c_ifs_65() { return bifractal(0.65, -1, 6, 0.65, 1, 4); }
inline IfsSystem sierpinski() {
  return IfsSystem({Contraction{{0, 0}, 0.5, {}}, Contraction{{1, 0}, 0.5, {}},
                    Contraction{{0.5, std::sqrt(3.0) / 2}, 0.5, {}}});
}

// The eight extrema of the Levy C curve, from the closed forms
// e*, T1^l(e*) for l = 1..4 and T2^l(e*) for l = 1..3 with e* = 1 - i.
inline std::vector<Complex> levy_extrema() {
  return {{1, -1}, {0, -1}, {-0.5, -0.5}, {-0.5, 0}, {-0.25, 0.25},
          {1.5, -0.5}, {1.5, 0}, {1.25, 0.25}};
}

inline Complex apply_similarity(const Contraction& m, Complex z) {
  return m.fixed_point + std::polar(m.lambda, 2.0 * M_PI * double(m.angle.num()) / double(m.angle.den())) *
                             (z - m.fixed_point);
}

// T_x applied right to left, written independently of the library.
inline Complex compose(const IfsSystem& s, const std::vector<int>& x, Complex z) {
  for (auto it = x.rbegin(); it != x.rend(); ++it) z = apply_similarity(s.map(*it), z);
  return z;
}

// Fixed point of T_x by plain iteration.
inline Complex iterated_fixed_point(const IfsSystem& s, const std::vector<int>& x) {
  Complex z{0, 0};
  for (int i = 0; i < 4000; ++i) {
    Complex next = compose(s, x, z);
    if (std::abs(next - z) < 1e-16) return next;
    z = next;
  }
  return z;
}

// Reachable values of finite addresses: breadth-first closure of {0} under
// adding each numerator modulo M.
inline std::size_t brute_value_set(const std::vector<std::int64_t>& nums, std::int64_t m) {
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::int64_t n : nums) {
      const std::int64_t v = ((queue[i] + n) % m + m) % m;
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  return queue.size();
}

// Hull vertices by the O(n^3) edge test: (i, j) is a hull edge when every
// other point lies strictly left of it or on the open segment. Returns the set
// of vertex points (unordered).
inline std::vector<Complex> brute_hull_vertices(const std::vector<Complex>& in, double tol) {
  std::vector<Complex> pts;
  for (const Complex& z : in)
    if (std::none_of(pts.begin(), pts.end(), [&](Complex w) { return std::abs(w - z) <= tol; }))
      pts.push_back(z);
  if (pts.size() <= 2) return pts;
  std::vector<Complex> out;
  auto add = [&](Complex z) {
    if (std::none_of(out.begin(), out.end(), [&](Complex w) { return std::abs(w - z) <= tol; }))
      out.push_back(z);
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      const Complex a = pts[i], d = pts[j] - pts[i];
      const double len = std::abs(d);
      bool edge = true;
      for (std::size_t k = 0; k < pts.size() && edge; ++k) {
        if (k == i || k == j) continue;
        const Complex w = pts[k] - a;
        const double side = (d.real() * w.imag() - d.imag() * w.real()) / len;
        if (side < -tol) edge = false;
        else if (side <= tol) {
          const double t = (w.real() * d.real() + w.imag() * d.imag()) / (len * len);
          if (t < 0 || t > 1) edge = false;  // collinear beyond the segment
        }
      }
      if (edge) {
        add(pts[i]);
        add(pts[j]);
      }
    }
  return out;
}

// Max over points of <tau, z>.
inline double max_value(const std::vector<Complex>& pts, Complex tau) {
  double best = -INFINITY;
  for (const Complex& z : pts) best = std::max(best, z.real() * tau.real() + z.imag() * tau.imag());
  return best;
}

// Polygon containment written independently: p is inside the convex polygon
// when its distance outside every edge line is at most tol. The polygon is
// ordered by angle around its centroid first.
inline bool inside_convex(std::vector<Complex> poly, Complex p, double tol) {
  if (poly.size() == 1) return std::abs(poly[0] - p) <= tol;
  Complex c{0, 0};
  for (const Complex& z : poly) c += z;
  c /= double(poly.size());
  if (poly.size() == 2) {
    const Complex d = poly[1] - poly[0], w = p - poly[0];
    const double t = std::clamp((w.real() * d.real() + w.imag() * d.imag()) / std::norm(d), 0.0, 1.0);
    return std::abs(poly[0] + t * d - p) <= tol;
  }
  std::sort(poly.begin(), poly.end(), [&](Complex a, Complex b) { return std::arg(a - c) < std::arg(b - c); });
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Complex a = poly[i], d = poly[(i + 1) % poly.size()] - a;
    const Complex w = p - a;
    if ((d.real() * w.imag() - d.imag() * w.real()) / std::abs(d) < -tol) return false;
  }
  return true;
}

// Each point of `a` within tol of some point of `b` and vice versa.
inline bool same_point_set(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  auto covered = [&](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    return std::all_of(x.begin(), x.end(), [&](Complex z) {
      return std::any_of(y.begin(), y.end(), [&](Complex w) { return std::abs(w - z) <= tol; });
    });
  };
  return covered(a, b) && covered(b, a);
}

inline std::vector<Complex> points_of(const ifshull::HullResult& r) {
  std::vector<Complex> out;
  for (const auto& v : r.extrema) out.push_back(v.point);
  return out;
}

// Random 2-map system of unity with angles 2*pi*N_k/M, M in [2, max_den].
inline IfsSystem random_bifractal(std::mt19937_64& rng, std::int64_t max_den, double lmin, double lmax) {
  std::uniform_int_distribution<std::int64_t> den(2, max_den);
  std::uniform_real_distribution<double> lam(lmin, lmax);
  const std::int64_t m = den(rng);
  std::uniform_int_distribution<std::int64_t> num(0, m - 1);
  return bifractal(lam(rng), num(rng), m, lam(rng), num(rng), m);
}

// Random C-IFS in normal form: angles -2*pi*P/M and 2*pi*Q/M with
// 0 < P <= Q < M/2.
inline IfsSystem random_c_ifs(std::mt19937_64& rng, std::int64_t max_den, double lmin, double lmax) {
  std::uniform_int_distribution<std::int64_t> den(3, max_den);
  std::uniform_real_distribution<double> lam(lmin, lmax);
  const std::int64_t m = den(rng);
  const std::int64_t half = (m - 1) / 2;
  std::uniform_int_distribution<std::int64_t> pdist(1, half);
  const std::int64_t p = pdist(rng);
  std::uniform_int_distribution<std::int64_t> qdist(p, half);
  return bifractal(lam(rng), -p, m, lam(rng), qdist(rng), m);
}

inline Complex random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  return std::polar(1.0, ang(rng));
}

}  // namespace testing
