#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "focality.hpp"

namespace ifshull {

/// Closed disk B(center, radius) with H(B) inside B.
struct BoundingCircle {
  Complex center;
  double radius = 0.0;
  bool degenerate = false;  // all fixed points coincide; the attractor is `center`
};

/// Nonzero direction of a linear target z -> <direction, z>.
class Target {
 public:
  explicit Target(Complex direction);
  Complex direction() const { return direction_; }
  double norm() const { return std::abs(direction_); }
  double value(Complex z) const { return inner(direction_, z); }

 private:
  Complex direction_;
};

struct MaximizerEntry {
  IrreducibleForm form;
  Complex point;
  double value = 0.0;
};

struct MaximizerResult {
  std::vector<MaximizerEntry> entries;  // one, or two for a tied edge
  std::size_t depth = 0;                // subdivision levels performed
  std::size_t nodes = 0;                // address nodes generated
  std::vector<std::string> diagnostics;
};

/// Centroid of the fixed points with radius nu*/(1 - lambda*) * max|p_k - c|,
/// where lambda* = max|phi_k| and nu* = max|1 - phi_k|.
BoundingCircle ideal_bounding_circle(const IfsSystem& ifs);

/// <tau, T_a(c) - T_b(c)> >= lambda_b * r * |tau|. Requires |a| == |b|.
bool dominates(const Target& tau, const IfsSystem& ifs, const BoundingCircle& circle,
               const Address& a, const Address& b);

/// Non-dominated members of `addrs` (all of one length), in input order.
std::vector<Address> argmax_step(const Target& tau, const IfsSystem& ifs,
                                 const BoundingCircle& circle, std::span<const Address> addrs);

/// Branch-and-bound maximisation of <tau, z> over the attractor of a fractal
/// of unity. Returns the irreducible forms of the maximizing extrema.
MaximizerResult loaf(const Target& tau, const IfsSystem& ifs, const Limits& limits = {});
MaximizerResult loaf(const Target& tau, const IfsSystem& ifs, const BoundingCircle& circle,
                     const Limits& limits = {});

}  // namespace ifshull
