#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace ifshull {

/// Similarity contraction T(z) = p + phi*(z - p), phi = lambda*e^{i*angle}.
struct Contraction {
  Complex fixed_point;
  double lambda = 0.5;
  RationalAngle angle;

  Complex factor() const { return lambda * angle.unit(); }
};

/// A finite address: a word over the map indices 1..n. The empty word is the
/// identity address. T_a applies the last index first.
class Address {
 public:
  using value_type = std::uint32_t;

  Address() = default;
  Address(std::initializer_list<value_type> indices) : indices_(indices) {}
  explicit Address(std::vector<value_type> indices) : indices_(std::move(indices)) {}

  /// Accepts digit strings ("2111") or comma separated indices ("2,1,1,1").
  /// The empty string is the identity address.
  static Address parse(std::string_view text);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  value_type operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<value_type>& indices() const { return indices_; }

  void push_back(value_type k) { indices_.push_back(k); }

  Address prefix(std::size_t len) const;
  Address suffix(std::size_t from) const;
  /// Cyclic rotation starting at position `shift`.
  Address rotated(std::size_t shift) const;
  Address repeated(std::size_t times) const;
  bool contains(value_type k) const;

  /// Digits when every index is below 10 and long_form is false, otherwise
  /// comma separated.
  std::string to_string(bool long_form = false) const;

  friend Address operator+(const Address& a, const Address& b);
  friend bool operator==(const Address&, const Address&) = default;
  friend auto operator<=>(const Address&, const Address&) = default;

 private:
  std::vector<value_type> indices_;
};

/// An IFS of similarity contractions together with the exact integer
/// parametrisation of its angles: angle_k = 2*pi*N_k/M with N_k in [0, M).
class IfsSystem {
 public:
  explicit IfsSystem(std::vector<Contraction> maps);

  std::size_t size() const { return maps_.size(); }
  /// Map k, 1-based.
  const Contraction& map(std::size_t k) const { return maps_.at(k - 1); }
  const std::vector<Contraction>& maps() const { return maps_; }
  Complex factor(std::size_t k) const { return factors_.at(k - 1); }
  Complex fixed_point(std::size_t k) const { return maps_.at(k - 1).fixed_point; }
  Complex apply(std::size_t k, Complex z) const;

  std::int64_t common_den() const { return common_den_; }
  std::int64_t numerator(std::size_t k) const { return numerators_.at(k - 1); }
  const std::vector<std::int64_t>& numerators() const { return numerators_; }

  /// Throws DomainError when an index is outside 1..n.
  void check(const Address& a) const;

 private:
  std::vector<Contraction> maps_;
  std::vector<Complex> factors_;
  std::int64_t common_den_ = 1;
  std::vector<std::int64_t> numerators_;
};

Complex apply_map(const IfsSystem& ifs, const Address& a, Complex z);

/// phi_a, the product of the factors along a (1 for the empty address).
Complex factor_of(const IfsSystem& ifs, const Address& a);

/// Product of the contraction factors along a, i.e. |phi_a|.
double lambda_of(const IfsSystem& ifs, const Address& a);

/// nu(a) = (sum of N_{a(k)}) mod M, computed exactly.
std::int64_t value_of(const IfsSystem& ifs, const Address& a);

/// Fixed point of T_x, evaluated as T_x(0) / (1 - phi_x).
Complex periodic_point(const IfsSystem& ifs, const Address& x);

/// Rotations of x (starting with x itself) paired with their periodic points.
std::vector<std::pair<Address, Complex>> cycle_of(const IfsSystem& ifs, const Address& x);

/// Affine change of coordinates N(z) = (z - origin)/scale taking a bifractal's
/// fixed points to 0 and 1.
struct NormalizingMap {
  Complex origin;
  Complex scale{1.0, 0.0};

  Complex forward(Complex z) const { return (z - origin) / scale; }
  Complex inverse(Complex z) const { return origin + z * scale; }
};

struct NormalizedBifractal {
  IfsSystem system;
  NormalizingMap transform;
};

/// Throws UnsupportedError unless n == 2 and DegenerateError when p1 == p2.
NormalizedBifractal normalize_bifractal(const IfsSystem& ifs);

/// {T_a(p_seed) : |a| = level}; seed is a 1-based map index.
std::vector<Complex> point_cloud(const IfsSystem& ifs, std::size_t seed, std::size_t level,
                                 const Limits& limits = {});

/// Concatenation of T_k(points) over k = 1..n.
std::vector<Complex> hutchinson(const IfsSystem& ifs, std::span<const Complex> points);

}  // namespace ifshull
