#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ifs.hpp"

namespace ifshull {

/// (b, x) with nu(x) = 0 and x nonempty, standing for the point T_b(p_x).
struct IrreducibleForm {
  Address prefix;  // b, possibly empty
  Address period;  // x, focal

  Complex point(const IfsSystem& ifs) const { return apply_map(ifs, prefix, periodic_point(ifs, period)); }
  Address concat() const { return prefix + period; }

  friend bool operator==(const IrreducibleForm&, const IrreducibleForm&) = default;
  friend auto operator<=>(const IrreducibleForm&, const IrreducibleForm&) = default;
};

struct SystemClass {
  bool is_sierpinski = false;
  bool is_equiangular = false;
  bool is_c_ifs = false;
  std::int64_t value_set_size = 1;
};

/// |nu(A_fin)| = M / gcd(N_1, ..., N_n, M).
std::int64_t value_set_cardinality(const IfsSystem& ifs);

SystemClass classify(const IfsSystem& ifs);

/// True when every map index 1..n occurs in x.
bool uses_every_map(const IfsSystem& ifs, const Address& x);

struct BlowUp {
  IrreducibleForm form;
  Complex point;
};

/// Shortest bx < a with nu(x) = 0, x != 0, found as the first repeated prefix
/// value. Empty optional when a is not blowable.
std::optional<BlowUp> blow_up(const IfsSystem& ifs, const Address& a);

/// EFoc_L: blow-ups of all blowable addresses of length L, via a depth-first
/// walk of the address tree that stops each branch at its first blowable node.
/// Forms are unique; points closer than `tol` to an earlier one are dropped.
std::vector<BlowUp> efoc_level(const IfsSystem& ifs, std::size_t level, const Limits& limits = {},
                               double tol = 0.0);

}  // namespace ifshull
