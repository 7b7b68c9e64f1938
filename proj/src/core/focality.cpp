#include "focality.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace ifshull {

std::int64_t value_set_cardinality(const IfsSystem& ifs) {
  std::int64_t g = ifs.common_den();
  for (std::int64_t n : ifs.numerators()) g = std::gcd(g, n);
  return ifs.common_den() / g;
}

SystemClass classify(const IfsSystem& ifs) {
  SystemClass c;
  const auto& nums = ifs.numerators();
  c.is_sierpinski = std::all_of(nums.begin(), nums.end(), [](std::int64_t n) { return n == 0; });
  c.is_equiangular =
      std::all_of(nums.begin(), nums.end(), [&](std::int64_t n) { return n == nums.front(); });
  if (ifs.size() == 2) {
    const RationalAngle& a1 = ifs.map(1).angle;
    const RationalAngle& a2 = ifs.map(2).angle;
    // Representatives lie in (-pi, pi], so only pi itself must be excluded for map 2.
    const bool first_negative = a1.num() < 0;
    const bool second_in_open = a2.num() > 0 && 2 * a2.num() < a2.den();
    const bool ordered = -a1.num() * a2.den() <= a2.num() * a1.den();
    c.is_c_ifs = first_negative && second_in_open && ordered;
  }
  c.value_set_size = value_set_cardinality(ifs);
  return c;
}

bool uses_every_map(const IfsSystem& ifs, const Address& x) {
  for (std::size_t k = 1; k <= ifs.size(); ++k)
    if (!x.contains(static_cast<Address::value_type>(k))) return false;
  return true;
}

std::optional<BlowUp> blow_up(const IfsSystem& ifs, const Address& a) {
  ifs.check(a);
  const std::int64_t m = ifs.common_den();
  std::vector<std::int64_t> values{0};
  std::int64_t v = 0;
  for (std::size_t j = 1; j <= a.size(); ++j) {
    v = (v + ifs.numerator(a[j - 1])) % m;
    auto hit = std::find(values.begin(), values.end(), v);
    if (hit != values.end()) {
      const std::size_t i = static_cast<std::size_t>(hit - values.begin());
      assert(std::count(values.begin(), values.end(), v) == 1);
      IrreducibleForm form{a.prefix(i), a.prefix(j).suffix(i)};
      const Complex p = form.point(ifs);
      return BlowUp{std::move(form), p};
    }
    values.push_back(v);
  }
  return std::nullopt;
}

std::vector<BlowUp> efoc_level(const IfsSystem& ifs, std::size_t level, const Limits& limits,
                               double tol) {
  if (level == 0) throw DomainError("level must be positive");
  const std::int64_t bound = 2 * value_set_cardinality(ifs);
  if (static_cast<std::int64_t>(level) > bound)
    throw DomainError("level " + std::to_string(level) + " exceeds the termination bound " +
                      std::to_string(bound));

  const std::int64_t m = ifs.common_den();
  const std::size_t n = ifs.size();
  std::vector<BlowUp> found;
  std::size_t visited = 0;

  // Iterative depth-first walk; `values` holds the prefix values of `word`,
  // which are pairwise distinct while the branch is not yet blowable.
  std::vector<Address::value_type> word;
  std::vector<std::int64_t> values{0};
  std::vector<Address::value_type> next_child{1};
  while (!next_child.empty()) {
    const Address::value_type k = next_child.back();
    if (k > n) {
      next_child.pop_back();
      if (!word.empty()) {
        word.pop_back();
        values.pop_back();
      }
      continue;
    }
    ++next_child.back();
    if (++visited > limits.max_nodes)
      throw ResourceError("address tree walk exceeded " + std::to_string(limits.max_nodes) +
                          " nodes at level " + std::to_string(level));
    const std::int64_t v = (values.back() + ifs.numerator(k)) % m;
    auto hit = std::find(values.begin(), values.end(), v);
    if (hit != values.end()) {
      const std::size_t i = static_cast<std::size_t>(hit - values.begin());
      std::vector<Address::value_type> full(word);
      full.push_back(k);
      Address a(std::move(full));
      IrreducibleForm form{a.prefix(i), a.suffix(i)};
      const Complex p = form.point(ifs);
      found.push_back(BlowUp{std::move(form), p});
      continue;
    }
    if (word.size() + 1 < level) {
      word.push_back(k);
      values.push_back(v);
      next_child.push_back(1);
    }
  }

  // Forms are unique by construction (distinct tree nodes); merge equal points.
  std::vector<BlowUp> out;
  for (BlowUp& b : found) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const BlowUp& o) {
      return std::abs(o.point - b.point) <= tol;
    });
    if (!dup) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace ifshull
