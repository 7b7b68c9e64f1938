#include "loaf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ifshull {

Target::Target(Complex direction) : direction_(direction) {
  if (!is_finite(direction) || direction == Complex{0.0, 0.0})
    throw DomainError("target direction must be finite and nonzero");
}

BoundingCircle ideal_bounding_circle(const IfsSystem& ifs) {
  const std::size_t n = ifs.size();
  Complex c{0.0, 0.0};
  for (std::size_t k = 1; k <= n; ++k) c += ifs.fixed_point(k);
  c /= static_cast<double>(n);

  double lambda_max = 0.0, nu_max = 0.0, spread = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    lambda_max = std::max(lambda_max, ifs.map(k).lambda);
    nu_max = std::max(nu_max, std::abs(Complex{1.0, 0.0} - ifs.factor(k)));
    spread = std::max(spread, std::abs(ifs.fixed_point(k) - c));
  }
  BoundingCircle circle{c, nu_max / (1.0 - lambda_max) * spread, spread == 0.0};
  if (circle.degenerate) return circle;

  // H(B) inside B: |T_k(c) - c| + lambda_k r <= r for every map.
  for (std::size_t k = 1; k <= n; ++k) {
    const double reach = std::abs(ifs.apply(k, c) - c) + ifs.map(k).lambda * circle.radius;
    if (reach > circle.radius * (1.0 + 1e-12))
      throw InternalError("bounding circle is not invariant under map " + std::to_string(k));
  }
  return circle;
}

bool dominates(const Target& tau, const IfsSystem& ifs, const BoundingCircle& circle,
               const Address& a, const Address& b) {
  if (a.size() != b.size()) throw DomainError("domination compares addresses of equal length");
  const Complex ta = apply_map(ifs, a, circle.center);
  const Complex tb = apply_map(ifs, b, circle.center);
  return tau.value(ta - tb) >= lambda_of(ifs, b) * circle.radius * tau.norm();
}

namespace {

double prune_margin(const Target& tau, const BoundingCircle& circle) {
  return 1e-12 * circle.radius * tau.norm();
}

double tie_tolerance(const Target& tau, const BoundingCircle& circle) {
  return 1e-9 * circle.radius * tau.norm();
}

}  // namespace

std::vector<Address> argmax_step(const Target& tau, const IfsSystem& ifs,
                                 const BoundingCircle& circle, std::span<const Address> addrs) {
  if (addrs.empty()) throw DomainError("argmax of an empty address set");
  std::vector<double> centre_value(addrs.size());
  std::vector<double> reach(addrs.size());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < addrs.size(); ++i) {
    if (addrs[i].size() != addrs[0].size())
      throw DomainError("argmax compares addresses of equal length");
    centre_value[i] = tau.value(apply_map(ifs, addrs[i], circle.center));
    reach[i] = lambda_of(ifs, addrs[i]) * circle.radius * tau.norm();
    best = std::max(best, centre_value[i]);
  }
  const double threshold = best - prune_margin(tau, circle);
  std::vector<Address> out;
  for (std::size_t i = 0; i < addrs.size(); ++i)
    if (centre_value[i] + reach[i] > threshold) out.push_back(addrs[i]);
  return out;
}

namespace {

// A surviving subfractal T_a(F), carried with its iterated circle centre and
// iterated fixed points so that children follow from one affine update each.
struct Node {
  std::vector<Address::value_type> word;
  std::vector<std::int64_t> values;  // prefix values; values[0] = nu(0) = 0
  Complex center;
  std::vector<Complex> fixed;  // T_a(p_j)
  double lambda = 1.0;
};

MaximizerResult degenerate_maximizer(const Target& tau, const IfsSystem& ifs) {
  // Every map fixes the same point: the first repeated value along 1,1,1,...
  // yields a focal form whose point is that fixed point.
  const auto steps = static_cast<std::size_t>(value_set_cardinality(ifs)) + 1;
  auto blown = blow_up(ifs, Address{1}.repeated(steps));
  if (!blown) throw InternalError("address 1^(|nu|+1) is not blowable");
  MaximizerResult r;
  r.entries.push_back({blown->form, blown->point, tau.value(blown->point)});
  return r;
}

}  // namespace

MaximizerResult loaf(const Target& tau, const IfsSystem& ifs, const Limits& limits) {
  return loaf(tau, ifs, ideal_bounding_circle(ifs), limits);
}

MaximizerResult loaf(const Target& tau, const IfsSystem& ifs, const BoundingCircle& circle,
                     const Limits& limits) {
  if (circle.degenerate) return degenerate_maximizer(tau, ifs);

  const std::size_t n = ifs.size();
  const std::int64_t m = ifs.common_den();
  const std::size_t max_depth = 2 * static_cast<std::size_t>(value_set_cardinality(ifs)) + 2;
  const double r_tau = circle.radius * tau.norm();
  const double margin = prune_margin(tau, circle);
  const double tie = tie_tolerance(tau, circle);

  MaximizerResult result;
  std::vector<MaximizerEntry> frozen;

  Node root;
  root.values = {0};
  root.center = circle.center;
  for (std::size_t k = 1; k <= n; ++k) root.fixed.push_back(ifs.fixed_point(k));
  std::vector<Node> active{std::move(root)};

  while (!active.empty()) {
    if (++result.depth > max_depth)
      throw InternalError("LOAF exceeded depth " + std::to_string(max_depth) +
                          " without every survivor being blowable");

    std::vector<Node> children;
    for (const Node& node : active) {
      for (std::size_t k = 1; k <= n; ++k) {
        if (++result.nodes > limits.max_nodes)
          throw ResourceError("LOAF exceeded " + std::to_string(limits.max_nodes) +
                              " address nodes at depth " + std::to_string(result.depth));
        const std::int64_t v = (node.values.back() + ifs.numerator(k)) % m;
        auto hit = std::find(node.values.begin(), node.values.end(), v);
        if (hit != node.values.end()) {
          // Blowable: the only candidate maximizer in this subfractal is T_b(p_x).
          const auto i = static_cast<std::size_t>(hit - node.values.begin());
          std::vector<Address::value_type> full(node.word);
          full.push_back(static_cast<Address::value_type>(k));
          Address a(std::move(full));
          IrreducibleForm form{a.prefix(i), a.suffix(i)};
          const Complex p = form.point(ifs);
          frozen.push_back({std::move(form), p, tau.value(p)});
          continue;
        }
        Node child;
        child.word = node.word;
        child.word.push_back(static_cast<Address::value_type>(k));
        child.values = node.values;
        child.values.push_back(v);
        const Complex pk = node.fixed[k - 1];
        const Complex phi = ifs.factor(k);
        child.center = pk + phi * (node.center - pk);
        child.fixed.reserve(n);
        for (const Complex& pj : node.fixed) child.fixed.push_back(pk + phi * (pj - pk));
        child.lambda = node.lambda * ifs.map(k).lambda;
        children.push_back(std::move(child));
      }
    }

    // Lower bound on the maximum: circle centres lie in the hull of their
    // subfractal, blow-up points lie on the attractor.
    double lower = -std::numeric_limits<double>::infinity();
    for (const Node& c : children) lower = std::max(lower, tau.value(c.center));
    for (const MaximizerEntry& f : frozen) lower = std::max(lower, f.value);

    active.clear();
    for (Node& c : children)
      if (tau.value(c.center) + c.lambda * r_tau > lower - margin) active.push_back(std::move(c));
    std::erase_if(frozen, [&](const MaximizerEntry& f) { return f.value < lower - tie; });
  }

  if (frozen.empty()) throw InternalError("LOAF terminated without candidates");

  double best = -std::numeric_limits<double>::infinity();
  for (const MaximizerEntry& f : frozen) best = std::max(best, f.value);
  std::vector<MaximizerEntry> tied;
  for (MaximizerEntry& f : frozen)
    if (f.value >= best - tie) tied.push_back(std::move(f));

  // Shortest form first so that duplicates of one point keep the shortest.
  std::sort(tied.begin(), tied.end(), [](const MaximizerEntry& a, const MaximizerEntry& b) {
    const std::size_t la = a.form.prefix.size() + a.form.period.size();
    const std::size_t lb = b.form.prefix.size() + b.form.period.size();
    if (la != lb) return la < lb;
    return a.form < b.form;
  });
  const double same_point = 1e-9 * circle.radius;
  std::vector<MaximizerEntry> distinct;
  for (MaximizerEntry& f : tied) {
    auto dup = std::find_if(distinct.begin(), distinct.end(), [&](const MaximizerEntry& d) {
      return std::abs(d.point - f.point) <= same_point;
    });
    if (dup == distinct.end()) {
      distinct.push_back(std::move(f));
    } else if (!(dup->form == f.form)) {
      result.diagnostics.push_back("forms (" + dup->form.prefix.to_string() + "," +
                                   dup->form.period.to_string() + ") and (" +
                                   f.form.prefix.to_string() + "," + f.form.period.to_string() +
                                   ") represent the same maximizer");
    }
  }

  if (distinct.size() > 2) {
    // Points on a supporting edge: keep its two ends.
    const Complex along = Complex{0.0, 1.0} * tau.direction();
    auto [lo, hi] = std::minmax_element(
        distinct.begin(), distinct.end(), [&](const MaximizerEntry& a, const MaximizerEntry& b) {
          return inner(along, a.point) < inner(along, b.point);
        });
    std::vector<MaximizerEntry> ends{*lo, *hi};
    distinct = std::move(ends);
  }
  std::sort(distinct.begin(), distinct.end(),
            [](const MaximizerEntry& a, const MaximizerEntry& b) { return a.value > b.value; });
  result.entries = std::move(distinct);
  return result;
}

}  // namespace ifshull
