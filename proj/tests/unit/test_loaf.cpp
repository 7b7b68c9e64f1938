#include <doctest.h>

#include "support.hpp"

using namespace ifshull;
using namespace testing;

TEST_CASE("ideal bounding circle of the Levy curve") {
  const BoundingCircle c = ideal_bounding_circle(levy());
  CHECK(c.center == Complex(0.5, 0));
  // nu* = |1 - phi| = 1/sqrt2 for both maps, lambda* = 1/sqrt2, spread 1/2.
  CHECK(c.radius == doctest::Approx(kHalfRoot2 / (1 - kHalfRoot2) * 0.5));
  CHECK_FALSE(c.degenerate);
  CHECK(ideal_bounding_circle(IfsSystem({Contraction{{1, 1}, 0.5, {}}})).degenerate);
}

TEST_CASE("property: the bounding circle is invariant and holds the attractor") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const IfsSystem s = random_bifractal(rng, 12, 0.2, 0.9);
    const BoundingCircle c = ideal_bounding_circle(s);
    for (std::size_t k = 1; k <= 2; ++k)
      CHECK(std::abs(s.apply(k, c.center) - c.center) + s.map(k).lambda * c.radius <= c.radius * (1 + 1e-12));
    for (const Complex& z : point_cloud(s, 1, 8)) CHECK(std::abs(z - c.center) <= c.radius * (1 + 1e-12));
  }
}

TEST_CASE("targets must be nonzero and finite") {
  CHECK_THROWS_AS(Target({0, 0}), DomainError);
  CHECK_THROWS_AS(Target({INFINITY, 0}), DomainError);
  CHECK(Target({3, 4}).norm() == 5);
  CHECK(Target({1, 2}).value({3, -1}) == 1);
}

TEST_CASE("domination examples") {
  const IfsSystem s = levy();
  const BoundingCircle c = ideal_bounding_circle(s);
  // Far along +re the subfractal T_2^6 sits near p2 = 1, T_1^6 near p1 = 0.
  const Address far2 = Address{2}.repeated(12), far1 = Address{1}.repeated(12);
  CHECK(dominates(Target({1, 0}), s, c, far2, far1));
  CHECK_FALSE(dominates(Target({1, 0}), s, c, far1, far2));
  CHECK_FALSE(dominates(Target({1, 0}), s, c, far1, far1));
  CHECK_THROWS_AS(dominates(Target({1, 0}), s, c, {1}, {1, 2}), DomainError);
}

TEST_CASE("property: domination is irreflexive, asymmetric and transitive") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> len(1, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const IfsSystem s = random_bifractal(rng, 12, 0.3, 0.8);
    const BoundingCircle c = ideal_bounding_circle(s);
    const Target tau(random_direction(rng));
    const auto l = static_cast<std::size_t>(len(rng));
    std::uniform_int_distribution<Address::value_type> idx(1, 2);
    auto rand_addr = [&] {
      std::vector<Address::value_type> w(l);
      for (auto& k : w) k = idx(rng);
      return Address(w);
    };
    const Address a = rand_addr(), b = rand_addr(), d = rand_addr();
    CHECK_FALSE(dominates(tau, s, c, a, a));
    CHECK_FALSE((dominates(tau, s, c, a, b) && dominates(tau, s, c, b, a)));
    if (dominates(tau, s, c, a, b) && dominates(tau, s, c, b, d)) CHECK(dominates(tau, s, c, a, d));
  }
}

TEST_CASE("argmax step keeps the best centre") {
  const IfsSystem s = twindragon();
  const BoundingCircle c = ideal_bounding_circle(s);
  std::vector<Address> level;
  for (Address::value_type i = 1; i <= 2; ++i)
    for (Address::value_type j = 1; j <= 2; ++j)
      for (Address::value_type k = 1; k <= 2; ++k) level.push_back({i, j, k});
  const Target tau({1, -1});
  const auto kept = argmax_step(tau, s, c, level);
  CHECK_FALSE(kept.empty());
  CHECK(kept.size() <= level.size());
  const Address best = *std::max_element(level.begin(), level.end(), [&](const Address& a, const Address& b) {
    return tau.value(apply_map(s, a, c.center)) < tau.value(apply_map(s, b, c.center));
  });
  CHECK(std::find(kept.begin(), kept.end(), best) != kept.end());
  // Every dropped address is dominated by some address.
  for (const Address& a : level)
    if (std::find(kept.begin(), kept.end(), a) == kept.end())
      CHECK(std::any_of(level.begin(), level.end(), [&](const Address& b) { return dominates(tau, s, c, b, a); }));
  CHECK_THROWS_AS(argmax_step(tau, s, c, std::vector<Address>{}), DomainError);
}

TEST_CASE("maximizer of the principal direction of the Levy curve") {
  const auto r = loaf(Target({0.2194, -0.5660}), levy());
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].form.prefix.empty());
  CHECK(r.entries[0].form.period == Address{2, 1});
  CHECK(std::abs(r.entries[0].point - Complex(1, -1)) < 1e-9);
}

TEST_CASE("tied maximizers on the bottom edge of the Levy curve") {
  const IfsSystem s = levy();
  const auto r = loaf(Target({0, -1}), s);
  REQUIRE(r.entries.size() == 2);
  std::vector<Complex> got{r.entries[0].point, r.entries[1].point};
  CHECK(same_point_set(got, {{1, -1}, {0, -1}}, 1e-9));
  // Oracle: no cloud point lies below im = -1.
  CHECK(max_value(point_cloud(s, 1, 14), {0, -1}) <= 1 + 1e-12);
}

TEST_CASE("maximizer of a single-point attractor") {
  const IfsSystem s({Contraction{{2, -1}, 0.5, RationalAngle(1, 3)}});
  const auto r = loaf(Target({1, 1}), s);
  REQUIRE(r.entries.size() == 1);
  CHECK(std::abs(r.entries[0].point - Complex(2, -1)) < 1e-15);
  CHECK(value_of(s, r.entries[0].form.period) == 0);
}

TEST_CASE("node cap is enforced") {
  Limits tiny;
  tiny.max_nodes = 5;
  CHECK_THROWS_AS(loaf(Target({0.3, -1}), twindragon(), tiny), ResourceError);
}

TEST_CASE("property: LOAF is sound against a point cloud") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const IfsSystem s = random_bifractal(rng, 12, 0.4, 0.8);
    const BoundingCircle c = ideal_bounding_circle(s);
    const auto cloud = point_cloud(s, 1, 10);
    for (int t = 0; t < 4; ++t) {
      const Complex dir = random_direction(rng);
      const auto r = loaf(Target(dir), s, c);
      REQUIRE_FALSE(r.entries.empty());
      for (const auto& e : r.entries) {
        CHECK(e.value >= max_value(cloud, dir) - 1e-9 * c.radius);
        CHECK(std::abs(e.form.point(s) - e.point) < 1e-9 * c.radius);
        CHECK(value_of(s, e.form.period) == 0);
      }
    }
  }
}
