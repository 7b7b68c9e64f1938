#include <doctest.h>

#include "support.hpp"

using namespace ifshull;
using namespace testing;

namespace {

std::vector<Complex> cycle_points(const IfsSystem& s, const Address& x) {
  std::vector<Complex> out;
  for (const auto& [rot, p] : cycle_of(s, x)) out.push_back(p);
  return out;
}

void check_forms(const IfsSystem& s, const HullResult& r) {
  const double tol = 1e-9 * ideal_bounding_circle(s).radius + 1e-12;
  for (const auto& v : r.extrema) {
    REQUIRE(v.form);
    CHECK(std::abs(v.form->point(s) - v.point) <= tol);
    if (v.form->prefix.empty()) CHECK(value_of(s, v.form->period) == 0);
  }
}

}  // namespace

TEST_CASE("hull verification") {
  const IfsSystem s = levy();
  CHECK(verify_hull(s, levy_extrema(), 1e-9));
  const std::vector<Complex> pair{{1, -1}, {0, -1}};
  CHECK_FALSE(verify_hull(s, pair, 1e-9));
  const IfsSystem one({Contraction{{0.5, 0.5}, 0.3, RationalAngle(1, 5)}});
  CHECK(verify_hull(one, std::vector<Complex>{{0.5, 0.5}}, 1e-12));
  CHECK_THROWS_AS(verify_hull(s, std::vector<Complex>{}, 1e-9), DomainError);
}

TEST_CASE("equiangular reduction") {
  auto r = equiangular_hull(sierpinski());
  CHECK(r.method == HullMethod::equiangular);
  CHECK(r.verified);
  CHECK(same_point_set(points_of(r), {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}, 1e-12));

  // Quarter turns: all 16 fourth-level periodic points, hulled by the oracle.
  const IfsSystem q = bifractal(0.5, 1, 4, 0.5, 1, 4);
  std::vector<Complex> periodic;
  for (int w = 0; w < 16; ++w) {
    std::vector<int> x;
    for (int b = 3; b >= 0; --b) x.push_back(((w >> b) & 1) + 1);
    periodic.push_back(iterated_fixed_point(q, x));
  }
  r = equiangular_hull(q);
  CHECK(r.verified);
  CHECK(same_point_set(points_of(r), brute_hull_vertices(periodic, 1e-12), 1e-10));
  for (const auto& v : r.extrema) CHECK(v.form->period.size() == 4);

  r = equiangular_hull(bifractal(0.5, 2, 4, 0.5, 2, 4));
  for (const auto& v : r.extrema) CHECK(v.form->period.size() == 2);

  CHECK_THROWS_AS(equiangular_hull(levy()), DomainError);
  HullOptions small;
  small.limits.max_points = 8;
  CHECK_THROWS_AS(equiangular_hull(q, small), ResourceError);
}

TEST_CASE("general method on the Levy curve") {
  const auto r = general_hull(levy());
  CHECK(r.method == HullMethod::general);
  CHECK(r.verified);
  CHECK(r.level <= 16);
  CHECK(same_point_set(points_of(r), levy_extrema(), 1e-9));
  check_forms(levy(), r);
}

TEST_CASE("general method on the Sierpinski triangle stops at level one") {
  const auto r = general_hull(sierpinski());
  CHECK(r.level == 1);
  CHECK(r.extrema.size() == 3);
}

TEST_CASE("principal directions") {
  auto close = [](Complex a, Complex b) { return std::abs(a - b) < 1e-3; };
  CHECK(close(principal_direction(levy()).direction(), {0.2194, -0.5660}));
  CHECK(close(principal_direction(twindragon()).direction(), {1.0048, -0.9126}));
  CHECK(close(principal_direction(c_ifs_65()).direction(), {0.7672, -1.1115}));
  CHECK_THROWS_AS(principal_direction(sierpinski()), DomainError);
}

TEST_CASE("predicted principal forms") {
  CHECK(predict_principal_form(twindragon()) == Address{2, 1, 1, 1});
  CHECK(predict_principal_form(c_ifs_65()) == Address{2, 1, 1, 2, 1});
  CHECK(predict_principal_form(levy()) == Address{2, 1});
  const Address x411 = predict_principal_form(bifractal(0.9421, -2, 360, 0.9561, 17, 360));
  CHECK(x411 == Address{2} + Address{1}.repeated(9) + Address{2} + Address{1}.repeated(8));
  // A second angle of pi gives Q = M/2; the second case has P > Q.
  CHECK_THROWS_AS(predict_principal_form(bifractal(0.5, -1, 8, 0.5, 1, 2)), DomainError);
  CHECK_THROWS_AS(predict_principal_form(bifractal(0.5, -3, 8, 0.5, 1, 8)), DomainError);
  CHECK_THROWS_AS(predict_principal_form(sierpinski()), DomainError);
}

TEST_CASE("property: predicted period has length (P+Q)/gcd and is focal") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const IfsSystem s = random_c_ifs(rng, 200, 0.3, 0.95);
    const std::int64_t m = s.common_den();
    const std::int64_t p = m - s.numerator(1), q = s.numerator(2);
    const Address x = predict_principal_form(s);
    CHECK(static_cast<std::int64_t>(x.size()) == (p + q) / std::gcd(p, q));
    CHECK(value_of(s, x) == 0);
    CHECK(uses_every_map(s, x));
    CHECK(x[0] == 2);
  }
}

TEST_CASE("consecutive cycles") {
  const IfsSystem s = levy();
  const BoundingCircle c = ideal_bounding_circle(s);
  CHECK(consecutiveness_check(s, cycle_points(s, {2, 1}), c));
  const IfsSystem t = twindragon();
  CHECK(consecutiveness_check(t, cycle_points(t, {2, 1, 1, 1}), ideal_bounding_circle(t)));
  // e* and T1^2(e*) are not adjacent on the hull.
  const Complex e{1, -1};
  CHECK_FALSE(are_neighbors(s, c, e, s.apply(1, s.apply(1, e))));
  CHECK(are_neighbors(s, c, e, s.apply(1, e)));
  CHECK(consecutiveness_check(s, std::vector<Complex>{e}, c));
  CHECK_THROWS_AS(consecutiveness_check(s, std::vector<Complex>{}, c), DomainError);
}

TEST_CASE("Armadillo method on the Levy curve") {
  const auto r = armadillo_hull(levy());
  CHECK(r.method == HullMethod::armadillo);
  CHECK(r.verified);
  CHECK(r.extrema.size() == 8);
  CHECK(same_point_set(points_of(r), levy_extrema(), 1e-9));
  REQUIRE(r.principal);
  CHECK(*r.principal == 0);
  CHECK(std::abs(r.extrema[0].point - Complex(1, -1)) < 1e-9);
  CHECK(r.extrema[0].form->period == Address{2, 1});
  CHECK(same_point_set(r.cycle, {{1, -1}, {0, -1}}, 1e-9));
  check_forms(levy(), r);
}

TEST_CASE("Armadillo method on the twindragon") {
  const IfsSystem s = twindragon();
  const auto r = armadillo_hull(s);
  CHECK(r.method == HullMethod::armadillo);
  CHECK(r.verified);
  CHECK(same_point_set(r.cycle, {{2, -2.0 / 3}, {2.0 / 3, -4.0 / 3}, {-1.0 / 3, -1}, {-2.0 / 3, -1.0 / 3}}, 1e-9));
  std::vector<Complex> allowed = r.cycle;
  for (const Complex& z : r.cycle) {
    allowed.push_back(s.apply(1, z));
    allowed.push_back(s.apply(2, z));
  }
  for (const Complex& z : points_of(r))
    CHECK(std::any_of(allowed.begin(), allowed.end(), [&](Complex w) { return std::abs(w - z) < 1e-9; }));
  CHECK(same_point_set(points_of(r), points_of(general_hull(s)), 1e-9));
  check_forms(s, r);
}

TEST_CASE("Armadillo method on the 0.65 bifractal") {
  const IfsSystem s = c_ifs_65();
  const auto r = armadillo_hull(s);
  CHECK(r.verified);
  CHECK(std::abs(r.extrema[0].point - Complex(1.2993, -1.0655)) < 1e-3);
  CHECK(r.extrema[0].form->period == Address{2, 1, 1, 2, 1});
  std::vector<Complex> allowed;
  for (const Complex& z : r.cycle) {
    allowed.push_back(z);
    allowed.push_back(s.apply(1, z));
    allowed.push_back(s.apply(1, s.apply(1, z)));
    allowed.push_back(s.apply(2, z));
    allowed.push_back(s.apply(2, s.apply(2, z)));
  }
  for (const Complex& z : points_of(r))
    CHECK(std::any_of(allowed.begin(), allowed.end(), [&](Complex w) { return std::abs(w - z) < 1e-9; }));
}

TEST_CASE("Armadillo method outside normal form maps back") {
  // Twindragon moved by z -> (2+i) + (1-2i) z.
  const Complex o{2, 1}, sc{1, -2};
  const IfsSystem s = bifractal(kHalfRoot2, -1, 8, kHalfRoot2, 3, 8, o, o + sc);
  const auto r = armadillo_hull(s);
  CHECK(r.method == HullMethod::armadillo);
  CHECK(r.verified);
  std::vector<Complex> expected;
  for (const Complex& z : points_of(armadillo_hull(twindragon()))) expected.push_back(o + sc * z);
  CHECK(same_point_set(points_of(r), expected, 1e-9));
  CHECK(verify_hull(s, points_of(r), 1e-9));
  // The stored target is maximized at the principal vertex.
  REQUIRE(r.target);
  const Target tau(*r.target);
  for (const Complex& z : points_of(r)) CHECK(tau.value(z) <= tau.value(r.extrema[0].point) + 1e-9);
}

TEST_CASE("Armadillo method needs a direction outside C-IFS systems") {
  const IfsSystem s = bifractal(0.6, 1, 6, 0.6, 1, 4);
  CHECK_THROWS_AS(armadillo_hull(s), UnsupportedError);
  const auto r = armadillo_hull(s, Complex{0.3, -1});
  CHECK(r.verified);
  CHECK(same_point_set(points_of(r), points_of(general_hull(s)), 1e-9));
  CHECK_THROWS_AS(armadillo_hull(s, Complex{0, 0}), DomainError);
}

TEST_CASE("heuristic method") {
  auto r = heuristic_hull(levy());
  CHECK(r.method == HullMethod::heuristic_only);
  CHECK(r.verified);
  CHECK(same_point_set(points_of(r), levy_extrema(), 1e-9));
  CHECK(same_point_set(points_of(heuristic_hull(twindragon())), points_of(armadillo_hull(twindragon())), 1e-9));
  r = heuristic_hull(bifractal(0.9, -6, 90, 0.5, 35, 90));
  REQUIRE(r.principal);
  CHECK(std::abs(r.extrema[*r.principal].point - Complex(1.8720, -0.4808)) < 1e-3);
  CHECK(r.cycle.size() == 41);
  CHECK_THROWS_AS(heuristic_hull(sierpinski()), DomainError);
}

TEST_CASE("extra plate iterate leaves the hull unchanged") {
  for (const IfsSystem& s : {levy(), twindragon(), c_ifs_65()}) {
    HullOptions extra;
    extra.extra_plate_iterate = true;
    CHECK(same_point_set(points_of(armadillo_hull(s)), points_of(armadillo_hull(s, std::nullopt, extra)), 1e-12));
  }
}

TEST_CASE("inverse iterates of extremal forms stay extremal") {
  for (const IfsSystem& s : {levy(), twindragon(), c_ifs_65()}) {
    const auto r = armadillo_hull(s);
    const auto pts = points_of(r);
    auto listed = [&](Complex z) {
      return std::any_of(pts.begin(), pts.end(), [&](Complex w) { return std::abs(w - z) < 1e-9; });
    };
    for (const auto& v : r.extrema) {
      const Address& b = v.form->prefix;
      for (std::size_t i = 0; i <= b.size(); ++i)
        CHECK(listed(apply_map(s, b.suffix(i), periodic_point(s, v.form->period))));
      for (const Complex& z : cycle_points(s, v.form->period)) CHECK(listed(z));
    }
  }
}

TEST_CASE("routing") {
  CHECK(compute_hull(sierpinski()).method == HullMethod::equiangular);
  CHECK(compute_hull(bifractal(0.5, 1, 4, 0.5, 1, 4)).method == HullMethod::equiangular);
  CHECK(compute_hull(levy()).method == HullMethod::armadillo);
  const IfsSystem other = bifractal(0.6, 1, 6, 0.6, 1, 4);
  CHECK(compute_hull(other).method == HullMethod::general);
  const HullResult targeted = compute_hull(other, MethodChoice::automatic, Complex{0.3, -1});
  REQUIRE(!targeted.notes.empty());
  CHECK(targeted.notes.front().find("direction rotated") == 0);
  CHECK(targeted.notes.back() == "fell back to the general method");
  CHECK(compute_hull(levy(), MethodChoice::general).method == HullMethod::general);
  CHECK(compute_hull(levy(), MethodChoice::heuristic).method == HullMethod::heuristic_only);
  const auto single = compute_hull(IfsSystem({Contraction{{1, 2}, 0.5, RationalAngle(1, 7)}}));
  REQUIRE(single.extrema.size() == 1);
  CHECK(single.extrema[0].point == Complex(1, 2));
  CHECK(single.verified);
}

TEST_CASE("hull vertices are counterclockwise") {
  for (const IfsSystem& s : {levy(), twindragon(), c_ifs_65(), sierpinski()}) {
    const auto pts = points_of(compute_hull(s));
    for (std::size_t i = 0; pts.size() >= 3 && i < pts.size(); ++i) {
      const Complex a = pts[i], b = pts[(i + 1) % pts.size()], c = pts[(i + 2) % pts.size()];
      CHECK(cross(b - a, c - b) > 0);
    }
  }
}
