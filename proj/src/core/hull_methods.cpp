#include "hull_methods.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ifshull {

std::string_view method_name(HullMethod m) {
  switch (m) {
    case HullMethod::equiangular: return "equiangular";
    case HullMethod::general: return "general";
    case HullMethod::armadillo: return "armadillo";
    case HullMethod::heuristic_only: return "heuristic-only";
  }
  return "unknown";
}

bool verify_hull(const IfsSystem& ifs, std::span<const Complex> extrema, double tol) {
  if (extrema.empty()) throw DomainError("cannot verify an empty hull");
  const std::vector<Complex> hull = convex_hull(extrema, tol);
  for (const Complex& z : hutchinson(ifs, extrema))
    if (!hull_contains(hull, z, tol)) return false;
  return true;
}

namespace {

double resolve_tol(const BoundingCircle& circle, const HullOptions& opt) {
  if (opt.tol >= 0.0) return opt.tol;
  return circle.degenerate ? 1e-12 : 1e-9 * circle.radius;
}

std::size_t form_length(const HullVertex& v) {
  return v.form ? v.form->prefix.size() + v.form->period.size()
                : std::numeric_limits<std::size_t>::max();
}

// Hull of the candidates. Coincident candidates keep the shortest form; the
// output starts at `start` when that point is a vertex.
std::vector<HullVertex> hull_of(std::vector<HullVertex> candidates, double tol,
                                std::optional<Complex> start = std::nullopt) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const HullVertex& a, const HullVertex& b) {
                     return form_length(a) < form_length(b);
                   });
  std::vector<Complex> pts;
  pts.reserve(candidates.size());
  for (const HullVertex& v : candidates) pts.push_back(v.point);
  std::vector<HullVertex> out;
  for (std::size_t i : convex_hull_indices(pts, tol)) out.push_back(candidates[i]);
  if (start) {
    auto it = std::find_if(out.begin(), out.end(), [&](const HullVertex& v) {
      return std::abs(v.point - *start) <= tol;
    });
    if (it != out.end()) std::rotate(out.begin(), it, out.end());
  }
  return out;
}

std::vector<Complex> points_of(const std::vector<HullVertex>& vs) {
  std::vector<Complex> out;
  out.reserve(vs.size());
  for (const HullVertex& v : vs) out.push_back(v.point);
  return out;
}

// Attractor is a single point when all fixed points coincide.
std::optional<HullResult> trivial_hull(const IfsSystem& ifs, const BoundingCircle& circle,
                                       HullMethod method) {
  if (!circle.degenerate) return std::nullopt;
  const auto steps = static_cast<std::size_t>(value_set_cardinality(ifs)) + 1;
  auto blown = blow_up(ifs, Address{1}.repeated(steps));
  HullResult r;
  r.method = method;
  r.extrema.push_back({ifs.fixed_point(1), blown ? std::optional(blown->form) : std::nullopt});
  r.verified = true;
  return r;
}

}  // namespace

HullResult equiangular_hull(const IfsSystem& ifs, const HullOptions& opt) {
  if (!classify(ifs).is_equiangular) throw DomainError("system is not equiangular");
  const BoundingCircle circle = ideal_bounding_circle(ifs);
  if (auto t = trivial_hull(ifs, circle, HullMethod::equiangular)) return *t;
  const double tol = resolve_tol(circle, opt);

  const auto len = static_cast<std::size_t>(value_set_cardinality(ifs));
  const std::size_t n = ifs.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (count > opt.limits.max_points / n)
      throw ResourceError("equiangular reduction needs " + std::to_string(n) + "^" +
                          std::to_string(len) + " periodic points, above the cap of " +
                          std::to_string(opt.limits.max_points));
    count *= n;
  }

  std::vector<HullVertex> candidates;
  candidates.reserve(count);
  std::vector<Address::value_type> word(len, 1);
  for (std::size_t c = 0; c < count; ++c) {
    Address x(word);
    candidates.push_back({periodic_point(ifs, x), IrreducibleForm{{}, x}});
    for (std::size_t i = len; i-- > 0;) {
      if (++word[i] <= n) break;
      word[i] = 1;
    }
  }

  HullResult r;
  r.method = HullMethod::equiangular;
  r.extrema = hull_of(std::move(candidates), tol);
  r.verified = verify_hull(ifs, points_of(r.extrema), tol);
  return r;
}

HullResult general_hull(const IfsSystem& ifs, const HullOptions& opt) {
  const BoundingCircle circle = ideal_bounding_circle(ifs);
  if (auto t = trivial_hull(ifs, circle, HullMethod::general)) return *t;
  const double tol = resolve_tol(circle, opt);

  const auto bound = 2 * static_cast<std::size_t>(value_set_cardinality(ifs));
  for (std::size_t level = 1; level <= bound; ++level) {
    std::vector<BlowUp> efoc = efoc_level(ifs, level, opt.limits, tol);
    if (efoc.empty()) continue;
    std::vector<HullVertex> candidates;
    candidates.reserve(efoc.size());
    for (BlowUp& b : efoc) candidates.push_back({b.point, std::move(b.form)});
    std::vector<HullVertex> hull = hull_of(std::move(candidates), tol);
    if (verify_hull(ifs, points_of(hull), tol)) {
      HullResult r;
      r.method = HullMethod::general;
      r.extrema = std::move(hull);
      r.verified = true;
      r.level = level;
      return r;
    }
  }
  throw InternalError("containment did not hold by level " + std::to_string(bound));
}

Target principal_direction(const IfsSystem& normalized) {
  if (!classify(normalized).is_c_ifs) throw DomainError("principal direction needs a C-IFS");
  const Contraction& m1 = normalized.map(1);
  const Complex log_phi1{std::log(m1.lambda), m1.angle.radians()};
  return Target(Complex{0.0, 1.0} * (Complex{1.0, 0.0} - normalized.factor(2)) * log_phi1);
}

Address predict_principal_form(const IfsSystem& normalized) {
  if (normalized.size() != 2) throw DomainError("principal form is defined for bifractals");
  const std::int64_t m = normalized.common_den();
  const std::int64_t p = (m - normalized.numerator(1)) % m;
  const std::int64_t q = normalized.numerator(2);
  if (!(0 < p && p <= q && 2 * q < m))
    throw DomainError("angles -2pi*" + std::to_string(p) + "/" + std::to_string(m) + ", 2pi*" +
                      std::to_string(q) + "/" + std::to_string(m) +
                      " violate 0 < P <= Q < M/2");

  const double lambda1 = normalized.map(1).lambda;
  const double theta1 = -2.0 * kPi * static_cast<double>(p) / static_cast<double>(m);
  const double theta2 = 2.0 * kPi * static_cast<double>(q) / static_cast<double>(m);
  const double alpha = std::atan(std::log(lambda1) / theta1);
  auto t = [&](std::int64_t s, std::int64_t j) {
    return std::pow(lambda1, static_cast<double>(s)) *
           std::cos(theta1 * static_cast<double>(s) + theta2 * static_cast<double>(j) + alpha);
  };

  const std::int64_t jmax = p / std::gcd(p, q);
  std::vector<Address::value_type> x;
  std::int64_t prev = 0;
  for (std::int64_t j = 1; j <= jmax; ++j) {
    const std::int64_t lo = q * j / p;
    const std::int64_t hi = (q * j + p - 1) / p;
    const std::int64_t s = t(hi, j) > t(lo, j) ? hi : lo;
    x.push_back(2);
    x.insert(x.end(), static_cast<std::size_t>(s - prev), 1);
    prev = s;
  }
  return Address(std::move(x));
}

bool are_neighbors(const IfsSystem& ifs, const BoundingCircle& circle, Complex e1, Complex e2,
                   const Limits& limits) {
  Complex normal;
  try {
    normal = outward_normal(e1, e2, circle.center);
  } catch (const DomainError&) {
    return false;
  }
  const MaximizerResult res = loaf(Target(normal), ifs, circle, limits);
  if (res.entries.size() != 2) return false;
  const double tol = 1e-7 * circle.radius;
  const Complex a = res.entries[0].point, b = res.entries[1].point;
  return (std::abs(a - e1) <= tol && std::abs(b - e2) <= tol) ||
         (std::abs(a - e2) <= tol && std::abs(b - e1) <= tol);
}

bool consecutiveness_check(const IfsSystem& ifs, std::span<const Complex> cycle,
                           const BoundingCircle& circle, const Limits& limits) {
  if (cycle.empty()) throw DomainError("empty cycle");
  const double tol = 1e-9 * circle.radius;
  std::vector<Complex> pts;
  for (const Complex& z : cycle)
    if (std::none_of(pts.begin(), pts.end(), [&](Complex w) { return std::abs(w - z) <= tol; }))
      pts.push_back(z);
  if (pts.size() == 1) return true;
  if (pts.size() == 2) return are_neighbors(ifs, circle, pts[0], pts[1], limits);

  // Extremal points are in convex position; three collinear ones cannot be.
  const bool collinear = std::all_of(pts.begin() + 2, pts.end(), [&](Complex z) {
    return std::abs(cross(pts[1] - pts[0], z - pts[0])) <= tol * std::abs(pts[1] - pts[0]);
  });
  if (collinear) return false;

  std::vector<std::size_t> order = angular_order(pts, circle.center);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Complex e1 = pts[order[i]];
    const Complex e2 = pts[order[(i + 1) % order.size()]];
    if (!are_neighbors(ifs, circle, e1, e2, limits) && ++failures > 1) return false;
  }
  return true;
}

namespace {

// Cycle points followed by T_k^l of the cycle for l = 1..counts[k-1], or the
// fixed point p_k for a map without rotation.
std::vector<HullVertex> plate_iterates(const IfsSystem& ifs, const Address& x,
                                       const std::vector<std::int64_t>& counts, double tol) {
  const auto cyc = cycle_of(ifs, x);
  std::vector<HullVertex> out;
  for (const auto& [rot, p] : cyc) out.push_back({p, IrreducibleForm{{}, rot}});

  for (std::size_t k = 1; k <= ifs.size(); ++k) {
    const auto index = static_cast<Address::value_type>(k);
    if (ifs.map(k).angle.is_zero()) {
      out.push_back({ifs.fixed_point(k), IrreducibleForm{{}, Address{index}}});
      continue;
    }
    for (const auto& [rot, p] : cyc) {
      Complex z = p;
      Address power;
      for (std::int64_t l = 1; l <= counts[k - 1]; ++l) {
        z = ifs.apply(k, z);
        power.push_back(index);
        std::optional<IrreducibleForm> form = IrreducibleForm{power, rot};
        auto blown = blow_up(ifs, power + rot);
        if (blown && std::abs(blown->point - z) <= tol) form = blown->form;
        out.push_back({z, std::move(form)});
      }
    }
  }
  return out;
}

struct Plate {
  std::vector<HullVertex> hull;
  bool verified = false;
  std::vector<std::int64_t> counts;
};

// Plate iteration starting from ceil(pi/|theta_k|) iterates per map. While
// containment fails every rotating map gets one more iterate, up to a full
// turn; each added point lies on the attractor, so a passing check is exact.
Plate iterate_plate(const IfsSystem& ifs, const Address& x, Complex principal, double tol,
                    bool extra) {
  Plate plate;
  std::vector<std::int64_t> full_turn;
  for (const Contraction& m : ifs.maps()) {
    const std::int64_t two_num = 2 * std::abs(m.angle.num());
    plate.counts.push_back(two_num == 0 ? 0 : (m.angle.den() + two_num - 1) / two_num + (extra ? 1 : 0));
    full_turn.push_back(two_num == 0 ? 0 : m.angle.den());
  }
  for (;;) {
    plate.hull = hull_of(plate_iterates(ifs, x, plate.counts, tol), tol, principal);
    plate.verified = verify_hull(ifs, points_of(plate.hull), tol);
    if (plate.verified) return plate;
    bool grew = false;
    for (std::size_t k = 0; k < plate.counts.size(); ++k)
      if (plate.counts[k] < full_turn[k]) {
        ++plate.counts[k];
        grew = true;
      }
    if (!grew) return plate;
  }
}

std::string counts_note(const IfsSystem& ifs, const std::vector<std::int64_t>& counts) {
  std::string out;
  for (std::size_t k = 1; k <= ifs.size(); ++k) {
    const std::int64_t two_num = 2 * std::abs(ifs.map(k).angle.num());
    if (two_num == 0) continue;
    const std::int64_t base = (ifs.map(k).angle.den() + two_num - 1) / two_num;
    if (counts[k - 1] > base) {
      if (!out.empty()) out += ", ";
      out += "map " + std::to_string(k) + " iterated " + std::to_string(counts[k - 1]) +
             " times (bound " + std::to_string(base) + ")";
    }
  }
  return out.empty() ? out : "plate iteration extended: " + out;
}

struct Working {
  IfsSystem system;
  NormalizingMap transform;
};

Working working_system(const IfsSystem& ifs, bool c_ifs) {
  if (c_ifs) {
    NormalizedBifractal nb = normalize_bifractal(ifs);
    return {std::move(nb.system), nb.transform};
  }
  return {ifs, NormalizingMap{}};
}

// Maps a result computed in normal form back to the original coordinates.
void map_back(HullResult& r, const NormalizingMap& t) {
  for (HullVertex& v : r.extrema) v.point = t.inverse(v.point);
  for (Complex& z : r.cycle) z = t.inverse(z);
  if (r.target) *r.target = *r.target * t.scale;
}

struct Attempt {
  std::optional<HullResult> result;
  std::string failure;
};

Attempt armadillo_attempt(const IfsSystem& w, const BoundingCircle& circle, Complex tau,
                          double tol, const HullOptions& opt) {
  MaximizerResult mx = loaf(Target(tau), w, circle, opt.limits);
  if (mx.entries.size() != 1) return {std::nullopt, "maximizer is not unique"};
  IrreducibleForm form = mx.entries[0].form;
  if (!form.prefix.empty()) {
    const double turn =
        -2.0 * kPi * static_cast<double>(value_of(w, form.prefix)) / static_cast<double>(w.common_den());
    tau *= std::polar(1.0, turn);
    mx = loaf(Target(tau), w, circle, opt.limits);
    if (mx.entries.size() != 1 || !mx.entries[0].form.prefix.empty())
      return {std::nullopt, "retargeted maximizer is not periodic"};
    form = mx.entries[0].form;
  }
  if (!uses_every_map(w, form.period)) return {std::nullopt, "maximizer is not strictly focal"};

  std::vector<Complex> cycle;
  for (const auto& [rot, p] : cycle_of(w, form.period)) cycle.push_back(p);
  if (!consecutiveness_check(w, cycle, circle, opt.limits))
    return {std::nullopt, "cycle is not consecutive"};

  const Complex principal = periodic_point(w, form.period);
  HullResult r;
  r.method = HullMethod::armadillo;
  Plate plate = iterate_plate(w, form.period, principal, tol, opt.extra_plate_iterate);
  if (!plate.verified) return {std::nullopt, "containment check failed"};
  r.extrema = std::move(plate.hull);
  r.verified = true;
  r.target = tau;
  r.principal = 0;
  r.cycle = std::move(cycle);
  r.notes = std::move(mx.diagnostics);
  if (std::string note = counts_note(w, plate.counts); !note.empty()) r.notes.push_back(note);
  return {std::move(r), {}};
}

}  // namespace

HullResult armadillo_hull(const IfsSystem& ifs, std::optional<Complex> candidate,
                          const HullOptions& opt) {
  const BoundingCircle original_circle = ideal_bounding_circle(ifs);
  if (auto t = trivial_hull(ifs, original_circle, HullMethod::armadillo)) return *t;

  const bool c_ifs = classify(ifs).is_c_ifs;
  const Working w = working_system(ifs, c_ifs);
  const BoundingCircle circle = ideal_bounding_circle(w.system);
  const double tol = opt.tol >= 0.0 ? opt.tol / std::abs(w.transform.scale) : 1e-9 * circle.radius;

  Complex tau;
  if (candidate) {
    if (!is_finite(*candidate) || *candidate == Complex{0.0, 0.0})
      throw DomainError("target direction must be finite and nonzero");
    tau = *candidate * std::conj(w.transform.scale);
  } else if (c_ifs) {
    tau = principal_direction(w.system).direction();
  } else {
    throw UnsupportedError("the Armadillo method needs a target direction for a non-C-IFS system");
  }

  const double m = static_cast<double>(w.system.common_den());
  const double turns[] = {0.0, 1.0 / (4.0 * m), -1.0 / (4.0 * m), 1.0 / (2.0 * m), -1.0 / (2.0 * m)};
  std::vector<std::string> failures;
  for (double turn : turns) {
    const Complex t = tau * std::polar(1.0, 2.0 * kPi * turn);
    Attempt a = armadillo_attempt(w.system, circle, t, tol, opt);
    if (a.result) {
      HullResult r = std::move(*a.result);
      map_back(r, w.transform);
      for (std::string& f : failures) r.notes.push_back(std::move(f));
      return r;
    }
    failures.push_back("direction rotated by " + std::to_string(turn) + " turns: " + a.failure);
  }

  HullResult r = general_hull(ifs, opt);
  r.notes = std::move(failures);
  r.notes.push_back("fell back to the general method");
  return r;
}

HullResult heuristic_hull(const IfsSystem& ifs, const HullOptions& opt) {
  if (!classify(ifs).is_c_ifs) throw DomainError("the heuristic method needs a C-IFS");
  const Working w = working_system(ifs, true);
  const BoundingCircle circle = ideal_bounding_circle(w.system);
  const double tol = opt.tol >= 0.0 ? opt.tol / std::abs(w.transform.scale) : 1e-9 * circle.radius;

  const Address x = predict_principal_form(w.system);
  const Complex principal = periodic_point(w.system, x);
  HullResult r;
  r.method = HullMethod::heuristic_only;
  Plate plate = iterate_plate(w.system, x, principal, tol, opt.extra_plate_iterate);
  r.extrema = std::move(plate.hull);
  r.verified = plate.verified;
  if (std::string note = counts_note(w.system, plate.counts); !note.empty()) r.notes.push_back(note);
  r.target = principal_direction(w.system).direction();
  if (std::abs(r.extrema.front().point - principal) <= tol) r.principal = 0;
  for (const auto& [rot, p] : cycle_of(w.system, x)) r.cycle.push_back(p);
  map_back(r, w.transform);
  return r;
}

HullResult compute_hull(const IfsSystem& ifs, MethodChoice choice, std::optional<Complex> target,
                        const HullOptions& opt) {
  if (target) Target{*target};
  switch (choice) {
    case MethodChoice::general: return general_hull(ifs, opt);
    case MethodChoice::armadillo: return armadillo_hull(ifs, target, opt);
    case MethodChoice::equiangular: return equiangular_hull(ifs, opt);
    case MethodChoice::heuristic: return heuristic_hull(ifs, opt);
    case MethodChoice::automatic: break;
  }
  const SystemClass cls = classify(ifs);
  if (cls.is_sierpinski || cls.is_equiangular) return equiangular_hull(ifs, opt);
  if (cls.is_c_ifs || target) return armadillo_hull(ifs, target, opt);
  return general_hull(ifs, opt);
}

}  // namespace ifshull
