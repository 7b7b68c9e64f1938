#include "ifs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

namespace ifshull {

namespace {

constexpr std::int64_t kMaxCommonDen = std::int64_t{1} << 40;

}  // namespace

Address Address::parse(std::string_view text) {
  std::vector<value_type> out;
  const bool commas = text.find(',') != std::string_view::npos;
  if (!commas) {
    for (char c : text) {
      if (c < '1' || c > '9') throw DomainError("bad address digit '" + std::string(1, c) + "'");
      out.push_back(static_cast<value_type>(c - '0'));
    }
    return Address(std::move(out));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, next - pos);
    value_type v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0)
      throw DomainError("bad address index '" + std::string(tok) + "'");
    out.push_back(v);
    pos = next + 1;
  }
  return Address(std::move(out));
}

Address Address::prefix(std::size_t len) const {
  return Address(std::vector<value_type>(indices_.begin(),
                                         indices_.begin() + std::min(len, indices_.size())));
}

Address Address::suffix(std::size_t from) const {
  return Address(std::vector<value_type>(indices_.begin() + std::min(from, indices_.size()),
                                         indices_.end()));
}

Address Address::rotated(std::size_t shift) const {
  if (indices_.empty()) return *this;
  std::vector<value_type> out(indices_);
  std::rotate(out.begin(), out.begin() + (shift % out.size()), out.end());
  return Address(std::move(out));
}

Address Address::repeated(std::size_t times) const {
  std::vector<value_type> out;
  out.reserve(indices_.size() * times);
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), indices_.begin(), indices_.end());
  return Address(std::move(out));
}

bool Address::contains(value_type k) const {
  return std::find(indices_.begin(), indices_.end(), k) != indices_.end();
}

std::string Address::to_string(bool long_form) const {
  const bool digits =
      !long_form && std::all_of(indices_.begin(), indices_.end(), [](value_type v) { return v < 10; });
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

Address operator+(const Address& a, const Address& b) {
  std::vector<Address::value_type> out(a.indices_);
  out.insert(out.end(), b.indices_.begin(), b.indices_.end());
  return Address(std::move(out));
}

IfsSystem::IfsSystem(std::vector<Contraction> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw ValidationError("an IFS needs at least one map");
  for (const Contraction& m : maps_) {
    if (!is_finite(m.fixed_point)) throw ValidationError("fixed point must be finite");
    if (!(m.lambda > 0.0 && m.lambda < 1.0))
      throw ValidationError("contraction factor must lie in (0,1)");
    const std::int64_t l = std::lcm(common_den_, m.angle.den());
    if (l > kMaxCommonDen) throw ValidationError("common angle denominator too large");
    common_den_ = l;
  }
  for (const Contraction& m : maps_) {
    std::int64_t n = m.angle.num() * (common_den_ / m.angle.den());
    n %= common_den_;
    if (n < 0) n += common_den_;
    numerators_.push_back(n);
    factors_.push_back(m.factor());
  }
}

Complex IfsSystem::apply(std::size_t k, Complex z) const {
  const Complex p = maps_[k - 1].fixed_point;
  return p + factors_[k - 1] * (z - p);
}

void IfsSystem::check(const Address& a) const {
  for (auto k : a) {
    if (k < 1 || k > maps_.size())
      throw DomainError("address index " + std::to_string(k) + " outside 1.." +
                        std::to_string(maps_.size()));
  }
}

Complex apply_map(const IfsSystem& ifs, const Address& a, Complex z) {
  ifs.check(a);
  for (std::size_t i = a.size(); i-- > 0;) z = ifs.apply(a[i], z);
  return z;
}

Complex factor_of(const IfsSystem& ifs, const Address& a) {
  ifs.check(a);
  Complex phi{1.0, 0.0};
  for (auto k : a) phi *= ifs.factor(k);
  return phi;
}

double lambda_of(const IfsSystem& ifs, const Address& a) {
  ifs.check(a);
  double l = 1.0;
  for (auto k : a) l *= ifs.map(k).lambda;
  return l;
}

std::int64_t value_of(const IfsSystem& ifs, const Address& a) {
  ifs.check(a);
  const std::int64_t m = ifs.common_den();
  std::int64_t v = 0;
  for (auto k : a) v = (v + ifs.numerator(k)) % m;
  return v;
}

Complex periodic_point(const IfsSystem& ifs, const Address& x) {
  if (x.empty()) throw DomainError("periodic point of the empty address");
  return apply_map(ifs, x, Complex{0.0, 0.0}) / (Complex{1.0, 0.0} - factor_of(ifs, x));
}

std::vector<std::pair<Address, Complex>> cycle_of(const IfsSystem& ifs, const Address& x) {
  if (x.empty()) throw DomainError("cycle of the empty address");
  std::vector<std::pair<Address, Complex>> out;
  out.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Address rot = x.rotated(j);
    const Complex p = periodic_point(ifs, rot);
    out.emplace_back(std::move(rot), p);
  }
  return out;
}

NormalizedBifractal normalize_bifractal(const IfsSystem& ifs) {
  if (ifs.size() != 2) throw UnsupportedError("normal form is defined for two-map systems only");
  const Complex p1 = ifs.fixed_point(1);
  const Complex p2 = ifs.fixed_point(2);
  if (p1 == p2) throw DegenerateError("normal form needs distinct fixed points");
  NormalizingMap n{p1, p2 - p1};
  std::vector<Contraction> maps = ifs.maps();
  maps[0].fixed_point = Complex{0.0, 0.0};
  maps[1].fixed_point = Complex{1.0, 0.0};
  return {IfsSystem(std::move(maps)), n};
}

std::vector<Complex> point_cloud(const IfsSystem& ifs, std::size_t seed, std::size_t level,
                                 const Limits& limits) {
  if (seed < 1 || seed > ifs.size()) throw DomainError("seed index out of range");
  double count = std::pow(static_cast<double>(ifs.size()), static_cast<double>(level));
  if (count > static_cast<double>(limits.max_points))
    throw ResourceError("point cloud of " + std::to_string(ifs.size()) + "^" +
                        std::to_string(level) + " points exceeds the cap of " +
                        std::to_string(limits.max_points));
  std::vector<Complex> cur{ifs.fixed_point(seed)};
  for (std::size_t l = 0; l < level; ++l) cur = hutchinson(ifs, cur);
  return cur;
}

std::vector<Complex> hutchinson(const IfsSystem& ifs, std::span<const Complex> points) {
  std::vector<Complex> out;
  out.reserve(points.size() * ifs.size());
  for (std::size_t k = 1; k <= ifs.size(); ++k)
    for (const Complex& z : points) out.push_back(ifs.apply(k, z));
  return out;
}

}  // namespace ifshull
