#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace ifshull {

using nlohmann::json;

namespace {

json point_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json form_json(const std::optional<IrreducibleForm>& form, bool long_form) {
  if (!form) return nullptr;
  return {{"b", form->prefix.to_string(long_form)}, {"x", form->period.to_string(long_form)}};
}

json circle_json(const BoundingCircle& c) {
  return {{"center", point_json(c.center)}, {"radius", c.radius}};
}

std::string fmt(double v, const char* spec = "%.17g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

std::string hull_json(const IfsSystem& ifs, const HullResult& hull, bool long_form) {
  json extrema = json::array();
  for (const HullVertex& v : hull.extrema) {
    json e = point_json(v.point);
    e["form"] = form_json(v.form, long_form);
    extrema.push_back(std::move(e));
  }
  json cycle = json::array();
  for (const Complex& z : hull.cycle) cycle.push_back(point_json(z));

  json out;
  out["method"] = std::string(method_name(hull.method));
  out["verified"] = hull.verified;
  out["extrema"] = std::move(extrema);
  out["target"] = hull.target ? point_json(*hull.target) : json(nullptr);
  out["principal_index"] = hull.principal ? json(*hull.principal) : json(nullptr);
  out["cycle"] = std::move(cycle);
  out["value_set_cardinality"] = value_set_cardinality(ifs);
  out["bounding_circle"] = circle_json(ideal_bounding_circle(ifs));
  if (hull.method == HullMethod::general) out["level"] = hull.level;
  out["notes"] = hull.notes;
  return out.dump(2) + "\n";
}

std::string hull_csv(const HullResult& hull, bool long_form) {
  std::string out;
  for (const HullVertex& v : hull.extrema) {
    out += fmt(v.point.real()) + "," + fmt(v.point.imag()) + ",";
    if (v.form) out += csv_field(v.form->prefix.to_string(long_form)) + "," +
                       csv_field(v.form->period.to_string(long_form));
    else out += ",";
    out += "\n";
  }
  return out;
}

std::string maximize_json(const Target& tau, const MaximizerResult& result, bool long_form) {
  json maximizers = json::array();
  for (const MaximizerEntry& e : result.entries) {
    json m = point_json(e.point);
    m["value"] = e.value;
    m["form"] = form_json(e.form, long_form);
    maximizers.push_back(std::move(m));
  }
  json out;
  out["target"] = point_json(tau.direction());
  out["maximizers"] = std::move(maximizers);
  out["depth"] = result.depth;
  out["nodes"] = result.nodes;
  out["diagnostics"] = result.diagnostics;
  return out.dump(2) + "\n";
}

std::string info_json(const IfsSystem& ifs) {
  json maps = json::array();
  for (const Contraction& m : ifs.maps())
    maps.push_back({{"fixed_point", point_json(m.fixed_point)},
                    {"lambda", m.lambda},
                    {"angle", std::to_string(m.angle.num()) + "/" + std::to_string(m.angle.den())}});
  const SystemClass cls = classify(ifs);
  json out;
  out["n"] = ifs.size();
  out["maps"] = std::move(maps);
  out["common_denominator"] = ifs.common_den();
  out["numerators"] = ifs.numerators();
  out["value_set_cardinality"] = cls.value_set_size;
  out["termination_bound"] = 2 * cls.value_set_size;
  out["sierpinski"] = cls.is_sierpinski;
  out["equiangular"] = cls.is_equiangular;
  out["c_ifs"] = cls.is_c_ifs;
  out["bounding_circle"] = circle_json(ideal_bounding_circle(ifs));
  return out.dump(2) + "\n";
}

std::size_t default_render_level(std::size_t n) {
  if (n <= 1) return 0;
  std::size_t level = 0;
  double count = 1.0;
  while (count < 4096.0 && count * static_cast<double>(n) <= 200000.0) {
    count *= static_cast<double>(n);
    ++level;
  }
  return level;
}

std::string render_svg(const IfsSystem& ifs, const HullResult& hull, const RenderOptions& opt) {
  const std::size_t level = opt.level.value_or(default_render_level(ifs.size()));
  const std::vector<Complex> cloud = point_cloud(ifs, opt.seed, level, opt.limits);

  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  auto extend = [&](Complex z) {
    lo_x = std::min(lo_x, z.real());
    hi_x = std::max(hi_x, z.real());
    lo_y = std::min(lo_y, z.imag());
    hi_y = std::max(hi_y, z.imag());
  };
  for (const Complex& z : cloud) extend(z);
  for (const HullVertex& v : hull.extrema) extend(v.point);
  for (std::size_t k = 1; k <= ifs.size(); ++k) extend(ifs.fixed_point(k));

  const double size = 800.0, pad = 20.0;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double scale = (size - 2 * pad) / span;
  const double width = (hi_x - lo_x) * scale + 2 * pad;
  const double height = (hi_y - lo_y) * scale + 2 * pad;
  auto sx = [&](Complex z) { return fmt((z.real() - lo_x) * scale + pad, "%.3f"); };
  auto sy = [&](Complex z) { return fmt((hi_y - z.imag()) * scale + pad, "%.3f"); };
  auto circle = [&](Complex z, double r, const std::string& style) {
    return "<circle cx=\"" + sx(z) + "\" cy=\"" + sy(z) + "\" r=\"" + fmt(r, "%g") + "\" " + style + "/>\n";
  };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width, "%.0f") + "\" height=\"" +
         fmt(height, "%.0f") + "\" viewBox=\"0 0 " + fmt(width, "%.3f") + " " + fmt(height, "%.3f") + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out += "<path class=\"cloud\" stroke=\"#444\" stroke-width=\"1.2\" stroke-linecap=\"round\" d=\"";
  for (const Complex& z : cloud) out += "M" + sx(z) + " " + sy(z) + "h0";
  out += "\"/>\n";

  out += "<polygon class=\"hull\" fill=\"none\" stroke=\"#1a9850\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < hull.extrema.size(); ++i) {
    if (i) out += " ";
    out += sx(hull.extrema[i].point) + "," + sy(hull.extrema[i].point);
  }
  out += "\"/>\n";

  for (std::size_t k = 1; k <= ifs.size(); ++k) {
    const Complex p = ifs.fixed_point(k);
    out += circle(p, 5, "class=\"fixed-point\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"");
    out += circle(p, 1.5, "fill=\"red\"");
  }
  for (std::size_t k = 1; k <= ifs.size(); ++k)
    for (std::size_t j = 1; j <= ifs.size(); ++j)
      if (k != j) out += circle(ifs.apply(k, ifs.fixed_point(j)), 2.5, "class=\"cross-iterate\" fill=\"magenta\"");
  for (const Complex& z : hull.cycle)
    out += circle(z, 6, "class=\"cycle\" fill=\"none\" stroke=\"red\" stroke-width=\"1\"");

  if (hull.principal && hull.target) {
    const Complex e = hull.extrema[*hull.principal].point;
    const Complex along = Complex{0.0, 1.0} * *hull.target / std::abs(*hull.target) * span;
    out += "<line class=\"support\" x1=\"" + sx(e - along) + "\" y1=\"" + sy(e - along) + "\" x2=\"" +
           sx(e + along) + "\" y2=\"" + sy(e + along) + "\" stroke=\"blue\" stroke-width=\"1\"/>\n";
    out += circle(e, 4, "class=\"principal\" fill=\"blue\"");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ifshull
