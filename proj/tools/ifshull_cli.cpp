// Command-line front end over the ifshull C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ifshull/ifshull.h"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitError = 1;
constexpr int kExitUnverified = 2;

struct Owned {
  char* s = nullptr;
  ~Owned() { ifsh_string_free(s); }
};

struct Flags {
  std::string file;
  std::string target;
  std::string method = "auto";
  std::string out;
  std::optional<double> tol;
  std::optional<std::size_t> cap;
  std::optional<int> level;
  bool csv = false;
  bool long_form = false;
};

int report(ifsh_status s) {
  std::cerr << "error: " << ifsh_status_name(s) << ": " << ifsh_last_error() << "\n";
  return kExitError;
}

bool parse_target(const std::string& text, double& re, double& im) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    std::size_t used = 0;
    re = std::stod(text.substr(0, comma), &used);
    if (used != comma) return false;
    const std::string rest = text.substr(comma + 1);
    im = std::stod(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

ifsh_method method_of(const std::string& name) {
  if (name == "general") return IFSH_METHOD_GENERAL;
  if (name == "armadillo") return IFSH_METHOD_ARMADILLO;
  if (name == "equiangular") return IFSH_METHOD_EQUIANGULAR;
  if (name == "heuristic") return IFSH_METHOD_HEURISTIC;
  return IFSH_METHOD_AUTO;
}

struct System {
  ifsh_system* sys = nullptr;
  ifsh_settings settings{};
  ~System() { ifsh_system_free(sys); }
};

ifsh_status load(const Flags& f, System& s) {
  if (ifsh_status st = ifsh_system_load(f.file.c_str(), &s.sys); st != IFSH_OK) return st;
  return ifsh_system_settings(s.sys, &s.settings);
}

std::size_t cap_of(const Flags& f, const System& s) {
  if (f.cap) return *f.cap;
  return s.settings.has_cap ? s.settings.cap : 0;
}

ifsh_status build_hull(const Flags& f, const System& s, ifsh_hull** hull, bool& usage_error) {
  ifsh_hull_options opt;
  ifsh_hull_options_init(&opt);
  opt.method = method_of(f.method);
  if (f.tol) opt.tol = *f.tol;
  else if (s.settings.has_tol) opt.tol = s.settings.tol;
  opt.max_nodes = opt.max_points = cap_of(f, s);
  if (!f.target.empty()) {
    if (!parse_target(f.target, opt.target_re, opt.target_im)) {
      usage_error = true;
      return IFSH_ERR_INVALID_ARGUMENT;
    }
    opt.has_target = 1;
  }
  return ifsh_system_hull(s.sys, &opt, hull);
}

int write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return kExitVerified;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitError;
  }
  return kExitVerified;
}

int cmd_hull(const Flags& f) {
  System s;
  if (ifsh_status st = load(f, s); st != IFSH_OK) return report(st);
  ifsh_hull* hull = nullptr;
  bool usage = false;
  if (ifsh_status st = build_hull(f, s, &hull, usage); st != IFSH_OK) {
    if (usage) {
      std::cerr << "error: --target expects re,im\n";
      return kExitError;
    }
    return report(st);
  }
  Owned text;
  const ifsh_status st = f.csv ? ifsh_hull_to_csv(hull, f.long_form, &text.s)
                               : ifsh_hull_to_json(hull, f.long_form, &text.s);
  const int verified = ifsh_hull_verified(hull);
  ifsh_hull_free(hull);
  if (st != IFSH_OK) return report(st);
  if (int rc = write_output(f.out, text.s); rc != kExitVerified) return rc;
  return verified ? kExitVerified : kExitUnverified;
}

int cmd_maximize(const Flags& f) {
  double re = 0.0, im = 0.0;
  if (!parse_target(f.target, re, im)) {
    std::cerr << "error: --target expects re,im\n";
    return kExitError;
  }
  if (re == 0.0 && im == 0.0) {
    std::cerr << "error: --target must be nonzero\n";
    return kExitError;
  }
  System s;
  if (ifsh_status st = load(f, s); st != IFSH_OK) return report(st);
  ifsh_maximizer* mx = nullptr;
  if (ifsh_status st = ifsh_system_maximize(s.sys, re, im, cap_of(f, s), &mx); st != IFSH_OK)
    return report(st);
  Owned text;
  const ifsh_status st = ifsh_maximizer_to_json(mx, f.long_form, &text.s);
  ifsh_maximizer_free(mx);
  if (st != IFSH_OK) return report(st);
  return write_output(f.out, text.s);
}

int cmd_render(const Flags& f) {
  System s;
  if (ifsh_status st = load(f, s); st != IFSH_OK) return report(st);
  ifsh_hull* hull = nullptr;
  bool usage = false;
  if (ifsh_status st = build_hull(f, s, &hull, usage); st != IFSH_OK) {
    if (usage) {
      std::cerr << "error: --target expects re,im\n";
      return kExitError;
    }
    return report(st);
  }
  int level = -1;
  if (f.level) level = *f.level;
  else if (s.settings.has_level) level = static_cast<int>(s.settings.level);
  const std::size_t seed = s.settings.has_seed ? s.settings.seed : 1;
  Owned svg;
  const ifsh_status st = ifsh_hull_render_svg(hull, level, seed, cap_of(f, s), &svg.s);
  ifsh_hull_free(hull);
  if (st != IFSH_OK) return report(st);
  return write_output(f.out, svg.s);
}

int cmd_info(const Flags& f) {
  System s;
  if (ifsh_status st = load(f, s); st != IFSH_OK) return report(st);
  Owned text;
  if (ifsh_status st = ifsh_system_info_json(s.sys, &text.s); st != IFSH_OK) return report(st);
  return write_output(f.out, text.s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex hulls of self-similar fractals of unity"};
  app.require_subcommand(1);
  Flags f;
  const std::vector<std::string> methods{"auto", "general", "armadillo", "equiangular", "heuristic"};

  auto* hull = app.add_subcommand("hull", "Extremal points of the attractor");
  auto* maximize = app.add_subcommand("maximize", "Maximizers of a linear target");
  auto* render = app.add_subcommand("render", "SVG of the point cloud and hull");
  auto* info = app.add_subcommand("info", "System parameters and classification");

  for (auto* sub : {hull, maximize, render, info}) {
    sub->add_option("file", f.file, "IFS description file")->required();
    sub->add_option("--out", f.out, "Output path (default stdout)");
  }
  for (auto* sub : {hull, render}) {
    sub->add_option("--method", f.method, "Hull method")->check(CLI::IsMember(methods));
    sub->add_option("--target", f.target, "Candidate direction re,im");
    sub->add_option("--tol", f.tol, "Geometric tolerance")->check(CLI::NonNegativeNumber);
  }
  for (auto* sub : {hull, maximize, render})
    sub->add_option("--cap", f.cap, "Cap on enumerated nodes and points")->check(CLI::PositiveNumber);
  for (auto* sub : {hull, maximize}) sub->add_flag("--long-form", f.long_form, "Comma separated addresses");
  hull->add_flag("--csv", f.csv, "One re,im,b,x line per vertex");
  maximize->add_option("--target", f.target, "Target direction re,im")->required();
  render->add_option("--level", f.level, "Point cloud level")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitVerified : kExitError;
  }

  if (hull->parsed()) return cmd_hull(f);
  if (maximize->parsed()) return cmd_maximize(f);
  if (render->parsed()) return cmd_render(f);
  return cmd_info(f);
}
