#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hull_methods.hpp"

namespace ifshull {

std::string hull_json(const IfsSystem& ifs, const HullResult& hull, bool long_form = false);

/// One line `re,im,b,x` per vertex; b and x are empty when a vertex has no form.
std::string hull_csv(const HullResult& hull, bool long_form = false);

std::string maximize_json(const Target& tau, const MaximizerResult& result, bool long_form = false);

std::string info_json(const IfsSystem& ifs);

/// Smallest L with n^L >= 4096, kept to n^L <= 200000.
std::size_t default_render_level(std::size_t n);

struct RenderOptions {
  std::optional<std::size_t> level;
  std::size_t seed = 1;
  Limits limits;
};

/// SVG with the level-L point cloud, the hull polygon, fixed points, their
/// first cross-iterates, the cycle, the principal point and a line through it
/// perpendicular to the target.
std::string render_svg(const IfsSystem& ifs, const HullResult& hull, const RenderOptions& opt = {});

}  // namespace ifshull
