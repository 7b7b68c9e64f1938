#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loaf.hpp"

namespace ifshull {

enum class HullMethod { equiangular, general, armadillo, heuristic_only };

std::string_view method_name(HullMethod m);

struct HullVertex {
  Complex point;
  std::optional<IrreducibleForm> form;
};

struct HullResult {
  std::vector<HullVertex> extrema;  // counterclockwise
  HullMethod method = HullMethod::general;
  bool verified = false;
  std::optional<Complex> target;        // direction actually used, original coordinates
  std::optional<std::size_t> principal;  // index of the maximizer of `target` in extrema
  std::vector<Complex> cycle;           // Cyc(x) of the principal form
  std::size_t level = 0;                // general method: L at which containment held
  std::vector<std::string> notes;       // gate failures, fallbacks, diagnostics
};

struct HullOptions {
  double tol = -1.0;  // negative: 1e-9 times the bounding radius
  Limits limits;
  bool extra_plate_iterate = false;
};

/// Every point of H(extrema) lies within tol of Conv(extrema).
bool verify_hull(const IfsSystem& ifs, std::span<const Complex> extrema, double tol);

HullResult equiangular_hull(const IfsSystem& ifs, const HullOptions& opt = {});
HullResult general_hull(const IfsSystem& ifs, const HullOptions& opt = {});

/// i(1 - phi_2) Log phi_1 for a C-IFS bifractal in normal form.
Target principal_direction(const IfsSystem& normalized);

/// Period x = (2, 1^{n_1}, ..., 2, 1^{n_J}) predicted for the maximizer of the
/// principal direction. Requires 0 < P <= Q < M/2 with angles -2piP/M, 2piQ/M.
Address predict_principal_form(const IfsSystem& normalized);

/// LOAF on the outward normal of segment e1 e2 (away from circle.center)
/// returns exactly the two points e1 and e2.
bool are_neighbors(const IfsSystem& ifs, const BoundingCircle& circle, Complex e1, Complex e2,
                   const Limits& limits = {});

/// Cycle points, in angular order around circle.center, form a consecutive
/// run of hull vertices: at most one cyclically adjacent pair fails
/// are_neighbors (the gap closing the run).
bool consecutiveness_check(const IfsSystem& ifs, std::span<const Complex> cycle,
                           const BoundingCircle& circle, const Limits& limits = {});

/// Plate iteration from the LOAF maximizer of `candidate` (the principal
/// direction for C-IFS systems). Falls back to general_hull when a gate fails.
HullResult armadillo_hull(const IfsSystem& ifs, std::optional<Complex> candidate = std::nullopt,
                          const HullOptions& opt = {});

/// Plate iteration from the predicted principal form, without LOAF.
HullResult heuristic_hull(const IfsSystem& ifs, const HullOptions& opt = {});

enum class MethodChoice { automatic, general, armadillo, equiangular, heuristic };

HullResult compute_hull(const IfsSystem& ifs, MethodChoice choice = MethodChoice::automatic,
                        std::optional<Complex> target = std::nullopt, const HullOptions& opt = {});

}  // namespace ifshull
