#include "ifshull/ifshull.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "hull_methods.hpp"
#include "ifs_file.hpp"
#include "report.hpp"

struct ifsh_system {
  ifshull::IfsFile file;
};

struct ifsh_hull {
  std::shared_ptr<const ifshull::IfsSystem> system;
  ifshull::HullResult result;
  std::string method;
};

struct ifsh_maximizer {
  ifshull::Target target;
  ifshull::MaximizerResult result;
};

namespace {

thread_local std::string last_error;

ifsh_status status_of(ifshull::ErrorCode code) {
  using ifshull::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return IFSH_ERR_PARSE;
    case ErrorCode::validation: return IFSH_ERR_VALIDATION;
    case ErrorCode::domain: return IFSH_ERR_DOMAIN;
    case ErrorCode::resource: return IFSH_ERR_RESOURCE;
    case ErrorCode::unsupported: return IFSH_ERR_UNSUPPORTED;
    case ErrorCode::degenerate: return IFSH_ERR_DEGENERATE;
    case ErrorCode::internal: return IFSH_ERR_INTERNAL;
    case ErrorCode::io: return IFSH_ERR_IO;
  }
  return IFSH_ERR_INTERNAL;
}

ifsh_status fail(ifsh_status s, const char* what) {
  last_error = what;
  return s;
}

template <class F>
ifsh_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ifshull::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IFSH_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(IFSH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(IFSH_ERR_INTERNAL, "unknown error");
  }
}

ifsh_status copy_string(const std::string& s, char** out) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) return fail(IFSH_ERR_RESOURCE, "out of memory");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
  return IFSH_OK;
}

ifshull::Limits limits_of(std::size_t max_nodes, std::size_t max_points) {
  ifshull::Limits l;
  if (max_nodes) l.max_nodes = max_nodes;
  if (max_points) l.max_points = max_points;
  return l;
}

}  // namespace

extern "C" {

IFSH_EXPORT const char* ifsh_last_error(void) { return last_error.c_str(); }

IFSH_EXPORT const char* ifsh_status_name(ifsh_status status) {
  switch (status) {
    case IFSH_OK: return "ok";
    case IFSH_ERR_PARSE: return "parse error";
    case IFSH_ERR_VALIDATION: return "validation error";
    case IFSH_ERR_DOMAIN: return "domain error";
    case IFSH_ERR_RESOURCE: return "resource error";
    case IFSH_ERR_UNSUPPORTED: return "unsupported";
    case IFSH_ERR_DEGENERATE: return "degenerate input";
    case IFSH_ERR_INTERNAL: return "internal error";
    case IFSH_ERR_IO: return "i/o error";
    case IFSH_ERR_INVALID_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

IFSH_EXPORT void ifsh_hull_options_init(ifsh_hull_options* opt) {
  if (!opt) return;
  *opt = ifsh_hull_options{};
  opt->method = IFSH_METHOD_AUTO;
  opt->tol = -1.0;
}

IFSH_EXPORT ifsh_status ifsh_system_parse(const char* text, ifsh_system** out) {
  if (!text || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ifsh_system{ifshull::parse_ifs_file(text)};
    return IFSH_OK;
  });
}

IFSH_EXPORT ifsh_status ifsh_system_load(const char* path, ifsh_system** out) {
  if (!path || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ifsh_system{ifshull::load_ifs_file(path)};
    return IFSH_OK;
  });
}

IFSH_EXPORT ifsh_status ifsh_system_from_maps(size_t n, const double* p_re, const double* p_im,
                                              const double* lambda, const int64_t* num,
                                              const int64_t* den, ifsh_system** out) {
  if (!out || (n > 0 && (!p_re || !p_im || !lambda || !num || !den)))
    return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<ifshull::Contraction> maps;
    for (size_t k = 0; k < n; ++k)
      maps.push_back({{p_re[k], p_im[k]}, lambda[k], ifshull::RationalAngle(num[k], den[k])});
    *out = new ifsh_system{ifshull::IfsFile{ifshull::IfsSystem(std::move(maps)), {}, {}, {}, {}}};
    return IFSH_OK;
  });
}

IFSH_EXPORT void ifsh_system_free(ifsh_system* sys) { delete sys; }

IFSH_EXPORT size_t ifsh_system_size(const ifsh_system* sys) {
  return sys ? sys->file.system.size() : 0;
}

IFSH_EXPORT ifsh_status ifsh_system_settings(const ifsh_system* sys, ifsh_settings* out) {
  if (!sys || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  const ifshull::IfsFile& f = sys->file;
  *out = ifsh_settings{};
  out->has_tol = f.tol.has_value();
  out->tol = f.tol.value_or(0.0);
  out->has_cap = f.cap.has_value();
  out->cap = f.cap.value_or(0);
  out->has_level = f.level.has_value();
  out->level = f.level.value_or(0);
  out->has_seed = f.seed.has_value();
  out->seed = f.seed.value_or(0);
  return IFSH_OK;
}

IFSH_EXPORT ifsh_status ifsh_system_value_set_cardinality(const ifsh_system* sys, int64_t* out) {
  if (!sys || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  *out = ifshull::value_set_cardinality(sys->file.system);
  return IFSH_OK;
}

IFSH_EXPORT ifsh_status ifsh_system_emit(const ifsh_system* sys, char** out) {
  if (!sys || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return copy_string(ifshull::emit_ifs_file(sys->file), out); });
}

IFSH_EXPORT ifsh_status ifsh_system_info_json(const ifsh_system* sys, char** out) {
  if (!sys || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return copy_string(ifshull::info_json(sys->file.system), out); });
}

IFSH_EXPORT ifsh_status ifsh_system_hull(const ifsh_system* sys, const ifsh_hull_options* opt,
                                         ifsh_hull** out) {
  if (!sys || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  ifsh_hull_options o;
  ifsh_hull_options_init(&o);
  if (opt) o = *opt;
  if (o.method < IFSH_METHOD_AUTO || o.method > IFSH_METHOD_HEURISTIC)
    return fail(IFSH_ERR_INVALID_ARGUMENT, "unknown method");
  return guarded([&] {
    ifshull::HullOptions ho;
    ho.tol = o.tol;
    ho.limits = limits_of(o.max_nodes, o.max_points);
    ho.extra_plate_iterate = o.extra_plate_iterate != 0;
    std::optional<ifshull::Complex> target;
    if (o.has_target) target = ifshull::Complex{o.target_re, o.target_im};
    const auto choice = static_cast<ifshull::MethodChoice>(o.method);
    auto system = std::make_shared<const ifshull::IfsSystem>(sys->file.system);
    ifshull::HullResult r = ifshull::compute_hull(*system, choice, target, ho);
    std::string method(ifshull::method_name(r.method));
    *out = new ifsh_hull{std::move(system), std::move(r), std::move(method)};
    return IFSH_OK;
  });
}

IFSH_EXPORT void ifsh_hull_free(ifsh_hull* hull) { delete hull; }

IFSH_EXPORT size_t ifsh_hull_vertex_count(const ifsh_hull* hull) {
  return hull ? hull->result.extrema.size() : 0;
}

IFSH_EXPORT ifsh_status ifsh_hull_vertex(const ifsh_hull* hull, size_t i, double* re, double* im) {
  if (!hull || !re || !im) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= hull->result.extrema.size()) return fail(IFSH_ERR_INVALID_ARGUMENT, "vertex index out of range");
  *re = hull->result.extrema[i].point.real();
  *im = hull->result.extrema[i].point.imag();
  return IFSH_OK;
}

IFSH_EXPORT int ifsh_hull_verified(const ifsh_hull* hull) {
  return hull && hull->result.verified ? 1 : 0;
}

IFSH_EXPORT const char* ifsh_hull_method(const ifsh_hull* hull) {
  return hull ? hull->method.c_str() : "";
}

IFSH_EXPORT ifsh_status ifsh_hull_to_json(const ifsh_hull* hull, int long_form, char** out) {
  if (!hull || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return copy_string(ifshull::hull_json(*hull->system, hull->result, long_form != 0), out);
  });
}

IFSH_EXPORT ifsh_status ifsh_hull_to_csv(const ifsh_hull* hull, int long_form, char** out) {
  if (!hull || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return copy_string(ifshull::hull_csv(hull->result, long_form != 0), out); });
}

IFSH_EXPORT ifsh_status ifsh_hull_render_svg(const ifsh_hull* hull, int level, size_t seed,
                                             size_t max_points, char** out) {
  if (!hull || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ifshull::RenderOptions ro;
    if (level >= 0) ro.level = static_cast<std::size_t>(level);
    ro.seed = seed ? seed : 1;
    ro.limits = limits_of(0, max_points);
    return copy_string(ifshull::render_svg(*hull->system, hull->result, ro), out);
  });
}

IFSH_EXPORT ifsh_status ifsh_system_maximize(const ifsh_system* sys, double target_re,
                                             double target_im, size_t max_nodes,
                                             ifsh_maximizer** out) {
  if (!sys || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    ifshull::Target tau({target_re, target_im});
    ifshull::MaximizerResult r = ifshull::loaf(tau, sys->file.system, limits_of(max_nodes, 0));
    *out = new ifsh_maximizer{tau, std::move(r)};
    return IFSH_OK;
  });
}

IFSH_EXPORT void ifsh_maximizer_free(ifsh_maximizer* mx) { delete mx; }

IFSH_EXPORT size_t ifsh_maximizer_count(const ifsh_maximizer* mx) {
  return mx ? mx->result.entries.size() : 0;
}

IFSH_EXPORT ifsh_status ifsh_maximizer_point(const ifsh_maximizer* mx, size_t i, double* re,
                                             double* im, double* value) {
  if (!mx || !re || !im || !value) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= mx->result.entries.size()) return fail(IFSH_ERR_INVALID_ARGUMENT, "index out of range");
  const auto& e = mx->result.entries[i];
  *re = e.point.real();
  *im = e.point.imag();
  *value = e.value;
  return IFSH_OK;
}

IFSH_EXPORT ifsh_status ifsh_maximizer_to_json(const ifsh_maximizer* mx, int long_form, char** out) {
  if (!mx || !out) return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return copy_string(ifshull::maximize_json(mx->target, mx->result, long_form != 0), out);
  });
}

IFSH_EXPORT ifsh_status ifsh_verify_extrema(const ifsh_system* sys, size_t count, const double* re,
                                            const double* im, double tol, int* verified) {
  if (!sys || !verified || (count > 0 && (!re || !im)))
    return fail(IFSH_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<ifshull::Complex> pts;
    for (size_t i = 0; i < count; ++i) pts.emplace_back(re[i], im[i]);
    *verified = ifshull::verify_hull(sys->file.system, pts, tol) ? 1 : 0;
    return IFSH_OK;
  });
}

IFSH_EXPORT void ifsh_string_free(char* s) { std::free(s); }

}  // extern "C"
