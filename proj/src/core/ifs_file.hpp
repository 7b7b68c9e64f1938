#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ifs.hpp"

namespace ifshull {

/// A parsed IFS description: the system plus optional `set` values.
struct IfsFile {
  IfsSystem system;
  std::optional<double> tol;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> level;
  std::optional<std::size_t> seed;
};

/// Line format:
///   # comment
///   map <p_re> <p_im> <lambda> <num>/<den>     angle 2*pi*num/den
///   set <tol|cap|level|seed> <value>
/// Malformed lines raise ParseError; bad parameters raise ValidationError.
IfsFile parse_ifs_file(std::string_view text);

/// Reads and parses a file; IoError when it cannot be read.
IfsFile load_ifs_file(const std::string& path);

/// Text that parses back to the same system and settings.
std::string emit_ifs_file(const IfsFile& file);

}  // namespace ifshull
