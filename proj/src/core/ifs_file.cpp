#include "ifs_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace ifshull {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "bad " + std::string(what) + " '" + std::string(tok) + "'");
  return v;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

IfsFile parse_ifs_file(std::string_view text) {
  std::vector<Contraction> maps;
  std::optional<double> tol;
  std::optional<std::size_t> cap, level, seed;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;

    if (words[0] == "map") {
      if (words.size() != 5)
        throw ParseError(line_no, "expected 'map <p_re> <p_im> <lambda> <num>/<den>'");
      const double re = parse_number<double>(words[1], line_no, "coordinate");
      const double im = parse_number<double>(words[2], line_no, "coordinate");
      const double lambda = parse_number<double>(words[3], line_no, "contraction factor");
      const std::string_view angle = words[4];
      const std::size_t slash = angle.find('/');
      if (slash == std::string_view::npos)
        throw ParseError(line_no, "angle must be a fraction num/den");
      const auto num = parse_number<std::int64_t>(angle.substr(0, slash), line_no, "angle numerator");
      const auto den = parse_number<std::int64_t>(angle.substr(slash + 1), line_no, "angle denominator");
      if (!(lambda > 0.0 && lambda < 1.0))
        throw ValidationError("line " + std::to_string(line_no) + ": contraction factor " +
                              std::string(words[3]) + " is not in (0,1)");
      if (den <= 0)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": angle denominator must be positive");
      if (!is_finite(Complex{re, im}))
        throw ValidationError("line " + std::to_string(line_no) + ": fixed point must be finite");
      maps.push_back(Contraction{Complex{re, im}, lambda, RationalAngle(num, den)});
    } else if (words[0] == "set") {
      if (words.size() != 3) throw ParseError(line_no, "expected 'set <key> <value>'");
      const std::string_view key = words[1];
      if (key == "tol") {
        tol = parse_number<double>(words[2], line_no, "tolerance");
        if (!(*tol >= 0.0))
          throw ValidationError("line " + std::to_string(line_no) + ": tolerance must be >= 0");
      } else if (key == "cap") {
        cap = parse_number<std::size_t>(words[2], line_no, "cap");
      } else if (key == "level") {
        level = parse_number<std::size_t>(words[2], line_no, "level");
      } else if (key == "seed") {
        seed = parse_number<std::size_t>(words[2], line_no, "seed");
      } else {
        throw ParseError(line_no, "unknown setting '" + std::string(key) + "'");
      }
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(words[0]) + "'");
    }
  }

  if (maps.empty()) throw ValidationError("no map lines");
  IfsFile file{IfsSystem(std::move(maps)), tol, cap, level, seed};
  if (file.seed && (*file.seed < 1 || *file.seed > file.system.size()))
    throw ValidationError("seed must be a map index in 1.." + std::to_string(file.system.size()));
  return file;
}

IfsFile load_ifs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return parse_ifs_file(buf.str());
}

std::string emit_ifs_file(const IfsFile& file) {
  std::string out;
  for (const Contraction& m : file.system.maps()) {
    out += "map " + format_double(m.fixed_point.real()) + " " + format_double(m.fixed_point.imag()) +
           " " + format_double(m.lambda) + " " + std::to_string(m.angle.num()) + "/" +
           std::to_string(m.angle.den()) + "\n";
  }
  if (file.tol) out += "set tol " + format_double(*file.tol) + "\n";
  if (file.cap) out += "set cap " + std::to_string(*file.cap) + "\n";
  if (file.level) out += "set level " + std::to_string(*file.level) + "\n";
  if (file.seed) out += "set seed " + std::to_string(*file.seed) + "\n";
  return out;
}

}  // namespace ifshull
