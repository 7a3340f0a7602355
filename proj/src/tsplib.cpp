#include "antgls/tsplib.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace antgls {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

std::string line_error(std::size_t line_no, std::string_view line, std::string_view what) {
  std::ostringstream os;
  os << "line " << line_no << ": " << what << ": '" << line << "'";
  return os.str();
}

std::optional<long long> to_integer(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> to_real(std::string_view s) {
  // from_chars for double is missing on older libstdc++; strtod needs a terminator.
  std::string buf(s);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

DistanceMatrix::DistanceMatrix(int n, std::vector<std::int32_t> row_major)
    : n_(n), d_(std::move(row_major)) {
  if (n_ <= 0) throw InconsistentInstanceError("distance matrix must have positive size");
  if (d_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    throw InconsistentInstanceError("distance matrix needs n*n entries");
  }
  for (City i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0) throw InconsistentInstanceError("distance matrix diagonal must be zero");
    for (City j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) < 0) throw InconsistentInstanceError("distances must be non-negative");
      if ((*this)(i, j) != (*this)(j, i)) {
        std::ostringstream os;
        os << "distance matrix is not symmetric at (" << i << ", " << j << ")";
        throw InconsistentInstanceError(os.str());
      }
    }
  }
}

std::int32_t euc2d_distance(Coord a, Coord b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return static_cast<std::int32_t>(std::floor(std::sqrt(dx * dx + dy * dy) + 0.5));
}

Instance parse_tsplib(std::string_view content) {
  Instance inst;
  std::optional<int> dimension;
  bool have_name = false;
  bool have_weight_type = false;
  bool in_coords = false;
  std::vector<bool> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view raw = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (upper(line) == "EOF") break;

    if (in_coords) {
      auto fields = split_ws(line);
      if (fields.size() != 3) throw ParseError(line_error(line_no, line, "expected 'index x y'"));
      auto idx = to_integer(fields[0]);
      auto x = to_real(fields[1]);
      auto y = to_real(fields[2]);
      if (!idx || !x || !y) throw ParseError(line_error(line_no, line, "malformed coordinate row"));
      if (*idx < 1 || *idx > *dimension) {
        throw InconsistentInstanceError(line_error(line_no, line, "city index outside 1..DIMENSION"));
      }
      if (seen[static_cast<std::size_t>(*idx - 1)]) {
        throw InconsistentInstanceError(line_error(line_no, line, "duplicate city index"));
      }
      seen[static_cast<std::size_t>(*idx - 1)] = true;
      inst.coords.push_back({*x, *y});
      continue;
    }

    const auto colon = line.find(':');
    std::string key = upper(trim(line.substr(0, colon)));
    std::string_view value = colon == std::string_view::npos ? std::string_view{} : trim(line.substr(colon + 1));

    if (key == "NODE_COORD_SECTION") {
      if (!dimension) throw ParseError(line_error(line_no, line, "NODE_COORD_SECTION before DIMENSION"));
      if (!have_weight_type) throw ParseError(line_error(line_no, line, "NODE_COORD_SECTION before EDGE_WEIGHT_TYPE"));
      in_coords = true;
      seen.assign(static_cast<std::size_t>(*dimension), false);
      continue;
    }
    if (colon == std::string_view::npos) {
      throw ParseError(line_error(line_no, line, "expected 'KEY : VALUE'"));
    }
    if (key == "NAME") {
      inst.name = std::string(value);
      have_name = true;
    } else if (key == "TYPE") {
      if (upper(value) != "TSP") throw UnsupportedFormatError("unsupported TYPE '" + std::string(value) + "'");
    } else if (key == "DIMENSION") {
      auto v = to_integer(value);
      if (!v) throw ParseError(line_error(line_no, line, "DIMENSION is not an integer"));
      if (*v < 3) throw InconsistentInstanceError(line_error(line_no, line, "DIMENSION must be at least 3"));
      dimension = static_cast<int>(*v);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (upper(value) != "EUC_2D") {
        throw UnsupportedFormatError("unsupported EDGE_WEIGHT_TYPE '" + std::string(value) + "'");
      }
      have_weight_type = true;
    }
    // Other TSPLIB keys (COMMENT, ...) carry nothing we need.
  }

  if (!have_name) throw ParseError("missing NAME");
  if (!dimension) throw ParseError("missing DIMENSION");
  if (!have_weight_type) throw ParseError("missing EDGE_WEIGHT_TYPE");
  if (!in_coords) throw ParseError("missing NODE_COORD_SECTION");
  if (static_cast<int>(inst.coords.size()) != *dimension) {
    std::ostringstream os;
    os << "DIMENSION is " << *dimension << " but NODE_COORD_SECTION has " << inst.coords.size() << " rows";
    throw InconsistentInstanceError(os.str());
  }
  inst.dimension = *dimension;
  return inst;
}

DistanceMatrix build_distance_matrix(const Instance& inst) {
  const auto n = static_cast<std::size_t>(inst.dimension);
  std::vector<std::int32_t> d(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto w = euc2d_distance(inst.coords[i], inst.coords[j]);
      d[i * n + j] = w;
      d[j * n + i] = w;
    }
  }
  return DistanceMatrix(inst.dimension, std::move(d));
}

DistanceMatrix parse_matrix_fixture(std::string_view content) {
  auto tokens = split_ws(content);
  if (tokens.empty()) throw ParseError("empty matrix fixture");
  auto n = to_integer(tokens[0]);
  if (!n || *n < 1) throw ParseError("matrix fixture must start with a positive size");
  const auto expected = static_cast<std::size_t>(*n) * static_cast<std::size_t>(*n);
  if (tokens.size() - 1 != expected) {
    std::ostringstream os;
    os << "matrix fixture of size " << *n << " needs " << expected << " entries, found " << tokens.size() - 1;
    throw InconsistentInstanceError(os.str());
  }
  std::vector<std::int32_t> d;
  d.reserve(expected);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    auto v = to_integer(tokens[i]);
    if (!v) throw ParseError("matrix fixture entry " + std::to_string(i) + " is not an integer");
    d.push_back(static_cast<std::int32_t>(*v));
  }
  return DistanceMatrix(static_cast<int>(*n), std::move(d));
}

Problem parse_problem(std::string_view content, std::string fallback_name) {
  auto tokens = split_ws(content.substr(0, std::min<std::size_t>(content.size(), 256)));
  if (!tokens.empty() && to_integer(tokens[0])) {
    return Problem{std::move(fallback_name), std::nullopt, parse_matrix_fixture(content)};
  }
  Instance inst = parse_tsplib(content);
  auto d = build_distance_matrix(inst);
  std::string name = inst.name;
  return Problem{std::move(name), std::move(inst), std::move(d)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Problem load_problem(const std::filesystem::path& path) {
  return parse_problem(read_file(path), path.stem().string());
}

}  // namespace antgls
