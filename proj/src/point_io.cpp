#include "apx/point_io.hpp"

#include <charconv>
#include <sstream>

#include "apx/error.hpp"

namespace apx {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_size(const std::string& text, std::size_t& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

void read_meta(const std::string& comment, std::map<std::string, std::string>& meta) {
  std::istringstream words(comment);
  std::string w;
  while (words >> w) {
    const auto eq = w.find('=');
    if (eq != std::string::npos && eq > 0) meta[w.substr(0, eq)] = w.substr(eq + 1);
  }
}

}  // namespace

void write_points(std::ostream& os, const std::vector<RatVector>& points, std::size_t dim,
                  const std::map<std::string, std::string>& meta) {
  os << "apx-points 1 dim=" << dim << " count=" << points.size() << "\n";
  if (!meta.empty()) {
    os << "#";
    for (const auto& [k, v] : meta) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionMismatch("point dimension differs from header");
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) os << " ";
      os << to_string(p[j]);
    }
    os << "\n";
  }
}

PointFile read_points(std::istream& is) {
  PointFile out;
  std::string line;
  std::size_t lineno = 0;
  std::size_t count = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (!header) {
      std::istringstream words(t);
      std::string magic, version, dim_kv, count_kv, extra;
      words >> magic >> version >> dim_kv >> count_kv;
      if (magic != "apx-points" || version != "1" || (words >> extra)) {
        throw ParseError(lineno, "expected header 'apx-points 1 dim=<D> count=<K>'");
      }
      if (dim_kv.rfind("dim=", 0) != 0 || !parse_size(dim_kv.substr(4), out.dim) ||
          out.dim == 0) {
        throw ParseError(lineno, "bad dim field '" + dim_kv + "'");
      }
      if (count_kv.rfind("count=", 0) != 0 || !parse_size(count_kv.substr(6), count)) {
        throw ParseError(lineno, "bad count field '" + count_kv + "'");
      }
      header = true;
      continue;
    }
    if (t.empty()) continue;
    if (t[0] == '#') {
      read_meta(t.substr(1), out.meta);
      continue;
    }
    std::istringstream words(t);
    RatVector p;
    std::string w;
    while (words >> w) {
      try {
        p.push_back(parse_rational(w));
      } catch (const PreconditionError& e) {
        throw ParseError(lineno, e.what());
      }
    }
    if (p.size() != out.dim) {
      throw ParseError(lineno, "expected " + std::to_string(out.dim) + " coordinates, got " +
                                   std::to_string(p.size()));
    }
    if (out.points.size() == count) throw ParseError(lineno, "more points than count");
    out.points.push_back(std::move(p));
  }
  if (!header) throw ParseError(lineno + 1, "missing header");
  if (out.points.size() != count) {
    throw ParseError(lineno + 1, "expected " + std::to_string(count) + " points, got " +
                                     std::to_string(out.points.size()));
  }
  return out;
}

void write_provenance(std::ostream& os, const std::vector<std::vector<std::int64_t>>& prov) {
  for (const auto& p : prov) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) os << ",";
      os << p[j];
    }
    os << "\n";
  }
}

std::vector<std::vector<std::int64_t>> read_provenance(std::istream& is) {
  std::vector<std::vector<std::int64_t>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::int64_t> p;
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      const std::string tok =
          trim(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      std::int64_t v = 0;
      const char* end = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(tok.data(), end, v);
      if (tok.empty() || ec != std::errc() || ptr != end) {
        throw ParseError(lineno, "bad integer '" + tok + "'");
      }
      p.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace apx
