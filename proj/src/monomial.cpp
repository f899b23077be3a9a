#include "apx/monomial.hpp"

#include <algorithm>
#include <cctype>

#include "apx/error.hpp"

namespace apx {

Monomial::Monomial(std::vector<std::uint32_t> indices) : idx_(std::move(indices)) {
  if (std::find(idx_.begin(), idx_.end(), 0u) != idx_.end()) {
    throw PreconditionError("monomial indices are 1-based");
  }
  std::sort(idx_.begin(), idx_.end());
}

bool Monomial::has_repeats() const noexcept {
  return std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end();
}

IndexSet Monomial::support() const {
  IndexSet s = idx_;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Monomial Monomial::times(std::uint32_t index) const {
  auto v = idx_;
  v.push_back(index);
  return Monomial(std::move(v));
}

Monomial Monomial::operator*(const Monomial& other) const {
  auto v = idx_;
  v.insert(v.end(), other.idx_.begin(), other.idx_.end());
  return Monomial(std::move(v));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return idx_ <=> other.idx_;
}

void FamilySpec::validate() const {
  if (N < 1 || d < 1 || m < 1) {
    throw PreconditionError("family parameters N, d, m must be >= 1");
  }
}

std::vector<Monomial> enumerate_monomials(std::size_t N, std::size_t m) {
  std::vector<Monomial> out;
  out.emplace_back();
  if (N == 0) return out;
  for (std::size_t deg = 1; deg <= m; ++deg) {
    std::vector<std::uint32_t> cur(deg, 1);
    while (true) {
      out.emplace_back(cur);
      // Next non-decreasing sequence in lexicographic order.
      std::size_t k = deg;
      while (k > 0 && cur[k - 1] == N) --k;
      if (k == 0) break;
      const std::uint32_t v = cur[k - 1] + 1;
      std::fill(cur.begin() + static_cast<std::ptrdiff_t>(k - 1), cur.end(), v);
    }
  }
  return out;
}

Rational eval_monomial(const Monomial& f, const RatVector& x) {
  if (f.max_index() > x.size()) {
    throw PreconditionError("monomial index " + std::to_string(f.max_index()) +
                            " exceeds dimension " + std::to_string(x.size()));
  }
  Rational acc = 1;
  for (auto i : f.indices()) acc *= x[i - 1];
  return acc;
}

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

int eval_monomial_boolean(const Monomial& s, const IndexSet& x) {
  return is_subset(s.support(), x) ? 1 : 0;
}

namespace {

std::string join_braced(const std::vector<std::uint32_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::vector<std::uint32_t> parse_braced(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw PreconditionError("expected braced index list, got '" +
                            std::string(text) + "'");
  }
  std::vector<std::uint32_t> out;
  std::string_view body(s.data() + 1, s.size() - 2);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    auto tok = body.substr(start, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - start);
    if (tok.empty() || tok.size() > 9 ||
        !std::all_of(tok.begin(), tok.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
      throw PreconditionError("bad index '" + std::string(tok) + "' in '" +
                              std::string(text) + "'");
    }
    const auto v = static_cast<std::uint32_t>(std::stoul(std::string(tok)));
    if (v == 0) throw PreconditionError("indices are 1-based");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string to_string(const Monomial& f) { return join_braced(f.indices()); }

Monomial parse_monomial(std::string_view text) {
  return Monomial(parse_braced(text));
}

std::string to_string(const IndexSet& s) { return join_braced(s); }

IndexSet parse_index_set(std::string_view text) {
  auto v = parse_braced(text);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace apx
