#include "apx/set_incidence.hpp"

#include <algorithm>
#include <map>

#include "apx/error.hpp"

namespace apx {

IncidencePattern incidence_matrix(const SetFamily& a, const SetFamily& b) {
  IncidencePattern p{RatMatrix(b.size(), a.size()), b, a};
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (is_subset(b[i], a[j])) p.matrix(i, j) = 1;
  return p;
}

std::size_t nullity(const SetFamily& a, const SetFamily& b) {
  return a.size() - rank(incidence_matrix(a, b).matrix);
}

std::size_t mode_limit(NullityMode mode, std::size_t m, bool nonempty) {
  const std::size_t base = mode == NullityMode::ExactZero
                               ? (std::size_t{1} << (m + 1))
                               : 3 * (std::size_t{1} << m);
  return nonempty ? base - 1 : base;
}

namespace {

void require_distinct(const SetFamily& x) {
  auto sorted = x;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("sets are not distinct");
  }
}

void require_bound(std::size_t r, NullityMode mode, std::size_t m, bool nonempty) {
  const std::size_t limit = mode_limit(mode, m, nonempty);
  if (r >= limit) {
    throw PreconditionError("r = " + std::to_string(r) + " is not below the bound " +
                            std::to_string(limit) + " for m = " + std::to_string(m));
  }
}

SetFamily solve(const SetFamily& x, std::size_t m, NullityMode mode);

SetFamily compress(const SetFamily& x, std::size_t m, NullityMode mode) {
  const std::size_t r = x.size();
  if (r == 0) return {};
  // Degree 0 allows only the empty set; r <= 1 (resp. 2) copies meet the bound.
  if (m == 0) return SetFamily(r, IndexSet{});

  std::uint32_t pivot = 0;
  for (const auto& s : x)
    if (!s.empty() && (pivot == 0 || s.front() < pivot)) pivot = s.front();
  if (pivot == 0) return {IndexSet{}};  // only the empty set

  auto without = [pivot](const IndexSet& s) {
    IndexSet out;
    for (auto e : s)
      if (e != pivot) out.push_back(e);
    return out;
  };

  // Y: distinct X_i \ {x}; y_index maps each X_i to its Y entry.
  SetFamily ys;
  std::map<IndexSet, std::size_t> y_index;
  for (const auto& s : x) {
    auto reduced = without(s);
    if (y_index.emplace(reduced, ys.size()).second) ys.push_back(std::move(reduced));
  }
  // Z: X_i lacking x whose extension by x is also present.
  SetFamily zs;
  for (const auto& s : x) {
    if (std::binary_search(s.begin(), s.end(), pivot)) continue;
    IndexSet with = s;
    with.insert(std::lower_bound(with.begin(), with.end(), pivot), pivot);
    if (std::find(x.begin(), x.end(), with) != x.end()) zs.push_back(s);
  }
  if (ys.size() + zs.size() != r) throw InternalError("compression split is not a partition");

  SetFamily s = solve(ys, m, mode);
  for (auto lifted : solve(zs, m - 1, mode)) {
    lifted.insert(std::lower_bound(lifted.begin(), lifted.end(), pivot), pivot);
    s.push_back(std::move(lifted));
  }
  return s;
}

// In AtMostOne mode every subproblem first tries the ExactZero recursion and
// keeps it when it reaches nullity 0, whatever the size of the subproblem;
// only otherwise does it fall back to the AtMostOne recursion.
SetFamily solve(const SetFamily& x, std::size_t m, NullityMode mode) {
  SetFamily exact = compress(x, m, NullityMode::ExactZero);
  if (mode == NullityMode::ExactZero || nullity(x, exact) == 0) return exact;
  return compress(x, m, NullityMode::AtMostOne);
}

void verify(const SetFamily& x, const SetFamily& s, std::size_t m, NullityMode mode,
            bool nonempty) {
  if (s.size() != x.size()) throw InternalError("wrong number of sets constructed");
  for (const auto& e : s) {
    if (e.size() > m) throw InternalError("constructed set exceeds size bound");
    if (nonempty && e.empty()) throw InternalError("constructed set is empty");
  }
  const std::size_t n = nullity(x, s);
  if (n > (mode == NullityMode::ExactZero ? 0u : 1u)) {
    throw InternalError("constructed family has nullity " + std::to_string(n));
  }
}

}  // namespace

SetFamily construct_sets(const SetFamily& x, std::size_t m, NullityMode mode) {
  require_distinct(x);
  require_bound(x.size(), mode, m, false);
  auto s = solve(x, m, mode);
  verify(x, s, m, mode, false);
  return s;
}

SetFamily construct_sets_nonempty(const SetFamily& x, std::size_t m,
                                  NullityMode mode) {
  for (const auto& e : x)
    if (e.empty()) throw PreconditionError("sets must be non-empty");
  require_distinct(x);
  require_bound(x.size(), mode, m, true);

  SetFamily with_empty{IndexSet{}};
  with_empty.insert(with_empty.end(), x.begin(), x.end());
  SetFamily s = solve(with_empty, m, mode);

  // If the empty set was chosen, its row is the only one meeting the empty
  // column; dropping both keeps the rank. Otherwise the empty column is zero
  // and dropping any row costs at most one rank; take the cheapest.
  const auto empty_it = std::find(s.begin(), s.end(), IndexSet{});
  if (empty_it != s.end()) {
    s.erase(empty_it);
  } else {
    std::size_t best = 0;
    std::size_t best_nullity = x.size() + 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      SetFamily trial = s;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      const std::size_t n = nullity(x, trial);
      if (n < best_nullity) {
        best_nullity = n;
        best = i;
      }
    }
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(best));
  }
  verify(x, s, m, mode, true);
  return s;
}

std::vector<std::size_t> remove_rows_preserving_kernel(const RatMatrix& m,
                                                       std::size_t protected_rows) {
  const std::size_t r = m.cols();
  const std::size_t t = protected_rows;
  if (t > r) throw PreconditionError("more protected rows than columns");
  if (m.rows() != r + t) throw DimensionMismatch("matrix must have cols + t rows");
  std::vector<std::size_t> keep(m.rows());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  {
    std::vector<std::size_t> head(keep.begin(), keep.begin() + static_cast<std::ptrdiff_t>(t));
    if (rank(m.select_rows(head)) != t) {
      throw PreconditionError("protected rows are linearly dependent");
    }
  }
  while (keep.size() > r) {
    const std::size_t current = rank(m.select_rows(keep));
    bool removed = false;
    for (std::size_t k = t; k < keep.size(); ++k) {
      auto trial = keep;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
      if (rank(m.select_rows(trial)) == current) {
        keep = std::move(trial);
        removed = true;
        break;
      }
    }
    if (!removed) throw InternalError("no removable row although rows exceed columns");
  }
  return keep;
}

SetFamily extend_sets(const SetFamily& x, const SetFamily& prefix, std::size_t m,
                      bool nonempty) {
  const std::size_t r = x.size();
  const std::size_t t = prefix.size();
  if (t > r) throw PreconditionError("prefix longer than the family");
  require_distinct(x);
  if (nonempty) {
    for (const auto& e : x)
      if (e.empty()) throw PreconditionError("sets must be non-empty");
  }
  require_bound(r, NullityMode::AtMostOne, m, nonempty);
  const SetFamily head(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(t));
  if (nullity(head, prefix) != 0) {
    throw PreconditionError("prefix family has nonzero nullity");
  }

  const SetFamily extra = nonempty
                              ? construct_sets_nonempty(x, m, NullityMode::AtMostOne)
                              : construct_sets(x, m, NullityMode::AtMostOne);
  SetFamily rows = prefix;
  rows.insert(rows.end(), extra.begin(), extra.end());
  const auto keep = remove_rows_preserving_kernel(incidence_matrix(x, rows).matrix, t);

  SetFamily out;
  for (auto i : keep)
    if (i >= t) out.push_back(rows[i]);
  SetFamily combined = prefix;
  combined.insert(combined.end(), out.begin(), out.end());
  if (nullity(x, combined) > 1) throw InternalError("extension has nullity above 1");
  return out;
}

SetFamily tuple_to_setfamily(const PointTuple& t, std::size_t base) {
  if (base >= t.size()) throw PreconditionError("base index out of range");
  const std::size_t n = t[base].size();
  auto bit = [](const Rational& v) {
    if (v == 0) return false;
    if (v == 1) return true;
    throw PreconditionError("non-binary coordinate " + to_string(v));
  };
  SetFamily out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].size() != n) throw DimensionMismatch("points of differing dimension");
    IndexSet s;
    for (std::size_t j = 0; j < n; ++j)
      if (bit(t[i][j]) != bit(t[base][j])) s.push_back(static_cast<std::uint32_t>(j + 1));
    if (i != base) out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(const SetFamily& family) {
  std::string out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ";";
    out += to_string(family[i]);
  }
  return out;
}

SetFamily parse_set_family(std::string_view text) {
  SetFamily out;
  std::size_t start = 0;
  const auto blank = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
  };
  if (blank(text)) return out;
  while (true) {
    const auto semi = text.find(';', start);
    auto tok = text.substr(start, semi == std::string_view::npos ? std::string_view::npos
                                                                 : semi - start);
    out.push_back(parse_index_set(tok));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace apx
