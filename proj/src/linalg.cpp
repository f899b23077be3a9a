#include "apx/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "apx/error.hpp"

namespace apx {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

// Row-scales a rational matrix to integers (row scaling keeps the row space
// and right kernel).
std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(),
                                        std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) {
      throw PreconditionError("bad rational denominator: '" +
                              std::string(text) + "'");
    }
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw PreconditionError("bad rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(digits), 10);
  if (num[0] == '-') n = -n;
  Integer d = 1;
  if (!den.empty()) {
    d = Integer(std::string(den), 10);
    if (d == 0) {
      throw PreconditionError("zero denominator: '" + std::string(text) + "'");
    }
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DimensionMismatch("rows of unequal length");
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols,
                                  std::optional<std::size_t> height) {
  const std::size_t rows =
      height ? *height : (cols.empty() ? 0 : cols.front().size());
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) {
      throw DimensionMismatch("columns of unequal length");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> indices) const {
  RatMatrix out(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    auto r = row(indices[k]);
    std::copy(r.begin(), r.end(), out.data_.begin() + k * cols_);
  }
  return out;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape");
  RatVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Echelon echelon(const RatMatrix& m) {
  Echelon e;
  e.cols = m.cols();
  auto a = integer_rows(m);
  std::vector<std::size_t> order(m.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    std::swap(order[p], order[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  order.resize(r);
  e.rows = std::move(a);
  e.row_order = std::move(order);
  return e;
}

std::size_t rank(const RatMatrix& m) { return echelon(m).rank(); }

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Undo the row scaling applied by integer_rows, then track swaps.
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= Rational(l);
  }
  auto a = integer_rows(m);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = a[c][c] * a[i][j] - a[i][c] * a[c][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  Rational det(a[n - 1][n - 1] * sign);
  return det / scale;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Echelon e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols());
    x[f] = 1;
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (x[j] != 0 && e.rows[k][j] != 0) acc += Rational(e.rows[k][j]) * x[j];
      }
      x[pc] = -acc / Rational(e.rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionMismatch("solve shape");
  // Augment with -b; a kernel vector with last entry 1 is the solution.
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = -b[i];
  }
  if (rank(a) != n) return std::nullopt;
  auto ker = kernel_basis(aug);
  if (ker.size() != 1) return std::nullopt;
  RatVector x(ker[0].begin(), ker[0].begin() + static_cast<std::ptrdiff_t>(n));
  const Rational last = ker[0][n];
  for (auto& v : x) v /= last;
  return x;
}

bool is_valid_witness(const DependenceWitness& w,
                      const std::vector<RatVector>& points) {
  if (w.coefficients.size() != points.size()) return false;
  bool nonzero = false;
  Rational total = 0;
  for (const auto& c : w.coefficients) {
    total += c;
    nonzero = nonzero || c != 0;
  }
  if (!nonzero || total != 0) return false;
  if (points.empty()) return false;
  for (std::size_t j = 0; j < points.front().size(); ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      acc += w.coefficients[i] * points[i][j];
    if (acc != 0) return false;
  }
  return true;
}

namespace {

void check_uniform(const std::vector<RatVector>& points) {
  for (const auto& p : points) {
    if (p.size() != points.front().size()) {
      throw DimensionMismatch("points of differing dimension");
    }
  }
}

}  // namespace

std::optional<DependenceWitness> affinely_dependent(
    const std::vector<RatVector>& points) {
  if (points.empty()) return std::nullopt;
  check_uniform(points);
  const std::size_t d = points.front().size();
  RatMatrix m(d + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    m(0, j) = 1;
    for (std::size_t i = 0; i < d; ++i) m(i + 1, j) = points[j][i];
  }
  auto ker = kernel_basis(m);
  if (ker.empty()) return std::nullopt;
  return DependenceWitness{std::move(ker.front())};
}

std::size_t affine_rank(const std::vector<RatVector>& points) {
  if (points.size() < 2) return 0;
  check_uniform(points);
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector v(points[i].size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(v));
  }
  return rank(RatMatrix::from_rows(diffs));
}

std::vector<std::size_t> independent_row_restriction(
    const std::vector<RatVector>& vectors, std::size_t l) {
  if (vectors.size() != l) {
    throw PreconditionError("expected " + std::to_string(l) + " vectors, got " +
                            std::to_string(vectors.size()));
  }
  if (l == 0) return {};
  // Pivot columns of the l x D matrix with the vectors as rows are exactly
  // the greedy (lexicographically first) independent coordinates.
  const Echelon e = echelon(RatMatrix::from_rows(vectors));
  if (e.rank() != l) {
    throw PreconditionError("vectors are linearly dependent");
  }
  return e.pivot_cols;
}

std::vector<std::size_t> independent_rows(const RatMatrix& m) {
  return echelon(m.transposed()).pivot_cols;
}

AffineRankProbe::AffineRankProbe(const std::vector<RatVector>& points)
    : count_(points.size()) {
  if (!points.empty()) {
    check_uniform(points);
    dim_ = points.front().size();
  }
  Integer l = 1;
  for (const auto& p : points)
    for (const auto& x : p)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  auto coords = std::make_shared<std::vector<Integer>>(count_ * dim_);
  for (std::size_t i = 0; i < count_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      (*coords)[i * dim_ + j] = points[i][j].get_num() * (l / points[i][j].get_den());
  coords_ = std::move(coords);
}

std::size_t AffineRankProbe::affine_rank(std::span<const std::size_t> subset) {
  if (subset.size() < 2 || dim_ == 0) return 0;
  const std::size_t rows = subset.size() - 1;
  const std::size_t cols = dim_;
  if (scratch_.size() < rows * cols) scratch_.resize(rows * cols);
  const auto& pts = *coords_;
  const Integer* base = &pts[subset[0] * dim_];
  for (std::size_t i = 0; i < rows; ++i) {
    const Integer* p = &pts[subset[i + 1] * dim_];
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_sub(scratch_[i * cols + j].get_mpz_t(), p[j].get_mpz_t(),
              base[j].get_mpz_t());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_ptr {
    return scratch_[i * cols + j].get_mpz_t();
  };
  prev_ = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && mpz_sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) mpz_swap(at(p, j), at(r, j));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(tmp_.get_mpz_t(), at(r, c), at(i, j));
        mpz_submul(tmp_.get_mpz_t(), at(i, c), at(r, j));
        mpz_divexact(at(i, j), tmp_.get_mpz_t(), prev_.get_mpz_t());
      }
      mpz_set_ui(at(i, c), 0);
    }
    mpz_set(prev_.get_mpz_t(), at(r, c));
    ++r;
  }
  return r;
}

}  // namespace apx
