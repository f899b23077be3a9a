#pragma once

#include <random>
#include <vector>

#include "apx/linalg.hpp"
#include "oracles.hpp"

namespace testing {

inline apx::RatMatrix to_matrix(const oracle::Mat& a) {
  return apx::RatMatrix::from_rows(a);
}

inline oracle::Mat to_rows(const apx::RatMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                 long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  oracle::Mat a(rows, oracle::Vec(cols));
  for (auto& row : a)
    for (auto& x : row) x = dist(rng);
  return a;
}

inline apx::RatVector ints(std::initializer_list<long> xs) {
  apx::RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace testing
