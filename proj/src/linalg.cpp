#include "ghecke/matrix.hpp"

#include <sstream>

namespace ghecke {

CMatrix complexify(const RMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = GaussianRational(m(i, j));
  return out;
}

std::size_t rank_fraction_free(const RMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  // Clear denominators row by row so that every entry is an integer.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

namespace {
template <class T>
std::string matrix_text(const Matrix<T>& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << to_string(m(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}
}  // namespace

std::string to_string(const RMatrix& m) { return matrix_text(m); }
std::string to_string(const CMatrix& m) { return matrix_text(m); }

}  // namespace ghecke
