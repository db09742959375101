#include "symheat/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace symheat {

double to_double(const Rat& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

RatVec rat_zero(std::size_t n) { return RatVec(n, Rat(0)); }

static void check_same_size(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rational vector size mismatch");
}

RatVec rat_add(const RatVec& a, const RatVec& b) {
  check_same_size(a, b);
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec rat_sub(const RatVec& a, const RatVec& b) {
  check_same_size(a, b);
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec rat_scale(const Rat& c, const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool rat_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != Rat(0)) return false;
  return true;
}

Rat gram_inner(const RatMat& gram, const RatVec& a, const RatVec& b) {
  const std::size_t n = gram.size();
  if (a.size() != n || b.size() != n)
    throw std::invalid_argument("gram_inner: vector length does not match rank");
  Rat acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw std::invalid_argument("gram_inner: gram is not square");
    Rat row(0);
    for (std::size_t j = 0; j < n; ++j) row += gram[i][j] * b[j];
    acc += a[i] * row;
  }
  return acc;
}

RatVec solve_linear(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == Rat(0)) ++pivot;
    if (pivot == n) throw std::invalid_argument("solve_linear: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == Rat(0)) continue;
      const Rat f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

OrthogonalBasis gram_schmidt(const RatMat& pairings) {
  const std::size_t n = pairings.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (pairings[i].size() != n) throw std::invalid_argument("gram_schmidt: matrix not square");
    for (std::size_t j = 0; j < i; ++j)
      if (pairings[i][j] != pairings[j][i])
        throw std::invalid_argument("gram_schmidt: matrix not symmetric");
  }

  OrthogonalBasis out;
  out.coords.assign(n, rat_zero(n));
  out.diag.assign(n, Rat(0));
  // inner[i][j] = <v_i, u_j> for the orthogonal vectors u_j built so far
  RatMat inner(n, rat_zero(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.coords[i][i] = Rat(1);
    for (std::size_t j = 0; j < i; ++j) {
      Rat vij = pairings[i][j];
      for (std::size_t l = 0; l < j; ++l) vij -= out.coords[j][l] * inner[i][l];
      inner[i][j] = vij;
      out.coords[i][j] = vij / out.diag[j];
    }
    Rat g = pairings[i][i];
    for (std::size_t l = 0; l < i; ++l) g -= out.coords[i][l] * inner[i][l];
    if (g <= Rat(0))
      throw std::invalid_argument("gram_schmidt: pairing matrix is not positive definite");
    out.diag[i] = g;
    inner[i][i] = g;
  }
  return out;
}

}  // namespace symheat
