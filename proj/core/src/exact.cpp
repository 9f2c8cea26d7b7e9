#include "itq/exact.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace itq {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::zero(int r, int c) { return IntMatrix(r, c); }

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const bigint& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix mat_pow(const IntMatrix& m, int k) {
  if (!m.is_square()) throw std::invalid_argument("mat_pow needs a square matrix");
  if (k < 0) throw std::invalid_argument("mat_pow needs k >= 0");
  IntMatrix result = IntMatrix::identity(m.rows);
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1) result = mat_mul(result, base);
    k >>= 1;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

bigint trace(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("trace needs a square matrix");
  bigint t = 0;
  for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
  return t;
}

// Fraction-free elimination (Bareiss): every update
// a(i,j) <- (pivot*a(i,j) - a(i,c)*a(r,j)) / prev_pivot is an exact integer
// division because the updated entries are minors of the original matrix.
int rank(const IntMatrix& m) {
  IntMatrix a = m;
  bigint prev = 1;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    for (int i = r + 1; i < a.rows; ++i) {
      for (int j = c + 1; j < a.cols; ++j) {
        bigint num = a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j);
        assert(num % prev == 0);
        a.at(i, j) = num / prev;
      }
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    ++r;
  }
  return r;
}

std::vector<int> rank_sequence(const IntMatrix& m, int upto) {
  if (!m.is_square()) throw std::invalid_argument("rank_sequence needs a square matrix");
  if (upto < 0) throw std::invalid_argument("rank_sequence needs upto >= 0");
  std::vector<int> seq;
  seq.reserve(size_t(upto) + 1);
  IntMatrix power = IntMatrix::identity(m.rows);
  seq.push_back(m.rows);
  for (int l = 1; l <= upto; ++l) {
    power = mat_mul(power, m);
    seq.push_back(rank(power));
  }
  return seq;
}

ZeroMultiplicities zero_multiplicities(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("zero_multiplicities needs a square matrix");
  const int n = m.rows;
  ZeroMultiplicities z;
  z.rank_sequence = rank_sequence(m, n);
  z.geometric = n - (n > 0 ? z.rank_sequence[1] : 0);
  z.algebraic = n - z.rank_sequence[n];
  // For powers of a single matrix the first plateau is permanent
  // (im M^{l+1} is contained in im M^l).  Ranks can drop at most n times,
  // so when every step below n still drops the index is n itself.
  z.nilpotency_index = n;
  for (int l = 0; l < n; ++l)
    if (z.rank_sequence[l] == z.rank_sequence[l + 1]) {
      z.nilpotency_index = l;
      break;
    }
  return z;
}

void IntPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

const bigint& IntPolynomial::coeff(int d) const {
  static const bigint zero_coeff = 0;
  if (d < 0 || d >= int(coeffs.size())) return zero_coeff;
  return coeffs[size_t(d)];
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const bigint& c = coeff(d);
    if (c == 0) continue;
    bigint abs_c = c < 0 ? bigint(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = abs_c == 1 && d > 0;
    if (!unit) out << abs_c.str();
    if (d > 0) {
      out << "x";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<bigint> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<bigint> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial{};
  std::vector<bigint> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly needs a square matrix");
  const int n = m.rows;
  // Faddeev-LeVerrier: B_1 = M, c_k = -tr(M B'_{k-1})/k with
  // B_k = M (B_{k-1} + c_{k-1} I). The c_k are the coefficients of
  // det(xI - M) = x^n + c_1 x^{n-1} + ... + c_n, all integers.
  std::vector<bigint> c(size_t(n) + 1);
  c[0] = 1;  // coefficient of x^n
  IntMatrix b = m;
  for (int k = 1; k <= n; ++k) {
    bigint t = trace(b);
    assert(t % k == 0);
    c[size_t(k)] = -t / k;
    if (k < n) {
      IntMatrix shifted = b;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[size_t(k)];
      b = mat_mul(m, shifted);
    } else {
      // Cayley-Hamilton residual must vanish: M (B_n + c_n I) = 0.
      IntMatrix shifted = b;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[size_t(k)];
      IntMatrix residual = mat_mul(m, shifted);
      assert(residual == IntMatrix::zero(n, n));
      (void)residual;
    }
  }
  std::vector<bigint> ascending(size_t(n) + 1);
  for (int d = 0; d <= n; ++d) ascending[size_t(d)] = c[size_t(n - d)];
  return IntPolynomial(std::move(ascending));
}

bool poly_divides(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (q.is_zero()) return true;
  if (q.degree() < p.degree()) return false;
  // Long division over the rationals.
  std::vector<bigrat> rem(q.coeffs.size());
  for (size_t i = 0; i < q.coeffs.size(); ++i) rem[i] = q.coeffs[i];
  const int dp = p.degree();
  const bigrat lead = bigrat(p.coeffs[size_t(dp)]);
  for (int d = int(rem.size()) - 1; d >= dp; --d) {
    if (rem[size_t(d)] == 0) continue;
    bigrat factor = rem[size_t(d)] / lead;
    for (int i = 0; i <= dp; ++i) rem[size_t(d - dp + i)] -= factor * bigrat(p.coeffs[size_t(i)]);
  }
  for (const bigrat& r : rem)
    if (r != 0) return false;
  return true;
}

std::vector<std::vector<bigint>> kernel_basis(const IntMatrix& m) {
  const int rows = m.rows, cols = m.cols;
  // Rational row reduction to reduced echelon form.
  std::vector<std::vector<bigrat>> a(static_cast<size_t>(rows), std::vector<bigrat>(static_cast<size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[size_t(i)][size_t(j)] = m.at(i, j);
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[size_t(i)][size_t(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[size_t(pivot)], a[size_t(r)]);
    bigrat inv = a[size_t(r)][size_t(c)];
    for (int j = c; j < cols; ++j) a[size_t(r)][size_t(j)] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[size_t(i)][size_t(c)] == 0) continue;
      bigrat f = a[size_t(i)][size_t(c)];
      for (int j = c; j < cols; ++j) a[size_t(i)][size_t(j)] -= f * a[size_t(r)][size_t(j)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(size_t(cols), false);
  for (int c : pivot_col) is_pivot[size_t(c)] = true;

  std::vector<std::vector<bigint>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[size_t(free)]) continue;
    std::vector<bigrat> v(static_cast<size_t>(cols));
    v[size_t(free)] = 1;
    for (size_t pr = 0; pr < pivot_col.size(); ++pr)
      v[size_t(pivot_col[pr])] = -a[pr][size_t(free)];
    // Scale to a primitive integer vector, first nonzero coordinate positive.
    bigint lcm_den = 1;
    for (const bigrat& x : v) {
      bigint den = boost::multiprecision::denominator(x);
      lcm_den = boost::multiprecision::lcm(lcm_den, den);
    }
    std::vector<bigint> w(static_cast<size_t>(cols));
    bigint g = 0;
    for (int j = 0; j < cols; ++j) {
      w[size_t(j)] = boost::multiprecision::numerator(v[size_t(j)]) *
                     (lcm_den / boost::multiprecision::denominator(v[size_t(j)]));
      g = boost::multiprecision::gcd(g, w[size_t(j)]);
    }
    if (g > 1)
      for (bigint& x : w) x /= g;
    for (const bigint& x : w) {
      if (x == 0) continue;
      if (x < 0)
        for (bigint& y : w) y = -y;
      break;
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

int rank_rational_elimination(const IntMatrix& m) {
  std::vector<std::vector<bigrat>> a(static_cast<size_t>(m.rows), std::vector<bigrat>(static_cast<size_t>(m.cols)));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) a[size_t(i)][size_t(j)] = m.at(i, j);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (a[size_t(i)][size_t(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[size_t(pivot)], a[size_t(r)]);
    for (int i = r + 1; i < m.rows; ++i) {
      if (a[size_t(i)][size_t(c)] == 0) continue;
      bigrat f = a[size_t(i)][size_t(c)] / a[size_t(r)][size_t(c)];
      for (int j = c; j < m.cols; ++j) a[size_t(i)][size_t(j)] -= f * a[size_t(r)][size_t(j)];
    }
    ++r;
  }
  return r;
}

namespace {

// Determinant of a square polynomial matrix by cofactor expansion along the
// first row; exponential, used only as an oracle on small matrices.
IntPolynomial poly_det(const std::vector<std::vector<IntPolynomial>>& a) {
  const size_t n = a.size();
  if (n == 0) return IntPolynomial({bigint(1)});
  if (n == 1) return a[0][0];
  IntPolynomial det;
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<IntPolynomial>> minor(n - 1, std::vector<IntPolynomial>(n - 1));
    for (size_t i = 1; i < n; ++i) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[i - 1][cc++] = a[i][c];
      }
    }
    IntPolynomial term = poly_mul(a[0][j], poly_det(minor));
    det = (j % 2 == 0) ? poly_add(det, term) : poly_sub(det, term);
  }
  return det;
}

}  // namespace

IntPolynomial char_poly_cofactor(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly_cofactor needs a square matrix");
  const int n = m.rows;
  std::vector<std::vector<IntPolynomial>> xim(size_t(n),
                                              std::vector<IntPolynomial>(size_t(n), IntPolynomial{}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<bigint> c;
      c.push_back(-m.at(i, j));
      if (i == j) c.push_back(1);
      xim[size_t(i)][size_t(j)] = IntPolynomial(std::move(c));
    }
  return poly_det(xim);
}

}  // namespace itq
