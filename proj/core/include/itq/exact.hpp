#pragma once

// Exact integer/rational matrix arithmetic: ranks, powers, characteristic
// polynomials, eigenvalue-0 multiplicities, and polynomial divisibility.
// Everything is arbitrary precision; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace itq {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Dense row-major matrix with arbitrary-precision integer entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<bigint> entries;  // row-major, rows*cols

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(size_t(r) * size_t(c)) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
  }

  bigint& at(int r, int c) { return entries[size_t(r) * cols + c]; }
  const bigint& at(int r, int c) const { return entries[size_t(r) * cols + c]; }

  bool is_square() const { return rows == cols; }

  static IntMatrix identity(int n);
  static IntMatrix zero(int r, int c);

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix transpose(const IntMatrix& m);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Exact k-th power; k = 0 gives the identity. Requires a square matrix.
IntMatrix mat_pow(const IntMatrix& m, int k);

bigint trace(const IntMatrix& m);

// Rank over the rationals via fraction-free (Bareiss) elimination.
int rank(const IntMatrix& m);

// [rank(M^0), rank(M^1), ..., rank(M^upto)]; non-increasing.
std::vector<int> rank_sequence(const IntMatrix& m, int upto);

// Multiplicity data of the eigenvalue 0, all derived from exact ranks:
// algebraic = n - rank(M^n), geometric = n - rank(M), nilpotency_index =
// least l with rank(M^l) = rank(M^{l+1}) (the size of the largest Jordan
// block at 0). rank_sequence holds rank(M^0..M^n).
struct ZeroMultiplicities {
  int algebraic = 0;
  int geometric = 0;
  int nilpotency_index = 0;
  std::vector<int> rank_sequence;
};

ZeroMultiplicities zero_multiplicities(const IntMatrix& m);

// Integer polynomial, coefficients in ascending degree order.
struct IntPolynomial {
  std::vector<bigint> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<bigint> c) : coeffs(std::move(c)) { trim(); }

  // Drops trailing zero coefficients so the leading coefficient is nonzero
  // unless the polynomial is zero.
  void trim();

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return is_zero() ? -1 : int(coeffs.size()) - 1; }
  const bigint& coeff(int d) const;

  // Human-readable form, e.g. "x^3 - 3x^2".
  std::string to_string() const;

  bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// Exact characteristic polynomial det(xI - M) via Faddeev-LeVerrier
// (integer divisions in the recursion are provably exact; the final
// Cayley-Hamilton identity is asserted).
IntPolynomial char_poly(const IntMatrix& m);

// True iff p divides q over the rationals. Throws on zero p.
bool poly_divides(const IntPolynomial& p, const IntPolynomial& q);

// Basis of the rational kernel of m, returned as primitive integer vectors
// with the first nonzero coordinate positive (deterministic for reports).
std::vector<std::vector<bigint>> kernel_basis(const IntMatrix& m);

// Independent oracles: same results by entirely different algorithms.
// Used by cross-check suites; deliberately share no code with the above.
int rank_rational_elimination(const IntMatrix& m);
IntPolynomial char_poly_cofactor(const IntMatrix& m);

}  // namespace itq
