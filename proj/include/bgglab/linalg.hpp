// Exact linear algebra over Q(k) and over Q.
//
// Symbolic elimination splits a matrix into the connected components of its
// nonzero pattern, clears denominators row by row and runs fraction-free
// (Bareiss) elimination on integer-coefficient polynomials. The reduced row
// echelon form is then recovered over Q(k); being unique, it makes every
// reported basis canonical.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bgglab/matrix.hpp"

namespace bgglab {

struct Echelon {
  QkMatrix rref;                    // rank x cols
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const QkMatrix& m);
std::size_t rank(const QkMatrix& m);
/// Kernel basis as the columns of the returned matrix, one per free column.
QkMatrix nullspace(const QkMatrix& m);
std::vector<std::size_t> pivot_columns(const QkMatrix& m);
/// The original columns of m at its pivot positions.
QkMatrix column_space(const QkMatrix& m);
/// X with a X = b, or nullopt when the system is inconsistent. Free variables are 0.
std::optional<QkMatrix> solve(const QkMatrix& a, const QkMatrix& b);
/// Throws ArithmeticError for singular input.
QkMatrix inverse(const QkMatrix& a);
QkMatrix power(const QkMatrix& a, unsigned e);

/// Characteristic polynomial det(x I - a), coefficients from x^0 upward.
std::vector<RatFunc> charpoly(const QkMatrix& a);
/// Divides p by (x - root) in place; returns false (leaving p untouched) if inexact.
bool divide_linear(std::vector<RatFunc>& p, const RatFunc& root);

// Numeric side (used by the specialization oracle).
QMatrix specialize(const QkMatrix& m, const Rational& q);
std::size_t rank(const QMatrix& m);
QMatrix nullspace(const QMatrix& m);

struct OraclePoint {
  Rational k;
  std::size_t rank = 0;
};

struct OracleResult {
  std::size_t symbolic_rank = 0;
  std::vector<OraclePoint> points;
  bool agree = true;
};

/// Compares `symbolic_rank` with numeric ranks at `points` generic rationals
/// drawn from seeds seed, seed+1, ...; poles are skipped by redrawing.
OracleResult rank_oracle(const QkMatrix& m, std::size_t symbolic_rank, int points, std::uint64_t seed);

}  // namespace bgglab
