#include "bgglab/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace bgglab {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Component {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::vector<Component> components(const QkMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  UnionFind uf(R + C);
  std::vector<bool> used_row(R, false), used_col(C, false);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      if (!m(r, c).is_zero()) {
        uf.unite(r, R + c);
        used_row[r] = used_col[c] = true;
      }
  std::vector<Component> out;
  std::vector<long> slot(R + C, -1);
  auto bucket = [&](std::size_t node) -> Component& {
    std::size_t root = uf.find(node);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(out.size());
      out.emplace_back();
    }
    return out[static_cast<std::size_t>(slot[root])];
  };
  for (std::size_t c = 0; c < C; ++c)
    if (used_col[c]) bucket(R + c).cols.push_back(c);
  for (std::size_t r = 0; r < R; ++r)
    if (used_row[r]) bucket(r).rows.push_back(r);
  return out;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  Poly g = gcd(a, b);
  return Poly::exact_div(a * b, g).monic();
}

Integer int_lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Rows of polynomials with integer coefficients, each a nonzero multiple of the input row.
std::vector<std::vector<Poly>> clear_denominators(const QkMatrix& m) {
  std::vector<std::vector<Poly>> out(m.rows(), std::vector<Poly>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Poly L(Rational(1));
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && m(r, c).den().degree() > 0) L = poly_lcm(L, m(r, c).den());
    Integer den_lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      Poly p = m(r, c).num() * Poly::exact_div(L, m(r, c).den());
      for (const auto& q : p.coeffs()) den_lcm = int_lcm(den_lcm, q.get_den());
      out[r][c] = std::move(p);
    }
    if (den_lcm != 1) {
      for (auto& p : out[r]) p *= Rational(den_lcm);
    }
  }
  return out;
}

using PivotKey = std::tuple<int, std::size_t, std::size_t>;

PivotKey pivot_key(const Poly& p, std::size_t row) { return {p.degree(), p.height(), row}; }

// Fraction-free echelon form; returns the pivot columns, rows are permuted in place.
std::vector<std::size_t> bareiss(std::vector<std::vector<Poly>>& a, std::size_t cols) {
  const std::size_t R = a.size();
  std::vector<std::size_t> pivots;
  Poly prev(Rational(1));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < R; ++c) {
    std::optional<std::size_t> best;
    PivotKey best_key{};
    for (std::size_t i = r; i < R; ++i) {
      if (a[i][c].is_zero()) continue;
      PivotKey key = pivot_key(a[i][c], i);
      if (!best || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    if (!best) continue;
    std::swap(a[r], a[*best]);
    const Poly& piv = a[r][c];
    for (std::size_t i = r + 1; i < R; ++i) {
      const Poly f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Poly v = piv * a[i][j];
        if (!f.is_zero() && !a[r][j].is_zero()) v -= f * a[r][j];
        a[i][j] = v.is_zero() ? Poly() : Poly::exact_div(v, prev);
      }
      a[i][c] = Poly();
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Echelon rref_component(const QkMatrix& m) {
  auto a = clear_denominators(m);
  auto pivots = bareiss(a, m.cols());
  const std::size_t rank = pivots.size();
  std::vector<std::vector<RatFunc>> rows(rank, std::vector<RatFunc>(m.cols()));
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = pivots[r]; c < m.cols(); ++c)
      if (!a[r][c].is_zero()) rows[r][c] = RatFunc(a[r][c]);
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t pc = pivots[r];
    const RatFunc inv = rows[r][pc].inverse();
    for (std::size_t c = pc; c < m.cols(); ++c)
      if (!rows[r][c].is_zero()) rows[r][c] *= inv;
    for (std::size_t u = 0; u < r; ++u) {
      if (rows[u][pc].is_zero()) continue;
      const RatFunc f = rows[u][pc];
      for (std::size_t c = pc; c < m.cols(); ++c)
        if (!rows[r][c].is_zero()) rows[u][c] -= f * rows[r][c];
    }
  }
  Echelon e;
  e.pivots = std::move(pivots);
  e.rref = QkMatrix(rank, m.cols());
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e.rref(r, c) = rows[r][c];
  return e;
}

}  // namespace

Echelon rref(const QkMatrix& m) {
  std::vector<std::pair<std::size_t, std::vector<RatFunc>>> rows;
  for (const auto& comp : components(m)) {
    Echelon local = rref_component(m.block(comp.rows, comp.cols));
    for (std::size_t r = 0; r < local.pivots.size(); ++r) {
      std::vector<RatFunc> row(m.cols());
      for (std::size_t j = 0; j < comp.cols.size(); ++j) row[comp.cols[j]] = local.rref(r, j);
      rows.emplace_back(comp.cols[local.pivots[r]], std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Echelon e;
  e.rref = QkMatrix(rows.size(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    e.pivots.push_back(rows[r].first);
    for (std::size_t c = 0; c < m.cols(); ++c) e.rref(r, c) = rows[r].second[c];
  }
  return e;
}

std::size_t rank(const QkMatrix& m) {
  std::size_t total = 0;
  for (const auto& comp : components(m)) {
    auto a = clear_denominators(m.block(comp.rows, comp.cols));
    total += bareiss(a, comp.cols.size()).size();
  }
  return total;
}

QkMatrix nullspace(const QkMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QkMatrix basis(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t f = free_cols[j];
    basis(f, j) = RatFunc(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.rref(r, f).is_zero()) basis(e.pivots[r], j) = -e.rref(r, f);
  }
  return basis;
}

std::vector<std::size_t> pivot_columns(const QkMatrix& m) {
  std::vector<std::size_t> out;
  for (const auto& comp : components(m)) {
    auto a = clear_denominators(m.block(comp.rows, comp.cols));
    for (auto p : bareiss(a, comp.cols.size())) out.push_back(comp.cols[p]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QkMatrix column_space(const QkMatrix& m) { return m.select_columns(pivot_columns(m)); }

std::optional<QkMatrix> solve(const QkMatrix& a, const QkMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  Echelon e = rref(hstack(a, b));
  QkMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t p = e.pivots[r];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = e.rref(r, a.cols() + j);
  }
  return x;
}

QkMatrix inverse(const QkMatrix& a) {
  if (a.rows() != a.cols()) throw ArithmeticError("inverse of a non-square matrix");
  if (rank(a) != a.rows()) throw ArithmeticError("inverse of a singular matrix");
  return *solve(a, QkMatrix::identity(a.rows()));
}

QkMatrix power(const QkMatrix& a, unsigned e) {
  QkMatrix r = QkMatrix::identity(a.rows());
  QkMatrix base = a;
  while (e) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return r;
}

std::vector<RatFunc> charpoly(const QkMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("charpoly of a non-square matrix");
  std::vector<RatFunc> c(n + 1);
  c[n] = RatFunc(1);
  QkMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    QkMatrix am = a * mk;
    RatFunc tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / RatFunc(static_cast<long>(k));
  }
  return c;
}

bool divide_linear(std::vector<RatFunc>& p, const RatFunc& root) {
  if (p.empty()) return false;
  const std::size_t n = p.size() - 1;
  if (n == 0) return false;
  std::vector<RatFunc> q(n);
  q[n - 1] = p[n];
  for (std::size_t d = n - 1; d-- > 0;) q[d] = p[d + 1] + root * q[d + 1];
  RatFunc rem = p[0] + root * q[0];
  if (!rem.is_zero()) return false;
  p = std::move(q);
  return true;
}

QMatrix specialize(const QkMatrix& m, const Rational& q) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out(r, c) = specialize(m(r, c), q);
  return out;
}

namespace {

std::vector<std::size_t> gauss_q(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  QMatrix a = m;
  return gauss_q(a).size();
}

QMatrix nullspace(const QMatrix& m) {
  QMatrix a = m;
  auto pivots = gauss_q(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMatrix basis(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    basis(free_cols[j], j) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], j) = -a(r, free_cols[j]);
  }
  return basis;
}

OracleResult rank_oracle(const QkMatrix& m, std::size_t symbolic_rank, int points, std::uint64_t seed) {
  OracleResult res;
  res.symbolic_rank = symbolic_rank;
  std::set<Rational> forbidden;
  std::uint64_t s = seed;
  while (static_cast<int>(res.points.size()) < points) {
    Rational q = generic_rational(s, forbidden);
    forbidden.insert(q);
    try {
      OraclePoint pt{q, rank(specialize(m, q))};
      res.agree = res.agree && pt.rank == symbolic_rank;
      res.points.push_back(pt);
      ++s;
    } catch (const SpecializationError&) {
      // redraw with the pole excluded
    }
  }
  return res;
}

}  // namespace bgglab
