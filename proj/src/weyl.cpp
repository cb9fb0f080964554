#include "bgglab/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bgglab {

namespace {

Vec unit(int dim, int i, long c = 1) {
  Vec v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

Vec add(Vec a, const Vec& b, long sb = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sb * b[i];
  return a;
}

}  // namespace

std::string to_string(RootType t) { return t == RootType::A ? "A" : "C"; }

RootType parse_root_type(const std::string& s) {
  if (s == "A" || s == "a") return RootType::A;
  if (s == "C" || s == "c") return RootType::C;
  throw std::invalid_argument("unsupported root system type: " + s);
}

RootSystemData make_root_system(RootType type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  RootSystemData rs;
  rs.type = type;
  rs.rank = rank;
  const int m = type == RootType::A ? rank + 1 : rank;
  rs.ambient_dim = m;
  for (int i = 0; i + 1 < m; ++i) rs.simple_roots.push_back(add(unit(m, i), unit(m, i + 1), -1));
  if (type == RootType::C) rs.simple_roots.push_back(unit(m, m - 1, 2));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      rs.positive_roots.push_back(add(unit(m, i), unit(m, j), -1));
      if (type == RootType::C) rs.positive_roots.push_back(add(unit(m, i), unit(m, j)));
    }
  if (type == RootType::C)
    for (int i = 0; i < m; ++i) rs.positive_roots.push_back(unit(m, i, 2));
  rs.rho = Vec(static_cast<std::size_t>(m), Rational(0));
  for (const auto& a : rs.positive_roots) rs.rho = add(rs.rho, a);
  for (auto& x : rs.rho) x /= 2;
  for (int i = 1; i <= rank; ++i) {
    Vec w(static_cast<std::size_t>(m), Rational(0));
    for (int j = 0; j < i; ++j) w[static_cast<std::size_t>(j)] = 1;
    if (type == RootType::A) {
      const Rational shift(i, m);
      for (auto& x : w) x -= shift;
    }
    for (auto& x : w) x.canonicalize();
    rs.fundamental_weights.push_back(w);
  }
  return rs;
}

Rational inner(const Vec& x, const Vec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational coroot_pairing(const Vec& v, const Vec& alpha) { return 2 * inner(v, alpha) / inner(alpha, alpha); }

std::vector<std::vector<Rational>> cartan_matrix(const RootSystemData& rs) {
  std::vector<std::vector<Rational>> c(rs.simple_roots.size());
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
    for (std::size_t j = 0; j < rs.simple_roots.size(); ++j)
      c[i].push_back(coroot_pairing(rs.simple_roots[i], rs.simple_roots[j]));
  return c;
}

Vec dynkin_to_ambient(const RootSystemData& rs, const std::vector<Rational>& labels) {
  if (static_cast<int>(labels.size()) != rs.rank) throw std::invalid_argument("expected one label per simple root");
  Vec v(static_cast<std::size_t>(rs.ambient_dim), Rational(0));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += labels[i] * rs.fundamental_weights[i][j];
  return v;
}

std::vector<Rational> ambient_to_dynkin(const RootSystemData& rs, const Vec& v) {
  std::vector<Rational> out;
  for (const auto& a : rs.simple_roots) out.push_back(coroot_pairing(v, a));
  return out;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.perm.resize(b.perm.size());
  for (std::size_t j = 0; j < b.perm.size(); ++j) {
    const int pb = b.perm[j];
    const int pa = a.perm[static_cast<std::size_t>(std::abs(pb) - 1)];
    c.perm[j] = pb > 0 ? pa : -pa;
  }
  return c;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement inv;
  inv.perm.resize(w.perm.size());
  for (std::size_t j = 0; j < w.perm.size(); ++j) {
    const int p = w.perm[j];
    const int sign = p > 0 ? 1 : -1;
    inv.perm[static_cast<std::size_t>(std::abs(p) - 1)] = sign * static_cast<int>(j + 1);
  }
  inv.length = w.length;
  return inv;
}

bool is_positive_root(const Vec& v) {
  for (const auto& x : v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

int weyl_length(const RootSystemData& rs, const WeylElement& w) {
  int len = 0;
  for (const auto& a : rs.positive_roots)
    if (!is_positive_root(act_on(w, a))) ++len;
  return len;
}

std::size_t weyl_order(const RootSystemData& rs) {
  std::size_t order = 1;
  for (int i = 2; i <= rs.ambient_dim; ++i) order *= static_cast<std::size_t>(i);
  if (rs.type == RootType::C) order <<= static_cast<unsigned>(rs.ambient_dim);
  return order;
}

std::vector<WeylElement> generate_weyl(const RootSystemData& rs, std::size_t bound) {
  if (rs.ambient_dim > 12 || weyl_order(rs) > bound) {
    throw WeylBoundExceeded("Weyl group of " + to_string(rs.type) + std::to_string(rs.rank) +
                            " exceeds the bound " + std::to_string(bound));
  }
  const int m = rs.ambient_dim;
  std::vector<int> base(static_cast<std::size_t>(m));
  std::iota(base.begin(), base.end(), 1);
  std::vector<WeylElement> out;
  do {
    const unsigned masks = rs.type == RootType::C ? (1U << static_cast<unsigned>(m)) : 1U;
    for (unsigned mask = 0; mask < masks; ++mask) {
      WeylElement w;
      w.perm = base;
      for (int j = 0; j < m; ++j)
        if (mask & (1U << static_cast<unsigned>(j))) w.perm[static_cast<std::size_t>(j)] *= -1;
      w.length = weyl_length(rs, w);
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.length != b.length ? a.length < b.length : a.perm < b.perm;
  });
  return out;
}

std::vector<std::size_t> length_histogram(const std::vector<WeylElement>& elements) {
  std::vector<std::size_t> h;
  for (const auto& w : elements) {
    if (static_cast<std::size_t>(w.length) >= h.size()) h.resize(static_cast<std::size_t>(w.length) + 1, 0);
    ++h[static_cast<std::size_t>(w.length)];
  }
  return h;
}

bool regularity_check(const RootSystemData& rs, const Vec& lambda) {
  const Vec shifted = add(lambda, rs.rho);
  for (const auto& a : rs.positive_roots)
    if (coroot_pairing(shifted, a) == 0) return false;
  return true;
}

bool is_dominant_integral(const RootSystemData& rs, const Vec& lambda) {
  for (const auto& c : ambient_to_dynkin(rs, lambda))
    if (c < 0 || !is_integer(c)) return false;
  return true;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystemData& rs, const std::vector<int>& parabolic,
                                            std::size_t bound) {
  for (int j : parabolic)
    if (j < 1 || j > rs.rank) throw std::invalid_argument("parabolic index " + std::to_string(j) + " out of range");
  std::vector<WeylElement> out;
  for (const auto& w : generate_weyl(rs, bound)) {
    const WeylElement winv = inverse(w);
    bool minimal = true;
    for (int j : parabolic)
      if (!is_positive_root(act_on(winv, rs.simple_roots[static_cast<std::size_t>(j - 1)]))) minimal = false;
    if (minimal) out.push_back(w);
  }
  return out;
}

BggShape bgg_shape(const RootSystemData& rs, const std::vector<int>& parabolic, const Vec& lambda,
                   std::size_t bound) {
  if (!is_dominant_integral(rs, lambda)) throw NotDominant("weight is not dominant integral");
  BggShape shape;
  shape.weyl_order = weyl_order(rs);
  const auto reps = minimal_coset_reps(rs, parabolic, bound);
  for (const auto& w : reps) {
    shape.terms[w.length].push_back(dot_action(rs, w, lambda));
    if (static_cast<std::size_t>(w.length) >= shape.counts.size())
      shape.counts.resize(static_cast<std::size_t>(w.length) + 1, 0);
    ++shape.counts[static_cast<std::size_t>(w.length)];
  }
  shape.levi_order = shape.weyl_order / reps.size();
  return shape;
}

std::size_t dot_orbit_size(const RootSystemData& rs, const Vec& lambda, std::size_t bound) {
  std::set<Vec> orbit;
  for (const auto& w : generate_weyl(rs, bound)) orbit.insert(dot_action(rs, w, lambda));
  return orbit.size();
}

}  // namespace bgglab
