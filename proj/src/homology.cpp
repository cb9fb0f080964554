#include "bgglab/homology.hpp"

#include <algorithm>
#include <set>

namespace bgglab {

std::map<int, std::size_t> HomologyReport::dims() const {
  std::map<int, std::size_t> out;
  for (const auto& [d, h] : degrees) out[d] = h.dim;
  return out;
}

int HomologyReport::euler_characteristic() const {
  int chi = 0;
  for (const auto& [d, h] : degrees) chi += (d % 2 == 0 ? 1 : -1) * static_cast<int>(h.dim);
  return chi;
}

int euler_characteristic(const ChainComplex& c) {
  int chi = 0;
  for (int d = c.lo(); d <= c.hi(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<int>(c.dim(d));
  return chi;
}

HomologyReport homology(const ChainComplex& c) {
  HomologyReport rep;
  for (int d = c.lo(); d <= c.hi(); ++d) {
    HomologyDegree h;
    h.cycles = nullspace(c.diff(d));
    h.boundaries = column_space(c.diff(d + 1));
    const QkMatrix both = hstack(h.boundaries, h.cycles);
    std::vector<std::size_t> picks;
    for (auto p : pivot_columns(both))
      if (p >= h.boundaries.cols()) picks.push_back(p - h.boundaries.cols());
    h.reps = h.cycles.select_columns(picks);
    if (h.reps.rows() != c.dim(d)) h.reps = QkMatrix(c.dim(d), 0);
    h.dim = picks.size();
    if (h.dim + h.boundaries.cols() != h.cycles.cols()) throw std::logic_error("boundaries are not cycles");
    rep.degrees[d] = std::move(h);
  }
  return rep;
}

namespace {

// Coordinates of the classes of the columns of x in the basis reps, modulo boundaries.
QkMatrix class_coordinates(const HomologyDegree& h, const QkMatrix& x) {
  const std::size_t b = h.boundaries.cols();
  if (h.dim == 0) return QkMatrix(0, x.cols());
  auto sol = solve(hstack(h.boundaries, h.reps), x);
  if (!sol) throw std::logic_error("image of a cycle is not a cycle");
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < h.dim; ++r) rows.push_back(b + r);
  return sol->select_rows(rows);
}

}  // namespace

std::map<int, QkMatrix> induced_on_homology(const ChainMap& f, const HomologyReport& hs, const HomologyReport& ht) {
  std::map<int, QkMatrix> out;
  for (const auto& [d, h] : hs.degrees) {
    auto it = ht.degrees.find(d);
    if (it == ht.degrees.end()) {
      out[d] = QkMatrix(0, h.dim);
      continue;
    }
    if (h.dim == 0) {
      out[d] = QkMatrix(it->second.dim, 0);
      continue;
    }
    out[d] = class_coordinates(it->second, f.at(d) * h.reps);
  }
  return out;
}

std::map<int, QkMatrix> induced_on_homology(const ChainMap& f) {
  return induced_on_homology(f, homology(*f.source), homology(*f.target));
}

bool is_zero_on_homology(const ChainMap& f) {
  for (const auto& [d, m] : induced_on_homology(f))
    if (!m.is_zero()) return false;
  return true;
}

bool is_quasi_iso(const ChainMap& f) {
  const HomologyReport hs = homology(*f.source), ht = homology(*f.target);
  for (int d = std::min(f.source->lo(), f.target->lo()); d <= std::max(f.source->hi(), f.target->hi()); ++d) {
    const std::size_t a = hs.degrees.count(d) ? hs.degrees.at(d).dim : 0;
    const std::size_t b = ht.degrees.count(d) ? ht.degrees.at(d).dim : 0;
    if (a != b) return false;
  }
  for (const auto& [d, m] : induced_on_homology(f, hs, ht))
    if (rank(m) != m.rows()) return false;
  return true;
}

// ---------------------------------------------------------------- duals

ComplexPtr dualize(const ComplexPtr& c) {
  auto dual = std::make_shared<ChainComplex>(-c->hi(), -c->lo(), c->label() + "^v");
  for (int d = c->lo(); d <= c->hi(); ++d) {
    GradedSpace g = GradedSpace::abstract(c->dim(d));
    for (int t : c->space(d).weights) g.weights.push_back(-t);
    dual->space(-d) = std::move(g);
  }
  for (int d = c->lo() + 1; d <= c->hi(); ++d) dual->set_diff(-d + 1, c->diff(d).transpose());
  return dual;
}

ChainMap dualize(const ChainMap& f, const ComplexPtr& dual_target, const ComplexPtr& dual_source) {
  ChainMap g{dual_target, dual_source, {}};
  for (int d = f.source->lo(); d <= f.source->hi(); ++d) g.mats[-d] = f.at(d).transpose();
  for (int d = f.target->lo(); d <= f.target->hi(); ++d)
    if (!g.mats.count(-d)) g.mats[-d] = f.at(d).transpose();
  return g;
}

ChainMap dualize(const ChainMap& f) { return dualize(f, dualize(f.target), dualize(f.source)); }

// ---------------------------------------------------------------- pairings

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

QkMatrix random_combination(const QkMatrix& basis, std::size_t count, std::uint64_t& state) {
  QkMatrix coeffs(basis.cols(), count);
  for (std::size_t r = 0; r < basis.cols(); ++r)
    for (std::size_t c = 0; c < count; ++c) {
      state = mix(state);
      coeffs(r, c) = RatFunc(static_cast<long>(state % 7) - 3);
    }
  if (basis.cols() == 0) return QkMatrix(basis.rows(), count);
  return basis * coeffs;
}

}  // namespace

PairingReport homology_pairing(const ComplexPtr& c, int i, std::uint64_t seed, int trials) {
  PairingReport rep;
  rep.degree = i;
  ComplexPtr dual = dualize(c);
  const HomologyReport h = homology(*c);
  const HomologyReport hd = homology(*dual);
  const HomologyDegree& a = h.degrees.at(i);
  const HomologyDegree& b = hd.degrees.at(-i);
  rep.gram = b.reps.transpose() * a.reps;
  if (b.dim == 0 || a.dim == 0) rep.gram = QkMatrix(b.dim, a.dim);
  rep.well_defined = true;
  std::uint64_t state = mix(seed + 0x51ULL);
  for (int trial = 0; trial < trials; ++trial) {
    QkMatrix x = a.dim ? a.reps + random_combination(a.boundaries, a.dim, state) : QkMatrix(c->dim(i), 0);
    QkMatrix phi = b.dim ? b.reps + random_combination(b.boundaries, b.dim, state) : QkMatrix(c->dim(i), 0);
    QkMatrix g = (a.dim && b.dim) ? phi.transpose() * x : QkMatrix(b.dim, a.dim);
    if (!(g == rep.gram)) rep.well_defined = false;
  }
  rep.nondegenerate = rep.gram.rows() == rep.gram.cols() && rank(rep.gram) == rep.gram.rows();
  return rep;
}

AdjointnessReport pairing_adjointness(const ChainMap& f) {
  AdjointnessReport rep;
  ComplexPtr dA = dualize(f.source), dC = dualize(f.target);
  ChainMap fd = dualize(f, dC, dA);
  const HomologyReport hA = homology(*f.source), hC = homology(*f.target);
  const HomologyReport hdA = homology(*dA), hdC = homology(*dC);
  const auto Hf = induced_on_homology(f, hA, hC);
  const auto Hfd = induced_on_homology(fd, hdC, hdA);
  for (const auto& [d, hf] : Hf) {
    const auto& a = hA.degrees.at(d);
    const auto& cc = hC.degrees.at(d);
    const auto& da = hdA.degrees.at(-d);
    const auto& dc = hdC.degrees.at(-d);
    const QkMatrix gramA = (da.dim && a.dim) ? da.reps.transpose() * a.reps : QkMatrix(da.dim, a.dim);
    const QkMatrix gramC = (dc.dim && cc.dim) ? dc.reps.transpose() * cc.reps : QkMatrix(dc.dim, cc.dim);
    const QkMatrix lhs = gramC * hf;
    const QkMatrix rhs = Hfd.at(-d).transpose() * gramA;
    const bool ok = lhs == rhs;
    rep.per_degree[d] = ok;
    rep.adjoint = rep.adjoint && ok;
  }
  return rep;
}

DualVanishing dual_vanishing_check(const ChainMap& f) {
  DualVanishing out;
  out.precondition = is_zero_on_homology(f);
  ComplexPtr dT = dualize(f.target), dS = dualize(f.source);
  ChainMap fd = dualize(f, dT, dS);
  const HomologyReport hs = homology(*dT), ht = homology(*dS);
  out.passed = true;
  for (const auto& [d, m] : induced_on_homology(fd, hs, ht)) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      bool zero = true;
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, c).is_zero()) zero = false;
      if (!zero && out.passed) {
        out.passed = false;
        out.failing_degree = d;
        out.counterexample = hs.degrees.at(d).reps.column(c);
      }
    }
  }
  return out;
}

ChainMap random_null_homotopic(const ComplexPtr& c, std::uint64_t seed) {
  std::uint64_t state = mix(seed + 0x77ULL);
  std::map<int, QkMatrix> h;  // h_d: C_d -> C_{d+1}
  for (int d = c->lo(); d < c->hi(); ++d) {
    QkMatrix m(c->dim(d + 1), c->dim(d));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) {
        state = mix(state);
        m(r, col) = RatFunc(static_cast<long>(state % 5) - 2);
      }
    h[d] = std::move(m);
  }
  auto hd = [&](int d) { return h.count(d) ? h.at(d) : QkMatrix(c->dim(d + 1), c->dim(d)); };
  ChainMap f{c, c, {}};
  for (int d = c->lo(); d <= c->hi(); ++d) f.mats[d] = c->diff(d + 1) * hd(d) + hd(d - 1) * c->diff(d);
  return f;
}

// ---------------------------------------------------------------- sections

namespace {

QkMatrix extend_by_zero(const TruncatedModule& src, const TruncatedModule& dst) {
  QkMatrix m(dst.dim(), src.dim());
  for (const auto& key : src.basis()) m(dst.index_of(key), src.index_of(key)) = RatFunc(1);
  return m;
}

QkMatrix restrict_levels(const TruncatedModule& src, const TruncatedModule& dst) {
  QkMatrix m(dst.dim(), src.dim());
  for (const auto& key : src.basis())
    if (dst.contains(key)) m(dst.index_of(key), src.index_of(key)) = RatFunc(1);
  return m;
}

}  // namespace

ChainMap section_map(int n, int s, int s_prime) {
  if (s_prime < s) throw std::invalid_argument("section_map needs s' >= s");
  ComplexPtr src = build_B(n, s), dst = build_B(n, s_prime);
  ChainMap g{src, dst, {}};
  for (int d : {0, 1}) g.mats[d] = extend_by_zero(*src->space(d).module, *dst->space(d).module);
  return g;
}

ChainMap restriction_map(int n, int s_prime, int s) {
  if (s_prime < s) throw std::invalid_argument("restriction_map needs s' >= s");
  ComplexPtr src = build_B(n, s_prime), dst = build_B(n, s);
  ChainMap p{src, dst, {}};
  for (int d : {0, 1}) p.mats[d] = restrict_levels(*src->space(d).module, *dst->space(d).module);
  return p;
}

SectionSquares section_squares(int n, int s, int s_prime) {
  SectionSquares sq{n, s, s_prime, false, false};
  sq.chain_commutes = section_map(n, s, s_prime).commutes();

  bool ok = true;
  // u-: Fil_N -> Fil_{N+1} against the truncations, on monomials up to degree s'+1.
  for (int N = s; N < s_prime && ok; ++N)
    for (int deg = 0; deg <= s_prime + 1; ++deg) {
      InducedElement x = InducedElement::monomial(deg);
      if (!(fil_project(act_induced(Sl2Gen::Uminus, x), N + 1) ==
            act_induced(Sl2Gen::Uminus, fil_project(x, N))))
        ok = false;
    }
  // Extension by zero V_N -> V_{N'} against the transition u-: V_{N+1} -> V_N.
  for (int N = s; N < s_prime && ok; ++N)
    for (int i = 0; i <= N + 1; ++i) {
      DualVector lhs = transition_uminus(DualBasisElement(s_prime + 1, i));
      DualVector low = transition_uminus(DualBasisElement(N + 1, i));
      DualVector rhs(s_prime);
      for (const auto& [idx, c] : low.coeffs()) rhs.add_term(idx, c);
      if (!(lhs == rhs)) ok = false;
    }
  sq.module_commutes = ok;
  return sq;
}

InjectivityCheck section_injectivity_check(int n, int s, int s_prime) {
  InjectivityCheck chk;
  chk.n = n;
  chk.s = s;
  chk.s_prime = s_prime;
  ChainMap p = restriction_map(n, s_prime, s);
  ComplexPtr d_small = dualize(p.target), d_big = dualize(p.source);
  ChainMap pd = dualize(p, d_small, d_big);
  const HomologyReport hs = homology(*d_small), hb = homology(*d_big);
  for (const auto& [d, m] : induced_on_homology(pd, hs, hb)) {
    chk.source_dims[d] = m.cols();
    chk.ranks[d] = rank(m);
    chk.injective[d] = chk.ranks[d] == m.cols();
    chk.all_injective = chk.all_injective && chk.injective[d];
  }
  return chk;
}

}  // namespace bgglab
