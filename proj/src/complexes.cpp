#include "bgglab/complexes.hpp"

#include <algorithm>
#include <set>

namespace bgglab {

// ---------------------------------------------------------------- spaces and complexes

GradedSpace GradedSpace::of_module(const TruncatedModule& m) {
  GradedSpace g;
  g.dim = m.dim();
  g.module = m;
  for (const auto& key : m.basis()) g.weights.push_back(key.weight_index());
  for (const auto& [t, keys] : weight_spaces(m)) {
    if (weight_space_complete(m, t)) {
      g.casimir[t] = casimir_matrix(m, t);
    } else {
      g.casimir[t] = std::nullopt;
    }
  }
  return g;
}

GradedSpace GradedSpace::abstract(std::size_t dim) {
  GradedSpace g;
  g.dim = dim;
  return g;
}

std::vector<std::size_t> GradedSpace::indices_of_weight(int t) const {
  std::vector<std::size_t> out;
  for (std::size_t idx = 0; idx < weights.size(); ++idx)
    if (weights[idx] == t) out.push_back(idx);
  return out;
}

ChainComplex::ChainComplex(int lo, int hi, std::string label) : lo_(lo), hi_(hi), label_(std::move(label)) {
  if (hi < lo) throw std::invalid_argument("empty degree range");
  for (int d = lo; d <= hi; ++d) spaces_[d] = GradedSpace{};
}

std::size_t ChainComplex::dim(int d) const {
  auto it = spaces_.find(d);
  return it == spaces_.end() ? 0 : it->second.dim;
}

const GradedSpace& ChainComplex::space(int d) const { return spaces_.at(d); }
GradedSpace& ChainComplex::space(int d) { return spaces_.at(d); }

QkMatrix ChainComplex::diff(int d) const {
  auto it = diff_.find(d);
  if (it != diff_.end()) return it->second;
  return QkMatrix(dim(d - 1), dim(d));
}

void ChainComplex::set_diff(int d, QkMatrix m) {
  if (d <= lo_ || d > hi_) throw std::out_of_range("differential outside the degree range");
  if (m.rows() != dim(d - 1) || m.cols() != dim(d)) throw std::invalid_argument("differential shape mismatch");
  diff_[d] = std::move(m);
}

bool ChainComplex::is_complex() const {
  for (int d = lo_ + 2; d <= hi_; ++d)
    if (!(diff(d - 1) * diff(d)).is_zero()) return false;
  return true;
}

QkMatrix ChainMap::at(int d) const {
  auto it = mats.find(d);
  if (it != mats.end()) return it->second;
  return QkMatrix(target->dim(d), source->dim(d));
}

bool ChainMap::commutes() const {
  const int lo = std::min(source->lo(), target->lo());
  const int hi = std::max(source->hi(), target->hi());
  for (int d = lo + 1; d <= hi; ++d) {
    if (!(target->diff(d) * at(d) == at(d - 1) * source->diff(d))) return false;
  }
  return true;
}

ChainMap ChainMap::identity(const ComplexPtr& c) {
  ChainMap f{c, c, {}};
  for (int d = c->lo(); d <= c->hi(); ++d) f.mats[d] = QkMatrix::identity(c->dim(d));
  return f;
}

ChainMap ChainMap::zero(const ComplexPtr& source, const ComplexPtr& target) {
  return ChainMap{source, target, {}};
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap h{f.source, g.target, {}};
  for (int d = f.source->lo(); d <= f.source->hi(); ++d) h.mats[d] = g.at(d) * f.at(d);
  return h;
}

// ---------------------------------------------------------------- differentials

QkMatrix koszul_differential(int n, int m, int j) {
  if (j == 0) return QkMatrix(0, TruncatedModule(n, m, 0).dim());
  if (j != 1) throw std::invalid_argument("wedge degree must be 0 or 1");
  if (m < 1) throw std::invalid_argument("koszul_differential needs m >= 1 for j = 1");
  TruncatedModule src(n, m, 1), dst(n + 1, m - 1, 0);
  QkMatrix d(dst.dim(), src.dim());
  for (const auto& key : src.basis()) {
    const std::size_t col = src.index_of(key);
    // -(u- P (x) e_{m-1,i} - P (x) u- e_{m,i})
    if (key.i <= m - 1) d(dst.index_of({key.a + 1, key.i, 0}), col) -= RatFunc(1);
    DualVector x = transition_uminus(DualBasisElement(m, key.i));
    for (const auto& [i2, c] : x.coeffs()) d(dst.index_of({key.a, i2, 0}), col) += c;
  }
  return d;
}

QkMatrix xi(int N, int n_trunc) {
  if (n_trunc < 1) throw std::invalid_argument("xi needs n_trunc >= 1");
  TruncatedModule src(n_trunc - 1, N + 1, 1), dst(n_trunc, N, 0);
  QkMatrix m(dst.dim(), src.dim());
  for (const auto& key : src.basis()) {
    const std::size_t col = src.index_of(key);
    if (key.i <= N) m(dst.index_of({key.a + 1, key.i, 0}), col) = RatFunc(1);
    if (key.i >= 1) m(dst.index_of({key.a, key.i - 1, 0}), col) = RatFunc::linear(1, -key.i);
  }
  return m;
}

PBWVector xi_apply(int N, const PBWVector& v) {
  PBWVector r;
  for (const auto& [key, c] : v.terms()) {
    if (key.w != 1 || key.i < 0 || key.i > N + 1) throw std::invalid_argument("xi_apply: vector not in U*V_{N+1}*u-");
    if (key.i <= N) r.add_term({key.a + 1, key.i, 0}, c);
    if (key.i >= 1) r.add_term({key.a, key.i - 1, 0}, c * RatFunc::linear(1, -key.i));
  }
  return r;
}

PBWVector kernel_generator(int N) {
  if (N < 0) throw std::invalid_argument("kernel_generator needs N >= 0");
  PBWVector e;
  RatFunc coeff(1);
  for (int i = 0; i <= N + 1; ++i) {
    if (i > 0) coeff = -coeff / RatFunc::linear(1, -i);
    e.add_term({i, i, 1}, coeff);
  }
  return e;
}

PBWVector surjectivity_witness(int N, int n_trunc, const PBWVector& target) {
  std::map<int, PBWVector> by_index;  // i -> P(u-) as a vector in a
  for (const auto& [key, c] : target.terms()) {
    if (key.w != 0 || key.i < 0 || key.i > N) throw std::invalid_argument("witness target not in U*V_N");
    by_index[key.i].add_term({key.a, 0, 0}, c);
  }
  PBWVector witness;
  for (const auto& [i, P] : by_index) {
    if (P.max_a() + (N - i) + 1 > n_trunc) {
      throw TruncationTooSmall("witness for target at index " + std::to_string(i) + " needs n_trunc >= " +
                               std::to_string(P.max_a() + (N - i) + 1));
    }
    PBWVector Q = P.scaled(RatFunc::linear(1, -(i + 1)).inverse());  // Q_{i+1}
    for (int j = i + 1; j <= N + 1; ++j) {
      for (const auto& [key, c] : Q.terms()) witness.add_term({key.a, j, 1}, c);
      if (j <= N) Q = Q.shifted(1).scaled(-RatFunc::linear(1, -(j + 1)).inverse());
    }
  }
  return witness;
}

ComplexPtr build_B(int n, int s) {
  if (n < 1) throw std::invalid_argument("build_B needs n >= 1");
  auto c = std::make_shared<ChainComplex>(0, 1, "B_{" + std::to_string(n) + "," + std::to_string(s) + "}");
  c->space(1) = GradedSpace::of_module(TruncatedModule(n - 1, s + 1, 1));
  c->space(0) = GradedSpace::of_module(TruncatedModule(n, s, 0));
  c->set_diff(1, xi(s, n));
  return c;
}

// ---------------------------------------------------------------- transition maps

namespace {

QkMatrix restrict_matrix(const TruncatedModule& src, const TruncatedModule& dst) {
  QkMatrix m(dst.dim(), src.dim());
  for (const auto& key : src.basis())
    if (dst.contains(key)) m(dst.index_of(key), src.index_of(key)) = RatFunc(1);
  return m;
}

}  // namespace

QkMatrix kernel_basis_from_generator(int n, int s) {
  TruncatedModule m(n - 1, s + 1, 1);
  const PBWVector e = kernel_generator(s);
  std::vector<std::vector<RatFunc>> cols;
  for (int q = 0; q <= n - s - 2; ++q) cols.push_back(to_coords(e.shifted(q), m));
  return QkMatrix::from_columns(m.dim(), cols);
}

TransitionMaps transition_maps(int n, int s) {
  ComplexPtr big = build_B(n, s + 1);
  ComplexPtr small = build_B(n, s);
  ComplexPtr taller = build_B(n + 1, s);
  TransitionMaps t;
  t.restrict_map = ChainMap{big, small, {}};
  t.restrict_map.mats[1] = restrict_matrix(*big->space(1).module, *small->space(1).module);
  t.restrict_map.mats[0] = restrict_matrix(*big->space(0).module, *small->space(0).module);
  t.inclusion = ChainMap{small, taller, {}};
  t.inclusion.mats[1] = restrict_matrix(*small->space(1).module, *taller->space(1).module);
  t.inclusion.mats[0] = restrict_matrix(*small->space(0).module, *taller->space(0).module);

  QkMatrix ker_big = kernel_basis_from_generator(n, s + 1);
  QkMatrix ker_small = kernel_basis_from_generator(n, s);
  QkMatrix image = t.restrict_map.mats[1] * ker_big;
  auto a = solve(ker_small, image);
  if (!a) throw std::logic_error("beta does not map the kernel into the kernel");
  t.alpha = *a;
  t.alpha_generators_match = true;
  for (std::size_t q = 0; q < ker_big.cols(); ++q)
    if (!(image.column(q) == ker_small.column(q))) t.alpha_generators_match = false;
  t.alpha_injective = rank(t.alpha) == t.alpha.cols();
  return t;
}

// ---------------------------------------------------------------- BGG cut

namespace {

struct DegreeSplit {
  QkMatrix S, K, P;  // inclusion, splitting, projection
  GradedSpace sub, comp;
};

DegreeSplit split_degree(const GradedSpace& sp, const CentralCharacter& chi, const std::set<int>& cuttable) {
  std::vector<std::vector<RatFunc>> s_cols, k_cols;
  std::vector<std::pair<std::vector<std::size_t>, std::vector<RatFunc>>> p_rows;  // (indices, values)
  DegreeSplit out;
  std::set<int> ts(sp.weights.begin(), sp.weights.end());
  if (sp.weights.size() != sp.dim) throw CutError("cannot cut a space without weight data");
  for (int t : ts) {
    const auto idx = sp.indices_of_weight(t);
    auto embed = [&](const QkMatrix& block, std::vector<std::vector<RatFunc>>& cols) {
      for (std::size_t c = 0; c < block.cols(); ++c) {
        std::vector<RatFunc> v(sp.dim);
        for (std::size_t r = 0; r < idx.size(); ++r) v[idx[r]] = block(r, c);
        cols.push_back(std::move(v));
      }
    };
    auto it = sp.casimir.find(t);
    if (cuttable.count(t) && it != sp.casimir.end() && it->second) {
      const QkMatrix& omega = *it->second;
      FittingSplit f = fitting_split(omega, chi);
      embed(f.kernel, s_cols);
      embed(f.image, k_cols);
      QkMatrix inv = inverse(hstack(f.kernel, f.image));
      for (std::size_t r = f.kernel.cols(); r < inv.rows(); ++r) {
        std::vector<RatFunc> row;
        for (std::size_t c = 0; c < inv.cols(); ++c) row.push_back(inv(r, c));
        p_rows.emplace_back(idx, std::move(row));
      }
      for (std::size_t c = 0; c < f.kernel.cols(); ++c) out.sub.weights.push_back(t);
      for (std::size_t c = 0; c < f.image.cols(); ++c) out.comp.weights.push_back(t);
      if (f.kernel.cols()) out.sub.casimir[t] = *solve(f.kernel, omega * f.kernel);
      if (f.image.cols()) out.comp.casimir[t] = *solve(f.image, omega * f.image);
    } else {
      QkMatrix id = QkMatrix::identity(idx.size());
      embed(id, k_cols);
      for (std::size_t r = 0; r < idx.size(); ++r) p_rows.emplace_back(idx, id.column(r));
      for (std::size_t c = 0; c < idx.size(); ++c) out.comp.weights.push_back(t);
      out.comp.casimir[t] = it == sp.casimir.end() ? std::nullopt : it->second;
    }
  }
  out.S = QkMatrix::from_columns(sp.dim, s_cols);
  out.K = QkMatrix::from_columns(sp.dim, k_cols);
  out.P = QkMatrix(p_rows.size(), sp.dim);
  for (std::size_t r = 0; r < p_rows.size(); ++r) {
    const auto& [idx, vals] = p_rows[r];
    for (std::size_t c = 0; c < idx.size(); ++c) out.P(r, idx[c]) = vals[c];
  }
  out.sub.dim = s_cols.size();
  out.comp.dim = k_cols.size();
  return out;
}

}  // namespace

CutResult bgg_cut(const ComplexPtr& c, const CentralCharacter& chi, std::optional<std::pair<int, int>> t_window) {
  std::set<int> all_t;
  for (int d = c->lo(); d <= c->hi(); ++d)
    for (int t : c->space(d).weights) all_t.insert(t);
  CutResult res;
  std::set<int> cuttable;
  for (int t : all_t) {
    bool ok = !t_window || (t >= t_window->first && t <= t_window->second);
    for (int d = c->lo(); d <= c->hi() && ok; ++d) {
      const auto& sp = c->space(d);
      if (sp.indices_of_weight(t).empty()) continue;
      auto it = sp.casimir.find(t);
      if (it == sp.casimir.end() || !it->second) ok = false;
    }
    if (ok) {
      cuttable.insert(t);
      res.cut_weights.push_back(t);
    } else {
      res.uncut_weights.push_back(t);
    }
  }

  std::map<int, DegreeSplit> parts;
  for (int d = c->lo(); d <= c->hi(); ++d) parts.emplace(d, split_degree(c->space(d), chi, cuttable));

  auto sub = std::make_shared<ChainComplex>(c->lo(), c->hi(), c->label() + "_chi");
  auto quo = std::make_shared<ChainComplex>(c->lo(), c->hi(), c->label() + "/chi");
  for (int d = c->lo(); d <= c->hi(); ++d) {
    sub->space(d) = parts.at(d).sub;
    quo->space(d) = parts.at(d).comp;
  }
  for (int d = c->lo() + 1; d <= c->hi(); ++d) {
    const QkMatrix D = c->diff(d);
    const auto& hi = parts.at(d);
    const auto& lo = parts.at(d - 1);
    auto ds = solve(lo.S, D * hi.S);
    if (!ds) throw CutError("differential leaves the generalized eigenspace in degree " + std::to_string(d));
    sub->set_diff(d, *ds);
    QkMatrix dq = lo.P * D * hi.K;
    if (!(lo.K * dq == D * hi.K)) throw CutError("differential leaves the complement in degree " + std::to_string(d));
    quo->set_diff(d, dq);
  }
  res.sub = sub;
  res.quotient = quo;
  res.inclusion = ChainMap{sub, c, {}};
  res.projection = ChainMap{c, quo, {}};
  res.splitting = ChainMap{quo, c, {}};
  for (int d = c->lo(); d <= c->hi(); ++d) {
    res.inclusion.mats[d] = parts.at(d).S;
    res.projection.mats[d] = parts.at(d).P;
    res.splitting.mats[d] = parts.at(d).K;
  }
  return res;
}

}  // namespace bgglab
