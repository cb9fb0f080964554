#include "bgglab/verma.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bgglab {

std::string to_string(const BasisKey& key) {
  std::ostringstream os;
  os << "(u-)^" << key.a << "*e_" << key.i;
  if (key.w) os << "*u-";
  return os.str();
}

RatFunc weight_value(int t) { return RatFunc::linear(-1, 2 * t); }

// ---------------------------------------------------------------- TruncatedModule

TruncatedModule::TruncatedModule(int n, int s, int j) : n_(n), s_(s), j_(j) {
  if (n < 0 || s < 0) throw std::invalid_argument("truncated module needs n >= 0 and s >= 0");
  if (j != 0 && j != 1) throw std::invalid_argument("wedge degree must be 0 or 1");
  basis_.reserve(static_cast<std::size_t>((n + 1) * (s + 1)));
  for (int a = 0; a <= n; ++a)
    for (int i = 0; i <= s; ++i) basis_.push_back({a, i, j});
}

bool TruncatedModule::contains(const BasisKey& key) const {
  return key.a >= 0 && key.a <= n_ && key.i >= 0 && key.i <= s_ && key.w == j_;
}

std::size_t TruncatedModule::index_of(const BasisKey& key) const {
  if (!contains(key)) throw std::out_of_range(to_string(key) + " is not in " + str());
  return static_cast<std::size_t>(key.a * (s_ + 1) + key.i);
}

std::string TruncatedModule::str() const {
  std::ostringstream os;
  os << "U^{<=" << n_ << "}*V_" << s_ << (j_ ? "*u-" : "");
  return os.str();
}

// ---------------------------------------------------------------- PBWVector

PBWVector PBWVector::basis(const BasisKey& key, RatFunc c) {
  PBWVector v;
  v.add_term(key, c);
  return v;
}

RatFunc PBWVector::coeff(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RatFunc() : it->second;
}

int PBWVector::max_a() const {
  int m = -1;
  for (const auto& [key, c] : terms_) m = std::max(m, key.a);
  return m;
}

void PBWVector::add_term(const BasisKey& key, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWVector& PBWVector::operator+=(const PBWVector& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

PBWVector& PBWVector::operator-=(const PBWVector& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

PBWVector PBWVector::scaled(const RatFunc& c) const {
  PBWVector r;
  if (c.is_zero()) return r;
  for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
  return r;
}

PBWVector PBWVector::shifted(int q) const {
  PBWVector r;
  for (const auto& [key, v] : terms_) r.terms_.emplace(BasisKey{key.a + q, key.i, key.w}, v);
  return r;
}

std::string PBWVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << to_string(key);
    first = false;
  }
  return os.str();
}

std::vector<RatFunc> to_coords(const PBWVector& v, const TruncatedModule& m) {
  std::vector<RatFunc> out(m.dim());
  for (const auto& [key, c] : v.terms()) out[m.index_of(key)] = c;
  return out;
}

PBWVector from_coords(const std::vector<RatFunc>& coords, const TruncatedModule& m) {
  if (coords.size() != m.dim()) throw std::invalid_argument("coordinate vector has the wrong length");
  PBWVector v;
  for (std::size_t idx = 0; idx < coords.size(); ++idx) v.add_term(m.basis()[idx], coords[idx]);
  return v;
}

// ---------------------------------------------------------------- action

namespace {

void check_member(const BasisKey& key, const TruncatedModule& m, TruncationMode mode) {
  const bool ok = key.a >= 0 && key.i >= 0 && key.i <= m.s() && key.w == m.j() &&
                  (mode == TruncationMode::Elastic || key.a <= m.n());
  if (!ok) throw std::invalid_argument(to_string(key) + " does not lie in " + m.str());
}

}  // namespace

PBWVector act(Sl2Gen g, const PBWVector& v, const TruncatedModule& ambient, TruncationMode mode) {
  PBWVector r;
  for (const auto& [key, c] : v.terms()) {
    check_member(key, ambient, mode);
    const auto [a, i, w] = key;
    switch (g) {
      case Sl2Gen::H:
        r.add_term(key, c * RatFunc::linear(-1, -2 * a + 2 * i - 2 * w));
        break;
      case Sl2Gen::Uminus:
        if (mode == TruncationMode::Strict && a + 1 > ambient.n()) {
          throw TruncationEscape("u- maps " + to_string(key) + " outside " + ambient.str());
        }
        r.add_term({a + 1, i, w}, c);
        break;
      case Sl2Gen::Uplus:
        if (i < ambient.s()) r.add_term({a, i + 1, w}, c * dual_uplus_coefficient(i));
        if (a >= 1) {
          RatFunc mu = RatFunc::linear(-1, 2 * i - 2 * w);
          r.add_term({a - 1, i, w}, c * RatFunc(static_cast<long>(a)) * (mu - RatFunc(static_cast<long>(a - 1))));
        }
        break;
    }
  }
  return r;
}

PBWVector casimir(const PBWVector& v, const TruncatedModule& ambient, TruncationMode mode) {
  PBWVector hv = act(Sl2Gen::H, v, ambient, mode);
  PBWVector r = act(Sl2Gen::H, hv, ambient, mode);
  r += hv.scaled(RatFunc(2));
  r += act(Sl2Gen::Uminus, act(Sl2Gen::Uplus, v, ambient, mode), ambient, mode).scaled(RatFunc(4));
  return r;
}

// ---------------------------------------------------------------- weight spaces

std::map<int, std::vector<BasisKey>> weight_spaces(const TruncatedModule& m) {
  std::map<int, std::vector<BasisKey>> out;
  for (const auto& key : m.basis()) out[key.weight_index()].push_back(key);
  return out;
}

std::vector<BasisKey> weight_space(const TruncatedModule& m, int t) {
  std::vector<BasisKey> out;
  for (int i = 0; i <= m.s(); ++i) {
    const int a = i - m.j() - t;
    if (a >= 0 && a <= m.n()) out.push_back({a, i, m.j()});
  }
  return out;
}

bool weight_space_complete(const TruncatedModule& m, int t) {
  const int i = m.n() + m.j() + t;
  return !(i >= 0 && i < m.s());
}

QkMatrix casimir_matrix(const TruncatedModule& m, int t) {
  const auto keys = weight_space(m, t);
  std::map<BasisKey, std::size_t> pos;
  for (std::size_t idx = 0; idx < keys.size(); ++idx) pos[keys[idx]] = idx;
  QkMatrix out(keys.size(), keys.size());
  for (std::size_t col = 0; col < keys.size(); ++col) {
    PBWVector img = casimir(PBWVector::basis(keys[col]), m, TruncationMode::Strict);
    for (const auto& [key, c] : img.terms()) out(pos.at(key), col) = c;
  }
  return out;
}

// ---------------------------------------------------------------- central characters

CentralCharacter central_character(const RatFunc& lambda) {
  if (!lambda.den().is_constant() || lambda.num().degree() > 1) {
    throw std::invalid_argument("weight " + lambda.str() + " is not affine in k");
  }
  const Rational slope = lambda.num().coeff(1);
  if (slope != 0 && slope != 1 && slope != -1) {
    throw std::invalid_argument("weight " + lambda.str() + " has slope outside {-1, 0, 1}");
  }
  return {lambda * lambda + RatFunc(2) * lambda};
}

bool linkage(const RatFunc& mu, const RatFunc& lambda) {
  return central_character(mu) == central_character(lambda);
}

RatFunc parse_affine_weight(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty weight");
  Rational slope = 0, intercept = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed weight: " + text);
    if (term.back() == 'k') {
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
      Rational c = term.empty() ? Rational(1) : parse_rational(term);
      slope += sign * c;
    } else {
      if (term.find('k') != std::string::npos) throw std::invalid_argument("malformed weight: " + text);
      intercept += sign * parse_rational(term);
    }
    pos = end;
  }
  return RatFunc(Poly::linear(slope, intercept));
}

// ---------------------------------------------------------------- eigenspaces

FittingSplit fitting_split(const QkMatrix& omega, const CentralCharacter& chi) {
  const std::size_t d = omega.rows();
  if (d == 0) return {QkMatrix(0, 0), QkMatrix(0, 0)};
  QkMatrix a = omega - chi.value * QkMatrix::identity(d);
  QkMatrix b = power(a, static_cast<unsigned>(d));
  return {nullspace(b), column_space(b)};
}

QkMatrix generalized_eigenspace_matrix(const TruncatedModule& m, const CentralCharacter& chi, int t) {
  return fitting_split(casimir_matrix(m, t), chi).kernel;
}

std::vector<PBWVector> generalized_eigenspace(const TruncatedModule& m, const CentralCharacter& chi, int t) {
  const auto keys = weight_space(m, t);
  QkMatrix basis = generalized_eigenspace_matrix(m, chi, t);
  std::vector<PBWVector> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    PBWVector v;
    for (std::size_t r = 0; r < keys.size(); ++r) v.add_term(keys[r], basis(r, c));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatFunc> finite_weights(int s, int j) {
  std::vector<RatFunc> out;
  for (int i = 0; i <= s; ++i) out.push_back(RatFunc::linear(-1, 2 * i - 2 * j));
  return out;
}

std::vector<CentralCharacter> characters_of(const TruncatedModule& m) {
  std::vector<CentralCharacter> out;
  for (const auto& mu : finite_weights(m.s(), m.j())) {
    CentralCharacter chi = central_character(mu);
    if (std::find(out.begin(), out.end(), chi) == out.end()) out.push_back(chi);
  }
  return out;
}

// ---------------------------------------------------------------- Verma filtration

VermaFiltration verma_filtration(const std::vector<RatFunc>& weights, int n) {
  if (n < 0) throw std::invalid_argument("negative truncation level");
  std::optional<Rational> slope;
  for (const auto& w : weights) {
    if (!w.den().is_constant() || w.num().degree() > 1)
      throw std::invalid_argument("weight " + w.str() + " is not affine in k");
    Rational sl = w.num().coeff(1);
    if (slope && *slope != sl) throw std::invalid_argument("weights of different slope are incomparable");
    slope = sl;
  }
  VermaFiltration f;
  f.n = n;
  f.ordered = weights;
  std::stable_sort(f.ordered.begin(), f.ordered.end(), [](const RatFunc& x, const RatFunc& y) {
    return x.num().coeff(0) > y.num().coeff(0);
  });
  const std::size_t step = static_cast<std::size_t>(n + 1);
  for (std::size_t r = 0; r < f.ordered.size(); ++r) f.steps.push_back({f.ordered[r], (r + 1) * step});
  f.total_dim = f.ordered.size() * step;
  return f;
}

VermaFiltration verma_filtration_of(const TruncatedModule& m) {
  VermaFiltration f = verma_filtration(finite_weights(m.s(), m.j()), m.n());
  f.module_checked = true;
  f.stable = f.total_dim == m.dim();
  f.highest_weight_quotients = true;
  for (int r = 1; r <= m.s() + 1; ++r) {
    const int lowest = m.s() - r + 1;
    for (const auto& key : m.basis()) {
      if (key.i < lowest) continue;
      PBWVector v = PBWVector::basis(key);
      for (Sl2Gen g : kAllGenerators) {
        const PBWVector image = act(g, v, m, TruncationMode::Elastic);
        for (const auto& [img, c] : image.terms()) {
          if (img.i < lowest) f.stable = false;
        }
      }
    }
    PBWVector gen = PBWVector::basis({0, lowest, m.j()});
    const PBWVector raised = act(Sl2Gen::Uplus, gen, m);
    for (const auto& [img, c] : raised.terms()) {
      if (img.i <= lowest) f.highest_weight_quotients = false;
    }
    if (!(act(Sl2Gen::H, gen, m) == gen.scaled(f.ordered[static_cast<std::size_t>(r - 1)]))) {
      f.highest_weight_quotients = false;
    }
  }
  return f;
}

// ---------------------------------------------------------------- stabilization

StabilizationTable stabilization_scan(int s, int j, const CentralCharacter& chi, int t_lo, int t_hi,
                                      int n_lo, int n_hi) {
  StabilizationTable tab{s, j, n_lo, n_hi, {}};
  for (int t = t_lo; t <= t_hi; ++t) {
    StabilizationRow row;
    row.t = t;
    for (int n = n_lo; n <= n_hi; ++n) {
      TruncatedModule m(n, s, j);
      if (!weight_space_complete(m, t)) {
        row.dims.push_back(std::nullopt);
        continue;
      }
      row.dims.push_back(generalized_eigenspace_matrix(m, chi, t).cols());
    }
    for (int idx = static_cast<int>(row.dims.size()) - 1; idx >= 0; --idx) {
      const auto& d = row.dims[static_cast<std::size_t>(idx)];
      if (!d || *d != *row.dims.back()) break;
      row.onset = n_lo + idx;
    }
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

}  // namespace bgglab
