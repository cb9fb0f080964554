#include "bgglab/sl2core.hpp"

#include <sstream>
#include <stdexcept>

namespace bgglab {

std::string to_string(Sl2Gen g) {
  switch (g) {
    case Sl2Gen::H: return "H";
    case Sl2Gen::Uplus: return "u+";
    case Sl2Gen::Uminus: return "u-";
  }
  return "?";
}

std::vector<std::pair<int, Sl2Gen>> bracket(Sl2Gen g1, Sl2Gen g2) {
  using G = Sl2Gen;
  if (g1 == g2) return {};
  if (g1 == G::H && g2 == G::Uplus) return {{2, G::Uplus}};
  if (g1 == G::H && g2 == G::Uminus) return {{-2, G::Uminus}};
  if (g1 == G::Uplus && g2 == G::Uminus) return {{1, G::H}};
  auto r = bracket(g2, g1);
  for (auto& [c, g] : r) c = -c;
  return r;
}

int weight_shift(Sl2Gen g) {
  switch (g) {
    case Sl2Gen::H: return 0;
    case Sl2Gen::Uplus: return 1;
    case Sl2Gen::Uminus: return -1;
  }
  return 0;
}

// ---------------------------------------------------------------- InducedElement

InducedElement InducedElement::monomial(int n, RatFunc c) {
  InducedElement v;
  v.add_term(n, c);
  return v;
}

RatFunc InducedElement::coeff(int n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? RatFunc() : it->second;
}

int InducedElement::max_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

void InducedElement::add_term(int n, const RatFunc& c) {
  if (n < 0) throw std::invalid_argument("negative Y-degree");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

InducedElement& InducedElement::operator+=(const InducedElement& o) {
  for (const auto& [n, c] : o.coeffs_) add_term(n, c);
  return *this;
}

InducedElement& InducedElement::operator-=(const InducedElement& o) {
  for (const auto& [n, c] : o.coeffs_) add_term(n, -c);
  return *this;
}

InducedElement InducedElement::scaled(const RatFunc& c) const {
  InducedElement r;
  if (c.is_zero()) return r;
  for (const auto& [n, v] : coeffs_) r.coeffs_.emplace(n, v * c);
  return r;
}

std::string InducedElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : coeffs_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*X^k*Y^" << n;
    first = false;
  }
  return os.str();
}

InducedElement act_induced(Sl2Gen g, const InducedElement& v) {
  InducedElement r;
  const RatFunc k = RatFunc::k();
  for (const auto& [n, c] : v.coeffs()) {
    switch (g) {
      case Sl2Gen::H:
        r.add_term(n, c * (k - RatFunc(2L * n)));
        break;
      case Sl2Gen::Uminus:
        r.add_term(n + 1, c * (k - RatFunc(static_cast<long>(n))));
        break;
      case Sl2Gen::Uplus:
        if (n > 0) r.add_term(n - 1, c * RatFunc(static_cast<long>(n)));
        break;
    }
  }
  return r;
}

InducedElement fil_project(const InducedElement& v, int n) {
  if (n < 0) throw std::invalid_argument("fil_project: negative degree bound");
  InducedElement r;
  for (const auto& [d, c] : v.coeffs()) {
    if (d <= n) r.add_term(d, c);
  }
  return r;
}

// ---------------------------------------------------------------- V_N

DualBasisElement::DualBasisElement(int level_, int index_) : level(level_), index(index_) {
  if (level < 0 || index < 0 || index > level) {
    throw std::out_of_range("dual basis element e_{" + std::to_string(level) + "," +
                            std::to_string(index) + "} out of range");
  }
}

DualVector::DualVector(int level) : level_(level) {
  if (level < 0) throw std::out_of_range("negative dual level");
}

DualVector DualVector::basis(const DualBasisElement& e) {
  DualVector v(e.level);
  v.add_term(e.index, RatFunc(1));
  return v;
}

RatFunc DualVector::coeff(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? RatFunc() : it->second;
}

void DualVector::add_term(int i, const RatFunc& c) {
  if (i < 0 || i > level_) throw std::out_of_range("dual index outside V_N");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DualVector& DualVector::operator+=(const DualVector& o) {
  if (o.level_ != level_) throw std::invalid_argument("adding dual vectors of different levels");
  for (const auto& [i, c] : o.coeffs_) add_term(i, c);
  return *this;
}

DualVector& DualVector::operator-=(const DualVector& o) {
  if (o.level_ != level_) throw std::invalid_argument("subtracting dual vectors of different levels");
  for (const auto& [i, c] : o.coeffs_) add_term(i, -c);
  return *this;
}

DualVector DualVector::scaled(const RatFunc& c) const {
  DualVector r(level_);
  if (c.is_zero()) return r;
  for (const auto& [i, v] : coeffs_) r.coeffs_.emplace(i, v * c);
  return r;
}

std::string DualVector::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*e_{" << level_ << "," << i << "}";
    first = false;
  }
  return os.str();
}

RatFunc dual_normalization(int i) {
  return RatFunc(Poly::linear(1, -i), Poly::variable());
}

RatFunc dual_uplus_coefficient(int i) {
  Poly num = Poly::linear(1, -i) * Rational(-(i + 1));
  return RatFunc(num, Poly::linear(1, -(i + 1)));
}

RatFunc dual_uminus_coefficient(int i) { return RatFunc::linear(-1, i); }

DualVector act_dual(Sl2Gen g, const DualBasisElement& e) {
  DualVector r(e.level);
  switch (g) {
    case Sl2Gen::H:
      r.add_term(e.index, RatFunc::linear(-1, 2 * e.index));
      break;
    case Sl2Gen::Uplus:
      if (e.index < e.level) r.add_term(e.index + 1, dual_uplus_coefficient(e.index));
      break;
    case Sl2Gen::Uminus:
      if (e.index > 0) r.add_term(e.index - 1, dual_uminus_coefficient(e.index));
      break;
  }
  return r;
}

DualVector act_dual(Sl2Gen g, const DualVector& v) {
  DualVector r(v.level());
  for (const auto& [i, c] : v.coeffs()) r += act_dual(g, DualBasisElement(v.level(), i)).scaled(c);
  return r;
}

DualVector transition_uminus(const DualBasisElement& e) {
  if (e.level == 0) throw std::out_of_range("transition_uminus needs a source level >= 1");
  DualVector r(e.level - 1);
  if (e.index > 0) r.add_term(e.index - 1, RatFunc::linear(-1, e.index));
  return r;
}

DualVector transition_uminus(const DualVector& v) {
  if (v.level() == 0) throw std::out_of_range("transition_uminus needs a source level >= 1");
  DualVector r(v.level() - 1);
  for (const auto& [i, c] : v.coeffs()) r += transition_uminus(DualBasisElement(v.level(), i)).scaled(c);
  return r;
}

DualVector transition_restrict(const DualBasisElement& e) {
  if (e.level == 0) throw std::out_of_range("transition_restrict needs a source level >= 1");
  DualVector r(e.level - 1);
  if (e.index <= e.level - 1) r.add_term(e.index, RatFunc(1));
  return r;
}

DualVector transition_restrict(const DualVector& v) {
  if (v.level() == 0) throw std::out_of_range("transition_restrict needs a source level >= 1");
  DualVector r(v.level() - 1);
  for (const auto& [i, c] : v.coeffs()) {
    if (i <= v.level() - 1) r.add_term(i, c);
  }
  return r;
}

RatFunc dual_pairing(const DualVector& phi, const InducedElement& x) {
  RatFunc acc;
  for (const auto& [i, c] : phi.coeffs()) {
    RatFunc xi = x.coeff(i);
    if (!xi.is_zero()) acc += c * xi * dual_normalization(i);
  }
  return acc;
}

}  // namespace bgglab
