// sl2 generators, the induced module X^k Q(k)[Y] and its dual stages V_N.
//
// The induced module carries the action
//   u-(X^k Y^n) = (k-n) X^k Y^(n+1),  H(X^k Y^n) = (k-2n) X^k Y^n,
//   u+(X^k Y^n) = n X^k Y^(n-1).
//
// V_N = (Fil_N)^dual has basis e_{N,i}, 0 <= i <= N, with H-weight -k+2i and
// the transition u-: V_{N+1} -> V_N, e_{N+1,i} -> (-k+i) e_{N,i-1}. For that
// transition to be the honest dual of u-: Fil_N -> Fil_{N+1} under
// (g f)(x) = -f(g x), e_{N,i} pairs with X^k Y^i to (k-i)/k rather than 1
// (see dual_normalization). The same-level u+ and u- on V_N follow from the
// same rule.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bgglab/exactfield.hpp"

namespace bgglab {

enum class Sl2Gen { H, Uplus, Uminus };

inline constexpr Sl2Gen kAllGenerators[] = {Sl2Gen::H, Sl2Gen::Uplus, Sl2Gen::Uminus};

std::string to_string(Sl2Gen g);

/// [g1, g2] as an integer combination of generators.
std::vector<std::pair<int, Sl2Gen>> bracket(Sl2Gen g1, Sl2Gen g2);

/// Change of H-weight index produced by g (weights are -k + 2t on the dual side).
int weight_shift(Sl2Gen g);

/// Finitely supported sum of c_n X^k Y^n.
class InducedElement {
 public:
  InducedElement() = default;
  static InducedElement monomial(int n, RatFunc c = RatFunc(1));

  const std::map<int, RatFunc>& coeffs() const { return coeffs_; }
  RatFunc coeff(int n) const;
  bool is_zero() const { return coeffs_.empty(); }
  int max_degree() const;  // -1 for zero

  void add_term(int n, const RatFunc& c);
  InducedElement& operator+=(const InducedElement& o);
  InducedElement& operator-=(const InducedElement& o);
  InducedElement scaled(const RatFunc& c) const;
  friend InducedElement operator+(InducedElement a, const InducedElement& b) { return a += b; }
  friend InducedElement operator-(InducedElement a, const InducedElement& b) { return a -= b; }
  friend bool operator==(const InducedElement&, const InducedElement&) = default;

  std::string str() const;

 private:
  std::map<int, RatFunc> coeffs_;
};

InducedElement act_induced(Sl2Gen g, const InducedElement& v);

/// Drops Y-degrees above n (the filtration projection onto Fil_n).
InducedElement fil_project(const InducedElement& v, int n);

struct DualBasisElement {
  int level = 0;
  int index = 0;
  DualBasisElement(int level, int index);
};

/// Element of V_N in the basis e_{N,i}.
class DualVector {
 public:
  explicit DualVector(int level);
  static DualVector basis(const DualBasisElement& e);

  int level() const { return level_; }
  const std::map<int, RatFunc>& coeffs() const { return coeffs_; }
  RatFunc coeff(int i) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(int i, const RatFunc& c);
  DualVector& operator+=(const DualVector& o);
  DualVector& operator-=(const DualVector& o);
  DualVector scaled(const RatFunc& c) const;
  friend DualVector operator+(DualVector a, const DualVector& b) { return a += b; }
  friend DualVector operator-(DualVector a, const DualVector& b) { return a -= b; }
  friend bool operator==(const DualVector&, const DualVector&) = default;

  std::string str() const;

 private:
  int level_;
  std::map<int, RatFunc> coeffs_;
};

/// Pairing value <e_{N,i}, X^k Y^i> = (k-i)/k.
RatFunc dual_normalization(int i);
/// u+ e_{N,i} = c e_{N,i+1} with c = -(i+1)(k-i)/(k-i-1).
RatFunc dual_uplus_coefficient(int i);
/// u- e_{N,i} = (-k+i) e_{N,i-1}.
RatFunc dual_uminus_coefficient(int i);

/// Same-level action on V_N; u+ e_{N,N} = 0 and u- e_{N,0} = 0.
DualVector act_dual(Sl2Gen g, const DualBasisElement& e);
DualVector act_dual(Sl2Gen g, const DualVector& v);

/// u-: V_{N+1} -> V_N.
DualVector transition_uminus(const DualBasisElement& e);
DualVector transition_uminus(const DualVector& v);

/// Restriction V_{N+1} -> V_N dual to Fil_N in Fil_{N+1}.
DualVector transition_restrict(const DualBasisElement& e);
DualVector transition_restrict(const DualVector& v);

/// phi(x) for phi in V_N and x in Fil_N; Y-degrees above N pair to zero.
RatFunc dual_pairing(const DualVector& phi, const InducedElement& x);

}  // namespace bgglab
