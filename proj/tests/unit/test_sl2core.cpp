#include <doctest.h>

#include "bgglab/sl2core.hpp"

using namespace bgglab;

namespace {

RatFunc K() { return RatFunc::k(); }
RatFunc lin(long a, long b) { return RatFunc::linear(a, b); }

InducedElement apply_gen(Sl2Gen g, const InducedElement& v) { return act_induced(g, v); }

InducedElement commutator(Sl2Gen a, Sl2Gen b, const InducedElement& v) {
  return apply_gen(a, apply_gen(b, v)) - apply_gen(b, apply_gen(a, v));
}

InducedElement bracket_action(Sl2Gen a, Sl2Gen b, const InducedElement& v) {
  InducedElement out;
  for (const auto& [c, g] : bracket(a, b)) out += apply_gen(g, v).scaled(RatFunc(c));
  return out;
}

}  // namespace

TEST_CASE("bracket table") {
  CHECK(bracket(Sl2Gen::H, Sl2Gen::H).empty());
  CHECK(bracket(Sl2Gen::Uminus, Sl2Gen::Uplus) == std::vector<std::pair<int, Sl2Gen>>{{-1, Sl2Gen::H}});
  CHECK(bracket(Sl2Gen::Uplus, Sl2Gen::H) == std::vector<std::pair<int, Sl2Gen>>{{-2, Sl2Gen::Uplus}});
}

TEST_CASE("induced module action") {
  CHECK(act_induced(Sl2Gen::Uminus, InducedElement::monomial(2)) == InducedElement::monomial(3, lin(1, -2)));
  CHECK(act_induced(Sl2Gen::H, InducedElement::monomial(0)) == InducedElement::monomial(0, K()));
  CHECK(act_induced(Sl2Gen::Uplus, InducedElement::monomial(0)).is_zero());
  // the three brackets hold on every monomial
  for (int n = 0; n <= 6; ++n) {
    const auto v = InducedElement::monomial(n);
    for (Sl2Gen a : kAllGenerators)
      for (Sl2Gen b : kAllGenerators) CHECK(commutator(a, b, v) == bracket_action(a, b, v));
  }
}

TEST_CASE("fil_project") {
  const InducedElement v = InducedElement::monomial(0) + InducedElement::monomial(3);
  CHECK(fil_project(v, 2) == InducedElement::monomial(0));
  const InducedElement w = InducedElement::monomial(1, K()) + InducedElement::monomial(2);
  CHECK(fil_project(w, 2) == w);
  CHECK(fil_project(fil_project(v, 5), 2) == fil_project(v, 2));
}

TEST_CASE("dual basis ranges") {
  CHECK_THROWS_AS(DualBasisElement(2, 3), std::out_of_range);
  CHECK_THROWS_AS(DualBasisElement(-1, 0), std::out_of_range);
  CHECK_NOTHROW(DualBasisElement(0, 0));
}

TEST_CASE("dual action is the contragredient action") {
  // (g phi)(x) = -phi(g x), checked against the pairing on monomials of the induced module
  for (int N = 0; N <= 5; ++N)
    for (int i = 0; i <= N; ++i) {
      const DualVector e = DualVector::basis({N, i});
      for (Sl2Gen g : {Sl2Gen::H, Sl2Gen::Uplus}) {
        const DualVector ge = act_dual(g, DualBasisElement{N, i});
        for (int m = 0; m <= N; ++m) {
          const auto x = InducedElement::monomial(m);
          CHECK(dual_pairing(ge, x) == -dual_pairing(e, act_induced(g, x)));
        }
      }
      {
        const DualVector ge = act_dual(Sl2Gen::Uminus, DualBasisElement{N, i});
        for (int m = 0; m + 1 <= N; ++m) {
          const auto x = InducedElement::monomial(m);
          CHECK(dual_pairing(ge, x) == -dual_pairing(e, act_induced(Sl2Gen::Uminus, x)));
        }
      }
    }
}

TEST_CASE("dual action values") {
  CHECK(act_dual(Sl2Gen::H, DualBasisElement{2, 1}) == DualVector::basis({2, 1}).scaled(lin(-1, 2)));
  CHECK(act_dual(Sl2Gen::Uminus, DualBasisElement{2, 0}).is_zero());
  // pairing e_{N,i} with Y^i gives (k-i)/k, so u+ e_{2,0} = -(k/(k-1)) e_{2,1}
  CHECK(act_dual(Sl2Gen::Uplus, DualBasisElement{2, 0}) == DualVector::basis({2, 1}).scaled(-K() / lin(1, -1)));
  CHECK(act_dual(Sl2Gen::Uplus, DualBasisElement{2, 2}).is_zero());
  CHECK(dual_normalization(0) == RatFunc(1));
}

TEST_CASE("dual brackets below the top index") {
  for (int N = 1; N <= 5; ++N)
    for (int i = 0; i < N; ++i) {
      const DualVector e = DualVector::basis({N, i});
      auto A = [](Sl2Gen g, const DualVector& v) { return act_dual(g, v); };
      const DualVector hu = A(Sl2Gen::H, A(Sl2Gen::Uplus, e)) - A(Sl2Gen::Uplus, A(Sl2Gen::H, e));
      CHECK(hu == A(Sl2Gen::Uplus, e).scaled(RatFunc(2)));
      if (i >= 1) {
        const DualVector hd = A(Sl2Gen::H, A(Sl2Gen::Uminus, e)) - A(Sl2Gen::Uminus, A(Sl2Gen::H, e));
        CHECK(hd == A(Sl2Gen::Uminus, e).scaled(RatFunc(-2)));
      }
      const DualVector ud = A(Sl2Gen::Uplus, A(Sl2Gen::Uminus, e)) - A(Sl2Gen::Uminus, A(Sl2Gen::Uplus, e));
      CHECK(ud == A(Sl2Gen::H, e));
    }
}

TEST_CASE("transition maps between levels") {
  CHECK(transition_uminus(DualBasisElement{3, 2}) == DualVector::basis({2, 1}).scaled(lin(-1, 2)));
  CHECK(transition_uminus(DualBasisElement{5, 0}).is_zero());
  CHECK(transition_uminus(DualBasisElement{1, 1}) == DualVector::basis({0, 0}).scaled(lin(-1, 1)));
  CHECK(transition_restrict(DualBasisElement{3, 1}) == DualVector::basis({2, 1}));
  CHECK(transition_restrict(DualBasisElement{3, 3}).is_zero());
  for (int i = 0; i <= 3; ++i) {
    const DualVector twice = transition_restrict(transition_restrict(DualBasisElement{3, i}));
    DualVector direct(1);
    if (i <= 1) direct = DualVector::basis({1, i});
    CHECK(twice == direct);
    CHECK(twice.level() == 1);
  }
}
