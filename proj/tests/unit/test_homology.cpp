#include <doctest.h>

#include "bgglab/complexes.hpp"
#include "bgglab/homology.hpp"

using namespace bgglab;

namespace {

std::size_t naive_rank(QMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

ComplexPtr zero_complex(std::size_t d1, std::size_t d0) {
  auto c = std::make_shared<ChainComplex>(0, 1, "zero");
  c->space(1) = GradedSpace::abstract(d1);
  c->space(0) = GradedSpace::abstract(d0);
  c->set_diff(1, QkMatrix(d0, d1));
  return c;
}

}  // namespace

TEST_CASE("homology of B against numeric ranks") {
  const Rational q = make_rational(37, 2);
  for (int n = 1; n <= 6; ++n)
    for (int s = 0; s <= 3; ++s) {
      const ComplexPtr B = build_B(n, s);
      const HomologyReport h = homology(*B);
      const std::size_t r = naive_rank(specialize(B->diff(1), q));
      CHECK(h.dims().at(1) == B->dim(1) - r);
      CHECK(h.dims().at(0) == B->dim(0) - r);
      CHECK(h.euler_characteristic() == euler_characteristic(*B));
      CHECK(rank(hstack(h.degrees.at(1).boundaries, h.degrees.at(1).cycles)) == h.degrees.at(1).cycles.cols());
    }
  const HomologyReport h41 = homology(*build_B(4, 1));
  CHECK(h41.dims() == std::map<int, std::size_t>{{0, 0}, {1, 2}});
  for (int s = 0; s <= 4; ++s) {
    const auto d = homology(*build_B(s + 1, s)).dims();
    CHECK(d.at(0) == 0);
    CHECK(d.at(1) == 0);
  }
}

TEST_CASE("zero differential") {
  const ComplexPtr z = zero_complex(2, 3);
  CHECK(homology(*z).dims() == std::map<int, std::size_t>{{0, 3}, {1, 2}});
  for (int i : {0, 1}) {
    const PairingReport p = homology_pairing(z, i);
    CHECK(p.well_defined);
    CHECK(p.nondegenerate);
    CHECK(p.gram == QkMatrix::identity(z->dim(i)));
  }
}

TEST_CASE("induced maps") {
  const ComplexPtr B = build_B(5, 1);
  for (const auto& [d, m] : induced_on_homology(ChainMap::identity(B))) CHECK(m == QkMatrix::identity(m.rows()));
  CHECK(is_quasi_iso(ChainMap::identity(B)));
  CHECK(is_zero_on_homology(ChainMap::zero(B, B)));
  CHECK_FALSE(is_zero_on_homology(ChainMap::identity(B)));
  const ChainMap h = random_null_homotopic(B, 3);
  CHECK(h.commutes());
  CHECK(is_zero_on_homology(h));
  // n-direction inclusion: H_1 grows from n-s-1 to n-s, so the map is injective but not onto
  const TransitionMaps t = transition_maps(4, 1);
  const auto Hi = induced_on_homology(t.inclusion);
  CHECK(Hi.at(1).rows() == 3);
  CHECK(Hi.at(1).cols() == 2);
  CHECK(rank(Hi.at(1)) == 2);
}

TEST_CASE("dualize") {
  const ComplexPtr B = build_B(4, 1);
  const ComplexPtr D = dualize(B);
  CHECK(D->lo() == -1);
  CHECK(D->hi() == 0);
  CHECK(D->dim(-1) == B->dim(1));
  CHECK(D->dim(0) == B->dim(0));
  CHECK(D->diff(0) == B->diff(1).transpose());
  const ComplexPtr DD = dualize(D);
  CHECK(DD->dim(1) == B->dim(1));
  CHECK(DD->diff(1) == B->diff(1));
  // contravariance
  const TransitionMaps t1 = transition_maps(4, 1), t0 = transition_maps(4, 0);
  const ChainMap gf = compose(t0.restrict_map, t1.restrict_map);
  const ChainMap lhs = dualize(gf);
  const ChainMap rhs = compose(dualize(t1.restrict_map), dualize(t0.restrict_map));
  for (int d : {-1, 0}) CHECK(lhs.at(d) == rhs.at(d));
  CHECK(dualize(t1.restrict_map).commutes());
}

TEST_CASE("pairing") {
  const PairingReport p = homology_pairing(build_B(4, 1), 1);
  CHECK(p.gram.rows() == 2);
  CHECK(p.gram.cols() == 2);
  CHECK(rank(p.gram) == 2);
  CHECK(p.well_defined);
  CHECK(p.nondegenerate);
  const AdjointnessReport a = pairing_adjointness(transition_maps(4, 1).restrict_map);
  CHECK(a.adjoint);
}

TEST_CASE("dual vanishing") {
  const CentralCharacter ck = central_character(RatFunc::k());
  const CutResult r = bgg_cut(build_B(5, 2), ck);
  const DualVanishing dv = dual_vanishing_check(r.projection);
  CHECK(dv.precondition);
  CHECK(dv.passed);
  const ComplexPtr B = build_B(4, 1);
  CHECK(dual_vanishing_check(ChainMap::zero(B, B)).passed);
  CHECK(dual_vanishing_check(random_null_homotopic(B, 11)).passed);
  const DualVanishing id = dual_vanishing_check(ChainMap::identity(B));
  CHECK_FALSE(id.precondition);
}

TEST_CASE("sections") {
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s <= 2; ++s) {
      const ChainMap p = restriction_map(n, s + 1, s);
      CHECK(p.commutes());
      const ChainMap g = section_map(n, s, s + 1);
      CHECK(compose(p, g).at(0) == QkMatrix::identity(build_B(n, s)->dim(0)));
      CHECK(section_squares(n, s, s + 1).module_commutes);
    }
  const InjectivityCheck same = section_injectivity_check(5, 2, 2);
  CHECK(same.all_injective);
  // dual homology of B_{5,s} sits in degree -1 with dimension 5-s-1
  for (int s = 1; s <= 3; ++s) {
    const auto d = homology(*dualize(build_B(5, s))).dims();
    CHECK(d.at(-1) == static_cast<std::size_t>(5 - s - 1));
    CHECK(d.at(0) == 0);
  }
  CHECK_THROWS(section_map(3, 2, 1));
}
