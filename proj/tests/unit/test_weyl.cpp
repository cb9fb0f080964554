#include <doctest.h>

#include <deque>
#include <map>
#include <set>

#include "bgglab/weyl.hpp"

using namespace bgglab;

namespace {

Vec reflect(const Vec& v, const Vec& alpha) {
  const Rational c = coroot_pairing(v, alpha);
  Vec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

// BFS on the orbit of a regular vector under the chosen simple reflections: the
// orbit is a copy of the generated group and BFS depth is the word length.
std::map<Vec, int> reflection_orbit(const RootSystemData& rs, const std::vector<int>& gens) {
  Vec v;
  for (int i = 0; i < rs.ambient_dim; ++i) v.push_back(Rational(100 - 7 * i * i, 3 + i));
  std::map<Vec, int> depth{{v, 0}};
  std::deque<Vec> queue{v};
  while (!queue.empty()) {
    Vec x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      Vec y = reflect(x, rs.simple_roots[static_cast<std::size_t>(g - 1)]);
      if (depth.emplace(y, depth[x] + 1).second) queue.push_back(y);
    }
  }
  return depth;
}

std::vector<int> all_indices(const RootSystemData& rs) {
  std::vector<int> g;
  for (int i = 1; i <= rs.rank; ++i) g.push_back(i);
  return g;
}

}  // namespace

TEST_CASE("root system data") {
  const auto a2 = make_root_system(RootType::A, 2);
  CHECK(a2.positive_roots.size() == 3);
  CHECK(cartan_matrix(a2) == std::vector<std::vector<Rational>>{{2, -1}, {-1, 2}});
  const auto c2 = make_root_system(RootType::C, 2);
  CHECK(c2.positive_roots.size() == 4);
  CHECK(cartan_matrix(c2) == std::vector<std::vector<Rational>>{{2, -1}, {-2, 2}});
  for (const auto& rs : {a2, c2, make_root_system(RootType::C, 3), make_root_system(RootType::A, 3)})
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(coroot_pairing(rs.fundamental_weights[static_cast<std::size_t>(i)],
                             rs.simple_roots[static_cast<std::size_t>(j)]) == (i == j ? 1 : 0));
  CHECK(ambient_to_dynkin(c2, dynkin_to_ambient(c2, {3, make_rational(1, 2)})) == std::vector<Rational>{3, make_rational(1, 2)});
  CHECK_THROWS(make_root_system(RootType::A, 0));
  CHECK_THROWS(parse_root_type("E"));
}

TEST_CASE("group enumeration against reflection BFS") {
  for (RootType t : {RootType::A, RootType::C})
    for (int r = 1; r <= 3; ++r) {
      const auto rs = make_root_system(t, r);
      const auto W = generate_weyl(rs);
      const auto orbit = reflection_orbit(rs, all_indices(rs));
      CHECK(W.size() == orbit.size());
      CHECK(W.size() == weyl_order(rs));
      std::vector<std::size_t> hist;
      for (const auto& [v, d] : orbit) {
        if (static_cast<std::size_t>(d) >= hist.size()) hist.resize(static_cast<std::size_t>(d) + 1, 0);
        ++hist[static_cast<std::size_t>(d)];
      }
      CHECK(length_histogram(W) == hist);
      for (const auto& w : W) {
        CHECK(compose(w, inverse(w)).perm == W.front().perm);
        CHECK(weyl_length(rs, inverse(w)) == w.length);
      }
    }
  CHECK(length_histogram(generate_weyl(make_root_system(RootType::A, 1))) == std::vector<std::size_t>{1, 1});
  CHECK(length_histogram(generate_weyl(make_root_system(RootType::A, 2))) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(length_histogram(generate_weyl(make_root_system(RootType::C, 2))) == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK_THROWS_AS(generate_weyl(make_root_system(RootType::A, 7), 1000), WeylBoundExceeded);
}

TEST_CASE("dot action") {
  const auto a1 = make_root_system(RootType::A, 1);
  const auto W = generate_weyl(a1);
  const Vec l3 = dynkin_to_ambient(a1, {3});
  CHECK(ambient_to_dynkin(a1, dot_action(a1, W[1], l3)) == std::vector<Rational>{-5});
  CHECK(dot_action(a1, W[0], l3) == l3);
  const std::vector<RatFunc> lk = {RatFunc::k() / RatFunc(2), -RatFunc::k() / RatFunc(2)};
  const auto img = dot_action(a1, W[1], lk);
  CHECK(img[0] - img[1] == RatFunc::linear(-1, -2));
  // w.l = w(l+rho)-rho agrees with reflecting l+rho through simple roots
  const auto c3 = make_root_system(RootType::C, 3);
  const Vec lam = {make_rational(1, 3), -2, 5};
  for (const auto& w : generate_weyl(c3)) {
    const Vec img2 = dot_action(c3, w, lam);
    Rational n2 = 0, m2 = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      n2 += (img2[i] + c3.rho[i]) * (img2[i] + c3.rho[i]);
      m2 += (lam[i] + c3.rho[i]) * (lam[i] + c3.rho[i]);
    }
    CHECK(n2 == m2);
  }
}

TEST_CASE("regularity and dominance") {
  const auto a1 = make_root_system(RootType::A, 1);
  CHECK(regularity_check(a1, dynkin_to_ambient(a1, {0})));
  CHECK_FALSE(regularity_check(a1, dynkin_to_ambient(a1, {-1})));
  const auto c2 = make_root_system(RootType::C, 2);
  CHECK(regularity_check(c2, {0, 0}));
  CHECK(dot_orbit_size(c2, {0, 0}) == 8);
  CHECK(is_dominant_integral(c2, dynkin_to_ambient(c2, {1, 2})));
  CHECK_FALSE(is_dominant_integral(c2, dynkin_to_ambient(c2, {1, -1})));
  CHECK_FALSE(is_dominant_integral(c2, dynkin_to_ambient(c2, {make_rational(1, 2), 0})));
}

TEST_CASE("parabolic shapes") {
  const auto a1 = make_root_system(RootType::A, 1);
  for (long m = 0; m <= 5; ++m) {
    const BggShape sh = bgg_shape(a1, {}, dynkin_to_ambient(a1, {m}));
    REQUIRE(sh.terms.size() == 2);
    CHECK(ambient_to_dynkin(a1, sh.terms.at(0).at(0)) == std::vector<Rational>{m});
    CHECK(ambient_to_dynkin(a1, sh.terms.at(1).at(0)) == std::vector<Rational>{-m - 2});
  }
  const auto c2 = make_root_system(RootType::C, 2);
  CHECK(bgg_shape(c2, {2}, {0, 0}).counts == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(bgg_shape(c2, {}, {0, 0}).counts == length_histogram(generate_weyl(c2)));
  CHECK_THROWS_AS(bgg_shape(c2, {}, dynkin_to_ambient(c2, {-1, 0})), NotDominant);
  CHECK_THROWS(minimal_coset_reps(c2, {3}));
  for (RootType t : {RootType::A, RootType::C})
    for (int r = 1; r <= 3; ++r) {
      const auto rs = make_root_system(t, r);
      for (unsigned mask = 0; mask < (1U << r); ++mask) {
        std::vector<int> par;
        for (int i = 0; i < r; ++i)
          if (mask & (1U << i)) par.push_back(i + 1);
        const std::size_t levi = reflection_orbit(rs, par).size();
        const auto reps = minimal_coset_reps(rs, par);
        CHECK(reps.size() * levi == weyl_order(rs));
        // each representative is the shortest element of its coset
        for (const auto& w : reps)
          for (int j : par) {
            WeylElement sj;
            const auto W = generate_weyl(rs);
            for (const auto& x : W)
              if (x.length == 1 && !is_positive_root(act_on(x, rs.simple_roots[static_cast<std::size_t>(j - 1)]))) sj = x;
            CHECK(weyl_length(rs, compose(sj, w)) == w.length + 1);
          }
      }
    }
}
