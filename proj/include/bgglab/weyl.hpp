// Root systems of types A_n and C_n in their standard realizations, Weyl group
// enumeration, the dot action and parabolic BGG shapes.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bgglab/exactfield.hpp"

namespace bgglab {

enum class RootType { A, C };

using Vec = std::vector<Rational>;

struct RootSystemData {
  RootType type = RootType::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> positive_roots;
  std::vector<Vec> fundamental_weights;
  Vec rho;
};

RootSystemData make_root_system(RootType type, int rank);
RootType parse_root_type(const std::string& s);
std::string to_string(RootType t);

Rational inner(const Vec& x, const Vec& y);
/// <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha)
Rational coroot_pairing(const Vec& v, const Vec& alpha);
/// Matrix <alpha_i, alpha_j^vee>.
std::vector<std::vector<Rational>> cartan_matrix(const RootSystemData& rs);

Vec dynkin_to_ambient(const RootSystemData& rs, const std::vector<Rational>& labels);
std::vector<Rational> ambient_to_dynkin(const RootSystemData& rs, const Vec& v);

/// Signed permutation in one-line notation: w(e_j) = sign(p[j]) e_{|p[j]|-1}.
struct WeylElement {
  std::vector<int> perm;
  int length = 0;
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm == b.perm; }
};

template <class T>
std::vector<T> act_on(const WeylElement& w, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (std::size_t j = 0; j < w.perm.size(); ++j) {
    const int p = w.perm[j];
    const std::size_t to = static_cast<std::size_t>((p > 0 ? p : -p) - 1);
    out[to] = p > 0 ? v[j] : T(-v[j]);
  }
  return out;
}

WeylElement compose(const WeylElement& a, const WeylElement& b);  // a o b
WeylElement inverse(const WeylElement& w);
int weyl_length(const RootSystemData& rs, const WeylElement& w);
bool is_positive_root(const Vec& v);

struct WeylBoundExceeded : std::length_error {
  using std::length_error::length_error;
};

std::size_t weyl_order(const RootSystemData& rs);
/// All elements sorted by (length, one-line notation).
std::vector<WeylElement> generate_weyl(const RootSystemData& rs, std::size_t bound = 10000);
std::vector<std::size_t> length_histogram(const std::vector<WeylElement>& elements);

/// w(lambda + rho) - rho in ambient coordinates.
template <class T>
std::vector<T> dot_action(const RootSystemData& rs, const WeylElement& w, const std::vector<T>& lambda) {
  std::vector<T> shifted(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) shifted[i] = lambda[i] + T(rs.rho[i]);
  std::vector<T> out = act_on(w, shifted);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - T(rs.rho[i]);
  return out;
}

bool regularity_check(const RootSystemData& rs, const Vec& lambda);
bool is_dominant_integral(const RootSystemData& rs, const Vec& lambda);

/// 1-based simple root indices of the Levi part; validated against the rank.
std::vector<WeylElement> minimal_coset_reps(const RootSystemData& rs, const std::vector<int>& parabolic,
                                            std::size_t bound = 10000);

struct BggShape {
  std::map<int, std::vector<Vec>> terms;  // degree -> weights w.lambda (ambient coordinates)
  std::vector<std::size_t> counts;        // per degree
  std::size_t weyl_order = 0;
  std::size_t levi_order = 0;
};

struct NotDominant : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BggShape bgg_shape(const RootSystemData& rs, const std::vector<int>& parabolic, const Vec& lambda,
                   std::size_t bound = 10000);

std::size_t dot_orbit_size(const RootSystemData& rs, const Vec& lambda, std::size_t bound = 10000);

}  // namespace bgglab
