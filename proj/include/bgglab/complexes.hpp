// Chain complexes over Q(k), the Koszul differential, Xi_N, the truncations
// B_{n,s} and the cut by a central character.
//
// Indexing is homological: diff(d) maps degree d to degree d-1 and is stored as
// a dim(d-1) x dim(d) matrix.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bgglab/verma.hpp"

namespace bgglab {

struct GradedSpace {
  std::size_t dim = 0;
  std::optional<TruncatedModule> module;
  std::vector<int> weights;  // weight index per basis vector, empty when unknown
  /// Omega on each weight block, in block order; nullopt where it escapes the truncation.
  std::map<int, std::optional<QkMatrix>> casimir;

  static GradedSpace of_module(const TruncatedModule& m);
  static GradedSpace abstract(std::size_t dim);
  std::vector<std::size_t> indices_of_weight(int t) const;
};

class ChainComplex {
 public:
  ChainComplex(int lo, int hi, std::string label = {});

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::string& label() const { return label_; }
  std::size_t dim(int d) const;
  const GradedSpace& space(int d) const;
  GradedSpace& space(int d);
  /// Degree d -> d-1; a zero matrix outside (lo, hi].
  QkMatrix diff(int d) const;
  void set_diff(int d, QkMatrix m);
  /// Consecutive differentials compose to zero.
  bool is_complex() const;

 private:
  int lo_, hi_;
  std::string label_;
  std::map<int, GradedSpace> spaces_;
  std::map<int, QkMatrix> diff_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

struct ChainMap {
  ComplexPtr source;
  ComplexPtr target;
  std::map<int, QkMatrix> mats;  // target.dim(d) x source.dim(d)

  QkMatrix at(int d) const;
  bool commutes() const;
  static ChainMap identity(const ComplexPtr& c);
  static ChainMap zero(const ComplexPtr& source, const ComplexPtr& target);
};

/// g o f
ChainMap compose(const ChainMap& g, const ChainMap& f);

struct CutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// d: U^{<=n} (x) V_m (x) wedge^j -> U^{<=n+1} (x) V_{m-1} (x) wedge^{j-1} with the
/// sign (-1)^1 and u- acting on V_m by the transition. For j = 0 the target is 0.
QkMatrix koszul_differential(int n, int m, int j);

/// Xi_N: U^{<=n_trunc-1} (x) V_{N+1} (x) u- -> U^{<=n_trunc} (x) V_N.
QkMatrix xi(int N, int n_trunc);
/// Xi_N applied to a vector, without truncation.
PBWVector xi_apply(int N, const PBWVector& v);

/// sum_i (-1)^i / ((k-1)...(k-i)) (u-)^i (x) e_{N+1,i} (x) u-
PBWVector kernel_generator(int N);

struct TruncationTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Preimage of target (in U (x) V_N) under Xi_N built from the Q recursion.
/// Throws TruncationTooSmall when it does not fit U^{<=n_trunc-1}.
PBWVector surjectivity_witness(int N, int n_trunc, const PBWVector& target);

/// [U^{<=n-1} (x) V_{s+1} (x) u-  --Xi_s-->  U^{<=n} (x) V_s] in degrees 1, 0.
ComplexPtr build_B(int n, int s);

struct TransitionMaps {
  ChainMap restrict_map;  // B_{n,s+1} -> B_{n,s}: beta in degree 1, gamma in degree 0
  ChainMap inclusion;     // B_{n,s} -> B_{n+1,s}
  QkMatrix alpha;         // restrict_map on kernels, in the bases (u-)^q e
  bool alpha_generators_match = false;
  bool alpha_injective = false;
};

TransitionMaps transition_maps(int n, int s);

/// Basis {(u-)^q e : q <= n-s-2} of Ker Xi_s inside B_{n,s}^1 as columns.
QkMatrix kernel_basis_from_generator(int n, int s);

struct CutResult {
  ComplexPtr sub;
  ComplexPtr quotient;
  ChainMap inclusion;   // sub -> c
  ChainMap projection;  // c -> quotient
  ChainMap splitting;   // quotient -> c
  std::vector<int> cut_weights;
  std::vector<int> uncut_weights;  // outside the window or escaping the truncation
};

/// Splits c into the generalized chi-eigenspace of Omega and its Fitting
/// complement, weight by weight. Weights that are not complete in every degree
/// stay whole in the complement. Throws CutError if the differential does not
/// respect the splitting.
CutResult bgg_cut(const ComplexPtr& c, const CentralCharacter& chi,
                  std::optional<std::pair<int, int>> t_window = std::nullopt);

}  // namespace bgglab
