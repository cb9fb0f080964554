// Homology of complexes over Q(k), induced maps, duals and pairings.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bgglab/complexes.hpp"

namespace bgglab {

struct HomologyDegree {
  std::size_t dim = 0;
  QkMatrix cycles;      // basis of Z_d as columns
  QkMatrix boundaries;  // basis of B_d as columns
  QkMatrix reps;        // cycles completing the boundaries to a basis of Z_d
};

struct HomologyReport {
  std::map<int, HomologyDegree> degrees;
  std::map<int, std::size_t> dims() const;
  int euler_characteristic() const;
};

HomologyReport homology(const ChainComplex& c);
int euler_characteristic(const ChainComplex& c);

/// Matrices of H(f) in the representative bases of homology(source/target).
std::map<int, QkMatrix> induced_on_homology(const ChainMap& f);
std::map<int, QkMatrix> induced_on_homology(const ChainMap& f, const HomologyReport& hs, const HomologyReport& ht);
bool is_zero_on_homology(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

/// Degrees negated, differentials transposed.
ComplexPtr dualize(const ComplexPtr& c);
/// f: A -> B becomes f^v: dualize(B) -> dualize(A). Pass the already dualized
/// complexes to keep identities stable across calls.
ChainMap dualize(const ChainMap& f, const ComplexPtr& dual_target, const ComplexPtr& dual_source);
ChainMap dualize(const ChainMap& f);

struct PairingReport {
  int degree = 0;
  QkMatrix gram;  // rows: H_{-i}(c^v) reps, columns: H_i(c) reps
  bool well_defined = false;
  bool nondegenerate = false;
};

/// <x, phi> = phi^T x on H_i(c) x H_{-i}(c^v). Well-definedness is checked by
/// moving representatives by seeded boundaries.
PairingReport homology_pairing(const ComplexPtr& c, int i, std::uint64_t seed = 0, int trials = 3);

struct AdjointnessReport {
  std::map<int, bool> per_degree;
  bool adjoint = true;
};

/// <H(f) a, b>_C = <a, H(f^v) b>_A for f: A -> C.
AdjointnessReport pairing_adjointness(const ChainMap& f);

struct DualVanishing {
  bool precondition = false;  // f zero on homology
  bool passed = false;
  std::optional<int> failing_degree;
  std::optional<std::vector<RatFunc>> counterexample;  // a cycle of the dual with nonzero image class
};

DualVanishing dual_vanishing_check(const ChainMap& f);

/// f = d h + h d for a seeded random degree-raising h: c -> c.
ChainMap random_null_homotopic(const ComplexPtr& c, std::uint64_t seed);

/// Extension by zero e_{s,i} -> e_{s',i} in both degrees, B_{n,s} -> B_{n,s'}.
/// It is the dual of the truncation that fil_project performs.
ChainMap section_map(int n, int s, int s_prime);
/// Composite of restrictions B_{n,s'} -> B_{n,s}.
ChainMap restriction_map(int n, int s_prime, int s);

struct SectionSquares {
  int n = 0, s = 0, s_prime = 0;
  bool chain_commutes = false;   // Xi o g^1 = g^0 o Xi on B_{n,s}
  bool module_commutes = false;  // fil_project vs u-, and the section vs transition_uminus
};

SectionSquares section_squares(int n, int s, int s_prime);

struct InjectivityCheck {
  int n = 0, s = 0, s_prime = 0;
  std::map<int, std::size_t> source_dims;
  std::map<int, std::size_t> ranks;
  std::map<int, bool> injective;
  bool all_injective = true;
};

/// H(dualize(B_{n,s})) -> H(dualize(B_{n,s'})) induced by the dual of the restriction.
InjectivityCheck section_injectivity_check(int n, int s, int s_prime);

}  // namespace bgglab
