// Truncated induced modules U(n-)^{<=n} (x) V_s (x) wedge^j n-, their sl2 action,
// weight spaces, the Casimir Omega = H^2 + 2H + 4 u- u+ and its generalized
// eigenspaces.
//
// Basis keys are (a, i, w): (u-)^a (x) e_{s,i} (x) (u- if w = 1). The H-weight is
// -k + 2t with t = i - a - w.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgglab/linalg.hpp"
#include "bgglab/sl2core.hpp"

namespace bgglab {

struct BasisKey {
  int a = 0;
  int i = 0;
  int w = 0;
  int weight_index() const { return i - a - w; }
  auto operator<=>(const BasisKey&) const = default;
};

std::string to_string(const BasisKey& key);

/// -k + 2t
RatFunc weight_value(int t);

class TruncatedModule {
 public:
  TruncatedModule(int n, int s, int j);

  int n() const { return n_; }
  int s() const { return s_; }
  int j() const { return j_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisKey>& basis() const { return basis_; }
  bool contains(const BasisKey& key) const;
  std::size_t index_of(const BasisKey& key) const;  // throws std::out_of_range
  std::string str() const;

  friend bool operator==(const TruncatedModule& x, const TruncatedModule& y) {
    return x.n_ == y.n_ && x.s_ == y.s_ && x.j_ == y.j_;
  }

 private:
  int n_, s_, j_;
  std::vector<BasisKey> basis_;
};

class PBWVector {
 public:
  PBWVector() = default;
  static PBWVector basis(const BasisKey& key, RatFunc c = RatFunc(1));

  const std::map<BasisKey, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const BasisKey& key) const;
  bool is_zero() const { return terms_.empty(); }
  int max_a() const;

  void add_term(const BasisKey& key, const RatFunc& c);
  PBWVector& operator+=(const PBWVector& o);
  PBWVector& operator-=(const PBWVector& o);
  PBWVector scaled(const RatFunc& c) const;
  /// Left multiplication by (u-)^q.
  PBWVector shifted(int q) const;
  friend PBWVector operator+(PBWVector x, const PBWVector& y) { return x += y; }
  friend PBWVector operator-(PBWVector x, const PBWVector& y) { return x -= y; }
  friend bool operator==(const PBWVector&, const PBWVector&) = default;

  std::string str() const;

 private:
  std::map<BasisKey, RatFunc> terms_;
};

std::vector<RatFunc> to_coords(const PBWVector& v, const TruncatedModule& m);
PBWVector from_coords(const std::vector<RatFunc>& coords, const TruncatedModule& m);

enum class TruncationMode { Strict, Elastic };

struct TruncationEscape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Strict mode raises TruncationEscape when u- leaves a <= n.
PBWVector act(Sl2Gen g, const PBWVector& v, const TruncatedModule& ambient,
              TruncationMode mode = TruncationMode::Elastic);

PBWVector casimir(const PBWVector& v, const TruncatedModule& ambient,
                  TruncationMode mode = TruncationMode::Elastic);

std::map<int, std::vector<BasisKey>> weight_spaces(const TruncatedModule& m);
std::vector<BasisKey> weight_space(const TruncatedModule& m, int t);
/// True when Omega maps the weight-t space into itself without leaving the truncation.
bool weight_space_complete(const TruncatedModule& m, int t);

QkMatrix casimir_matrix(const TruncatedModule& m, int t);

struct CentralCharacter {
  RatFunc value;
  friend bool operator==(const CentralCharacter&, const CentralCharacter&) = default;
};

/// lambda must be alpha*k + beta with alpha in {-1, 0, 1}.
CentralCharacter central_character(const RatFunc& lambda);
bool linkage(const RatFunc& mu, const RatFunc& lambda);
/// Parses "k", "-k-2", "3/2", "k+1" and the like.
RatFunc parse_affine_weight(const std::string& text);

/// Kernel of (Omega - chi)^d on the weight-t space, in weight-space coordinates.
QkMatrix generalized_eigenspace_matrix(const TruncatedModule& m, const CentralCharacter& chi, int t);
std::vector<PBWVector> generalized_eigenspace(const TruncatedModule& m, const CentralCharacter& chi, int t);

/// Fitting decomposition of a weight block: ker (A^d) and im (A^d), A = omega - chi.
struct FittingSplit {
  QkMatrix kernel;
  QkMatrix image;
};
FittingSplit fitting_split(const QkMatrix& omega, const CentralCharacter& chi);

/// Distinct values mu^2 + 2 mu over the weights of V_s (x) wedge^j.
std::vector<CentralCharacter> characters_of(const TruncatedModule& m);
std::vector<RatFunc> finite_weights(int s, int j);

struct FiltrationStep {
  RatFunc weight;
  std::size_t dim = 0;  // dim E_i^{<=n}
};

struct VermaFiltration {
  std::vector<RatFunc> ordered;
  int n = 0;
  std::vector<FiltrationStep> steps;
  std::size_t total_dim = 0;
  bool module_checked = false;  // set by verma_filtration_of
  bool stable = false;
  bool highest_weight_quotients = false;
};

/// Orders weights decreasingly and tabulates the truncated filtration at level n.
/// Throws std::invalid_argument on weights of different slope in k.
VermaFiltration verma_filtration(const std::vector<RatFunc>& weights, int n);
/// Same, with the filtration E_i = U(n-) (x) span{e_{s,s}, ..., e_{s,s-i+1}} checked on m.
VermaFiltration verma_filtration_of(const TruncatedModule& m);

struct StabilizationRow {
  int t = 0;
  std::vector<std::optional<std::size_t>> dims;  // per n; nullopt where Omega escapes truncation
  std::optional<int> onset;
};

struct StabilizationTable {
  int s = 0;
  int j = 0;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<StabilizationRow> rows;
};

StabilizationTable stabilization_scan(int s, int j, const CentralCharacter& chi, int t_lo, int t_hi,
                                      int n_lo, int n_hi);

}  // namespace bgglab
