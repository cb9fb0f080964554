// Exact arithmetic over Q and over the rational function field Q(k).
//
// k is the formal weight. Every value is kept in a canonical form so that
// equality is structural equality:
//   * Rational: GMP mpq, always canonicalized.
//   * Poly: dense coefficients in k, trailing zeros trimmed.
//   * RatFunc: num/den coprime, den monic.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bgglab {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
/// Parses "p" or "p/q" (optional sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);

struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when a rational function is evaluated at a root of its denominator.
class SpecializationError : public std::domain_error {
 public:
  SpecializationError(const std::string& what, std::string factor)
      : std::domain_error(what), factor_(std::move(factor)) {}
  /// The linear factor (k - q) that vanishes, rendered as text.
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants embed implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly variable();
  static Poly from_coeffs(std::vector<Rational> coeffs);
  /// slope*k + intercept
  static Poly linear(const Rational& slope, const Rational& intercept);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int d) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  /// Bit size of the largest numerator or denominator among the coefficients.
  std::size_t height() const;

  Poly monic() const;
  Rational eval(const Rational& q) const;
  std::string str() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& r);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws ArithmeticError on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact division; throws ArithmeticError if b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                     // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}    // NOLINT
  /// Brings num/den to canonical form. Throws ArithmeticError if den == 0.
  RatFunc(Poly num, Poly den);

  static RatFunc k();
  /// slope*k + intercept
  static RatFunc linear(const Rational& slope, const Rational& intercept);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Size measure used for pivot selection: (max degree, max height).
  std::pair<int, std::size_t> size_key() const;

  RatFunc inverse() const;
  std::string str() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// Evaluates f at k = q. Throws SpecializationError when q is a pole.
Rational specialize(const RatFunc& f, const Rational& q);

/// Deterministic non-integer rational avoiding `forbidden`. Seed 0 yields 37/2
/// whenever that value is allowed.
Rational generic_rational(std::uint64_t seed, const std::set<Rational>& forbidden);

}  // namespace bgglab
