#include "bgglab/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bgglab {

Rational make_rational(long num, long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::variable() { return from_coeffs({Rational(0), Rational(1)}); }

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

Poly Poly::linear(const Rational& slope, const Rational& intercept) {
  return from_coeffs({intercept, slope});
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(d)];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw ArithmeticError("leading coefficient of the zero polynomial");
  return c_.back();
}

std::size_t Poly::height() const {
  std::size_t h = 0;
  for (const auto& q : c_) {
    h = std::max(h, mpz_sizeinbase(q.get_num_mpz_t(), 2));
    h = std::max(h, mpz_sizeinbase(q.get_den_mpz_t(), 2));
  }
  return h;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  Poly r = *this;
  r *= inv;
  return r;
}

Rational Poly::eval(const Rational& q) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly::from_coeffs(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& r) {
  if (r == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= r;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
  const Rational inv_lead = 1 / b.leading();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t d = rem.size(); d-- > db;) {
    if (rem[d] == 0) continue;
    Rational f = rem[d] * inv_lead;
    quo[d - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[d - db + j] -= f * b.c_[j];
  }
  return {Poly::from_coeffs(std::move(quo)), Poly::from_coeffs(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
  return q;
}

namespace {

void append_monomial(std::ostringstream& os, const Rational& c, int d, bool first) {
  Rational mag = c < 0 ? Rational(-c) : c;
  if (c < 0) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  const bool unit = (mag == 1);
  if (d == 0 || !unit) os << mag.get_str();
  if (d > 0) {
    if (!unit) os << '*';
    os << 'k';
    if (d > 1) os << '^' << d;
  }
}

}  // namespace

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const auto& c = c_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    append_monomial(os, c, d, first);
    first = false;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::exact_div(num, g);
      den = Poly::exact_div(den, g);
    }
  }
  Rational inv = 1 / den.leading();
  num *= inv;
  den *= inv;
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::k() { return RatFunc(Poly::variable()); }

RatFunc RatFunc::linear(const Rational& slope, const Rational& intercept) {
  return RatFunc(Poly::linear(slope, intercept));
}

bool RatFunc::is_one() const { return den_.degree() == 0 && num_ == den_; }

std::pair<int, std::size_t> RatFunc::size_key() const {
  return {std::max(num_.degree(), den_.degree()), std::max(num_.height(), den_.height())};
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(k)");
  Rational inv = 1 / num_.leading();
  Poly n = den_;
  Poly d = num_;
  n *= inv;
  d *= inv;
  return RatFunc(std::move(n), std::move(d), Canonical{});
}

std::string RatFunc::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Poly n = num_ + o.num_;
    if (den_.degree() == 0) {
      num_ = std::move(n);
      return *this;
    }
    return *this = RatFunc(std::move(n), den_);
  }
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel; both denominators are monic so the result is canonical.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly a = g1.degree() > 0 ? Poly::exact_div(num_, g1) : num_;
  Poly d = g1.degree() > 0 ? Poly::exact_div(o.den_, g1) : o.den_;
  Poly c = g2.degree() > 0 ? Poly::exact_div(o.num_, g2) : o.num_;
  Poly b = g2.degree() > 0 ? Poly::exact_div(den_, g2) : den_;
  return *this = RatFunc(a * c, b * d, Canonical{});
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

// ---------------------------------------------------------------- specialization

Rational specialize(const RatFunc& f, const Rational& q) {
  Rational d = f.den().eval(q);
  if (d == 0) {
    std::string factor = Poly::linear(Rational(1), -q).str();
    throw SpecializationError("pole of " + f.str() + " at k = " + to_string(q), factor);
  }
  return f.num().eval(q) / d;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rational generic_rational(std::uint64_t seed, const std::set<Rational>& forbidden) {
  if (seed == 0) {
    Rational first = make_rational(37, 2);
    if (!forbidden.count(first)) return first;
  }
  std::uint64_t state = splitmix64(seed);
  for (;;) {
    state = splitmix64(state);
    const long num = static_cast<long>(state % 2001) - 1000;
    const long den = static_cast<long>((state >> 20) % 29) + 2;
    Rational q = make_rational(num, den);
    if (!is_integer(q) && !forbidden.count(q)) return q;
  }
}

}  // namespace bgglab
