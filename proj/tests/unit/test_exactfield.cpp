#include <doctest.h>

#include "bgglab/exactfield.hpp"

using namespace bgglab;

namespace {
RatFunc K() { return RatFunc::k(); }
RatFunc lin(long a, long b) { return RatFunc::linear(a, b); }
}  // namespace

TEST_CASE("rational helpers") {
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(is_integer(make_rational(4, 2)));
  CHECK_FALSE(is_integer(make_rational(1, 2)));
}

TEST_CASE("field arithmetic") {
  const RatFunc a = lin(1, -1).inverse(), b = lin(1, 1).inverse();
  CHECK(a + b == RatFunc(Poly::linear(2, 0), Poly::from_coeffs({-1, 0, 1})));
  CHECK(lin(1, -1) * a == RatFunc(1));
  CHECK((K() * K() + 2 * K()) - (lin(-1, -2) * lin(-1, -2) + 2 * lin(-1, -2)) == RatFunc(0));
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), ArithmeticError);
  CHECK_THROWS_AS(RatFunc(0).inverse(), ArithmeticError);
}

TEST_CASE("canonical form") {
  // (k^2-1)/(2k-2) reduces to (k+1)/2 with monic denominator
  RatFunc f(Poly::from_coeffs({-1, 0, 1}), Poly::linear(2, -2));
  CHECK(f == RatFunc(Poly::from_coeffs({make_rational(1, 2), make_rational(1, 2)})));
  CHECK(f.den().coeff(f.den().degree()) == 1);
  CHECK(RatFunc(Poly::linear(-2, 0), Poly::linear(-1, 0)) == RatFunc(2));
  CHECK((K() / K()).is_one());
}

TEST_CASE("specialize") {
  CHECK(specialize(lin(1, -1).inverse(), 3) == make_rational(1, 2));
  CHECK(specialize(K() * K() + 2 * K(), make_rational(37, 2)) == make_rational(1517, 4));
  try {
    specialize(lin(1, -1).inverse(), 1);
    FAIL("expected a pole");
  } catch (const SpecializationError& e) {
    CHECK(std::string(e.what()).find("k-1") != std::string::npos);
  }
}

TEST_CASE("generic_rational") {
  CHECK(generic_rational(0, {}) == make_rational(37, 2));
  CHECK(generic_rational(0, {}) == generic_rational(0, {}));
  const Rational q = generic_rational(1, {make_rational(37, 2)});
  CHECK(q != make_rational(37, 2));
  CHECK_FALSE(is_integer(q));
  std::set<Rational> seen;
  for (std::uint64_t s = 0; s < 50; ++s) seen.insert(generic_rational(s, {}));
  CHECK(seen.size() > 40);
  for (const auto& x : seen) CHECK_FALSE(is_integer(x));
}

TEST_CASE("field axioms on seeded samples") {
  std::vector<RatFunc> xs = {K(), lin(2, -3), lin(1, -1).inverse(), K() * K() + 1, lin(-1, -2) / lin(3, 5)};
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs) {
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // evaluation is a homomorphism away from poles
        const Rational q = make_rational(37, 2);
        CHECK(specialize(a * b + c, q) == specialize(a, q) * specialize(b, q) + specialize(c, q));
      }
}
