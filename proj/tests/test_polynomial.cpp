#include <doctest.h>

#include <triforms/factor_list.hpp>
#include <triforms/linear_solve.hpp>
#include <triforms/parser.hpp>

using namespace triforms;

namespace {

Vars xy() {
  static Vars v{"x", "y"};
  return v;
}

Vars xyz() {
  static Vars v{"x", "y", "z"};
  return v;
}

Polynomial P(const std::string &s, const Vars &vars = xy()) {
  return parse_polynomial(s, vars);
}

RationalFunction R(const std::string &s, const Vars &vars = xy()) {
  return parse_rational_function(s, vars);
}

// Random dense-ish polynomial of bounded degree.
Polynomial random_poly(RationalSampler &gen, const Vars &vars, int max_deg,
                       int terms) {
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    int budget = gen.integer(0, max_deg);
    for (std::size_t i = 0; i < vars.size() && budget > 0; ++i) {
      int k = gen.integer(0, budget);
      e[i] = static_cast<std::uint32_t>(k);
      budget -= k;
    }
    p.add_term(e, gen.small());
  }
  return p;
}

Polynomial random_nonzero_poly(RationalSampler &gen, const Vars &vars,
                               int max_deg, int terms) {
  for (;;) {
    Polynomial p = random_poly(gen, vars, max_deg, terms);
    if (!p.is_zero())
      return p;
  }
}

} // namespace

TEST_CASE("parse_polynomial: paper cubic") {
  Polynomial cubic = P("x^2*z + x*z^2 - 3*x*y*z + y^3", xyz());
  CHECK(cubic.total_degree() == 3);
  CHECK(cubic.terms().size() == 4);
  // canonical print round-trips
  CHECK(P(cubic.to_string(), xyz()) == cubic);
}

TEST_CASE("parse_polynomial: zero") {
  CHECK(P("0").is_zero());
  CHECK(P("x - x").is_zero());
}

TEST_CASE("parse_polynomial: expansion identity checked at random points") {
  Polynomial p = P("(x+y)^2 - x^2 - 2*x*y");
  CHECK(p == P("y^2"));
  RationalSampler gen(20240601);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> pt{gen.small(), gen.small()};
    Rational lhs = (pt[0] + pt[1]) * (pt[0] + pt[1]) - pt[0] * pt[0] -
                   2 * pt[0] * pt[1];
    CHECK(p.evaluate(pt) == lhs);
  }
}

TEST_CASE("parser errors carry positions") {
  CHECK_THROWS_AS(P("x + w"), ParseError);
  CHECK_THROWS_AS(P("x + "), ParseError);
  CHECK_THROWS_AS(P("x ^ y"), ParseError);
  CHECK_THROWS_AS(P("1/(x)"), ParseError); // not a polynomial
  CHECK_NOTHROW(R("1/(x)"));
}

TEST_CASE("gcd: trivial and constructed cases") {
  CHECK(gcd(P("x^2 - y^2"), P("x - y")) == P("x - y"));
  CHECK(gcd(P("x^2 + 1"), P("1")) == P("1"));
  CHECK(gcd(P("0"), P("2*x + 2")) == P("x + 1")); // monic normalized
}

TEST_CASE("gcd: random p*q vs p*r with coprime q, r") {
  RationalSampler gen(7);
  int done = 0;
  while (done < 12) {
    Polynomial p = random_nonzero_poly(gen, xy(), 2, 3);
    Polynomial q = random_nonzero_poly(gen, xy(), 2, 3);
    Polynomial r = random_nonzero_poly(gen, xy(), 2, 3);
    if (p.is_constant() || !gcd(q, r).is_constant())
      continue;
    Polynomial g = gcd(p * q, p * r);
    // g equals monic(p) up to the coprimality of q, r
    CHECK(g == p.monic());
    // and divides both exactly
    CHECK((p * q).divisible_by(g));
    CHECK((p * r).divisible_by(g));
    ++done;
  }
}

TEST_CASE("gcd divides both arguments and the cofactor reconstructs") {
  RationalSampler gen(99);
  for (int i = 0; i < 15; ++i) {
    Polynomial a = random_nonzero_poly(gen, xy(), 3, 4);
    Polynomial b = random_nonzero_poly(gen, xy(), 3, 4);
    Polynomial g = gcd(a, b);
    auto qa = a.divide_exact(g);
    auto qb = b.divide_exact(g);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    CHECK(*qa * g == a);
    CHECK(*qb * g == b);
  }
}

TEST_CASE("squarefree_decompose") {
  SUBCASE("monomial") {
    auto fs = squarefree_decompose(P("x^3*y^2"));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == P("y"));
    CHECK(fs[0].multiplicity == 2);
    CHECK(fs[1].factor == P("x"));
    CHECK(fs[1].multiplicity == 3);
  }
  SUBCASE("(x+y)^2 (x-y): reconstruct product") {
    Polynomial p = P("(x+y)^2 * (x-y)");
    auto fs = squarefree_decompose(p);
    Polynomial back = Polynomial::constant(xy(), Rational(1));
    for (auto &f : fs)
      back = back * f.factor.pow(static_cast<unsigned long>(f.multiplicity));
    // equal up to a rational constant
    CHECK(back.monic() == p.monic());
    REQUIRE(fs.size() == 2);
  }
  SUBCASE("squarefree input is reported with multiplicity 1") {
    Polynomial p = P("x^2 + y");
    auto fs = squarefree_decompose(p);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].multiplicity == 1);
    CHECK(fs[0].factor == p.monic());
  }
  SUBCASE("random reconstruction") {
    RationalSampler gen(4242);
    for (int i = 0; i < 8; ++i) {
      Polynomial a = random_nonzero_poly(gen, xy(), 2, 2);
      Polynomial b = random_nonzero_poly(gen, xy(), 2, 2);
      if (a.is_constant() || b.is_constant())
        continue;
      Polynomial p = a * a * b;
      auto fs = squarefree_decompose(p);
      Polynomial back = Polynomial::constant(xy(), Rational(1));
      for (auto &f : fs)
        back = back * f.factor.pow(static_cast<unsigned long>(f.multiplicity));
      CHECK(back.monic() == p.monic());
    }
  }
}

TEST_CASE("pole_order") {
  CHECK(pole_order(R("1/x^2"), P("x")) == 2);
  CHECK(pole_order(R("y/x"), P("y")) == 0);
  RationalSampler gen(5);
  for (int i = 0; i < 10; ++i) {
    Polynomial h = random_nonzero_poly(gen, xy(), 2, 3);
    Polynomial f = P("x + 1");
    if (!gcd(h, f).is_constant())
      continue;
    int k = gen.integer(1, 4);
    RationalFunction r(h, f.pow(static_cast<unsigned long>(k)));
    CHECK(pole_order(r, f) == k);
  }
  CHECK_THROWS_AS(pole_order(R("1/x"), P("2")), ContractError);
}

TEST_CASE("evaluate") {
  CHECK(R("5").evaluate({rat(1), rat(2)}) == 5);
  CHECK(R("x").evaluate({rat(3), rat(0)}) == 3);
  CHECK(R("(x+y)/(x-y)").evaluate({rat(3), rat(1)}) == 2);
  CHECK_THROWS_AS(R("1/x").evaluate({rat(0), rat(0)}), ContractError);
}

TEST_CASE("rational function field axioms at random operands") {
  RationalSampler gen(31337);
  auto rnd = [&]() {
    Polynomial n = random_poly(gen, xy(), 2, 3);
    Polynomial d = random_nonzero_poly(gen, xy(), 2, 2);
    return RationalFunction(n, d);
  };
  for (int i = 0; i < 10; ++i) {
    RationalFunction a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == RationalFunction(xy()));
    if (!a.is_zero())
      CHECK(a * a.inverse() == R("1"));
  }
}

TEST_CASE("parse/print round trip on random rational functions") {
  RationalSampler gen(2718);
  for (int i = 0; i < 10; ++i) {
    Polynomial n = random_poly(gen, xy(), 3, 3);
    Polynomial d = random_nonzero_poly(gen, xy(), 2, 2);
    RationalFunction r(n, d);
    CHECK(R(r.to_string()) == r);
  }
}

TEST_CASE("coprime_basis refines shared factors") {
  std::vector<Polynomial> in{P("x^2*y"), P("y*(x+y)")};
  auto basis = coprime_basis(in);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      CHECK(gcd(basis[i], basis[j]).is_constant());
  for (const auto &p : in)
    CHECK(supported_on(p, basis));
}

TEST_CASE("factor list validation") {
  FactorList ok({{P("x"), 2}, {P("y + 1"), 1}});
  CHECK_NOTHROW(validate_factor_list(ok));
  CHECK(ok.matches(P("3*x^2*y + 3*x^2")));
  FactorList bad_sqfree({{P("x^2"), 1}});
  CHECK_THROWS_AS(validate_factor_list(bad_sqfree), ContractError);
  FactorList bad_coprime({{P("x"), 1}, {P("x*y"), 1}});
  CHECK_THROWS_AS(validate_factor_list(bad_coprime), ContractError);
}

TEST_CASE("exact linear solve and nullspace") {
  QMatrix a(2, 3);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(0, 2) = 3;
  a.at(1, 1) = 1;
  a.at(1, 2) = 1;
  auto x = solve_linear(a, {rat(6), rat(2)});
  REQUIRE(x.has_value());
  // verify residual exactly
  CHECK((*x)[0] + 2 * (*x)[1] + 3 * (*x)[2] == 6);
  CHECK((*x)[1] + (*x)[2] == 2);
  QMatrix n(1, 2);
  n.at(0, 0) = 1;
  n.at(0, 1) = -1;
  auto basis = nullspace(n);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == basis[0][1]);
}
