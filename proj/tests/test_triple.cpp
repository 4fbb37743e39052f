#include <doctest.h>

#include <triforms/parser.hpp>
#include <triforms/triple.hpp>

using namespace triforms;

namespace {

Vars xy() {
  static Vars v{"x", "y"};
  return v;
}

RationalFunction R(const std::string &s) {
  return parse_rational_function(s, xy());
}

Polynomial P(const std::string &s) { return parse_polynomial(s, xy()); }

OneForm form(const std::string &dx, const std::string &dy) {
  return OneForm(xy(), {R(dx), R(dy)});
}

OneForm zero_form() { return OneForm(xy()); }

ProjectiveTriple lemma_form(int n, const std::string &b_of_x) {
  // alpha = dx/x^n, beta = 0, gamma = b(x) dx/x^n
  std::string xn = "x^" + std::to_string(n);
  return ProjectiveTriple::with_inferred_poles(
      form("1/" + xn, "0"), zero_form(),
      form("(" + b_of_x + ")/" + xn, "0"));
}

FunctionMatrix random_const_det_matrix(RationalSampler &gen) {
  // product of shears with polynomial entries: determinant is constant
  Polynomial p(xy()), q(xy());
  p.add_term({static_cast<std::uint32_t>(gen.integer(0, 1)),
              static_cast<std::uint32_t>(gen.integer(0, 1))},
             gen.small());
  q.add_term({static_cast<std::uint32_t>(gen.integer(0, 2)), 0}, gen.small());
  FunctionMatrix m;
  Rational c = gen.small_nonzero(4, 1);
  // [[1, p],[0, 1]] * [[1, 0],[q, 1]] * diag(c, 1)
  RationalFunction rp(p), rq(q);
  m[0][0] = (R("1") + rp * rq) * c;
  m[0][1] = rp;
  m[1][0] = rq * c;
  m[1][1] = R("1");
  return m;
}

ProjectiveTriple random_gaugeable_triple(RationalSampler &gen) {
  // gauge images of simple diagonal-model triples stay integrable
  int n = gen.integer(1, 2);
  std::string b = std::to_string(gen.integer(-3, 3));
  ProjectiveTriple base = lemma_form(n, b);
  return gauge_transform(base, random_const_det_matrix(gen));
}

} // namespace

TEST_CASE("check_integrability") {
  SUBCASE("Lemma normal form is integrable") {
    ProjectiveTriple t = lemma_form(3, "2 - x + x^2");
    CHECK(t.integrability().ok);
  }
  SUBCASE("zero triple") {
    CHECK(check_integrability(zero_form(), zero_form(), zero_form()).ok);
  }
  SUBCASE("(dy, dx, 0) fails in the alpha relation only") {
    IntegrabilityReport rep =
        check_integrability(form("0", "1"), form("1", "0"), zero_form());
    CHECK_FALSE(rep.ok);
    CHECK(rep.residual_alpha == TwoForm(xy(), R("1"))); // -dy^dx
    CHECK(rep.residual_beta.is_zero());
    CHECK(rep.residual_gamma.is_zero());
  }
}

TEST_CASE("flatness of the connection matrix is equivalent to the triple "
          "relations") {
  RationalSampler gen(71);
  for (int i = 0; i < 6; ++i) {
    ProjectiveTriple t = random_gaugeable_triple(gen);
    CHECK(t.integrability().ok);
    CHECK(connection_flat(t.connection()));
  }
  // non-integrable data: flatness fails too
  OneForm alpha = form("0", "1"), beta = form("1", "0");
  CHECK_FALSE(check_integrability(alpha, beta, zero_form()).ok);
  FormMatrix a;
  a[0][0] = beta * Rational(-1, 2);
  a[0][1] = zero_form();
  a[1][0] = alpha;
  a[1][1] = beta * Rational(1, 2);
  CHECK_FALSE(connection_flat(a));
}

TEST_CASE("polar_divisor") {
  SUBCASE("(dx/x, 0, 0)") {
    ProjectiveTriple t =
        ProjectiveTriple::with_inferred_poles(form("1/x", "0"), zero_form(),
                                              zero_form());
    PolarDivisor d = polar_divisor(t);
    REQUIRE(d.size() == 1);
    CHECK(d[0].component == P("x"));
    CHECK(d[0].multiplicity == 1);
  }
  SUBCASE("Lemma form with F = x^n") {
    ProjectiveTriple t = lemma_form(4, "1 + x");
    PolarDivisor d = polar_divisor(t);
    REQUIRE(d.size() == 1);
    CHECK(d[0].component == P("x"));
    CHECK(d[0].multiplicity == 4);
  }
  SUBCASE("alpha = dx/x, gamma = dy/y^2") {
    ProjectiveTriple t = ProjectiveTriple::with_inferred_poles(
        form("1/x", "0"), zero_form(), form("0", "1/y^2"), false);
    PolarDivisor d = polar_divisor(t);
    REQUIRE(d.size() == 2);
    CHECK(d[0].component == P("x"));
    CHECK(d[0].multiplicity == 1);
    CHECK(d[1].component == P("y"));
    CHECK(d[1].multiplicity == 2);
  }
}

TEST_CASE("component_invariant") {
  SUBCASE("Lemma normal form: invariant") {
    ProjectiveTriple t = lemma_form(2, "3");
    CHECK(component_invariant(t, P("x")));
  }
  SUBCASE("fake-family component: not invariant") {
    // (dy/x^n, 0, h3(y) dy): the invariance test needs no integrability
    ProjectiveTriple t(form("0", "1/x^2"), zero_form(),
                       form("0", "y + 1"),
                       FactorList({{P("x"), 1}}), false);
    CHECK_FALSE(component_invariant(t, P("x")));
  }
  SUBCASE("not a component: error") {
    ProjectiveTriple t = lemma_form(2, "3");
    CHECK_THROWS_AS(component_invariant(t, P("y")), ContractError);
    CHECK_THROWS_AS(component_invariant(t, P("x + y")), ContractError);
  }
}

TEST_CASE("component_data: residue exponents and section count") {
  SUBCASE("two sections, rational exponents") {
    // alpha = dx/x, beta = 0, gamma = b0 dx/x with b0 = -1:
    // residue [[0, 1], [1, 0]], eigenvalues +-1, disc = 4
    ProjectiveTriple t = lemma_form(1, "-1");
    ComponentData cd = component_data(t, P("x"));
    CHECK(cd.multiplicity == 1);
    CHECK(cd.invariant);
    CHECK(cd.section_count == 2);
    REQUIRE(cd.disc_constant.has_value());
    CHECK(*cd.disc_constant == 4);
    REQUIRE(cd.exponent_plus.defined);
    CHECK(cd.exponent_plus.value.is_rational());
    CHECK(abs(cd.exponent_plus.value.rational_value()) == 1);
  }
  SUBCASE("two sections, quadratic-extension exponents") {
    ProjectiveTriple t = lemma_form(1, "2"); // disc = -8, mu = +-sqrt(-2)
    ComponentData cd = component_data(t, P("x"));
    CHECK(cd.section_count == 2);
    REQUIRE(cd.disc_constant.has_value());
    CHECK(*cd.disc_constant == -8);
    CHECK_FALSE(cd.sections_rational);
    REQUIRE(cd.exponent_plus.defined);
    CHECK_FALSE(cd.exponent_plus.value.is_rational());
    CHECK(cd.exponent_plus.value.d == -2);
    CHECK(cd.exponent_plus.value.in_extension(Rational(-2)));
  }
  SUBCASE("b0 = 0: one section, exponents both zero (saddle-node candidate)") {
    ProjectiveTriple t = lemma_form(1, "0");
    ComponentData cd = component_data(t, P("x"));
    CHECK(cd.section_count == 1);
    REQUIRE(cd.exponent_plus.defined);
    CHECK(cd.exponent_plus.value.is_rational());
    CHECK(cd.exponent_plus.value.rational_value() == 0);
  }
  SUBCASE("Camacho-Sad symmetry: the two exponents sum to zero") {
    for (const char *b : {"-1", "-4", "3"}) {
      ProjectiveTriple t = lemma_form(1, b);
      ComponentData cd = component_data(t, P("x"));
      REQUIRE(cd.exponent_plus.defined);
      REQUIRE(cd.exponent_minus.defined);
      CHECK(cd.exponent_plus.value.a + cd.exponent_minus.value.a == 0);
      CHECK(cd.exponent_plus.value.b + cd.exponent_minus.value.b == 0);
    }
  }
  SUBCASE("k > 1: exponents undefined") {
    ProjectiveTriple t = lemma_form(2, "1");
    ComponentData cd = component_data(t, P("x"));
    CHECK(cd.multiplicity == 2);
    CHECK_FALSE(cd.exponent_plus.defined);
  }
  SUBCASE("discriminant zero iff one section (invariant components)") {
    for (const char *b : {"0", "1", "-1", "x"}) {
      ProjectiveTriple t = lemma_form(1, b);
      ComponentData cd = component_data(t, P("x"));
      bool disc_zero =
          cd.disc_constant.has_value() && sgn(*cd.disc_constant) == 0;
      CHECK(disc_zero == (cd.section_count == 1));
    }
  }
}

TEST_CASE("gauge transform") {
  SUBCASE("identity gauge is the identity") {
    ProjectiveTriple t = lemma_form(2, "x - 1");
    CHECK(gauge_transform(t, identity_matrix(xy())) == t);
  }
  SUBCASE("lemma-proof elimination move") {
    // messy data straight out of the proof: alpha = h0 dx/x^n with a unit
    // h0(x,y), beta = -dh0/h0 + h1 dx/x^n; the gauge diag(h0, 1) eliminates
    // the logarithmic part of beta and rescales alpha to dx/x^n.
    RationalFunction h0 = R("1 + x*y");
    OneForm alpha = OneForm(xy(), {h0 / R("x^2"), R("0")});
    OneForm beta = -(OneForm::d(h0) * h0.inverse()) + form("2/x^2", "0");
    ProjectiveTriple messy =
        ProjectiveTriple::with_inferred_poles(alpha, beta, zero_form());
    REQUIRE(messy.integrability().ok);
    FunctionMatrix m;
    m[0][0] = h0;
    m[0][1] = R("0");
    m[1][0] = R("0");
    m[1][1] = R("1");
    ProjectiveTriple clean = gauge_transform(messy, m);
    CHECK(clean.alpha() == form("1/x^2", "0"));
    CHECK(clean.beta() == form("2/x^2", "0"));
    CHECK(clean.gamma().is_zero());
    // and the move is undone by the inverse gauge
    CHECK(gauge_transform(clean, inverse(m)) == messy);
  }
  SUBCASE("random gauges preserve integrability") {
    RationalSampler gen(1234);
    for (int i = 0; i < 8; ++i) {
      ProjectiveTriple t = random_gaugeable_triple(gen);
      CHECK(t.integrability().ok);
    }
  }
  SUBCASE("polar divisor is gauge-covariant for constant-determinant "
          "polynomial gauges") {
    RationalSampler gen(555);
    for (int i = 0; i < 6; ++i) {
      ProjectiveTriple t = lemma_form(gen.integer(1, 3),
                                      std::to_string(gen.integer(-4, 4)));
      FunctionMatrix m = random_const_det_matrix(gen);
      CHECK(polar_equal(polar_divisor(gauge_transform(t, m)),
                        polar_divisor(t)));
    }
  }
}

TEST_CASE("branch_divisor") {
  // alpha with a codimension-one zero along y
  OneForm alpha = form("y", "y*(x + 1)");
  OneForm beta = zero_form(), gamma = form("0", "x");
  // integrability not required for the substitution contract
  ProjectiveTriple t(alpha, beta, gamma, FactorList(), false);

  SUBCASE("sigma = [1:0] gives F defined by alpha, branch = zeros of alpha") {
    BranchResult br = branch_divisor(t, Section::infinity(xy()));
    CHECK(br.sigma_omega == alpha);
    REQUIRE(br.branch.size() == 1);
    CHECK(br.branch.entries()[0].factor == P("y"));
    CHECK(br.foliation_form == form("1", "x + 1"));
  }
  SUBCASE("sigma = [0:1] gives F defined by gamma") {
    BranchResult br = branch_divisor(t, Section::zero(xy()));
    CHECK(br.sigma_omega == gamma);
    REQUIRE(br.branch.size() == 1);
    CHECK(br.branch.entries()[0].factor == P("x")); // gamma = x dy
    CHECK(br.foliation_form == form("0", "1"));
  }
  SUBCASE("constant section matches the direct quadratic expansion") {
    RationalSampler gen(77);
    for (int i = 0; i < 5; ++i) {
      Rational c = gen.small();
      Section s(RationalFunction::constant(xy(), Rational(1)),
                RationalFunction::constant(xy(), c));
      BranchResult br = branch_divisor(t, s);
      OneForm direct = alpha + beta * c + gamma * (c * c);
      // the section representative is scaled to [1/c : 1] for c != 0
      OneForm got = sgn(c) != 0 ? br.sigma_omega * (c * c) : br.sigma_omega;
      CHECK(got == direct);
    }
  }
  SUBCASE("invariant section is rejected") {
    ProjectiveTriple z(zero_form(), zero_form(), form("0", "x"),
                       FactorList(), false);
    CHECK_THROWS_AS(branch_divisor(z, Section::infinity(xy())),
                    ContractError);
  }
}

TEST_CASE("pullback_triple") {
  ProjectiveTriple t = lemma_form(2, "1 - x");
  SUBCASE("identity") {
    CHECK(pullback_triple(t, RationalMap::identity(xy())) == t);
  }
  SUBCASE("linear coordinate change = substitution") {
    // (x, y) -> (x + y, x - y)
    RationalMap phi(xy(), xy(), {R("x + y"), R("x - y")});
    ProjectiveTriple u = pullback_triple(t, phi);
    CHECK(u.integrability().ok);
    CHECK(u.alpha() == pullback(phi, t.alpha()));
    CHECK(u.gamma() == pullback(phi, t.gamma()));
  }
}

TEST_CASE("constant_on_curve") {
  // (x + y^2)/(1 + y^2) is 1 on {x = 1 - ...}? use f = x - 1: value (1+y^2)/(1+y^2) = 1
  auto c = constant_on_curve(R("(x + y^2)/(1 + y^2)"), P("x - 1"));
  REQUIRE(c.has_value());
  CHECK(*c == 1);
  CHECK_FALSE(constant_on_curve(R("y"), P("x")).has_value());
  auto c2 = constant_on_curve(R("y^2 - x"), P("y^2 - x - 5"));
  REQUIRE(c2.has_value());
  CHECK(*c2 == 5);
}
