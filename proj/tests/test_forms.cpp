#include <doctest.h>

#include <triforms/forms.hpp>
#include <triforms/parser.hpp>

using namespace triforms;

namespace {

Vars xy() {
  static Vars v{"x", "y"};
  return v;
}

Vars tvar() {
  static Vars v{"t"};
  return v;
}

RationalFunction R(const std::string &s, const Vars &vars = xy()) {
  return parse_rational_function(s, vars);
}

OneForm form(const std::string &dx, const std::string &dy) {
  return OneForm(xy(), {R(dx), R(dy)});
}

RationalFunction random_rf(RationalSampler &gen) {
  Polynomial n(xy()), d(xy());
  for (int t = 0; t < 3; ++t) {
    Exponents e{static_cast<std::uint32_t>(gen.integer(0, 2)),
                static_cast<std::uint32_t>(gen.integer(0, 2))};
    n.add_term(e, gen.small());
    Exponents e2{static_cast<std::uint32_t>(gen.integer(0, 1)),
                 static_cast<std::uint32_t>(gen.integer(0, 1))};
    d.add_term(e2, gen.small());
  }
  if (d.is_zero())
    d = Polynomial::constant(xy(), Rational(1));
  return RationalFunction(n, d);
}

OneForm random_form(RationalSampler &gen) {
  return OneForm(xy(), {random_rf(gen), random_rf(gen)});
}

} // namespace

TEST_CASE("exterior derivative") {
  CHECK(exterior_derivative(form("1/x^3", "0")).is_zero()); // closed dx/x^n
  CHECK(exterior_derivative(form("0", "x")) ==
        TwoForm(xy(), R("1"))); // d(x dy) = dx^dy
  RationalSampler gen(11);
  for (int i = 0; i < 8; ++i) {
    RationalFunction f = random_rf(gen);
    CHECK(exterior_derivative(OneForm::d(f)).is_zero()); // d o d = 0
  }
}

TEST_CASE("wedge") {
  RationalSampler gen(12);
  OneForm w = random_form(gen);
  CHECK(wedge(w, w).is_zero());
  CHECK(wedge(form("1", "0"), form("0", "1")) == TwoForm(xy(), R("1")));
  // (f dx + g dy) ^ dx = -g dx^dy
  RationalFunction f = random_rf(gen), g = random_rf(gen);
  CHECK(wedge(OneForm(xy(), {f, g}), form("1", "0")) == TwoForm(xy(), -g));
}

TEST_CASE("Leibniz rule d(f w) = df^w + f dw") {
  RationalSampler gen(13);
  for (int i = 0; i < 6; ++i) {
    RationalFunction f = random_rf(gen);
    OneForm w = random_form(gen);
    TwoForm lhs = exterior_derivative(w * f);
    TwoForm rhs = wedge(OneForm::d(f), w) + exterior_derivative(w) * f;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pullback basics") {
  RationalMap id = RationalMap::identity(xy());
  RationalSampler gen(14);
  OneForm w = random_form(gen);
  CHECK(pullback(id, w) == w);

  // t -> (t^2, t): pullback of dx is 2t dt
  RationalMap curve(tvar(), xy(),
                    {R("t^2", tvar()), R("t", tvar())});
  OneForm dx = form("1", "0");
  OneForm got = pullback(curve, dx);
  CHECK(got.arity() == 1);
  CHECK(got.coeff(0) == R("2*t", tvar()));
}

TEST_CASE("pullback commutes with d and wedge") {
  RationalSampler gen(15);
  // random 2-var to 2-var substitution (polynomial, to stay tame)
  for (int i = 0; i < 4; ++i) {
    Polynomial p1(xy()), p2(xy());
    p1.add_term({1, 0}, gen.small_nonzero());
    p1.add_term({0, 1}, gen.small());
    p1.add_term({0, 0}, gen.small());
    p2.add_term({0, 1}, gen.small_nonzero());
    p2.add_term({2, 0}, gen.small());
    RationalMap phi(xy(), xy(), {RationalFunction(p1), RationalFunction(p2)});
    OneForm w1 = random_form(gen), w2 = random_form(gen);
    // phi^*(c dx^dy) = (c o phi) * Jacobian * ds^dt
    RationalFunction jac =
        OneForm::d(phi.components()[0]).coeff(0) *
            OneForm::d(phi.components()[1]).coeff(1) -
        OneForm::d(phi.components()[1]).coeff(0) *
            OneForm::d(phi.components()[0]).coeff(1);
    // phi^* d w = d phi^* w
    TwoForm lhsd(xy(), substitute(exterior_derivative(w1).coeff(),
                                  phi.components()) *
                           jac);
    CHECK(lhsd == exterior_derivative(pullback(phi, w1)));
    // phi^*(w1 ^ w2) = phi^* w1 ^ phi^* w2
    TwoForm lhsw(xy(),
                 substitute(wedge(w1, w2).coeff(), phi.components()) * jac);
    CHECK(lhsw == wedge(pullback(phi, w1), pullback(phi, w2)));
  }
}

TEST_CASE("restriction to a curve") {
  Vars t = tvar();
  // {x=0} parametrized by t -> (0, t)
  RationalMap param(t, xy(), {R("0", t), R("t", t)});
  Polynomial f = parse_polynomial("x", xy());
  OneForm dx = form("1", "0"), dy = form("0", "1");
  CHECK(restrict_via_parametrization(dx, param, f).is_zero());
  OneForm dt = restrict_via_parametrization(dy, param, f);
  CHECK(dt.coeff(0) == R("1", t));
  // ideal test: x dy vanishes on {x=0}
  CHECK(restricts_to_zero(form("0", "x"), f));
  CHECK_FALSE(restricts_to_zero(dy, f));
}
