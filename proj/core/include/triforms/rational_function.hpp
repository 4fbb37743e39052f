#ifndef TRIFORMS_RATIONAL_FUNCTION_HPP
#define TRIFORMS_RATIONAL_FUNCTION_HPP

#include <triforms/polynomial.hpp>

#include <span>
#include <string>
#include <vector>

namespace triforms {

// Reduced quotient of polynomials. Invariants: denominator nonzero and monic
// (leading coefficient 1 in graded-lex order), gcd(num, den) constant.
class RationalFunction {
public:
  RationalFunction() = default;
  explicit RationalFunction(Vars vars)
      : num_(Polynomial(vars)),
        den_(Polynomial::constant(vars, Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  /* implicit */ RationalFunction(const Polynomial &p)
      : num_(p), den_(Polynomial::constant(p.vars(), Rational(1))) {}

  static RationalFunction constant(const Vars &vars, const Rational &c) {
    return RationalFunction(Polynomial::constant(vars, c));
  }
  static RationalFunction variable(const Vars &vars, std::size_t i) {
    return RationalFunction(Polynomial::variable(vars, i));
  }

  const Polynomial &num() const { return num_; }
  const Polynomial &den() const { return den_; }
  const Vars &vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }
  bool is_polynomial() const { return den_.is_constant(); }
  // Numerator scaled by the constant denominator; contract error otherwise.
  Polynomial as_polynomial() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction &a,
                                    const RationalFunction &b);
  friend RationalFunction operator-(const RationalFunction &a,
                                    const RationalFunction &b);
  friend RationalFunction operator*(const RationalFunction &a,
                                    const RationalFunction &b);
  friend RationalFunction operator/(const RationalFunction &a,
                                    const RationalFunction &b);
  RationalFunction operator*(const Rational &c) const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  RationalFunction derivative(std::size_t var) const;

  // Exact value; throws ContractError on a pole (caller resamples).
  Rational evaluate(const std::vector<Rational> &point) const;

  bool operator==(const RationalFunction &o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction &o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Polynomial num_, den_;
};

// Largest m such that f^m divides the reduced denominator (0 when none).
int pole_order(const RationalFunction &r, const Polynomial &f);

// Vanishing order of the numerator along f (0 when f does not divide it).
int zero_order(const RationalFunction &r, const Polynomial &f);

// pole_order - zero_order: positive along poles, negative along zeros.
// The zero function reports LONG_MIN/stand-in via has-value API instead.
int signed_order(const RationalFunction &r, const Polynomial &f);

// Substitute values[i] for variable i of p.
RationalFunction substitute(const Polynomial &p,
                            std::span<const RationalFunction> values);
RationalFunction substitute(const RationalFunction &r,
                            std::span<const RationalFunction> values);

} // namespace triforms

#endif
