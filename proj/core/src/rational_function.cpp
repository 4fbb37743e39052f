#include <triforms/rational_function.hpp>

#include <sstream>

namespace triforms {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.vars() != den_.vars())
    throw ContractError("rational function: variable contexts differ");
  if (den_.is_zero())
    throw ContractError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.vars(), Rational(1));
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Polynomial RationalFunction::as_polynomial() const {
  if (!den_.is_constant())
    throw ContractError("rational function is not a polynomial: " +
                        to_string());
  return num_ * (1 / den_.constant_value());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction &a,
                           const RationalFunction &b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_,
                          a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a,
                           const RationalFunction &b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_,
                          a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction &a,
                           const RationalFunction &b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a,
                           const RationalFunction &b) {
  if (b.is_zero())
    throw ContractError("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator*(const Rational &c) const {
  RationalFunction r = *this;
  r.num_ = r.num_ * c;
  if (r.num_.is_zero())
    r.den_ = Polynomial::constant(vars(), Rational(1));
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero())
    throw ContractError("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  unsigned long k = static_cast<unsigned long>(e);
  return RationalFunction(num_.pow(k), den_.pow(k));
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  // (n/d)' = (n'd - nd')/d^2
  return RationalFunction(num_.derivative(var) * den_ -
                              num_ * den_.derivative(var),
                          den_ * den_);
}

Rational RationalFunction::evaluate(const std::vector<Rational> &point) const {
  Rational d = den_.evaluate(point);
  if (sgn(d) == 0)
    throw ContractError("evaluation at a pole");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1)
    return num_.to_string();
  std::ostringstream out;
  bool wrap_num = num_.terms().size() > 1;
  out << (wrap_num ? "(" : "") << num_.to_string() << (wrap_num ? ")" : "");
  out << "/";
  bool wrap_den = den_.terms().size() > 1;
  out << (wrap_den ? "(" : "") << den_.to_string() << (wrap_den ? ")" : "");
  return out.str();
}

int pole_order(const RationalFunction &r, const Polynomial &f) {
  if (f.is_constant())
    throw ContractError("pole_order along a constant");
  if (r.is_zero())
    return 0;
  return r.den().multiplicity_of(f);
}

int zero_order(const RationalFunction &r, const Polynomial &f) {
  if (f.is_constant())
    throw ContractError("zero_order along a constant");
  if (r.is_zero())
    return 0;
  return r.num().multiplicity_of(f);
}

int signed_order(const RationalFunction &r, const Polynomial &f) {
  return pole_order(r, f) - zero_order(r, f);
}

RationalFunction substitute(const Polynomial &p,
                            std::span<const RationalFunction> values) {
  if (values.size() != p.vars().size())
    throw ContractError("substitution arity mismatch");
  if (values.empty())
    throw ContractError("substitution into empty context");
  const Vars &target = values[0].vars();
  RationalFunction acc(target);
  for (const auto &[e, c] : p.terms()) {
    RationalFunction term = RationalFunction::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      term = term * values[i].pow(e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

RationalFunction substitute(const RationalFunction &r,
                            std::span<const RationalFunction> values) {
  RationalFunction n = substitute(r.num(), values);
  RationalFunction d = substitute(r.den(), values);
  if (d.is_zero())
    throw ContractError("substitution maps denominator to zero");
  return n / d;
}

} // namespace triforms
