#ifndef TRIFORMS_QUADEXT_HPP
#define TRIFORMS_QUADEXT_HPP

#include <triforms/rational.hpp>

#include <sstream>
#include <string>

namespace triforms {

// Element a + b*sqrt(d) of a quadratic extension of Q. d = 0 encodes a plain
// rational. Values are canonicalized so that a square radicand is absorbed.
struct QuadExt {
  Rational a{0}, b{0}, d{0};

  bool is_rational() const { return sgn(b) == 0 || sgn(d) == 0; }
  Rational rational_value() const { return a; }

  QuadExt operator-() const { return {-a, -b, d}; }

  static QuadExt of(const Rational &q) { return {q, Rational(0), Rational(0)}; }

  // The square root of q as a + b*sqrt(d): exact when q is a square,
  // otherwise b = 1, d = q (radicand kept unevaluated).
  static QuadExt sqrt_of(const Rational &q) {
    if (auto s = exact_sqrt(q))
      return of(*s);
    return {Rational(0), Rational(1), q};
  }

  // True when the value lies in Q(sqrt(declared)): either rational or the
  // radicand differs from declared by a square factor.
  bool in_extension(const Rational &declared) const {
    if (is_rational())
      return true;
    if (sgn(declared) == 0)
      return false;
    return exact_sqrt(d / declared).has_value();
  }

  // Rewrite over the declared radicand when possible.
  QuadExt normalized_to(const Rational &declared) const {
    if (is_rational() || sgn(declared) == 0)
      return *this;
    if (auto s = exact_sqrt(d / declared))
      return {a, b * (*s), declared};
    return *this;
  }

  std::string to_string() const {
    if (is_rational())
      return triforms::to_string(a);
    std::ostringstream out;
    if (sgn(a) != 0)
      out << a.get_str() << " + ";
    if (b != 1)
      out << b.get_str() << "*";
    out << "sqrt(" << d.get_str() << ")";
    return out.str();
  }
};

struct ExponentValue {
  bool defined = false;
  QuadExt value;

  static ExponentValue undefined() { return {}; }
  static ExponentValue of(QuadExt v) { return {true, std::move(v)}; }
  std::string to_string() const {
    return defined ? value.to_string() : "undefined";
  }
};

} // namespace triforms

#endif
