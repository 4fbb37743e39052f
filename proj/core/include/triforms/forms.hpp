#ifndef TRIFORMS_FORMS_HPP
#define TRIFORMS_FORMS_HPP

#include <triforms/rational_function.hpp>

#include <string>
#include <vector>

namespace triforms {

// Meromorphic 1-form on an affine chart: sum of coeff[i] * d(var_i).
// The main chart is 2-variable; 1-variable charts appear after restriction.
class OneForm {
public:
  OneForm() = default;
  explicit OneForm(const Vars &chart);
  OneForm(Vars chart, std::vector<RationalFunction> coeffs);

  static OneForm d(const RationalFunction &f); // exterior derivative of 0-form

  const Vars &chart() const { return chart_; }
  std::size_t arity() const { return coeffs_.size(); }
  const RationalFunction &coeff(std::size_t i) const { return coeffs_[i]; }
  const std::vector<RationalFunction> &coeffs() const { return coeffs_; }

  bool is_zero() const;

  OneForm operator-() const;
  friend OneForm operator+(const OneForm &a, const OneForm &b);
  friend OneForm operator-(const OneForm &a, const OneForm &b);
  OneForm operator*(const RationalFunction &f) const;
  OneForm operator*(const Rational &c) const;
  friend OneForm operator*(const RationalFunction &f, const OneForm &w) {
    return w * f;
  }

  bool operator==(const OneForm &o) const {
    return chart_ == o.chart_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const OneForm &o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Vars chart_;
  std::vector<RationalFunction> coeffs_;
};

// c * dx ^ dy on a 2-variable chart.
class TwoForm {
public:
  TwoForm() = default;
  explicit TwoForm(const Vars &chart)
      : chart_(chart), coeff_(RationalFunction(chart)) {}
  TwoForm(Vars chart, RationalFunction coeff)
      : chart_(std::move(chart)), coeff_(std::move(coeff)) {}

  const Vars &chart() const { return chart_; }
  const RationalFunction &coeff() const { return coeff_; }
  bool is_zero() const { return coeff_.is_zero(); }

  friend TwoForm operator+(const TwoForm &a, const TwoForm &b);
  friend TwoForm operator-(const TwoForm &a, const TwoForm &b);
  TwoForm operator*(const RationalFunction &f) const {
    return TwoForm(chart_, coeff_ * f);
  }
  TwoForm operator*(const Rational &c) const {
    return TwoForm(chart_, coeff_ * c);
  }
  bool operator==(const TwoForm &o) const { return coeff_ == o.coeff_; }
  bool operator!=(const TwoForm &o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Vars chart_;
  RationalFunction coeff_;
};

// Rational map between charts: target variable i pulls back to component(i).
class RationalMap {
public:
  RationalMap() = default;
  RationalMap(Vars source, Vars target,
              std::vector<RationalFunction> components);

  static RationalMap identity(const Vars &chart);

  const Vars &source() const { return source_; }
  const Vars &target() const { return target_; }
  const std::vector<RationalFunction> &components() const {
    return components_;
  }

  bool is_dominant_candidate() const; // not all components constant

private:
  Vars source_, target_;
  std::vector<RationalFunction> components_;
};

// d(a dx + b dy) = (db/dx - da/dy) dx^dy; defined on 2-variable charts.
TwoForm exterior_derivative(const OneForm &w);

TwoForm wedge(const OneForm &a, const OneForm &b);

// Substitution plus chain rule. The source chart may have 1 or 2 variables.
OneForm pullback(const RationalMap &phi, const OneForm &w);
RationalFunction pullback(const RationalMap &phi, const RationalFunction &f);

// Ideal-membership restriction test: the pullback of w to the smooth curve
// {f=0} vanishes iff w ^ df = 0 mod f (denominators coprime to f).
bool restricts_to_zero(const OneForm &w, const Polynomial &f);

// Explicit restriction along a supplied parametrization of {f=0}.
OneForm restrict_via_parametrization(const OneForm &w, const RationalMap &phi,
                                     const Polynomial &f);

// True when r's reduced numerator is divisible by f (r = 0 on {f=0});
// contract error when the denominator shares a factor with f.
bool on_curve_zero(const RationalFunction &r, const Polynomial &f);

} // namespace triforms

#endif
