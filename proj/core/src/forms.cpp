#include <triforms/forms.hpp>

#include <sstream>

namespace triforms {

OneForm::OneForm(const Vars &chart) : chart_(chart) {
  coeffs_.assign(chart.size(), RationalFunction(chart));
}

OneForm::OneForm(Vars chart, std::vector<RationalFunction> coeffs)
    : chart_(std::move(chart)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != chart_.size())
    throw ContractError("one-form coefficient count mismatch");
  for (const auto &c : coeffs_)
    if (c.vars() != chart_)
      throw ContractError("one-form coefficient in wrong chart");
}

OneForm OneForm::d(const RationalFunction &f) {
  const Vars &chart = f.vars();
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(chart.size());
  for (std::size_t i = 0; i < chart.size(); ++i)
    coeffs.push_back(f.derivative(i));
  return OneForm(chart, std::move(coeffs));
}

bool OneForm::is_zero() const {
  for (const auto &c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

OneForm OneForm::operator-() const {
  OneForm r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

OneForm operator+(const OneForm &a, const OneForm &b) {
  if (a.chart_ != b.chart_)
    throw ContractError("one-form chart mismatch");
  OneForm r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
  return r;
}

OneForm operator-(const OneForm &a, const OneForm &b) {
  if (a.chart_ != b.chart_)
    throw ContractError("one-form chart mismatch");
  OneForm r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = r.coeffs_[i] - b.coeffs_[i];
  return r;
}

OneForm OneForm::operator*(const RationalFunction &f) const {
  OneForm r = *this;
  for (auto &c : r.coeffs_)
    c = c * f;
  return r;
}

OneForm OneForm::operator*(const Rational &c) const {
  OneForm r = *this;
  for (auto &coeff : r.coeffs_)
    coeff = coeff * c;
  return r;
}

std::string OneForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero())
      continue;
    if (!first)
      out << " + ";
    first = false;
    out << "(" << coeffs_[i].to_string() << ")*d" << chart_.name(i);
  }
  if (first)
    out << "0";
  return out.str();
}

TwoForm operator+(const TwoForm &a, const TwoForm &b) {
  if (a.chart_ != b.chart_)
    throw ContractError("two-form chart mismatch");
  return TwoForm(a.chart_, a.coeff_ + b.coeff_);
}

TwoForm operator-(const TwoForm &a, const TwoForm &b) {
  if (a.chart_ != b.chart_)
    throw ContractError("two-form chart mismatch");
  return TwoForm(a.chart_, a.coeff_ - b.coeff_);
}

std::string TwoForm::to_string() const {
  std::ostringstream out;
  out << "(" << coeff_.to_string() << ")*d" << chart_.name(0) << "^d"
      << chart_.name(1);
  return out.str();
}

RationalMap::RationalMap(Vars source, Vars target,
                         std::vector<RationalFunction> components)
    : source_(std::move(source)), target_(std::move(target)),
      components_(std::move(components)) {
  if (components_.size() != target_.size())
    throw ContractError("rational map component count mismatch");
  for (const auto &c : components_)
    if (c.vars() != source_)
      throw ContractError("rational map component in wrong chart");
}

RationalMap RationalMap::identity(const Vars &chart) {
  std::vector<RationalFunction> comps;
  for (std::size_t i = 0; i < chart.size(); ++i)
    comps.push_back(RationalFunction::variable(chart, i));
  return RationalMap(chart, chart, std::move(comps));
}

bool RationalMap::is_dominant_candidate() const {
  for (const auto &c : components_)
    if (!c.is_constant())
      return true;
  return false;
}

TwoForm exterior_derivative(const OneForm &w) {
  if (w.arity() != 2)
    throw ContractError("exterior derivative needs a 2-variable chart");
  // d(a dx + b dy) = (db/dx - da/dy) dx^dy
  return TwoForm(w.chart(),
                 w.coeff(1).derivative(0) - w.coeff(0).derivative(1));
}

TwoForm wedge(const OneForm &a, const OneForm &b) {
  if (a.chart() != b.chart())
    throw ContractError("wedge: chart mismatch");
  if (a.arity() != 2)
    throw ContractError("wedge needs a 2-variable chart");
  return TwoForm(a.chart(),
                 a.coeff(0) * b.coeff(1) - b.coeff(0) * a.coeff(1));
}

RationalFunction pullback(const RationalMap &phi, const RationalFunction &f) {
  if (f.vars() != phi.target())
    throw ContractError("pullback: value lives on the wrong chart");
  return substitute(f, phi.components());
}

OneForm pullback(const RationalMap &phi, const OneForm &w) {
  if (w.chart() != phi.target())
    throw ContractError("pullback: form lives on the wrong chart");
  OneForm acc(phi.source());
  for (std::size_t i = 0; i < w.arity(); ++i) {
    if (w.coeff(i).is_zero())
      continue;
    RationalFunction c = substitute(w.coeff(i), phi.components());
    acc = acc + OneForm::d(phi.components()[i]) * c;
  }
  return acc;
}

bool on_curve_zero(const RationalFunction &r, const Polynomial &f) {
  if (r.is_zero())
    return true;
  if (pole_order(r, f) > 0)
    throw ContractError("on_curve_zero: value has a pole along the curve");
  return r.num().divisible_by(f);
}

bool restricts_to_zero(const OneForm &w, const Polynomial &f) {
  if (w.arity() != 2)
    throw ContractError("restriction test needs a 2-variable chart");
  Polynomial fr = squarefree_part(f);
  OneForm df = OneForm::d(RationalFunction(fr));
  TwoForm t = wedge(w, df);
  return on_curve_zero(t.coeff(), fr);
}

OneForm restrict_via_parametrization(const OneForm &w, const RationalMap &phi,
                                     const Polynomial &f) {
  // contract: phi parametrizes {f=0}
  RationalFunction probe = substitute(RationalFunction(f), phi.components());
  if (!probe.is_zero())
    throw ContractError("parametrization does not land in the curve");
  return pullback(phi, w);
}

} // namespace triforms
