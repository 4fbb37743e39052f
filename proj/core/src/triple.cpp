#include <triforms/triple.hpp>

#include <algorithm>
#include <sstream>

namespace triforms {

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

RationalFunction det(const FunctionMatrix &m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

FunctionMatrix inverse(const FunctionMatrix &m) {
  RationalFunction d = det(m);
  if (d.is_zero())
    throw ContractError("matrix is singular");
  FunctionMatrix r;
  r[0][0] = m[1][1] / d;
  r[0][1] = -m[0][1] / d;
  r[1][0] = -m[1][0] / d;
  r[1][1] = m[0][0] / d;
  return r;
}

FunctionMatrix identity_matrix(const Vars &chart) {
  FunctionMatrix m;
  m[0][0] = RationalFunction::constant(chart, Rational(1));
  m[0][1] = RationalFunction(chart);
  m[1][0] = RationalFunction(chart);
  m[1][1] = RationalFunction::constant(chart, Rational(1));
  return m;
}

// ---------------------------------------------------------------------------
// integrability
// ---------------------------------------------------------------------------

IntegrabilityReport check_integrability(const OneForm &alpha,
                                        const OneForm &beta,
                                        const OneForm &gamma) {
  IntegrabilityReport rep;
  rep.residual_alpha = exterior_derivative(alpha) - wedge(alpha, beta);
  rep.residual_beta =
      exterior_derivative(beta) - wedge(alpha, gamma) * Rational(2);
  rep.residual_gamma = exterior_derivative(gamma) - wedge(beta, gamma);
  rep.ok = rep.residual_alpha.is_zero() && rep.residual_beta.is_zero() &&
           rep.residual_gamma.is_zero();
  return rep;
}

// ---------------------------------------------------------------------------
// polar divisor helpers
// ---------------------------------------------------------------------------

long polar_degree(const PolarDivisor &d) {
  long total = 0;
  for (const auto &c : d)
    total += c.multiplicity * c.component.total_degree();
  return total;
}

bool polar_equal(const PolarDivisor &a, const PolarDivisor &b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].multiplicity != b[i].multiplicity ||
        a[i].component.monic() != b[i].component.monic())
      return false;
  }
  return true;
}

bool polar_dominates(const PolarDivisor &a, const PolarDivisor &b) {
  for (const auto &cb : b) {
    int got = 0;
    for (const auto &ca : a) {
      if (ca.component.monic() == cb.component.monic()) {
        got = ca.multiplicity;
        break;
      }
    }
    if (got < cb.multiplicity)
      return false;
  }
  return true;
}

std::string polar_to_string(const PolarDivisor &d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i)
      out << " + ";
    out << d[i].multiplicity << "*(" << d[i].component.to_string() << ")";
  }
  if (d.empty())
    out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// sections
// ---------------------------------------------------------------------------

Section::Section(const RationalFunction &s1, const RationalFunction &s2) {
  Polynomial d = s1.den() * s2.den();
  Polynomial g = gcd(s1.den(), s2.den());
  d = *d.divide_exact(g); // lcm
  s1_ = (s1 * RationalFunction(d)).as_polynomial();
  s2_ = (s2 * RationalFunction(d)).as_polynomial();
  reduce();
}

Section::Section(Polynomial s1, Polynomial s2)
    : s1_(std::move(s1)), s2_(std::move(s2)) {
  reduce();
}

void Section::reduce() {
  if (s1_.is_zero() && s2_.is_zero())
    throw ContractError("section [0:0] is not a point of the fiber");
  if (!s1_.is_zero() && !s2_.is_zero()) {
    Polynomial g = gcd(s1_, s2_);
    if (!g.is_constant()) {
      s1_ = *s1_.divide_exact(g);
      s2_ = *s2_.divide_exact(g);
    }
  }
  // scale: make the later nonzero entry monic for a canonical representative
  const Polynomial &pivot = s2_.is_zero() ? s1_ : s2_;
  Rational lc = pivot.leading_coefficient();
  if (lc != 1) {
    Rational inv = 1 / lc;
    s1_ = s1_ * inv;
    s2_ = s2_ * inv;
  }
}

Section Section::infinity(const Vars &chart) {
  return Section(Polynomial::constant(chart, Rational(1)), Polynomial(chart));
}

Section Section::zero(const Vars &chart) {
  return Section(Polynomial(chart), Polynomial::constant(chart, Rational(1)));
}

Section Section::transformed(const FunctionMatrix &m) const {
  RationalFunction a(s1_), b(s2_);
  return Section(m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b);
}

bool Section::proportional_to(const Section &o) const {
  return (s1_ * o.s2_ - s2_ * o.s1_).is_zero();
}

bool Section::same_on_curve(const Section &o, const Polynomial &f) const {
  Polynomial cross = s1_ * o.s2_ - s2_ * o.s1_;
  return cross.is_zero() || cross.divisible_by(f);
}

std::string Section::to_string() const {
  return "[" + s1_.to_string() + " : " + s2_.to_string() + "]";
}

// ---------------------------------------------------------------------------
// the triple
// ---------------------------------------------------------------------------

namespace {

void validate_pole_cover(const OneForm &alpha, const OneForm &beta,
                         const OneForm &gamma, const FactorList &declared) {
  validate_factor_list(declared);
  std::vector<Polynomial> basis;
  for (const auto &e : declared.entries())
    basis.push_back(e.factor);
  for (const OneForm *w : {&alpha, &beta, &gamma}) {
    for (const auto &c : w->coeffs()) {
      if (c.den().is_constant())
        continue;
      if (!supported_on(c.den(), basis))
        throw ContractError(
            "declared poles do not cover coefficient denominator " +
            c.den().to_string());
    }
  }
}

FactorList inferred_poles(const OneForm &alpha, const OneForm &beta,
                          const OneForm &gamma) {
  std::vector<Polynomial> dens;
  for (const OneForm *w : {&alpha, &beta, &gamma})
    for (const auto &c : w->coeffs())
      if (!c.den().is_constant())
        dens.push_back(c.den());
  std::vector<FactorList::Entry> entries;
  for (auto &b : coprime_basis(dens))
    entries.push_back({b, 1});
  return FactorList(std::move(entries));
}

} // namespace

ProjectiveTriple::ProjectiveTriple(OneForm alpha, OneForm beta, OneForm gamma,
                                   FactorList declared_poles,
                                   bool require_integrable)
    : alpha_(std::move(alpha)), beta_(std::move(beta)),
      gamma_(std::move(gamma)), declared_(std::move(declared_poles)) {
  if (alpha_.chart() != beta_.chart() || beta_.chart() != gamma_.chart())
    throw ContractError("triple forms live on different charts");
  if (alpha_.arity() != 2)
    throw ContractError("projective triples live on 2-variable charts");
  validate_pole_cover(alpha_, beta_, gamma_, declared_);
  if (require_integrable) {
    IntegrabilityReport rep = integrability();
    if (!rep.ok)
      throw ContractError("triple fails the integrability relations");
  }
}

ProjectiveTriple ProjectiveTriple::with_inferred_poles(
    OneForm alpha, OneForm beta, OneForm gamma, bool require_integrable) {
  FactorList declared = inferred_poles(alpha, beta, gamma);
  return ProjectiveTriple(std::move(alpha), std::move(beta), std::move(gamma),
                          std::move(declared), require_integrable);
}

FormMatrix ProjectiveTriple::connection() const {
  Rational half(1, 2);
  FormMatrix a;
  a[0][0] = beta_ * (-half);
  a[0][1] = -gamma_;
  a[1][0] = alpha_;
  a[1][1] = beta_ * half;
  return a;
}

std::string ProjectiveTriple::to_string() const {
  std::ostringstream out;
  out << "alpha = " << alpha_.to_string() << "\n"
      << "beta  = " << beta_.to_string() << "\n"
      << "gamma = " << gamma_.to_string();
  return out.str();
}

std::uint64_t ProjectiveTriple::canonical_hash() const {
  return fnv1a(to_string());
}

bool connection_flat(const FormMatrix &a) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      TwoForm entry = exterior_derivative(a[i][j]);
      for (int k = 0; k < 2; ++k)
        entry = entry + wedge(a[i][k], a[k][j]);
      if (!entry.is_zero())
        return false;
    }
  }
  return true;
}

RiccatiForm riccati_form(const ProjectiveTriple &t) {
  return RiccatiForm{t.alpha(), t.beta(), t.gamma()};
}

std::string RiccatiForm::to_string() const {
  std::ostringstream out;
  out << "dz + (" << alpha.to_string() << ") + (" << beta.to_string()
      << ")*z + (" << gamma.to_string() << ")*z^2 = 0\n";
  out << "dw - (" << gamma.to_string() << ") - (" << beta.to_string()
      << ")*w - (" << alpha.to_string() << ")*w^2 = 0";
  return out.str();
}

PolarDivisor polar_divisor(const ProjectiveTriple &t) {
  PolarDivisor d;
  for (const auto &e : t.declared_poles().entries()) {
    int k = component_multiplicity(t, e.factor);
    if (k > 0)
      d.push_back({e.factor.monic(), k});
  }
  std::sort(d.begin(), d.end(), [](const auto &a, const auto &b) {
    return Polynomial::canonical_less(a.component, b.component);
  });
  return d;
}

int component_multiplicity(const ProjectiveTriple &t, const Polynomial &f) {
  int k = 0;
  for (const OneForm *w : {&t.alpha(), &t.beta(), &t.gamma()})
    for (const auto &c : w->coeffs())
      if (!c.is_zero())
        k = std::max(k, pole_order(c, f));
  return k;
}

std::array<std::array<RationalFunction, 2>, 3>
scaled_coefficients(const ProjectiveTriple &t, const Polynomial &f, int k) {
  RationalFunction fk(f.pow(static_cast<unsigned long>(k)));
  std::array<std::array<RationalFunction, 2>, 3> out;
  const OneForm *forms[3] = {&t.alpha(), &t.beta(), &t.gamma()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] = forms[i]->coeff(j) * fk;
  return out;
}

bool covector_vanishes_on_curve(const std::array<RationalFunction, 2> &c,
                                const Polynomial &f) {
  return on_curve_zero(c[0], f) && on_curve_zero(c[1], f);
}

namespace {

const Polynomial &find_declared(const ProjectiveTriple &t,
                                const Polynomial &f) {
  for (const auto &e : t.declared_poles().entries()) {
    if (e.factor.monic() == f.monic())
      return e.factor;
  }
  throw ContractError("polynomial is not a declared component: " +
                      f.to_string());
}

} // namespace

bool component_invariant(const ProjectiveTriple &t, const Polynomial &f) {
  const Polynomial &comp = find_declared(t, f);
  int k = component_multiplicity(t, comp);
  if (k == 0)
    throw ContractError("declared factor is not a polar component: " +
                        f.to_string());
  auto sc = scaled_coefficients(t, comp, k);
  for (int i = 0; i < 3; ++i) {
    OneForm w(t.chart(), {sc[i][0], sc[i][1]});
    if (!restricts_to_zero(w, comp))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// component analysis
// ---------------------------------------------------------------------------

std::optional<Rational> constant_on_curve(const RationalFunction &r,
                                          const Polynomial &f) {
  if (r.is_zero())
    return Rational(0);
  if (r.is_constant())
    return r.constant_value();
  if (pole_order(r, f) > 0)
    return std::nullopt;
  const Polynomial &num = r.num();
  const Polynomial &den = r.den();
  long qdeg = std::max(num.total_degree(), den.total_degree()) -
              f.total_degree();
  if (qdeg < 0) {
    // num - c*den has degree < deg f, so membership in (f) forces equality
    Rational c = num.leading_coefficient() / den.leading_coefficient();
    if (num == den * c)
      return c;
    return std::nullopt;
  }
  // enumerate monomials of degree <= qdeg for the cofactor q
  const Vars &vars = f.vars();
  std::vector<Exponents> qmonos;
  Exponents cur(vars.size(), 0);
  auto rec = [&](auto &&self, std::size_t i, long remaining) -> void {
    if (i == vars.size()) {
      qmonos.push_back(cur);
      return;
    }
    for (long e = 0; e <= remaining; ++e) {
      cur[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, remaining - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, qdeg);

  // equation monomials: union of supports of num, den, and f shifted by q
  std::map<Exponents, std::size_t> rows;
  auto row_of = [&](const Exponents &e) {
    auto [it, inserted] = rows.emplace(e, rows.size());
    return it->second;
  };
  for (const auto &[e, c] : num.terms())
    row_of(e);
  for (const auto &[e, c] : den.terms())
    row_of(e);
  std::vector<std::pair<std::size_t, std::pair<std::size_t, Rational>>> qcols;
  for (std::size_t m = 0; m < qmonos.size(); ++m) {
    for (const auto &[e, c] : f.terms()) {
      Exponents s = e;
      for (std::size_t i = 0; i < s.size(); ++i)
        s[i] += qmonos[m][i];
      qcols.push_back({row_of(s), {m, c}});
    }
  }
  // unknowns: [c, q_0 .. q_{M-1}] ; equation: num - c*den - q*f = 0
  QMatrix a(rows.size(), 1 + qmonos.size());
  std::vector<Rational> b(rows.size(), Rational(0));
  for (const auto &[e, c] : num.terms())
    b[rows[e]] = c;
  for (const auto &[e, c] : den.terms())
    a.at(rows[e], 0) = c; // +c*den on the lhs
  for (const auto &[row, mc] : qcols)
    a.at(row, 1 + mc.first) += mc.second;
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x)
    return std::nullopt;
  Rational c = (*x)[0];
  // confirm exactly
  Polynomial diff = num - den * c;
  if (diff.is_zero() || diff.divisible_by(f))
    return c;
  return std::nullopt;
}

namespace {

struct QuadraticRoots {
  int count = 0; // distinct roots
  std::vector<CurveSection> sections;
  bool rational = true;
  std::optional<Rational> disc_constant;
};

CurveSection section_rep(const RationalFunction &s1,
                         const RationalFunction &s2) {
  Section s(s1, s2);
  return CurveSection{s.s1(), s.s2()};
}

// Roots of a z1^2 + b z1 z2 + c z2^2 over the function field of {f=0}.
QuadraticRoots quadratic_roots(const RationalFunction &a,
                               const RationalFunction &b,
                               const RationalFunction &c, const Polynomial &f,
                               const Vars &chart) {
  QuadraticRoots out;
  bool za = on_curve_zero(a, f), zb = on_curve_zero(b, f),
       zc = on_curve_zero(c, f);
  RationalFunction one = RationalFunction::constant(chart, Rational(1));
  if (za && zb && zc)
    throw ContractError("zero quadratic has no isolated roots");
  if (za && zc) {
    out.count = 2;
    out.sections.push_back(section_rep(one, RationalFunction(chart)));
    out.sections.push_back(section_rep(RationalFunction(chart), one));
    out.disc_constant = constant_on_curve(b * b, f);
    return out;
  }
  if (zc) { // z1 (a z1 + b z2)
    if (zb) {
      out.count = 1;
      out.sections.push_back(section_rep(RationalFunction(chart), one));
      out.disc_constant = Rational(0);
      return out;
    }
    out.count = 2;
    out.sections.push_back(section_rep(RationalFunction(chart), one));
    out.sections.push_back(section_rep(-b, a));
    out.disc_constant = constant_on_curve(b * b, f);
    return out;
  }
  if (za) { // z2 (b z1 + c z2)
    if (zb) {
      out.count = 1;
      out.sections.push_back(section_rep(one, RationalFunction(chart)));
      out.disc_constant = Rational(0);
      return out;
    }
    out.count = 2;
    out.sections.push_back(section_rep(one, RationalFunction(chart)));
    out.sections.push_back(section_rep(-c, b));
    out.disc_constant = constant_on_curve(b * b, f);
    return out;
  }
  RationalFunction disc = b * b - a * c * Rational(4);
  if (on_curve_zero(disc, f)) {
    out.count = 1;
    out.sections.push_back(section_rep(c * Rational(2), -b));
    out.disc_constant = Rational(0);
    return out;
  }
  out.count = 2;
  out.disc_constant = constant_on_curve(disc, f);
  if (out.disc_constant) {
    if (auto s = exact_sqrt(*out.disc_constant)) {
      RationalFunction sq = RationalFunction::constant(chart, *s);
      out.sections.push_back(section_rep(c * Rational(2), -b + sq));
      out.sections.push_back(section_rep(c * Rational(2), -b - sq));
      return out;
    }
  }
  out.rational = false; // two sections, not defined over Q
  return out;
}

} // namespace

ComponentData component_data(const ProjectiveTriple &t, const Polynomial &f) {
  const Polynomial &comp = find_declared(t, f);
  ComponentData data;
  data.component = comp.monic();
  data.multiplicity = component_multiplicity(t, comp);
  if (data.multiplicity == 0)
    throw ContractError("declared factor is not a polar component: " +
                        f.to_string());
  const Vars &chart = t.chart();
  auto sc = scaled_coefficients(t, comp, data.multiplicity);
  data.invariant = component_invariant(t, comp);

  std::array<RationalFunction, 3> qx{sc[0][0], sc[1][0], sc[2][0]};
  std::array<RationalFunction, 3> qy{sc[0][1], sc[1][1], sc[2][1]};

  if (data.invariant) {
    // all three covectors are proportional to df on the curve: trivialize
    Polynomial fx = comp.derivative(0), fy = comp.derivative(1);
    std::array<RationalFunction, 3> g;
    if (!fx.is_zero()) {
      RationalFunction d(fx);
      for (int i = 0; i < 3; ++i)
        g[i] = qx[i] / d;
    } else {
      RationalFunction d(fy);
      for (int i = 0; i < 3; ++i)
        g[i] = qy[i] / d;
    }
    data.section_quadratic = g;
    QuadraticRoots roots = quadratic_roots(g[0], g[1], g[2], comp, chart);
    data.section_count = roots.count;
    data.sections = std::move(roots.sections);
    data.sections_rational = roots.rational;
    data.disc_constant = roots.disc_constant;
    if (data.multiplicity == 1 && data.disc_constant) {
      // residue eigenvalues +-mu with (2 mu)^2 = disc
      QuadExt mu = QuadExt::sqrt_of(*data.disc_constant / 4);
      data.exponent_plus = ExponentValue::of(mu);
      data.exponent_minus = ExponentValue::of(-mu);
    }
    return data;
  }

  // non-invariant: the singular set is the common zero locus of qx, qy
  bool zx = on_curve_zero(qx[0], comp) && on_curve_zero(qx[1], comp) &&
            on_curve_zero(qx[2], comp);
  bool zy = on_curve_zero(qy[0], comp) && on_curve_zero(qy[1], comp) &&
            on_curve_zero(qy[2], comp);
  if (zx && zy)
    throw ContractError("component multiplicity inconsistent with data");
  if (zx || zy) {
    const auto &q = zx ? qy : qx;
    QuadraticRoots roots = quadratic_roots(q[0], q[1], q[2], comp, chart);
    data.section_count = roots.count;
    data.sections = std::move(roots.sections);
    data.sections_rational = roots.rational;
    data.disc_constant = roots.disc_constant;
    return data;
  }
  // proportional pair? all 2x2 minors vanish on the curve
  RationalFunction m12 = qx[0] * qy[1] - qy[0] * qx[1];
  RationalFunction m13 = qx[0] * qy[2] - qy[0] * qx[2];
  RationalFunction m23 = qx[1] * qy[2] - qy[1] * qx[2];
  bool prop = on_curve_zero(m12, comp) && on_curve_zero(m13, comp) &&
              on_curve_zero(m23, comp);
  if (prop) {
    const auto &q = on_curve_zero(qx[0], comp) && on_curve_zero(qx[1], comp) &&
                            on_curve_zero(qx[2], comp)
                        ? qy
                        : qx;
    QuadraticRoots roots = quadratic_roots(q[0], q[1], q[2], comp, chart);
    data.section_count = roots.count;
    data.sections = std::move(roots.sections);
    data.sections_rational = roots.rational;
    data.disc_constant = roots.disc_constant;
    return data;
  }
  // rank 2: at most one common root [u:v] with (u^2, uv, v^2) ~ (m23,-m13,m12)
  CurveSection section;
  if (!on_curve_zero(m23, comp)) {
    section = section_rep(m23, -m13);
  } else if (!on_curve_zero(m12, comp)) {
    section = section_rep(-m13, m12);
  } else {
    throw ContractError("component has no singular section (degenerate data)");
  }
  // verify the common root exactly
  {
    RationalFunction u(section.s1), v(section.s2);
    RationalFunction rx = qx[0] * u * u + qx[1] * u * v + qx[2] * v * v;
    RationalFunction ry = qy[0] * u * u + qy[1] * u * v + qy[2] * v * v;
    if (!on_curve_zero(rx, comp) || !on_curve_zero(ry, comp))
      throw ContractError("singular-section reconstruction failed");
  }
  data.section_count = 1;
  data.sections.push_back(section);
  return data;
}

std::string CurveSection::to_string() const {
  return "[" + s1.to_string() + " : " + s2.to_string() + "]";
}

// ---------------------------------------------------------------------------
// gauge action
// ---------------------------------------------------------------------------

ProjectiveTriple gauge_transform(const ProjectiveTriple &t,
                                 const FunctionMatrix &m) {
  RationalFunction dm = det(m);
  if (dm.is_zero())
    throw ContractError("gauge matrix has identically zero determinant");
  const Vars &chart = t.chart();
  FunctionMatrix minv = inverse(m);
  FormMatrix a = t.connection();

  // The triple relations are dA + A^A = 0 for A = [[-b/2,-g],[a,b/2]], i.e.
  // the connection is d + A and sections solve dZ = -A Z; the induced gauge
  // action is A' = M A M^{-1} - dM M^{-1}.
  FormMatrix ap;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      OneForm acc(chart);
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          acc = acc + a[k][l] * (m[i][k] * minv[l][j]);
      for (int k = 0; k < 2; ++k)
        acc = acc - OneForm::d(m[i][k]) * minv[k][j];
      ap[i][j] = acc;
    }
  }
  // renormalize to trace zero: subtract (trace/2) I = d(det)/2det I
  OneForm tr = ap[0][0] + ap[1][1];
  OneForm half_tr = tr * Rational(1, 2);
  ap[0][0] = ap[0][0] - half_tr;
  ap[1][1] = ap[1][1] - half_tr;

  OneForm alpha = ap[1][0];
  OneForm beta = ap[1][1] * Rational(2);
  OneForm gamma = -ap[0][1];
  return ProjectiveTriple::with_inferred_poles(
      std::move(alpha), std::move(beta), std::move(gamma),
      /*require_integrable=*/true);
}

// ---------------------------------------------------------------------------
// branch divisor and pullback
// ---------------------------------------------------------------------------

BranchResult branch_divisor(const ProjectiveTriple &t, const Section &sigma) {
  if (sigma.chart() != t.chart())
    throw ContractError("section lives on the wrong chart");
  RationalFunction s1(sigma.s1()), s2(sigma.s2());
  OneForm so = OneForm::d(s2) * s1 - OneForm::d(s1) * s2 +
               t.alpha() * (s1 * s1) + t.beta() * (s1 * s2) +
               t.gamma() * (s2 * s2);
  if (so.is_zero())
    throw ContractError(
        "sigma^*Omega vanishes identically: section is not generically "
        "transverse");
  // clear poles: multiply by the lcm of the coefficient denominators
  Polynomial d0 = so.coeff(0).den(), d1 = so.coeff(1).den();
  Polynomial l = *(d0 * d1).divide_exact(gcd(d0, d1));
  Polynomial p = (so.coeff(0) * RationalFunction(l)).as_polynomial();
  Polynomial q = (so.coeff(1) * RationalFunction(l)).as_polynomial();
  Polynomial g = p.is_zero() ? q.monic() : (q.is_zero() ? p.monic() : gcd(p, q));
  BranchResult out;
  out.sigma_omega = so;
  if (!g.is_constant()) {
    std::vector<FactorList::Entry> entries;
    for (auto &sf : squarefree_decompose(g))
      entries.push_back({sf.factor, sf.multiplicity});
    out.branch = FactorList(std::move(entries));
    p = *p.divide_exact(g);
    q = *q.divide_exact(g);
  }
  out.foliation_form =
      OneForm(t.chart(), {RationalFunction(p), RationalFunction(q)});
  return out;
}

ProjectiveTriple pullback_triple(const ProjectiveTriple &t,
                                 const RationalMap &phi) {
  if (!phi.is_dominant_candidate())
    throw ContractError("pullback along a non-dominant map");
  OneForm alpha = pullback(phi, t.alpha());
  OneForm beta = pullback(phi, t.beta());
  OneForm gamma = pullback(phi, t.gamma());
  if (phi.source().size() != 2) {
    // one-variable target: bundle into a triple-like record is not possible;
    // handled by the caller (restriction module) — here we require 2 vars.
    throw ContractError("pullback_triple requires a 2-variable source chart");
  }
  return ProjectiveTriple::with_inferred_poles(std::move(alpha),
                                               std::move(beta),
                                               std::move(gamma), true);
}

} // namespace triforms
