#include <triforms/plane.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace triforms {

namespace {

bool is_homogeneous(const Polynomial &p) {
  if (p.is_zero())
    return true;
  long d = -1;
  for (const auto &[e, c] : p.terms()) {
    long s = 0;
    for (auto x : e)
      s += x;
    if (d < 0)
      d = s;
    else if (s != d)
      return false;
  }
  return true;
}

// substitute var = 1 and drop it from the context
Polynomial dehomogenize(const Polynomial &p, std::size_t var,
                        const Vars &target) {
  Polynomial out(target);
  for (const auto &[e, c] : p.terms()) {
    Exponents d;
    d.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var)
        d.push_back(e[i]);
    out.add_term(d, c);
  }
  return out;
}

Polynomial homogenize_to(const Polynomial &p, const Vars &target,
                         std::size_t zvar, long degree) {
  Polynomial out(target);
  for (const auto &[e, c] : p.terms()) {
    long s = 0;
    for (auto x : e)
      s += x;
    Exponents d(target.size(), 0);
    std::size_t j = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (i == zvar)
        continue;
      d[i] = e[j++];
    }
    d[zvar] = static_cast<std::uint32_t>(degree - s);
    out.add_term(d, c);
  }
  return out;
}

} // namespace

PlaneFoliation::PlaneFoliation(Polynomial a, Polynomial b, Polynomial c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.vars().size() != 3)
    throw ContractError("plane foliations live on a 3-variable context");
  if (a_.vars() != b_.vars() || b_.vars() != c_.vars())
    throw ContractError("coefficient variable contexts differ");
  if (a_.is_zero() && b_.is_zero() && c_.is_zero())
    throw ContractError("zero form does not define a foliation");
  if (!is_homogeneous(a_) || !is_homogeneous(b_) || !is_homogeneous(c_))
    throw ContractError("coefficients must be homogeneous");
  long d = std::max({a_.total_degree(), b_.total_degree(), c_.total_degree()});
  for (const Polynomial *p : {&a_, &b_, &c_})
    if (!p->is_zero() && p->total_degree() != d)
      throw ContractError("coefficients must have equal degree");
  // Euler contraction x A + y B + z C = 0
  const Vars &v = a_.vars();
  Polynomial euler = Polynomial::variable(v, 0) * a_ +
                     Polynomial::variable(v, 1) * b_ +
                     Polynomial::variable(v, 2) * c_;
  if (!euler.is_zero())
    throw ContractError("Euler contraction does not vanish");
  Polynomial g = gcd(gcd(a_, b_), c_);
  if (!g.is_constant())
    throw ContractError("coefficients have a common factor " + g.to_string());
}

OneForm PlaneFoliation::affine_chart(char chart) const {
  if (chart == 'z') {
    Vars xy{"x", "y"};
    return OneForm(xy, {RationalFunction(dehomogenize(a_, 2, xy)),
                        RationalFunction(dehomogenize(b_, 2, xy))});
  }
  if (chart == 'x') {
    Vars yz{"y", "z"};
    return OneForm(yz, {RationalFunction(dehomogenize(b_, 0, yz)),
                        RationalFunction(dehomogenize(c_, 0, yz))});
  }
  throw ContractError("unknown chart (use 'z' or 'x')");
}

std::string PlaneFoliation::to_string() const {
  std::ostringstream out;
  out << "(" << a_.to_string() << ")*dx + (" << b_.to_string() << ")*dy + ("
      << c_.to_string() << ")*dz";
  return out.str();
}

PlaneFoliation homogenize_affine(const OneForm &w) {
  if (w.arity() != 2)
    throw ContractError("homogenize_affine expects a 2-variable form");
  // clear denominators
  Polynomial d0 = w.coeff(0).den(), d1 = w.coeff(1).den();
  Polynomial l = *(d0 * d1).divide_exact(gcd(d0, d1));
  Polynomial p = (w.coeff(0) * RationalFunction(l)).as_polynomial();
  Polynomial q = (w.coeff(1) * RationalFunction(l)).as_polynomial();
  Polynomial g = p.is_zero() ? q : (q.is_zero() ? p : gcd(p, q));
  if (!g.is_constant()) {
    p = *p.divide_exact(g);
    q = *q.divide_exact(g);
  }
  Vars xyz{"x", "y", "z"};
  long m = std::max(p.total_degree(), q.total_degree());
  Polynomial ph = homogenize_to(p, xyz, 2, m);
  Polynomial qh = homogenize_to(q, xyz, 2, m);
  Polynomial z = Polynomial::variable(xyz, 2);
  Polynomial a = z * ph;
  Polynomial b = z * qh;
  Polynomial c = -(Polynomial::variable(xyz, 0) * ph +
                   Polynomial::variable(xyz, 1) * qh);
  Polynomial common = gcd(gcd(a, b), c);
  if (!common.is_constant()) {
    a = *a.divide_exact(common);
    b = *b.divide_exact(common);
    c = *c.divide_exact(common);
  }
  return PlaneFoliation(std::move(a), std::move(b), std::move(c));
}

EccentricityReport eccentricity(long deg_polar, long deg_foliation) {
  return {deg_polar, deg_foliation, deg_polar - (deg_foliation + 2)};
}

long foliation_degree(const PlaneFoliation &f, std::uint64_t seed,
                      int resample_budget) {
  Vars xy{"x", "y"};
  Vars tv{"t"};
  Polynomial az = dehomogenize(f.a(), 2, xy);
  Polynomial bz = dehomogenize(f.b(), 2, xy);
  RationalSampler gen(seed);
  int attempts = 0;
  std::vector<long> degrees;
  while (attempts < resample_budget) {
    ++attempts;
    Rational x0 = gen.small(), y0 = gen.small();
    Rational u = gen.small(), v = gen.small();
    if (sgn(u) == 0 && sgn(v) == 0)
      continue;
    RationalFunction t = RationalFunction::variable(tv, 0);
    RationalFunction lx = RationalFunction::constant(tv, x0) + t * u;
    RationalFunction ly = RationalFunction::constant(tv, y0) + t * v;
    std::vector<RationalFunction> pt{lx, ly};
    RationalFunction tangency =
        substitute(az, pt) * u + substitute(bz, pt) * v;
    if (tangency.is_zero())
      continue; // invariant line: resample
    long deg = tangency.num().total_degree();
    degrees.push_back(deg);
    if (degrees.size() == 3) {
      if (degrees[0] == degrees[1] && degrees[1] == degrees[2])
        return degrees[0];
      degrees.erase(degrees.begin()); // slide: keep trying
    }
  }
  throw BudgetError("foliation_degree: persistent degeneracy after resample "
                    "budget");
}

bool invariant_curve_test(const PlaneFoliation &f, const Polynomial &curve) {
  if (curve.vars() != f.vars())
    throw ContractError("curve lives on the wrong context");
  if (curve.is_constant())
    throw ContractError("invariant_curve_test: constant curve");
  if (squarefree_part(curve) != curve.monic())
    throw ContractError("invariant_curve_test: curve is not squarefree");
  Polynomial cx = curve.derivative(0), cy = curve.derivative(1),
             cz = curve.derivative(2);
  Polynomial w_xy = f.a() * cy - f.b() * cx;
  Polynomial w_xz = f.a() * cz - f.c() * cx;
  Polynomial w_yz = f.b() * cz - f.c() * cy;
  for (const Polynomial *p : {&w_xy, &w_xz, &w_yz})
    if (!p->is_zero() && !p->divisible_by(curve))
      return false;
  return true;
}

bool verify_log_derivative(const OneForm &omega, const OneForm &eta) {
  if (omega.arity() != 2)
    throw ContractError("log-derivative check expects 2-variable forms");
  TwoForm residual = exterior_derivative(omega) - wedge(eta, omega);
  return residual.is_zero();
}

bool verify_log_derivative(const PlaneFoliation &f,
                           const std::vector<LogTerm> &eta) {
  for (char chart : {'z', 'x'}) {
    OneForm omega = f.affine_chart(chart);
    const Vars &cv = omega.chart();
    std::size_t drop = (chart == 'z') ? 2 : 0;
    OneForm e(cv);
    for (const auto &term : eta) {
      Polynomial taff = dehomogenize(term.divisor, drop, cv);
      if (taff.is_constant()) {
        if (sgn(taff.constant_value()) == 0)
          throw ContractError("log term divisor vanishes in the chart");
        continue; // d(const)/const = 0
      }
      RationalFunction rt(taff);
      e = e + OneForm::d(rt) * rt.inverse() * term.coefficient;
    }
    if (!verify_log_derivative(omega, e))
      return false;
  }
  return true;
}

LineRestriction restrict_structure_to_line(const ProjectiveTriple &t,
                                           const RationalMap &line) {
  if (line.source().size() != 1 || line.target() != t.chart())
    throw ContractError("line must map a 1-variable chart into the triple's "
                        "chart");
  // degree-1 parametrization with a genuine direction
  bool moving = false;
  for (const auto &c : line.components()) {
    if (!c.den().is_constant() || c.num().total_degree() > 1)
      throw ContractError("line components must be affine-linear");
    if (c.num().total_degree() == 1)
      moving = true;
  }
  if (!moving)
    throw ContractError("degenerate line (constant parametrization)");

  LineRestriction out;
  out.alpha = pullback(line, t.alpha());
  out.beta = pullback(line, t.beta());
  out.gamma = pullback(line, t.gamma());

  const Vars &tv = line.source();
  std::vector<Polynomial> dens;
  for (const OneForm *w : {&out.alpha, &out.beta, &out.gamma})
    if (!w->coeff(0).is_zero() && !w->coeff(0).den().is_constant())
      dens.push_back(w->coeff(0).den());
  for (const auto &piece : coprime_basis(dens)) {
    int k = 0;
    for (const OneForm *w : {&out.alpha, &out.beta, &out.gamma})
      if (!w->coeff(0).is_zero())
        k = std::max(k, pole_order(w->coeff(0), piece));
    if (k > 0)
      out.finite_polar.push_back({piece, k});
  }
  // order at the line's point at infinity: t = 1/s
  Vars sv{"s"};
  RationalFunction s = RationalFunction::variable(sv, 0);
  std::vector<RationalFunction> inv{s.inverse()};
  Polynomial spoly = Polynomial::variable(sv, 0);
  int kinf = 0;
  for (const OneForm *w : {&out.alpha, &out.beta, &out.gamma}) {
    if (w->coeff(0).is_zero())
      continue;
    RationalFunction cs = substitute(w->coeff(0), inv) * (s * s).inverse();
    kinf = std::max(kinf, signed_order(cs, spoly));
  }
  out.infinity_order = std::max(kinf, 0);
  out.polar_degree = polar_degree(out.finite_polar) + out.infinity_order;
  return out;
}

long structure_polar_degree(const ProjectiveTriple &t, std::uint64_t seed,
                            int resample_budget) {
  RationalSampler gen(seed);
  Vars tv{"t"};
  RationalFunction tt = RationalFunction::variable(tv, 0);
  std::vector<long> degrees;
  for (int attempt = 0; attempt < resample_budget; ++attempt) {
    Rational x0 = gen.small(), y0 = gen.small();
    Rational u = gen.small(), v = gen.small();
    if (sgn(u) == 0 && sgn(v) == 0)
      continue;
    try {
      RationalMap line(tv, t.chart(),
                       {RationalFunction::constant(tv, x0) + tt * u,
                        RationalFunction::constant(tv, y0) + tt * v});
      LineRestriction r = restrict_structure_to_line(t, line);
      degrees.push_back(r.polar_degree);
    } catch (const ContractError &) {
      continue; // non-generic line: resample
    }
    if (degrees.size() == 3) {
      if (degrees[0] == degrees[1] && degrees[1] == degrees[2])
        return degrees[0];
      degrees.erase(degrees.begin());
    }
  }
  throw BudgetError("structure_polar_degree: persistent degeneracy");
}

RiccatiExample generate_riccati_example(int d, std::uint64_t seed,
                                        int resample_budget) {
  if (d < 1)
    throw ContractError("generate_riccati_example needs d >= 1");
  RationalSampler gen(seed);
  Vars uv{"u"};
  Vars xy{"x", "y"};
  Vars xyz{"x", "y", "z"};
  RationalFunction ux = RationalFunction::variable(uv, 0);

  for (int attempt = 0; attempt < resample_budget; ++attempt) {
    // d distinct affine pencil parameters; the (d+1)-st pole line is the
    // pencil member at infinity {z = 0}
    std::set<int> pole_set;
    while (static_cast<int>(pole_set.size()) < d)
      pole_set.insert(gen.integer(-4, 4));
    std::vector<Rational> poles(pole_set.begin(), pole_set.end());

    // residues (alpha, beta, gamma) = (c_i, 2a_i, -b_i)/(u - r_i); the
    // gamma-residues sum to zero so the diagonal section cuts a degree-d
    // foliation and {z=0} carries a simple pole from alpha, beta only
    struct Res {
      Rational a, b, c;
    };
    std::vector<Res> res(d);
    Rational sum_b(0), sum_a(0);
    for (int i = 0; i + 1 < d; ++i) {
      res[i] = {gen.small(3, 2), gen.small(3, 2), gen.small(3, 2)};
      sum_b += res[i].b;
      sum_a += res[i].a;
    }
    // pin the trace sum so the component at infinity has quotient +-1/3
    res[d - 1] = {rat(1, 6) - sum_a, -sum_b, gen.small(3, 2)};

    auto integer_quotient = [](const Rational &disc) {
      if (sgn(disc) == 0)
        return true;
      auto s = exact_sqrt(disc);
      return s.has_value() && is_integer(*s);
    };
    bool generic = true;
    for (const auto &r : res) {
      // lambda^2 = 4(a^2 + bc): reject zero and integer quotients so every
      // affine component is already minimal
      if (integer_quotient(4 * (r.a * r.a + r.b * r.c)) || sgn(r.c) == 0) {
        generic = false;
        break;
      }
    }
    if (!generic)
      continue;

    // one-variable Fuchsian triple over the pencil base
    RationalFunction a1(uv), b1(uv), g1(uv);
    for (int i = 0; i < d; ++i) {
      RationalFunction pole =
          (ux - RationalFunction::constant(uv, poles[i])).inverse();
      a1 = a1 + pole * res[i].c;
      b1 = b1 + pole * (res[i].a * 2);
      g1 = g1 + pole * (-res[i].b);
    }

    // pencil of lines through [0:1:0]: (x, y) -> x, fibers x = r_i
    RationalMap pencil(xy, uv,
                       {RationalFunction(Polynomial::variable(xy, 0))});
    OneForm alpha = pullback(pencil, OneForm(uv, {a1}));
    OneForm beta = pullback(pencil, OneForm(uv, {b1}));
    OneForm gamma = pullback(pencil, OneForm(uv, {g1}));

    std::vector<FactorList::Entry> line_entries;
    for (int i = 0; i < d; ++i) {
      Polynomial line = Polynomial::variable(xy, 0) -
                        Polynomial::constant(xy, poles[i]);
      line_entries.push_back({line.monic(), 1});
    }

    // the foliation is cut out by the diagonal section sigma = [1 : y];
    // normalizing sigma to [1:0] would need the shear [[1,0],[-y,1]], which
    // is an elementary modification over the line at infinity and raises
    // deg(P)inf by one — so the diagonal representative is kept
    ProjectiveTriple triple;
    try {
      triple = ProjectiveTriple(alpha, beta, gamma, FactorList(line_entries),
                                true);
    } catch (const ContractError &) {
      continue;
    }
    Section sigma(Polynomial::constant(xy, Rational(1)),
                  Polynomial::variable(xy, 1));

    BranchResult br;
    try {
      br = branch_divisor(triple, sigma);
    } catch (const ContractError &) {
      continue;
    }
    if (!br.branch.empty())
      continue; // tangency in codimension one: resample
    PolarDivisor pd = polar_divisor(triple);
    if (static_cast<int>(pd.size()) != d)
      continue;
    bool simple = true;
    for (const auto &c : pd)
      if (c.multiplicity != 1 || c.component.total_degree() != 1)
        simple = false;
    if (!simple)
      continue;

    PlaneFoliation fol = homogenize_affine(br.foliation_form);
    long deg;
    try {
      deg = foliation_degree(fol, seed ^ 0x9e3779b97f4a7c15ull);
      // full polar degree including the line at infinity
      if (structure_polar_degree(triple, seed ^ 0xa5a5a5a5ull) != d + 1)
        continue;
    } catch (const BudgetError &) {
      continue;
    }
    if (deg != d)
      continue;

    RiccatiExample out{std::move(fol), std::move(triple), std::move(sigma),
                       {}, poles, seed};
    // homogeneous equations of the d+1 invariant pole lines: x = r_i z and
    // the pencil member at infinity {z = 0}
    for (int i = 0; i < d; ++i) {
      Polynomial hline = Polynomial::variable(xyz, 0) -
                         Polynomial::variable(xyz, 2) * poles[i];
      out.pole_lines.push_back(hline.monic());
    }
    out.pole_lines.push_back(Polynomial::variable(xyz, 2));
    return out;
  }
  throw BudgetError("generate_riccati_example: seed exhausts the genericity "
                    "budget");
}

} // namespace triforms
