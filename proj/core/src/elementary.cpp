#include <triforms/elementary.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace triforms {

namespace {

constexpr int kNegInf = std::numeric_limits<int>::min() / 2;

// max signed order (pole minus zero) over the nonzero coefficients
int form_order(const OneForm &w, const Polynomial &f) {
  int o = kNegInf;
  for (const auto &c : w.coeffs())
    if (!c.is_zero())
      o = std::max(o, signed_order(c, f));
  return o;
}

std::vector<Exponents> monomials_up_to(const Vars &vars, long deg) {
  std::vector<Exponents> out;
  Exponents cur(vars.size(), 0);
  auto rec = [&](auto &&self, std::size_t i, long remaining) -> void {
    if (i == vars.size()) {
      out.push_back(cur);
      return;
    }
    for (long e = 0; e <= remaining; ++e) {
      cur[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, remaining - e);
    }
    cur[i] = 0;
  };
  if (deg >= 0)
    rec(rec, 0, deg);
  return out;
}

Polynomial monomial(const Vars &vars, const Exponents &e) {
  Polynomial p(vars);
  p.add_term(e, Rational(1));
  return p;
}

// Solve a = w*b + q*f exactly with deg w <= dw (w is the value of interest).
std::optional<Polynomial> divide_mod(const Polynomial &a, const Polynomial &b,
                                     const Polynomial &f, long dw) {
  const Vars &vars = f.vars();
  std::vector<Exponents> wmonos = monomials_up_to(vars, dw);
  long dq = std::max(a.total_degree(), dw + b.total_degree()) -
            f.total_degree();
  std::vector<Exponents> qmonos = monomials_up_to(vars, dq);

  std::map<Exponents, std::size_t> rows;
  auto row_of = [&](const Exponents &e) {
    auto [it, inserted] = rows.emplace(e, rows.size());
    return it->second;
  };
  for (const auto &[e, c] : a.terms())
    row_of(e);
  struct Cell {
    std::size_t row, col;
    Rational value;
  };
  std::vector<Cell> cells;
  for (std::size_t m = 0; m < wmonos.size(); ++m) {
    for (const auto &[e, c] : b.terms()) {
      Exponents s = e;
      for (std::size_t i = 0; i < s.size(); ++i)
        s[i] += wmonos[m][i];
      cells.push_back({row_of(s), m, c});
    }
  }
  for (std::size_t m = 0; m < qmonos.size(); ++m) {
    for (const auto &[e, c] : f.terms()) {
      Exponents s = e;
      for (std::size_t i = 0; i < s.size(); ++i)
        s[i] += qmonos[m][i];
      cells.push_back({row_of(s), wmonos.size() + m, c});
    }
  }
  QMatrix mat(rows.size(), wmonos.size() + qmonos.size());
  std::vector<Rational> rhs(rows.size(), Rational(0));
  for (const auto &[e, c] : a.terms())
    rhs[rows[e]] = c;
  for (const auto &cell : cells)
    mat.at(cell.row, cell.col) += cell.value;
  auto x = solve_linear(std::move(mat), std::move(rhs));
  if (!x)
    return std::nullopt;
  Polynomial w(vars);
  for (std::size_t m = 0; m < wmonos.size(); ++m)
    w.add_term(wmonos[m], (*x)[m]);
  Polynomial diff = a - w * b;
  if (!diff.is_zero() && !diff.divisible_by(f))
    return std::nullopt;
  return w;
}

OneForm dlog(const Polynomial &f) {
  RationalFunction rf(f);
  return OneForm::d(rf) * rf.inverse();
}

FunctionMatrix swap_matrix(const Vars &chart) {
  FunctionMatrix m;
  m[0][0] = RationalFunction(chart);
  m[0][1] = RationalFunction::constant(chart, Rational(1));
  m[1][0] = RationalFunction::constant(chart, Rational(1));
  m[1][1] = RationalFunction(chart);
  return m;
}

bool matrix_is_identity(const FunctionMatrix &m) {
  return m[0][0].is_constant() && m[0][0].constant_value() == 1 &&
         m[1][1].is_constant() && m[1][1].constant_value() == 1 &&
         m[0][1].is_zero() && m[1][0].is_zero();
}

void validate_move(const ElementaryMove &move) {
  if (move.component.is_constant())
    throw ContractError("elementary move on a constant component");
  RationalFunction d = det(move.mobius);
  if (d.is_zero())
    throw ContractError("center matrix is singular");
  if (!d.is_constant())
    throw ContractError("center matrix must have constant determinant");
}

} // namespace

ElementaryMove move_to_center(const Polynomial &f, const Section &center,
                              int degree_budget) {
  const Vars &chart = center.chart();
  Polynomial fr = squarefree_part(f);
  bool z1 = center.s1().is_zero() || center.s1().divisible_by(fr);
  bool z2 = center.s2().is_zero() || center.s2().divisible_by(fr);
  if (z1 && z2)
    throw ContractError("center section degenerates to [0:0] on the curve");
  if (z2) // center = [1:0] on the curve
    return ElementaryMove{fr, identity_matrix(chart)};
  if (z1) // center = [0:1]
    return ElementaryMove{fr, swap_matrix(chart)};
  // generic: find polynomial w with s1 = w*s2 mod f; M = [[0,1],[1,-w]]
  for (long dw = 0; dw <= degree_budget; ++dw) {
    auto w = divide_mod(center.s1(), center.s2(), fr, dw);
    if (!w)
      continue;
    FunctionMatrix m;
    m[0][0] = RationalFunction(chart);
    m[0][1] = RationalFunction::constant(chart, Rational(1));
    m[1][0] = RationalFunction::constant(chart, Rational(1));
    m[1][1] = -RationalFunction(*w);
    return ElementaryMove{fr, m};
  }
  throw ContractError(
      "no polynomial Möbius normalization for center " + center.to_string() +
      " over " + fr.to_string() + " within the degree budget");
}

std::string pole_case_name(PoleCase c) {
  switch (c) {
  case PoleCase::Case1:
    return "case-1";
  case PoleCase::Case2:
    return "case-2";
  case PoleCase::Case3:
    return "case-3";
  case PoleCase::NewComponent:
    return "new-component";
  }
  return "?";
}

PoleChange classify_pole_change(const ProjectiveTriple &t,
                                const ElementaryMove &move) {
  validate_move(move);
  const Polynomial &f = move.component;
  ProjectiveTriple u = matrix_is_identity(move.mobius)
                           ? t
                           : gauge_transform(t, move.mobius);
  PoleChange out;
  out.before = component_multiplicity(u, f);

  // exact single-move law: orders of alpha/F, beta + dF/F, F gamma
  int oa = form_order(u.alpha(), f);
  int og = form_order(u.gamma(), f);
  OneForm h = u.beta() + dlog(f);
  int oh = form_order(h, f);
  int predicted = 0;
  if (oa != kNegInf)
    predicted = std::max(predicted, oa + 1);
  if (oh != kNegInf)
    predicted = std::max(predicted, oh);
  if (og != kNegInf)
    predicted = std::max(predicted, og - 1);
  out.predicted = predicted;

  int k = out.before;
  if (k == 0) {
    out.tag = PoleCase::NewComponent;
    out.detail = "component enters the polar divisor";
    return out;
  }
  auto sc = scaled_coefficients(u, f, k);
  bool a_vanishes = covector_vanishes_on_curve(sc[0], f);
  bool b_vanishes = covector_vanishes_on_curve(sc[1], f);
  std::ostringstream detail;
  if (!a_vanishes) {
    out.tag = PoleCase::Case1;
    detail << "center off the singular locus: (Omega~)inf = (Omega)inf + H";
  } else if (!b_vanishes) {
    out.tag = PoleCase::Case2;
    if (k >= 2)
      detail << "k>=2: polar divisor unchanged";
    else
      detail << (out.predicted < k ? "beta + dF/F holomorphic: -H"
                                   : "polar divisor unchanged");
  } else {
    out.tag = PoleCase::Case3;
    if (k == 1)
      detail << "k=1: polar divisor unchanged";
    else
      detail << "k>=2: drop to " << out.predicted
             << " (one multiplicity step per move)";
  }
  out.detail = detail.str();
  return out;
}

ProjectiveTriple elm(const ProjectiveTriple &t, const ElementaryMove &move) {
  validate_move(move);
  ProjectiveTriple u = matrix_is_identity(move.mobius)
                           ? t
                           : gauge_transform(t, move.mobius);
  const Polynomial &f = move.component;
  RationalFunction rf(f);
  OneForm alpha = u.alpha() * rf.inverse();
  OneForm beta = u.beta() + dlog(f);
  OneForm gamma = u.gamma() * rf;
  return ProjectiveTriple::with_inferred_poles(
      std::move(alpha), std::move(beta), std::move(gamma), true);
}

Section transport(const Section &s, const ElementaryMove &move) {
  Section conj = s.transformed(move.mobius);
  // image under (x, [z1 : z2]) -> (x, [F z1 : z2])
  return Section(conj.s1() * move.component, conj.s2());
}

bool replay(const ReductionTranscript &transcript) {
  ProjectiveTriple cur = transcript.initial;
  for (const auto &step : transcript.steps)
    cur = elm(cur, step.move);
  return cur == transcript.final;
}

// ---------------------------------------------------------------------------
// component reduction
// ---------------------------------------------------------------------------

namespace {

struct Residue {
  RationalFunction r00, r01, r10, r11;
};

Residue residue_matrix(const std::array<RationalFunction, 3> &g) {
  // A = [[-beta/2, -gamma], [alpha, beta/2]] trivialized along df/f
  Residue r;
  r.r00 = g[1] * Rational(-1, 2);
  r.r01 = -g[2];
  r.r10 = g[0];
  r.r11 = g[1] * Rational(1, 2);
  return r;
}

bool is_eigenvector(const Residue &r, const CurveSection &v,
                    const Rational &mu, const Polynomial &f,
                    const Vars &chart) {
  RationalFunction s1(v.s1), s2(v.s2);
  RationalFunction m = RationalFunction::constant(chart, mu);
  RationalFunction e1 = r.r00 * s1 + r.r01 * s2 - m * s1;
  RationalFunction e2 = r.r10 * s1 + r.r11 * s2 - m * s2;
  return on_curve_zero(e1, f) && on_curve_zero(e2, f);
}

void record_step(std::vector<TranscriptStep> &steps, const ElementaryMove &mv,
                 std::string tag, const ProjectiveTriple &after,
                 Section *sigma) {
  TranscriptStep st;
  st.move = mv;
  st.tag = std::move(tag);
  st.polar_after = polar_divisor(after);
  if (sigma)
    st.sigma_after = *sigma;
  steps.push_back(std::move(st));
}

void apply_move(ProjectiveTriple &t, Section *sigma, const ElementaryMove &mv) {
  t = elm(t, mv);
  if (sigma)
    *sigma = transport(*sigma, mv);
}

} // namespace

std::pair<ProjectiveTriple, std::vector<TranscriptStep>>
reduce_component(const ProjectiveTriple &t, const Polynomial &f,
                 Section *sigma, const ReduceOptions &opts) {
  ProjectiveTriple cur = t;
  std::vector<TranscriptStep> steps;
  Polynomial comp = squarefree_part(f);
  int guard = 0;
  for (;;) {
    if (++guard > opts.lambda_cap)
      throw BudgetError("reduce_component iteration cap exceeded on " +
                        comp.to_string());
    int k = component_multiplicity(cur, comp);
    if (k == 0)
      break; // component left the polar divisor
    ComponentData cd = component_data(cur, comp);

    if (!cd.invariant) {
      // (a) unique holomorphic section; each move decrements k
      if (cd.section_count != 1)
        throw ContractError("non-invariant component with several singular "
                            "sections (unexpected)");
      if (!cd.sections_rational || cd.sections.empty())
        throw NeedsExtensionError(
            "singular section of non-invariant component is not rational");
      ElementaryMove mv = move_to_center(
          comp, Section(cd.sections[0].s1, cd.sections[0].s2),
          opts.mobius_degree_budget);
      apply_move(cur, sigma, mv);
      record_step(steps, mv, "non-invariant-decrement", cur, sigma);
      int k2 = component_multiplicity(cur, comp);
      if (k2 >= k)
        throw ContractError(
            "non-invariant component failed to decrement (k=" +
            std::to_string(k) + " -> " + std::to_string(k2) + ")");
      continue;
    }

    if (k == 1) {
      if (cd.section_count == 1)
        break; // (d) one section: elm preserves k, already minimal
      // (b)/(c): two sections, quotients +-lambda with lambda^2 = disc
      if (!cd.disc_constant) {
        // two-valued with non-constant branch data: a branch choice is not
        // available over Q
        throw NeedsExtensionError(
            "two-valued singular section without rational branch data on " +
            comp.to_string());
      }
      auto lambda = exact_sqrt(*cd.disc_constant);
      if (!lambda || !is_integer(*lambda) || sgn(*lambda) == 0)
        break; // (b) quotient not a (nonzero) integer: minimal
      if (!cd.sections_rational || cd.sections.size() != 2)
        throw NeedsExtensionError("integer quotient with non-rational "
                                  "sections (unexpected)");
      // (c) chain step at the branch with quotient +m (eigenvalue +m/2)
      Rational m = abs(*lambda);
      Rational mu = m / 2;
      Residue res = residue_matrix(*cd.section_quadratic);
      const CurveSection *plus = nullptr;
      for (const auto &s : cd.sections)
        if (is_eigenvector(res, s, mu, comp, cur.chart())) {
          plus = &s;
          break;
        }
      if (!plus)
        throw ContractError("no branch with positive integer quotient found");
      ElementaryMove mv = move_to_center(comp, Section(plus->s1, plus->s2),
                                         opts.mobius_degree_budget);
      apply_move(cur, sigma, mv);
      record_step(steps, mv, "lambda-chain", cur, sigma);
      continue;
    }

    // k > 1, invariant
    if (cd.section_count == 2)
      break; // (e) saddle-node transverse type: stable
    // (f) one section: trial move decides degenerate vs nilpotent
    if (!cd.sections_rational || cd.sections.empty())
      throw NeedsExtensionError("singular section not rational on " +
                                comp.to_string());
    ElementaryMove mv = move_to_center(
        comp, Section(cd.sections[0].s1, cd.sections[0].s2),
        opts.mobius_degree_budget);
    ProjectiveTriple trial = elm(cur, mv);
    if (component_multiplicity(trial, comp) < k) {
      // degenerate transverse type: keep the move
      cur = trial;
      if (sigma)
        *sigma = transport(*sigma, mv);
      record_step(steps, mv, "case-3", cur, sigma);
      continue;
    }
    break; // nilpotent: multiplicity stable under elm, leave untouched
  }
  return {cur, std::move(steps)};
}

bool polar_minimal(const ProjectiveTriple &t, const ReduceOptions &opts) {
  for (const auto &c : polar_divisor(t)) {
    auto [reduced, steps] = reduce_component(t, c.component, nullptr, opts);
    if (!steps.empty())
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

namespace {

// singular sections over f that the section sigma meets (class equality)
bool sigma_in_singular_locus(const ProjectiveTriple &t, const Polynomial &f,
                             const Section &sigma) {
  ComponentData cd = component_data(t, f);
  if (!cd.sections_rational) {
    // irrational singular sections cannot coincide with the rational sigma
    return false;
  }
  Section sig = sigma;
  for (const auto &s : cd.sections) {
    if (sig.same_on_curve(Section(s.s1, s.s2), f))
      return true;
  }
  return false;
}

} // namespace

NormalizeResult normalize(const ProjectiveTriple &t, const Section &sigma,
                          const ReduceOptions &opts) {
  NormalizeResult out;
  out.transcript.initial = t;
  out.transcript.sigma_initial = sigma;
  out.transcript.initial_polar = polar_divisor(t);

  ProjectiveTriple cur = t;
  Section sig = sigma;
  std::vector<TranscriptStep> steps;

  // sigma must be generically transverse
  branch_divisor(cur, sig);

  // phase 1: minimize every polar component (may trade polar multiplicity
  // into branch tangency of the transported sigma; the union of supports
  // never gains components)
  for (;;) {
    bool phase1_changed = false;
    for (const auto &c : polar_divisor(cur)) {
      auto [next, s] = reduce_component(cur, c.component, &sig, opts);
      if (!s.empty()) {
        cur = next;
        phase1_changed = true;
        for (auto &st : s)
          steps.push_back(std::move(st));
        break; // recompute the component list after any change
      }
      cur = next;
    }
    if (!phase1_changed)
      break;
  }

  // phase 2: absorb codimension-one branch components by elementary moves
  // centered at sigma, iterating until sigma leaves the singular locus.
  // No re-minimization afterwards: an absorbed component is in general not
  // removable without re-creating the branch tangency.
  for (int round = 0;; ++round) {
    if (round >= opts.rounds_cap)
      throw BudgetError("normalize absorption rounds cap exceeded");
    BranchResult br = branch_divisor(cur, sig);
    if (br.branch.empty())
      break;
    for (const auto &entry : br.branch.entries()) {
      Polynomial g = entry.factor.monic();
      int absorb_iter = 0;
      for (;;) {
        if (++absorb_iter > opts.absorption_cap)
          throw BudgetError("branch absorption cap exceeded on " +
                            g.to_string());
        // center = sigma restricted over {g=0}
        ElementaryMove mv = move_to_center(g, sig, opts.mobius_degree_budget);
        apply_move(cur, &sig, mv);
        record_step(steps, mv, "branch-absorption", cur, &sig);
        // done when sigma leaves the singular locus over g (case (2))
        if (component_multiplicity(cur, g) == 0)
          break;
        if (!sigma_in_singular_locus(cur, g, sig))
          break;
      }
    }
  }

  // final check: branch locus has codimension >= 2 now
  BranchResult final_branch = branch_divisor(cur, sig);
  if (!final_branch.branch.empty())
    throw BudgetError("normalize ended with a codimension-one branch locus");

  out.triple = cur;
  out.sigma = sig;
  out.transcript.steps = std::move(steps);
  out.transcript.final = cur;
  out.transcript.final_polar = polar_divisor(cur);
  return out;
}

// ---------------------------------------------------------------------------
// normal-form comparison
// ---------------------------------------------------------------------------

namespace {

struct ComponentSummary {
  Polynomial component;
  int multiplicity;
  bool invariant;
  int section_count;
  std::optional<Rational> disc;
};

std::vector<ComponentSummary> summarize(const ProjectiveTriple &t) {
  std::vector<ComponentSummary> out;
  for (const auto &c : polar_divisor(t)) {
    ComponentData cd = component_data(t, c.component);
    out.push_back({cd.component, cd.multiplicity, cd.invariant,
                   cd.section_count, cd.disc_constant});
  }
  return out;
}

} // namespace

CompareResult compare_normal_forms(const ProjectiveTriple &t1,
                                   const ProjectiveTriple &t2,
                                   const Section &sigma1,
                                   const Section &sigma2, int degree_bound) {
  CompareResult out;
  if (!polar_minimal(t1) || !polar_minimal(t2))
    throw ContractError("compare_normal_forms: inputs are not in normal form");
  if (!branch_divisor(t1, sigma1).branch.empty() ||
      !branch_divisor(t2, sigma2).branch.empty())
    throw ContractError("compare_normal_forms: branch locus has codimension "
                        "one");

  auto s1 = summarize(t1), s2 = summarize(t2);
  if (s1.size() != s2.size()) {
    out.verdict = CompareResult::Verdict::Distinct;
    out.detail = "different numbers of polar components";
    return out;
  }
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (s1[i].component != s2[i].component ||
        s1[i].multiplicity != s2[i].multiplicity) {
      out.verdict = CompareResult::Verdict::Distinct;
      out.detail = "polar divisors differ";
      return out;
    }
    if (s1[i].invariant != s2[i].invariant ||
        s1[i].section_count != s2[i].section_count ||
        !(s1[i].disc == s2[i].disc)) {
      out.verdict = CompareResult::Verdict::Distinct;
      out.detail = "component invariants differ on " +
                   s1[i].component.to_string();
      return out;
    }
  }

  const Vars &chart = t1.chart();
  FormMatrix a1 = t1.connection(), a2 = t2.connection();
  RationalSampler combo_gen(0x7439a1b2c3d4e5f6ull); // fixed seed, deterministic
  for (int deg = 0; deg <= degree_bound; ++deg) {
    std::vector<Exponents> monos = monomials_up_to(chart, deg);
    std::size_t per = monos.size();
    std::size_t unknowns = 4 * per;
    // slots: (i, j, chart var) -> linear form over the unknowns
    std::vector<std::vector<RationalFunction>> cols(
        8, std::vector<RationalFunction>(unknowns, RationalFunction(chart)));
    auto slot = [&](int i, int j, int v) { return (i * 2 + j) * 2 + v; };
    for (int i0 = 0; i0 < 2; ++i0) {
      for (int j0 = 0; j0 < 2; ++j0) {
        for (std::size_t m = 0; m < per; ++m) {
          std::size_t u = (i0 * 2 + j0) * per + m;
          Polynomial xnu = monomial(chart, monos[m]);
          RationalFunction xr(xnu);
          // dM contribution
          OneForm dm = OneForm::d(xr);
          for (int v = 0; v < 2; ++v)
            cols[slot(i0, j0, v)][u] = cols[slot(i0, j0, v)][u] + dm.coeff(v);
          // M A1: entry (i0, j) gains x^nu * A1[j0][j]
          for (int j = 0; j < 2; ++j)
            for (int v = 0; v < 2; ++v)
              cols[slot(i0, j, v)][u] =
                  cols[slot(i0, j, v)][u] + xr * a1[j0][j].coeff(v);
          // -A2 M: entry (i, j0) loses A2[i][i0] * x^nu
          for (int i = 0; i < 2; ++i)
            for (int v = 0; v < 2; ++v)
              cols[slot(i, j0, v)][u] =
                  cols[slot(i, j0, v)][u] - xr * a2[i][i0].coeff(v);
        }
      }
    }
    // assemble rows: clear denominators per slot, expand by monomial
    std::vector<std::vector<Polynomial>> polys(8);
    for (int s = 0; s < 8; ++s) {
      Polynomial l = Polynomial::constant(chart, Rational(1));
      for (const auto &c : cols[s])
        if (!c.is_zero())
          l = *(l * c.den()).divide_exact(gcd(l, c.den()));
      polys[s].reserve(unknowns);
      for (const auto &c : cols[s])
        polys[s].push_back((c * RationalFunction(l)).as_polynomial());
    }
    std::map<std::pair<int, Exponents>, std::size_t> rows;
    for (int s = 0; s < 8; ++s)
      for (const auto &p : polys[s])
        for (const auto &[e, c] : p.terms())
          rows.emplace(std::make_pair(s, e), rows.size());
    QMatrix mat(rows.size(), unknowns);
    for (int s = 0; s < 8; ++s)
      for (std::size_t u = 0; u < unknowns; ++u)
        for (const auto &[e, c] : polys[s][u].terms())
          mat.at(rows[{s, e}], u) += c;
    auto basis = nullspace(std::move(mat));
    if (basis.empty())
      continue;

    auto build = [&](const std::vector<Rational> &coeffs) {
      FunctionMatrix m;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Polynomial p(chart);
          for (std::size_t k = 0; k < per; ++k)
            p.add_term(monos[k], coeffs[(i * 2 + j) * per + k]);
          m[i][j] = RationalFunction(p);
        }
      return m;
    };
    auto try_candidate = [&](const std::vector<Rational> &coeffs)
        -> std::optional<FunctionMatrix> {
      FunctionMatrix m = build(coeffs);
      RationalFunction d = det(m);
      if (d.is_zero() || !d.is_constant())
        return std::nullopt;
      if (gauge_transform(t1, m) == t2)
        return m;
      return std::nullopt;
    };
    for (const auto &vec : basis) {
      if (auto m = try_candidate(vec)) {
        out.verdict = CompareResult::Verdict::Isomorphic;
        out.witness = *m;
        out.detail = "witness of ansatz degree " + std::to_string(deg);
        return out;
      }
    }
    for (int tries = 0; tries < 24; ++tries) {
      std::vector<Rational> combo(unknowns, Rational(0));
      for (const auto &vec : basis) {
        Rational c = combo_gen.small(3, 1);
        for (std::size_t u = 0; u < unknowns; ++u)
          combo[u] += c * vec[u];
      }
      if (auto m = try_candidate(combo)) {
        out.verdict = CompareResult::Verdict::Isomorphic;
        out.witness = *m;
        out.detail = "witness of ansatz degree " + std::to_string(deg);
        return out;
      }
    }
  }
  out.verdict = CompareResult::Verdict::Inconclusive;
  out.detail = "invariants agree; no witness within the degree bound";
  return out;
}

} // namespace triforms
