#ifndef TRIFORMS_TRIPLE_HPP
#define TRIFORMS_TRIPLE_HPP

#include <triforms/factor_list.hpp>
#include <triforms/forms.hpp>
#include <triforms/linear_solve.hpp>
#include <triforms/quadext.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace triforms {

// 2x2 matrices over the function field and over 1-forms.
using FunctionMatrix = std::array<std::array<RationalFunction, 2>, 2>;
using FormMatrix = std::array<std::array<OneForm, 2>, 2>;

RationalFunction det(const FunctionMatrix &m);
FunctionMatrix inverse(const FunctionMatrix &m);
FunctionMatrix identity_matrix(const Vars &chart);

struct IntegrabilityReport {
  bool ok = false;
  TwoForm residual_alpha, residual_beta, residual_gamma;
};

// The triple relations: d(alpha) = alpha^beta, d(beta) = 2 alpha^gamma,
// d(gamma) = beta^gamma.
IntegrabilityReport check_integrability(const OneForm &alpha,
                                        const OneForm &beta,
                                        const OneForm &gamma);

struct PolarComponent {
  Polynomial component;
  int multiplicity;
};
using PolarDivisor = std::vector<PolarComponent>;

long polar_degree(const PolarDivisor &d);
bool polar_equal(const PolarDivisor &a, const PolarDivisor &b);
// a - b effective: every component of b appears in a with >= multiplicity.
bool polar_dominates(const PolarDivisor &a, const PolarDivisor &b);
std::string polar_to_string(const PolarDivisor &d);

// Meromorphic section [s1 : s2] of the trivialized bundle, stored as a
// reduced polynomial pair.
class Section {
public:
  Section() = default;
  Section(const RationalFunction &s1, const RationalFunction &s2);
  Section(Polynomial s1, Polynomial s2);

  static Section infinity(const Vars &chart); // [1 : 0]
  static Section zero(const Vars &chart);     // [0 : 1]

  const Polynomial &s1() const { return s1_; }
  const Polynomial &s2() const { return s2_; }
  const Vars &chart() const { return s1_.vars(); }

  Section transformed(const FunctionMatrix &m) const;
  bool proportional_to(const Section &o) const;
  // Equality of the classes mod f (sections over a component agree on it).
  bool same_on_curve(const Section &o, const Polynomial &f) const;

  std::string to_string() const;

private:
  void reduce();
  Polynomial s1_, s2_;
};

// The central object. Construction validates the declared pole support and
// (optionally) the integrability relations.
class ProjectiveTriple {
public:
  ProjectiveTriple() = default;
  ProjectiveTriple(OneForm alpha, OneForm beta, OneForm gamma,
                   FactorList declared_poles, bool require_integrable = true);

  // Declared support recomputed from the coefficient denominators (used by
  // operations that create new components).
  static ProjectiveTriple with_inferred_poles(OneForm alpha, OneForm beta,
                                              OneForm gamma,
                                              bool require_integrable = true);

  const OneForm &alpha() const { return alpha_; }
  const OneForm &beta() const { return beta_; }
  const OneForm &gamma() const { return gamma_; }
  const FactorList &declared_poles() const { return declared_; }
  const Vars &chart() const { return alpha_.chart(); }

  IntegrabilityReport integrability() const {
    return check_integrability(alpha_, beta_, gamma_);
  }

  // Trace-free connection matrix [[-beta/2, -gamma], [alpha, beta/2]].
  FormMatrix connection() const;

  bool operator==(const ProjectiveTriple &o) const {
    return alpha_ == o.alpha_ && beta_ == o.beta_ && gamma_ == o.gamma_;
  }
  bool operator!=(const ProjectiveTriple &o) const { return !(*this == o); }

  std::string to_string() const;
  std::uint64_t canonical_hash() const;

private:
  OneForm alpha_, beta_, gamma_;
  FactorList declared_;
};

// Flatness dA + A^A = 0, entrywise.
bool connection_flat(const FormMatrix &a);

// Display form of the Riccati equation in both fiber charts.
struct RiccatiForm {
  // chart z = z2/z1: dz + alpha + beta z + gamma z^2 = 0
  // chart w = z1/z2: dw - gamma - beta w - alpha w^2 = 0
  OneForm alpha, beta, gamma;
  std::string to_string() const;
};
RiccatiForm riccati_form(const ProjectiveTriple &t);

PolarDivisor polar_divisor(const ProjectiveTriple &t);

// Invariance of pi^{-1}({f=0}): all three scaled forms f^k alpha, f^k beta,
// f^k gamma pull back to zero on the curve. f must be a declared component.
bool component_invariant(const ProjectiveTriple &t, const Polynomial &f);

struct CurveSection {
  Polynomial s1, s2; // representative mod f, reduced
  std::string to_string() const;
};

struct ComponentData {
  Polynomial component;
  int multiplicity = 0;
  bool invariant = false;
  // df-trivialized singular-section quadratic (invariant components):
  // q = g_alpha z1^2 + g_beta z1 z2 + g_gamma z2^2 on the curve.
  std::optional<std::array<RationalFunction, 3>> section_quadratic;
  // lambda^2, when constant on the curve (lambda = difference of residue
  // eigenvalues; the two branches carry +lambda and -lambda).
  std::optional<Rational> disc_constant;
  int section_count = 0;
  std::vector<CurveSection> sections; // rational representatives when known
  bool sections_rational = true;
  ExponentValue exponent_plus, exponent_minus; // residue eigenvalues +-mu, k=1
};

ComponentData component_data(const ProjectiveTriple &t, const Polynomial &f);

// A' = M A M^{-1} + dM M^{-1} followed by trace-free renormalization.
ProjectiveTriple gauge_transform(const ProjectiveTriple &t,
                                 const FunctionMatrix &m);

struct BranchResult {
  FactorList branch;      // removed codimension-one zero divisor
  OneForm foliation_form; // reduced polynomial-coefficient form defining F
  OneForm sigma_omega;    // raw pullback sigma^* Omega
};

// sigma^* Omega = s1 ds2 - s2 ds1 + alpha s1^2 + beta s1 s2 + gamma s2^2.
BranchResult branch_divisor(const ProjectiveTriple &t, const Section &sigma);

ProjectiveTriple pullback_triple(const ProjectiveTriple &t,
                                 const RationalMap &phi);

// The constant value of r on the smooth curve {f=0}, when r is constant
// there (exact linear-ansatz decision).
std::optional<Rational> constant_on_curve(const RationalFunction &r,
                                          const Polynomial &f);

// Multiplicity of f in the polar divisor (0 when absent); f need not be
// declared.
int component_multiplicity(const ProjectiveTriple &t, const Polynomial &f);

// Coefficient functions of f^k * (alpha, beta, gamma): [form][chart var].
std::array<std::array<RationalFunction, 2>, 3>
scaled_coefficients(const ProjectiveTriple &t, const Polynomial &f, int k);

// Both coefficients of the covector vanish mod f.
bool covector_vanishes_on_curve(const std::array<RationalFunction, 2> &c,
                                const Polynomial &f);

} // namespace triforms

#endif
