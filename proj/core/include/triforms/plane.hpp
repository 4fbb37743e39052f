#ifndef TRIFORMS_PLANE_HPP
#define TRIFORMS_PLANE_HPP

#include <triforms/elementary.hpp>
#include <triforms/triple.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace triforms {

// Foliation of P^2 given by a homogeneous 1-form A dx + B dy + C dz with
// coefficients of equal degree, Euler contraction xA + yB + zC = 0 and
// gcd(A, B, C) = 1.
class PlaneFoliation {
public:
  PlaneFoliation(Polynomial a, Polynomial b, Polynomial c);

  const Polynomial &a() const { return a_; }
  const Polynomial &b() const { return b_; }
  const Polynomial &c() const { return c_; }
  const Vars &vars() const { return a_.vars(); } // (x, y, z)

  long coefficient_degree() const { return a_.total_degree(); }

  // Affine restriction: chart 'z' sets z=1 (variables x, y); chart 'x' sets
  // x=1 (variables y, z).
  OneForm affine_chart(char chart) const;

  std::string to_string() const;

private:
  Polynomial a_, b_, c_;
};

// Homogenization of an affine polynomial-coefficient form from the z-chart.
PlaneFoliation homogenize_affine(const OneForm &w);

struct EccentricityReport {
  long deg_polar = 0;
  long deg_foliation = 0;
  long eccentricity = 0;
};

EccentricityReport eccentricity(long deg_polar, long deg_foliation);

// Degree = number of tangencies with a general line, computed as the degree
// of the tangency polynomial on random rational lines; three independent
// lines must agree (resampled up to the budget).
long foliation_degree(const PlaneFoliation &f, std::uint64_t seed,
                      int resample_budget = 32);

// Exact ideal test: w ^ dc = 0 mod c.
bool invariant_curve_test(const PlaneFoliation &f, const Polynomial &curve);

// One logarithmic term c * dT/T of a candidate derivative.
struct LogTerm {
  Rational coefficient;
  Polynomial divisor; // homogeneous in (x, y, z)
};

// Exact identity d(omega) = eta ^ omega in one affine chart.
bool verify_log_derivative(const OneForm &omega, const OneForm &eta);

// Both charts (z=1 and x=1) of the projective identity with a logarithmic
// eta = sum c_i dT_i/T_i.
bool verify_log_derivative(const PlaneFoliation &f,
                           const std::vector<LogTerm> &eta);

// Restriction of a plane structure to a parametrized line.
struct LineRestriction {
  OneForm alpha, beta, gamma; // one-variable forms
  PolarDivisor finite_polar;  // squarefree pieces with multiplicities
  int infinity_order = 0;     // pole order at the line's point at infinity
  long polar_degree = 0;      // with multiplicity, infinity included
};

LineRestriction restrict_structure_to_line(const ProjectiveTriple &t,
                                           const RationalMap &line);

struct RiccatiExample {
  PlaneFoliation foliation;
  ProjectiveTriple triple; // z=1 chart
  Section sigma;           // the diagonal section [1 : y]
  std::vector<Polynomial> pole_lines; // homogeneous equations x - p_i z
  std::vector<Rational> pole_points;  // the d+1 pencil parameters
  std::uint64_t seed = 0;
};

// deg(P)inf of a plane structure: polar degree of the restriction to a
// generic line (three independent lines must agree), counting the line's
// point at infinity.
long structure_polar_degree(const ProjectiveTriple &t, std::uint64_t seed,
                            int resample_budget = 32);

// Degree-d foliation with l(p) = d at the pencil center: a one-variable
// Fuchsian triple with d affine poles plus the pencil line at infinity,
// pulled back under the pencil map and cut by the diagonal section.
RiccatiExample generate_riccati_example(int d, std::uint64_t seed,
                                        int resample_budget = 32);

} // namespace triforms

#endif
