#ifndef TRIFORMS_ELEMENTARY_HPP
#define TRIFORMS_ELEMENTARY_HPP

#include <triforms/triple.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace triforms {

// One elementary transformation: blow up the center section over {f=0} and
// contract the strict transform of the fiber. The center is carried to [1:0]
// by a Möbius matrix with polynomial entries and constant determinant, so the
// conjugation itself is polar-neutral.
struct ElementaryMove {
  Polynomial component;
  FunctionMatrix mobius;
};

// Build the move for a center section given over {f=0}. Searches for a
// polynomial representative of the center's fiber coordinate mod f by exact
// linear ansatz up to degree_budget; throws ContractError when none exists.
ElementaryMove move_to_center(const Polynomial &f, const Section &center,
                              int degree_budget = 12);

enum class PoleCase { Case1, Case2, Case3, NewComponent };

struct PoleChange {
  PoleCase tag = PoleCase::NewComponent;
  int before = 0;
  int predicted = 0;
  std::string detail;
};

std::string pole_case_name(PoleCase c);

// Exact single-move pole-change law, decided from mod-f order tests on the
// conjugated input (the transformed triple is never assembled here).
PoleChange classify_pole_change(const ProjectiveTriple &t,
                                const ElementaryMove &move);

// Omega~ = (z1 dz2 - z2 dz1) + (alpha/F) z1^2 + (beta + dF/F) z1 z2
//          + (F gamma) z2^2, after conjugating by the center matrix.
ProjectiveTriple elm(const ProjectiveTriple &t, const ElementaryMove &move);

// Image of a section under the move.
Section transport(const Section &s, const ElementaryMove &move);

struct TranscriptStep {
  ElementaryMove move;
  std::string tag; // case-1|case-2|case-3|branch-absorption|
                   // non-invariant-decrement|lambda-chain
  PolarDivisor polar_after;
  std::optional<Section> sigma_after;
};

struct ReductionTranscript {
  ProjectiveTriple initial;
  std::optional<Section> sigma_initial;
  std::vector<TranscriptStep> steps;
  ProjectiveTriple final;
  PolarDivisor initial_polar, final_polar;
};

// Re-runs the recorded moves from the initial triple and checks the final
// triple is reproduced exactly.
bool replay(const ReductionTranscript &transcript);

struct ReduceOptions {
  int lambda_cap = 256;
  int absorption_cap = 64; // configurable loop bound for branch absorption
  int rounds_cap = 64;
  int mobius_degree_budget = 12;
  std::optional<Rational> extension; // declared radicand D, when enabled
};

// Minimization loop for a single polar component (the section/invariance
// case table); transports *sigma through every applied move when given.
std::pair<ProjectiveTriple, std::vector<TranscriptStep>>
reduce_component(const ProjectiveTriple &t, const Polynomial &f,
                 Section *sigma, const ReduceOptions &opts = {});

struct NormalizeResult {
  ProjectiveTriple triple;
  Section sigma;
  ReductionTranscript transcript;
};

// Full normal-form pass: per-component minimization alternating with branch
// absorption until a joint fixpoint.
NormalizeResult normalize(const ProjectiveTriple &t, const Section &sigma,
                          const ReduceOptions &opts = {});

// True when reduce_component would stop immediately on every component.
bool polar_minimal(const ProjectiveTriple &t, const ReduceOptions &opts = {});

struct CompareResult {
  enum class Verdict { Isomorphic, Distinct, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::optional<FunctionMatrix> witness;
  std::string detail;
};

// Necessary invariants, then a bounded-degree exact search for a conjugating
// gauge M with dM + M A1 - A2 M = 0.
CompareResult compare_normal_forms(const ProjectiveTriple &t1,
                                   const ProjectiveTriple &t2,
                                   const Section &sigma1,
                                   const Section &sigma2,
                                   int degree_bound = 2);

} // namespace triforms

#endif
