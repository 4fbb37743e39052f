#ifndef TRIFORMS_MONODROMY_HPP
#define TRIFORMS_MONODROMY_HPP

#include <triforms/quadext.hpp>
#include <triforms/triple.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace triforms {

using Complex = std::complex<double>;

struct Mat2c {
  Complex e[2][2]{};
  static Mat2c identity() {
    Mat2c m;
    m.e[0][0] = m.e[1][1] = 1.0;
    return m;
  }
  Complex det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }
  Complex trace() const { return e[0][0] + e[1][1]; }
};

Mat2c operator*(const Mat2c &a, const Mat2c &b);
double distance(const Mat2c &a, const Mat2c &b); // max-entry norm

// One-variable trace-free system dZ = A(t) Z: entries of A are a(t) dt.
class FuchsianSystem {
public:
  // one-variable forms alpha, beta, gamma of the restricted triple; the
  // connection is [[-beta/2, -gamma], [alpha, beta/2]].
  FuchsianSystem(OneForm alpha, OneForm beta, OneForm gamma);

  const Vars &var() const { return alpha_.chart(); }
  const OneForm &alpha() const { return alpha_; }
  const OneForm &beta() const { return beta_; }
  const OneForm &gamma() const { return gamma_; }

  struct SingularPoint {
    std::optional<Rational> exact;  // rational location, when exact
    Complex approx;                 // numeric location
    double radius = 0.0;            // error radius (0 for exact points)
    int pole_order = 1;
  };

  const std::vector<SingularPoint> &singular_points() const {
    return points_;
  }

  // Numeric evaluation of A at a regular point.
  Mat2c evaluate(const Complex &t) const;

  // Exact residue matrix entries at an exact simple pole.
  std::array<Rational, 4> residue(const Rational &point) const;

private:
  OneForm alpha_, beta_, gamma_;
  std::vector<SingularPoint> points_;
};

// Restriction of a plane triple along a line map, packaged as a system.
FuchsianSystem restrict_to_system(const ProjectiveTriple &t,
                                  const RationalMap &line);

struct LocalExponents {
  bool defined = false; // false for higher-order poles
  int pole_order = 1;
  ExponentValue plus, minus; // +-mu, the residue eigenvalues
};

LocalExponents local_exponents(const FuchsianSystem &sys,
                               const Rational &point);

struct LoopResult {
  Complex around;    // the encircled singular point
  Mat2c matrix;      // monodromy along the loop
  double det_drift;  // |det - 1|
};

struct MonodromyData {
  Complex base_point;
  std::vector<LoopResult> loops; // ordered by angle as seen from the base
  double relation_residual;      // || product of generators - I ||
};

struct IntegrationOptions {
  double tolerance = 1e-13;
  double min_step = 1e-9;
  int max_steps = 200000;
};

// Adaptive high-order path integration of dZ = A Z around every singular
// point (circle of radius half the distance to the nearest other one,
// conjugated by the segment from the base point).
MonodromyData numeric_monodromy(const FuchsianSystem &sys,
                                const IntegrationOptions &opts = {});

// PSL(2) presentation: generators modulo sign, relation words.
struct PSL2Presentation {
  std::vector<Mat2c> generators; // unit determinant up to tolerance
  // each relation is a list of (generator index, +-1 exponent)
  std::vector<std::vector<std::pair<int, int>>> relations;
};

struct LiftDecision {
  bool lifts = false;
  std::vector<int> signs; // witness sign per generator, when lifts
  std::string detail;
};

// Exhaustive search over the 2^n sign assignments: the lift exists iff some
// assignment evaluates every relation word to +I (within tolerance).
LiftDecision sl2_lift_exists(const PSL2Presentation &p, double tol = 1e-9);

} // namespace triforms

#endif
