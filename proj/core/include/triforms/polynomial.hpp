#ifndef TRIFORMS_POLYNOMIAL_HPP
#define TRIFORMS_POLYNOMIAL_HPP

#include <triforms/error.hpp>
#include <triforms/rational.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace triforms {

// Ordered variable context shared by all values of one computation.
class Vars {
public:
  Vars() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Vars(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(
            std::move(names))) {}
  Vars(std::initializer_list<std::string> names)
      : Vars(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  const std::string &name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string> &names() const { return *names_; }
  std::optional<std::size_t> index(const std::string &name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name)
        return i;
    return std::nullopt;
  }
  bool operator==(const Vars &o) const {
    return names_ == o.names_ || *names_ == *o.names_;
  }
  bool operator!=(const Vars &o) const { return !(*this == o); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic, larger term first (begin() is the leading term).
struct GrlexGreater {
  bool operator()(const Exponents &a, const Exponents &b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a)
      da += e;
    for (auto e : b)
      db += e;
    if (da != db)
      return da > db;
    return a > b; // lexicographic tie-break
  }
};

// Sparse multivariate polynomial over Q in a fixed variable context.
// Invariant: no zero coefficients are stored.
class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(Vars vars) : vars_(std::move(vars)) {}

  static Polynomial constant(const Vars &vars, const Rational &c);
  static Polynomial variable(const Vars &vars, std::size_t index);

  const Vars &vars() const { return vars_; }
  const TermMap &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value; contract error when non-constant.
  Rational constant_value() const;

  long total_degree() const; // -1 for the zero polynomial
  long degree_in(std::size_t var) const;

  const Rational &leading_coefficient() const;
  Polynomial monic() const; // leading coefficient scaled to 1

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  Polynomial operator*(const Rational &c) const;
  Polynomial pow(unsigned long e) const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(const std::vector<Rational> &point) const;

  // Exact division; nullopt when the division has a remainder.
  std::optional<Polynomial> divide_exact(const Polynomial &divisor) const;
  bool divisible_by(const Polynomial &divisor) const {
    return divide_exact(divisor).has_value();
  }

  // Multiplicity of the (squarefree) factor f in this polynomial.
  int multiplicity_of(const Polynomial &f) const;

  void add_term(const Exponents &exps, const Rational &coeff);

  bool operator==(const Polynomial &o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial &o) const { return !(*this == o); }
  // Canonical total order (for deterministic component processing).
  static bool canonical_less(const Polynomial &a, const Polynomial &b);

  std::string to_string() const;

private:
  void check_same_vars(const Polynomial &o) const;

  Vars vars_;
  TermMap terms_;
};

Polynomial gcd(const Polynomial &a, const Polynomial &b);

// Squarefree part: product of the distinct irreducible factors.
Polynomial squarefree_part(const Polynomial &p);

struct SquarefreeFactor {
  Polynomial factor;
  int multiplicity;
};

// p = unit * prod factor_i^multiplicity_i with squarefree pairwise-coprime
// factors; the unit is a nonzero rational.
std::vector<SquarefreeFactor> squarefree_decompose(const Polynomial &p);

std::uint64_t fnv1a(const std::string &s);

} // namespace triforms

#endif
