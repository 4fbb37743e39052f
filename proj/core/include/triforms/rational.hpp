#ifndef TRIFORMS_RATIONAL_HPP
#define TRIFORMS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace triforms {

// The scalar field: arbitrary-precision rationals, always canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

// Exact square root of a nonnegative rational, when it exists.
inline std::optional<Rational> exact_sqrt(const Rational &q) {
  if (sgn(q) < 0)
    return std::nullopt;
  if (sgn(q) == 0)
    return Rational(0);
  const Integer &n = q.get_num(), &d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) ||
      !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

inline double to_double(const Rational &q) { return q.get_d(); }

// Small random rationals for property tests and genericity sampling.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rational small(int max_num = 9, int max_den = 4) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return rat(num(rng_), den(rng_));
  }

  Rational small_nonzero(int max_num = 9, int max_den = 4) {
    for (;;) {
      Rational q = small(max_num, max_den);
      if (sgn(q) != 0)
        return q;
    }
  }

  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace triforms

#endif
