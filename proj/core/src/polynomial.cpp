#include <triforms/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace triforms {

Polynomial Polynomial::constant(const Vars &vars, const Rational &c) {
  Polynomial p(vars);
  if (sgn(c) != 0)
    p.terms_.emplace(Exponents(vars.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const Vars &vars, std::size_t index) {
  if (index >= vars.size())
    throw ContractError("variable index out of range");
  Polynomial p(vars);
  Exponents e(vars.size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() > 1)
    return false;
  const Exponents &e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
  if (terms_.empty())
    return Rational(0);
  if (!is_constant())
    throw ContractError("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

long Polynomial::total_degree() const {
  if (terms_.empty())
    return -1;
  // leading term has maximal total degree under grlex
  const Exponents &e = terms_.begin()->first;
  long d = 0;
  for (auto x : e)
    d += x;
  return d;
}

long Polynomial::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto &[e, c] : terms_)
    d = std::max(d, static_cast<long>(e[var]));
  if (terms_.empty())
    return -1;
  return d;
}

const Rational &Polynomial::leading_coefficient() const {
  if (terms_.empty())
    throw ContractError("leading_coefficient of zero polynomial");
  return terms_.begin()->second;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty())
    return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(e, -c);
  return r;
}

void Polynomial::check_same_vars(const Polynomial &o) const {
  if (vars_ != o.vars_)
    throw ContractError("polynomial variable contexts differ");
}

void Polynomial::add_term(const Exponents &exps, const Rational &coeff) {
  if (exps.size() != vars_.size())
    throw ContractError("exponent vector length mismatch");
  if (sgn(coeff) == 0)
    return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  check_same_vars(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  check_same_vars(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.check_same_vars(b);
  Polynomial r(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational &c) const {
  Polynomial r(vars_);
  if (sgn(c) == 0)
    return r;
  for (const auto &[e, coeff] : terms_)
    r.terms_.emplace(e, coeff * c);
  return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = Polynomial::constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    base = (e >>= 1) ? base * base : base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(vars_);
  for (const auto &[e, c] : terms_) {
    if (e[var] == 0)
      continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(e[var]));
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational> &point) const {
  if (point.size() != vars_.size())
    throw ContractError("evaluation point arity mismatch");
  Rational total(0);
  for (const auto &[e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k)
        term *= point[i];
    }
    total += term;
  }
  return total;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial &divisor) const {
  check_same_vars(divisor);
  if (divisor.is_zero())
    throw ContractError("division by the zero polynomial");
  if (divisor.is_constant()) {
    return *this * (1 / divisor.constant_value());
  }
  Polynomial q(vars_);
  Polynomial r = *this;
  const Exponents &lde = divisor.terms_.begin()->first;
  const Rational &ldc = divisor.terms_.begin()->second;
  Exponents t(vars_.size());
  while (!r.terms_.empty()) {
    const Exponents &lre = r.terms_.begin()->first;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (lre[i] < lde[i])
        return std::nullopt; // leading term not divisible: not exact
      t[i] = lre[i] - lde[i];
    }
    Rational c = r.terms_.begin()->second / ldc;
    Polynomial mono(vars_);
    mono.terms_.emplace(t, c);
    q += mono;
    r -= mono * divisor;
  }
  return q;
}

int Polynomial::multiplicity_of(const Polynomial &f) const {
  if (is_zero())
    throw ContractError("multiplicity_of on zero polynomial");
  if (f.is_constant())
    throw ContractError("multiplicity_of constant factor");
  int m = 0;
  Polynomial cur = *this;
  for (;;) {
    auto q = cur.divide_exact(f);
    if (!q)
      return m;
    cur = *q;
    ++m;
  }
}

bool Polynomial::canonical_less(const Polynomial &a, const Polynomial &b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db)
    return da < db;
  return a.to_string() < b.to_string();
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      if (sgn(a) < 0) {
        out << " - ";
        a = -a;
      } else {
        out << " + ";
      }
    }
    bool unit_coeff = (a == 1);
    std::string mono;
    {
      std::ostringstream m;
      bool firstv = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
          continue;
        if (!firstv)
          m << "*";
        firstv = false;
        m << vars_.name(i);
        if (e[i] > 1)
          m << "^" << e[i];
      }
      mono = m.str();
    }
    if (mono.empty()) {
      out << a.get_str();
    } else if (unit_coeff) {
      out << mono;
    } else {
      out << a.get_str() << "*" << mono;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd and squarefree decomposition
// ---------------------------------------------------------------------------

namespace {

long deg_in(const Polynomial &p, std::size_t var) { return p.degree_in(var); }

// Divide out the rational content (gcd of numerators over lcm of
// denominators): keeps PRS coefficients integer and small.
Polynomial strip_rational_content(const Polynomial &p) {
  if (p.is_zero())
    return p;
  Integer num_gcd(0), den_lcm(1);
  for (const auto &[e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(p.leading_coefficient()) < 0)
    content = -content;
  return p * (1 / content);
}

// Coefficient of v^k, as a polynomial in the same context with v-exponent 0.
Polynomial coeff_of(const Polynomial &p, std::size_t var, std::uint32_t k) {
  Polynomial r(p.vars());
  for (const auto &[e, c] : p.terms()) {
    if (e[var] != k)
      continue;
    Exponents d = e;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

Polynomial times_power(const Polynomial &p, std::size_t var, std::uint32_t k) {
  Polynomial r(p.vars());
  for (const auto &[e, c] : p.terms()) {
    Exponents d = e;
    d[var] += k;
    r.add_term(d, c);
  }
  return r;
}

Polynomial gcd_impl(const Polynomial &a, const Polynomial &b);

Polynomial content_in(const Polynomial &p, std::size_t var) {
  Polynomial c(p.vars());
  long d = deg_in(p, var);
  for (long k = 0; k <= d; ++k) {
    Polynomial ck = coeff_of(p, var, static_cast<std::uint32_t>(k));
    if (ck.is_zero())
      continue;
    c = c.is_zero() ? ck : gcd_impl(c, ck);
    if (c.is_constant())
      return Polynomial::constant(p.vars(), Rational(1));
  }
  return c;
}

// Pseudo-remainder of a by b with respect to var, with rational-content
// stripping after every reduction step to keep coefficients small (the
// result is only needed up to a scalar).
Polynomial prem(Polynomial a, const Polynomial &b, std::size_t var) {
  long db = deg_in(b, var);
  Polynomial lb = coeff_of(b, var, static_cast<std::uint32_t>(db));
  while (!a.is_zero()) {
    long da = deg_in(a, var);
    if (da < db)
      break;
    Polynomial la = coeff_of(a, var, static_cast<std::uint32_t>(da));
    a = a * lb -
        times_power(la, var, static_cast<std::uint32_t>(da - db)) * b;
    a = strip_rational_content(a);
  }
  return a;
}

Polynomial gcd_impl(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(a.vars(), Rational(1));

  // pivot: a variable occurring in both, of minimal combined degree
  std::size_t pivot = 0;
  long best = -1;
  for (std::size_t v = 0; v < a.vars().size(); ++v) {
    long da = deg_in(a, v), db = deg_in(b, v);
    if (da <= 0 || db <= 0)
      continue;
    long score = da + db;
    if (best < 0 || score < best) {
      best = score;
      pivot = v;
    }
  }
  if (best < 0) // no shared variable
    return Polynomial::constant(a.vars(), Rational(1));

  Polynomial ca = content_in(a, pivot);
  Polynomial cb = content_in(b, pivot);
  Polynomial pa = strip_rational_content(*a.divide_exact(ca));
  Polynomial pb = strip_rational_content(*b.divide_exact(cb));
  Polynomial gc = gcd_impl(ca, cb);

  Polynomial p0 = std::move(pa), p1 = std::move(pb);
  if (deg_in(p0, pivot) < deg_in(p1, pivot))
    std::swap(p0, p1);
  while (true) {
    if (p1.is_zero())
      break;
    if (deg_in(p1, pivot) == 0) {
      p1 = Polynomial::constant(a.vars(), Rational(1));
      break;
    }
    Polynomial r = prem(p0, p1, pivot);
    if (!r.is_zero()) {
      Polynomial cr = content_in(r, pivot);
      r = strip_rational_content(*r.divide_exact(cr));
    }
    p0 = std::move(p1);
    p1 = std::move(r);
  }
  Polynomial gp = p1.is_zero() ? p0 : p1;
  if (!gp.is_constant()) {
    Polynomial cg = content_in(gp, pivot);
    gp = *gp.divide_exact(cg);
  }
  return gc * gp;
}

} // namespace

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
  Polynomial g = gcd_impl(a, b);
  if (g.is_zero())
    return g;
  return g.monic();
}

Polynomial squarefree_part(const Polynomial &p) {
  if (p.is_zero())
    throw ContractError("squarefree_part of zero");
  if (p.is_constant())
    return Polynomial::constant(p.vars(), Rational(1));
  Polynomial g = p;
  for (std::size_t v = 0; v < p.vars().size(); ++v) {
    Polynomial d = p.derivative(v);
    if (!d.is_zero())
      g = gcd(g, d);
  }
  return (*p.divide_exact(g)).monic();
}

std::vector<SquarefreeFactor> squarefree_decompose(const Polynomial &p) {
  if (p.is_zero())
    throw ContractError("squarefree_decompose of zero");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant())
    return out;

  // q_j = prod f_i^{max(m_i - j + 1, 0)}; s_j = q_j / q_{j+1} = prod_{m_i>=j} f_i
  std::vector<Polynomial> s;
  Polynomial q = p.monic();
  while (!q.is_constant()) {
    Polynomial g = q;
    for (std::size_t v = 0; v < p.vars().size(); ++v) {
      Polynomial d = q.derivative(v);
      if (!d.is_zero())
        g = gcd(g, d);
    }
    s.push_back((*q.divide_exact(g)).monic());
    q = g;
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    Polynomial a = (j + 1 < s.size()) ? (*s[j].divide_exact(s[j + 1])).monic()
                                      : s[j];
    if (!a.is_constant())
      out.push_back({a, static_cast<int>(j + 1)});
  }
  return out;
}

std::uint64_t fnv1a(const std::string &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace triforms
