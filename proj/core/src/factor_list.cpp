#include <triforms/factor_list.hpp>

#include <algorithm>
#include <sstream>

namespace triforms {

FactorList::FactorList(std::vector<Entry> entries)
    : entries_(std::move(entries)) {}

Polynomial FactorList::product(const Vars &vars) const {
  Polynomial p = Polynomial::constant(vars, Rational(1));
  for (const auto &e : entries_)
    p = p * e.factor.pow(static_cast<unsigned long>(e.multiplicity));
  return p;
}

bool FactorList::matches(const Polynomial &target) const {
  if (target.is_zero())
    return false;
  Polynomial p = product(target.vars());
  Polynomial q = target.monic();
  return p.monic() == q;
}

void FactorList::sort_canonically() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry &a, const Entry &b) {
              return Polynomial::canonical_less(a.factor, b.factor);
            });
}

std::string FactorList::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i)
      out << " * ";
    out << "(" << entries_[i].factor.to_string() << ")";
    if (entries_[i].multiplicity != 1)
      out << "^" << entries_[i].multiplicity;
  }
  return out.str();
}

void validate_factor_list(const FactorList &fl) {
  const auto &es = fl.entries();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Polynomial &f = es[i].factor;
    if (f.is_constant())
      throw ContractError("declared factor is constant");
    if (es[i].multiplicity <= 0)
      throw ContractError("declared factor with nonpositive multiplicity");
    if (squarefree_part(f) != f.monic())
      throw ContractError("declared factor is not squarefree: " +
                          f.to_string());
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (!gcd(f, es[j].factor).is_constant())
        throw ContractError("declared factors are not pairwise coprime: " +
                            f.to_string() + " and " +
                            es[j].factor.to_string());
    }
  }
}

std::vector<Polynomial> coprime_basis(std::vector<Polynomial> inputs) {
  std::vector<Polynomial> basis;
  for (Polynomial p : inputs) {
    if (p.is_zero() || p.is_constant())
      continue;
    // split into squarefree layers first
    for (auto &sf : squarefree_decompose(p)) {
      std::vector<Polynomial> queue{sf.factor.monic()};
      while (!queue.empty()) {
        Polynomial f = queue.back();
        queue.pop_back();
        if (f.is_constant())
          continue;
        bool consumed = false;
        for (std::size_t i = 0; i < basis.size() && !consumed; ++i) {
          Polynomial g = gcd(f, basis[i]);
          if (g.is_constant())
            continue;
          if (g == basis[i]) {
            // basis element divides f: strip and continue with quotient
            queue.push_back((*f.divide_exact(basis[i])).monic());
            consumed = true;
          } else {
            // proper overlap: split the basis element
            Polynomial rest = (*basis[i].divide_exact(g)).monic();
            basis[i] = g;
            basis.push_back(rest);
            queue.push_back(f); // retry against the refined basis
            consumed = true;
          }
        }
        if (!consumed)
          basis.push_back(f.monic());
      }
    }
  }
  std::sort(basis.begin(), basis.end(), Polynomial::canonical_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

bool supported_on(const Polynomial &p, const std::vector<Polynomial> &basis) {
  if (p.is_zero())
    return false;
  Polynomial rest = squarefree_part(p);
  for (const auto &b : basis) {
    Polynomial g = gcd(rest, b);
    if (!g.is_constant())
      rest = (*rest.divide_exact(g)).monic();
    if (rest.is_constant())
      return true;
  }
  return rest.is_constant();
}

} // namespace triforms
