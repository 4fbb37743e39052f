#ifndef TRIFORMS_FACTOR_LIST_HPP
#define TRIFORMS_FACTOR_LIST_HPP

#include <triforms/rational_function.hpp>

#include <string>
#include <vector>

namespace triforms {

// A declared decomposition: non-constant, primitive, squarefree, pairwise
// coprime factors with positive multiplicities.
class FactorList {
public:
  struct Entry {
    Polynomial factor;
    int multiplicity;
  };

  FactorList() = default;
  explicit FactorList(std::vector<Entry> entries);

  const std::vector<Entry> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  Polynomial product(const Vars &vars) const;

  // Checks that the product reconstructs target up to a rational constant.
  bool matches(const Polynomial &target) const;

  void sort_canonically();

  std::string to_string() const;

private:
  std::vector<Entry> entries_;
};

// Validation of the FactorList invariants; throws ContractError.
void validate_factor_list(const FactorList &fl);

// Pairwise-coprime squarefree basis refining all given polynomials: every
// input is, up to a constant, a product of powers of basis elements.
std::vector<Polynomial> coprime_basis(std::vector<Polynomial> inputs);

// True when every irreducible factor of p divides some element of basis.
bool supported_on(const Polynomial &p, const std::vector<Polynomial> &basis);

} // namespace triforms

#endif
