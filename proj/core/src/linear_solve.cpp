#include <triforms/linear_solve.hpp>

namespace triforms {

namespace {

// Row-reduce [A | b]; returns pivot column per row. b may be empty.
std::vector<std::size_t> eliminate(QMatrix &a, std::vector<Rational> *b) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && sgn(a.at(sel, col)) == 0)
      ++sel;
    if (sel == a.rows())
      continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(sel, c), a.at(row, c));
      if (b)
        std::swap((*b)[sel], (*b)[row]);
    }
    Rational inv = 1 / a.at(row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      a.at(row, c) *= inv;
    if (b)
      (*b)[row] *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a.at(r, col)) == 0)
        continue;
      Rational factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= factor * a.at(row, c);
      if (b)
        (*b)[r] -= factor * (*b)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::optional<std::vector<Rational>> solve_linear(QMatrix a,
                                                  std::vector<Rational> b) {
  if (b.size() != a.rows())
    return std::nullopt;
  std::vector<std::size_t> pivots = eliminate(a, &b);
  // inconsistency: zero row with nonzero rhs
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (sgn(b[r]) != 0)
      return std::nullopt;
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = b[r];
  return x;
}

std::vector<std::vector<Rational>> nullspace(QMatrix a) {
  std::vector<std::size_t> pivots = eliminate(a, nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace triforms
