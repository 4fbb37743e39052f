#ifndef TRIFORMS_LINEAR_SOLVE_HPP
#define TRIFORMS_LINEAR_SOLVE_HPP

#include <triforms/rational.hpp>

#include <optional>
#include <vector>

namespace triforms {

// Dense exact matrix over Q, row-major.
class QMatrix {
public:
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// One solution of A x = b, if any.
std::optional<std::vector<Rational>> solve_linear(QMatrix a,
                                                  std::vector<Rational> b);

// Basis of the nullspace of A.
std::vector<std::vector<Rational>> nullspace(QMatrix a);

} // namespace triforms

#endif
