#ifndef TRIFORMS_ERROR_HPP
#define TRIFORMS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace triforms {

// Error kinds map to CLI exit codes: contract violations -> 2,
// needs-extension -> 3, budget overflow -> 4.
enum class ErrorKind { Contract, NeedsExtension, Budget, Parse };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class ContractError : public Error {
public:
  explicit ContractError(std::string message)
      : Error(ErrorKind::Contract, std::move(message)) {}
};

class NeedsExtensionError : public Error {
public:
  explicit NeedsExtensionError(std::string message)
      : Error(ErrorKind::NeedsExtension, std::move(message)) {}
};

class BudgetError : public Error {
public:
  explicit BudgetError(std::string message)
      : Error(ErrorKind::Budget, std::move(message)) {}
};

class ParseError : public Error {
public:
  ParseError(std::string message, std::size_t position)
      : Error(ErrorKind::Parse, std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_ = 0;
};

} // namespace triforms

#endif
