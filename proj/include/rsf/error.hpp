#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rsf/scalar.hpp"

namespace rsf {

enum class ErrorKind {
  invalid_input,
  invalid_word,
  stratum_failure,
  exceptional_set,
  budget_exceeded,
  branch_violation,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int index = 0,
        std::optional<Scalar> value = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index), value_(std::move(value)) {}

  ErrorKind kind() const { return kind_; }
  // 1-based position of the offending item, 0 when not applicable
  int index() const { return index_; }
  const std::optional<Scalar>& value() const { return value_; }

 private:
  ErrorKind kind_;
  int index_;
  std::optional<Scalar> value_;
};

}  // namespace rsf
