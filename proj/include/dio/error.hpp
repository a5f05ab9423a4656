#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dio {

enum class ErrorKind {
  NonSquare,
  TooWide,
  NotUnimodular,
  SizeMismatch,
  ShapeError,
  DimensionMismatch,
  NoUnitRow,
  NotASolution,
  CapExceeded,
  DomainError,
  RankDeficient,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported as a dio::Error carrying its kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace dio
