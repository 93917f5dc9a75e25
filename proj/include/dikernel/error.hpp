#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dikernel {

enum class ErrorKind {
  LoopArc,
  DuplicateArc,
  VertexOutOfRange,
  InvalidVertexSet,
  EmptySet,
  InvalidArgument,
  SyntaxError,
  BudgetExceeded,
  SizeBound,
  NotAKernel,
  SubkernelMissing,
  NoBaseKernel,
  NoRoadFound,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this exception. `line()` is set
/// only for errors raised while parsing text input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  /// Errors a caller can only fix by raising a bound (CLI exit code 3).
  bool is_resource_bound() const noexcept {
    return kind_ == ErrorKind::BudgetExceeded || kind_ == ErrorKind::SizeBound;
  }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace dikernel
