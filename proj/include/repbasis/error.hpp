#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace repbasis {

enum class ErrorCode {
  kEmptySet,
  kInputTooSmall,
  kDensityUnreachable,
  kPhiTooSlow,
  kPreconditionViolated,
  kMalformedTrace,
  kOverflow,
  kParse,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. `witness` names the
// integer that exposed a violated precondition, when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::int64_t> witness = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::int64_t>& witness() const noexcept { return witness_; }
  // what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::int64_t> witness_;
};

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t abs(std::int64_t a);

}  // namespace checked

}  // namespace repbasis
