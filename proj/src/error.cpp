#include "repbasis/error.hpp"

#include <limits>

namespace repbasis {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySet: return "EMPTY_SET";
    case ErrorCode::kInputTooSmall: return "INPUT_TOO_SMALL";
    case ErrorCode::kDensityUnreachable: return "DENSITY_UNREACHABLE";
    case ErrorCode::kPhiTooSlow: return "PHI_TOO_SLOW";
    case ErrorCode::kPreconditionViolated: return "PRECONDITION_VIOLATED";
    case ErrorCode::kMalformedTrace: return "MALFORMED_TRACE";
    case ErrorCode::kOverflow: return "OVERFLOW";
    case ErrorCode::kParse: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

namespace {

std::string decorate(ErrorCode code, const std::string& what) {
  std::string out(to_string(code));
  out += ": ";
  out += what;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& what,
             std::optional<std::int64_t> witness)
    : std::runtime_error(decorate(code, what)), code_(code), message_(what), witness_(witness) {}

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "64-bit addition overflow");
  }
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "64-bit subtraction overflow");
  }
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "64-bit multiplication overflow");
  }
  return out;
}

std::int64_t abs(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kOverflow, "64-bit absolute value overflow");
  }
  return a < 0 ? -a : a;
}

}  // namespace checked

}  // namespace repbasis
