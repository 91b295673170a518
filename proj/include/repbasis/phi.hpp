#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace repbasis {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  long double value() const { return static_cast<long double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Density control function with phi(x) -> inf. Grammar:
//   "log2"     log2(x + 2)
//   "ln"       ln(x + 2)
//   "pow:<e>"  x^e,        0 < e < 1/2
//   "clog:<c>" c ln(x + 2), c > 0
// Parameters are decimals ("0.25") or fractions ("1/4").
class PhiSpec {
 public:
  enum class Kind { kLog2Shifted, kNaturalLogShifted, kPower, kConstantTimesLog };

  static PhiSpec parse(std::string_view text);
  static PhiSpec log2();
  static PhiSpec power(Rational exponent);

  Kind kind() const { return kind_; }
  const Rational& parameter() const { return parameter_; }

  long double operator()(long double x) const;

  // Canonical text; parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const PhiSpec&, const PhiSpec&) = default;

 private:
  PhiSpec(Kind kind, Rational parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  Rational parameter_;
};

// Relative margin used for every strict real comparison in the library.
inline constexpr long double kStrictMargin = 1e-9L;

// lhs > rhs with a guard of kStrictMargin * max(1, |rhs|).
bool strictly_exceeds(long double lhs, long double rhs);

// sqrt(x) / phi(x)
long double density_bound(const PhiSpec& phi, std::int64_t x);

// count > sqrt(x) / phi(x), evaluated as count * phi(x) > sqrt(x) under the guard.
bool beats_density(std::size_t count, std::int64_t x, const PhiSpec& phi);

}  // namespace repbasis
