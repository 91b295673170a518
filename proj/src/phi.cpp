#include "repbasis/phi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "repbasis/error.hpp"

namespace repbasis {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::kParse, "bad phi parameter in '" + std::string(whole) + "'");
  }
  return v;
}

Rational reduce(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

// "3/8", "0.375", "2"
Rational parse_rational(std::string_view s, std::string_view whole) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = parse_int(s.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(whole) + "'");
    return reduce(parse_int(s.substr(0, slash), whole), den);
  }
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return Rational{parse_int(s, whole), 1};
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = s.substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 15) {
    throw Error(ErrorCode::kParse, "bad decimal in '" + std::string(whole) + "'");
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const bool negative = !int_part.empty() && int_part.front() == '-';
  const std::int64_t whole_units = int_part.empty() || int_part == "-" ? 0 : parse_int(int_part, whole);
  const std::int64_t frac = parse_int(frac_part, whole);
  std::int64_t num = checked::add(checked::mul(checked::abs(whole_units), den), frac);
  return reduce(negative ? -num : num, den);
}

}  // namespace

PhiSpec PhiSpec::parse(std::string_view text) {
  if (text == "log2") return PhiSpec(Kind::kLog2Shifted, {});
  if (text == "ln") return PhiSpec(Kind::kNaturalLogShifted, {});
  if (text.starts_with("pow:")) {
    Rational e = parse_rational(text.substr(4), text);
    // 0 < e < 1/2
    if (e.num <= 0 || 2 * e.num >= e.den) {
      throw Error(ErrorCode::kParse, "pow exponent must lie in (0, 1/2): '" + std::string(text) + "'");
    }
    return PhiSpec(Kind::kPower, e);
  }
  if (text.starts_with("clog:")) {
    Rational c = parse_rational(text.substr(5), text);
    if (c.num <= 0) {
      throw Error(ErrorCode::kParse, "clog constant must be positive: '" + std::string(text) + "'");
    }
    return PhiSpec(Kind::kConstantTimesLog, c);
  }
  throw Error(ErrorCode::kParse, "unknown phi '" + std::string(text) +
                                     "' (expected log2, ln, pow:<e>, clog:<c>)");
}

PhiSpec PhiSpec::log2() { return PhiSpec(Kind::kLog2Shifted, {}); }

PhiSpec PhiSpec::power(Rational exponent) {
  return parse("pow:" + std::to_string(exponent.num) + "/" + std::to_string(exponent.den));
}

long double PhiSpec::operator()(long double x) const {
  x = std::max(x, 0.0L);
  switch (kind_) {
    case Kind::kLog2Shifted: return std::log2(x + 2.0L);
    case Kind::kNaturalLogShifted: return std::log(x + 2.0L);
    case Kind::kPower: return std::pow(x, parameter_.value());
    case Kind::kConstantTimesLog: return parameter_.value() * std::log(x + 2.0L);
  }
  return 0.0L;
}

std::string PhiSpec::to_string() const {
  auto frac = [this] {
    std::string s = std::to_string(parameter_.num);
    if (parameter_.den != 1) s += "/" + std::to_string(parameter_.den);
    return s;
  };
  switch (kind_) {
    case Kind::kLog2Shifted: return "log2";
    case Kind::kNaturalLogShifted: return "ln";
    case Kind::kPower: return "pow:" + frac();
    case Kind::kConstantTimesLog: return "clog:" + frac();
  }
  return {};
}

bool strictly_exceeds(long double lhs, long double rhs) {
  return lhs > rhs + kStrictMargin * std::max(1.0L, std::fabs(rhs));
}

long double density_bound(const PhiSpec& phi, std::int64_t x) {
  const long double xv = static_cast<long double>(x);
  return std::sqrt(xv) / phi(xv);
}

bool beats_density(std::size_t count, std::int64_t x, const PhiSpec& phi) {
  const long double xv = static_cast<long double>(x);
  return strictly_exceeds(static_cast<long double>(count) * phi(xv), std::sqrt(xv));
}

}  // namespace repbasis
