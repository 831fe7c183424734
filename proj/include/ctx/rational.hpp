#ifndef CTX_RATIONAL_HPP
#define CTX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ctx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Default denominator cap when converting floating-point input to rationals.
inline constexpr std::uint64_t kDefaultDenominatorCap = 1000000;

/// Formats as "n" for integers and "n/d" otherwise.
std::string rational_to_string(const Rational& r);

/// Parses "n", "n/d", or a plain decimal string such as "0.375" (converted exactly).
Rational parse_rational(const std::string& text);

/// Best rational approximation of x with denominator <= max_denominator
/// (continued-fraction convergents and semiconvergents). Exact inputs such as
/// 0.375 round-trip to 3/8. Throws ValidationError for non-finite input.
Rational rationalize(double x, std::uint64_t max_denominator = kDefaultDenominatorCap);

double to_double(const Rational& r);

Rational rational_sum(const std::vector<Rational>& values);

}  // namespace ctx

#endif  // CTX_RATIONAL_HPP
