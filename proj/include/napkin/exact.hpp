#pragma once

// Exact integer and rational arithmetic used by the counting and
// distribution code. Counts like C(n,k) and 2^n leave 64-bit range long
// before the sizes we evaluate, so everything here is arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace napkin {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow2(int n) {
    if (n < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << n;
}

inline BigInt binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) after each round
    }
    return result;
}

inline double to_double(const BigRational& value) {
    return value.convert_to<double>();
}

/// Fixed-point decimal rendering of a nonnegative rational, rounded
/// half-up at the last digit.
inline std::string to_fixed_decimal(const BigRational& value, int fraction_digits) {
    if (value < 0) throw std::invalid_argument("to_fixed_decimal: negative value");
    if (fraction_digits < 0) throw std::invalid_argument("to_fixed_decimal: negative digit count");
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    BigInt scale = 1;
    for (int i = 0; i < fraction_digits; ++i) scale *= 10;
    BigInt scaled = (2 * num * scale + den) / (2 * den);
    std::string digits = scaled.str();
    if (fraction_digits == 0) return digits;
    if (static_cast<int>(digits.size()) <= fraction_digits)
        digits.insert(0, static_cast<size_t>(fraction_digits) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<size_t>(fraction_digits), ".");
    return digits;
}

}  // namespace napkin
