#ifndef SND_RATIONAL_HPP
#define SND_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace snd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned n) { return BigInt(1) << n; }

// Exact binomial coefficient via the multiplicative formula.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Parses "p/q" or an exact decimal ("0.1" -> 1/10). Throws on malformed
// input or zero denominator.
Rational parse_rational(const std::string& text);

// "p/q" (or just "p" for integers).
std::string format_rational(const Rational& r);

// Decimal rendering with the given number of fractional digits (truncated).
std::string format_decimal(const Rational& r, int digits = 6);

}  // namespace snd

#endif
