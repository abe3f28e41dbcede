#include "snd/rational.hpp"

#include <cctype>

namespace snd {

namespace {

BigInt parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer: " + s);
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("malformed integer: " + s);
    return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_int(text.substr(0, slash));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text));
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) return Rational(parse_int(head));
    bool neg = !head.empty() && head[0] == '-';
    BigInt ip = head.empty() || head == "-" || head == "+" ? BigInt(0) : parse_int(head);
    if (neg) ip = -ip;
    BigInt fp = parse_int(frac);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational r = Rational(ip) + Rational(fp, den);
    return neg ? -r : r;
}

std::string format_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& r, int digits) {
    bool neg = r < 0;
    Rational a = neg ? -r : r;
    BigInt num = boost::multiprecision::numerator(a);
    BigInt den = boost::multiprecision::denominator(a);
    BigInt ip = num / den;
    BigInt rem = num % den;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            BigInt digit = rem / den;
            out += digit.str();
            rem %= den;
        }
    }
    return out;
}

}  // namespace snd
