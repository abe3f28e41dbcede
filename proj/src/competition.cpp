#include "snd/competition.hpp"

namespace snd {

Rational competition_probability(long long l_win, long long l_lose) {
    if (l_win < 2 || l_lose < 2)
        throw std::invalid_argument("competing path lengths must be >= 2");
    Rational total = 0;
    for (long long i = 0; i <= l_lose - 2; ++i) {
        BigInt count = binomial(l_win + i - 2, l_win - 2);
        total += Rational(count, pow2(static_cast<unsigned>(l_win + i - 1)));
    }
    return total;
}

BigInt winning_sequence_count(long long l_win, long long i) {
    return binomial(l_win + i - 2, l_win - 2);
}

Rational read_gadget_probability(long long h) {
    if (h < 6) throw std::invalid_argument("read gadget height must be >= 6");
    BigInt bad = 16 * BigInt(h) * h - 68 * h + 74;
    return Rational(1) - Rational(bad, pow2(static_cast<unsigned>(4 * h - 8)));
}

Rational theorem1_lower_bound(const std::vector<CompetitionLengths>& comps) {
    if (comps.empty()) throw std::invalid_argument("empty competition list");
    Rational product = 1;
    for (const auto& c : comps) {
        if (c.rigged) continue;
        product *= competition_probability(c.l_win, c.l_lose);
    }
    return product;
}

std::pair<Rational, Rational> closed_form_check(long long n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    Rational lhs = 0;
    for (long long i = 0; i <= n - 2; ++i)
        lhs += Rational(BigInt((i + 2) * (i + 1)), pow2(static_cast<unsigned>(i + 4)));
    BigInt top = BigInt(n) * n + 3 * n + 4;
    Rational rhs = Rational(1) - Rational(top, pow2(static_cast<unsigned>(n + 2)));
    return {lhs, rhs};
}

bool h_inequality_check(long long h) {
    if (h < 6) throw std::invalid_argument("h must be >= 6");
    return pow2(static_cast<unsigned>(3 * h - 8)) >= 16 * BigInt(h) * h - 68 * h + 74;
}

}  // namespace snd
