#ifndef SND_COMPETITION_HPP
#define SND_COMPETITION_HPP

#include <optional>
#include <vector>

#include "snd/geometry.hpp"
#include "snd/rational.hpp"

namespace snd {

// A declared two-path race: both paths are simple, start at `start`, end at
// `poc`, and intersect exactly in those two points.
struct CompetitionSpec {
    Point start;
    Point poc;
    std::vector<Point> winning_path;  // includes start and poc; may be empty
    std::vector<Point> losing_path;   // when lengths alone were declared
    long long lwin = 0;
    long long llose = 0;
    std::string winner_tile;
    bool rigged = false;

    long long l_win() const {
        return winning_path.empty() ? lwin : static_cast<long long>(winning_path.size());
    }
    long long l_lose() const {
        return losing_path.empty() ? llose : static_cast<long long>(losing_path.size());
    }
    bool has_paths() const { return !winning_path.empty() && !losing_path.empty(); }
};

// Pr[C] for an unrigged race with winning/losing path lengths (in points)
// l >= 2 and l' >= 2:   sum_{i=0}^{l'-2} C(l+i-2, l-2) / 2^{l+i-1}.
Rational competition_probability(long long l_win, long long l_lose);

// Number of winning assembly sequences whose result extends the losing path
// by an i-point prefix: C(l+i-2, l-2).
BigInt winning_sequence_count(long long l_win, long long i);

// Probability that a height-h read gadget (paths 4 and 4h-10) reads a 0-bit
// correctly: 1 - (16h^2 - 68h + 74) / 2^{4h-8}. Requires h >= 6.
Rational read_gadget_probability(long long h);

// Product lower bound over declared competitions: rigged entries contribute
// a factor of 1.
struct CompetitionLengths {
    long long l_win = 0;
    long long l_lose = 0;
    bool rigged = false;
};
Rational theorem1_lower_bound(const std::vector<CompetitionLengths>& comps);

// Both sides of the identity sum_{i=0}^{n-2} (i+2)(i+1)/2^{i+4}
//   = 1 - (n^2+3n+4)/2^{n+2}, the left computed by direct summation.
std::pair<Rational, Rational> closed_form_check(long long n);

// 2^{3h-8} >= 16h^2 - 68h + 74, evaluated exactly.
bool h_inequality_check(long long h);

}  // namespace snd

#endif
