#ifndef SND_VERIFIER_HPP
#define SND_VERIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snd/competition.hpp"
#include "snd/dynamics.hpp"
#include "snd/tas.hpp"

namespace snd {

// Declared sequential-non-determinism hypothesis for a TAS: the ordered
// essential POCs, their starting points, the winner function and the
// competing paths. P = Y for everything this toolkit builds.
struct SndDeclaration {
    std::vector<Point> pocs;    // y_1 .. y_r in required attachment order
    std::vector<Point> starts;  // x_1 .. x_r
    std::map<Point, std::string> winner;
    std::vector<CompetitionSpec> competitions;

    std::size_t r() const { return pocs.size(); }
    bool is_poc(Point p) const {
        for (Point y : pocs)
            if (y == p) return true;
        return false;
    }
    void validate() const;
};

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;  // witness description on Fail, cap note on Inconclusive
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass_or_inconclusive() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
};

// Bounded directional-determinism check over all agreeing pairs of
// enumerated producible assemblies. Inconclusive when the caps bind.
CheckResult check_directional_determinism(const Tas& tas, const SndDeclaration& decl,
                                          std::size_t size_cap, std::size_t node_cap);

// Statistical POC-order check over sampled traces: placement indices across
// declared POCs must be strictly increasing, interleaved with their starts.
CheckResult check_poc_order(const Tas& tas, const SndDeclaration& decl, std::uint64_t trials,
                            std::uint64_t seed, std::uint64_t step_cap);

// w-correctness of one assembly: winner tiles at covered POCs (condition 2
// on inessential POCs is vacuous since P = Y).
bool check_w_correct(const Tas& tas, const Assembly& a, const SndDeclaration& decl);

// Definition of a rigged competition evaluated on the result of a producing
// prefix that terminates at comp.start: some interior losing-path point is
// occupied and separates the seed from the start in the binding graph.
bool is_rigged_by(const Tas& tas, const CompetitionSpec& comp, const Assembly& prefix_result);

// Competing-tile classification: (p, t) extends one of the declared
// competing paths toward an unresolved essential POC, and every binding-graph
// path from the seed to p runs through that competition's start.
bool is_competing_tile(const Tas& tas, const SndDeclaration& decl, const Assembly& a, Point p,
                       TileSet::Id t);

VerificationReport verify_all(const Tas& tas, const SndDeclaration& decl, std::size_t size_cap,
                              std::size_t node_cap, std::uint64_t trials, std::uint64_t seed,
                              std::uint64_t step_cap);

}  // namespace snd

#endif
