#ifndef SND_DYNAMICS_HPP
#define SND_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "snd/tas.hpp"

namespace snd {

struct Option {
    Point point;
    TileSet::Id tile;
    int name_rank;  // rank of tile name, fixes deterministic ordering

    friend bool operator<(const Option& a, const Option& b) {
        if (a.point != b.point) return a.point < b.point;
        return a.name_rank < b.name_rank;
    }
    friend bool operator==(const Option& a, const Option& b) {
        return a.point == b.point && a.tile == b.tile;
    }
};

// Incrementally maintained frontier: the set of (point, tile) pairs that can
// stably attach, ordered by (x, y, tile name). Attaching a tile never removes
// an option elsewhere at temperature 1, so updates only touch the filled
// point and its empty neighbors.
class Frontier {
  public:
    Frontier(const Tas& tas, const Assembly& a) : tas_(&tas) { rebuild(a); }

    void rebuild(const Assembly& a);

    // Call after `a` already contains the new tile at p.
    void after_attach(const Assembly& a, Point p);

    const std::set<Option>& options() const { return set_; }
    std::size_t count() const { return set_.size(); }
    bool empty() const { return set_.empty(); }

    const Option& nth(std::size_t i) const {
        auto it = set_.begin();
        std::advance(it, static_cast<long>(i));
        return *it;
    }

  private:
    void add_options_at(const Assembly& a, Point q);

    const Tas* tas_;
    std::set<Option> set_;
};

// One-shot frontier as an ordered list; matches Frontier::options().
std::vector<Option> frontier(const Tas& tas, const Assembly& a);

struct StepOptions {
    std::vector<Option> options;
    std::size_t count() const { return options.size(); }
};

StepOptions step_options(const Tas& tas, const Assembly& a);

enum class RunStatus { Terminal, StepCapExceeded };

struct TraceStep {
    Point point;
    TileSet::Id tile;
};

struct SequenceResult {
    Assembly final;
    std::uint64_t steps = 0;
    RunStatus status = RunStatus::Terminal;
    std::vector<TraceStep> trace;  // empty unless recording was requested
};

// Uniform-attachment run from the seed: at each step one frontier option is
// chosen uniformly at random. Identical (tas, seed, cap) give identical
// traces.
SequenceResult run_sequence(const Tas& tas, std::uint64_t rng_seed, std::uint64_t step_cap,
                            bool record_trace);

// 1-based index of the step that placed a tile at p (seed = 1), or nullopt.
// The trace must have been recorded; the seed point is implicit.
std::optional<std::uint64_t> index_of(const Tas& tas, const std::vector<TraceStep>& trace, Point p);

// Deterministic per-trial seed derivation (splitmix64 over master ^ index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace snd

#endif
