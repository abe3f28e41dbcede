#include "snd/dynamics.hpp"

#include <random>

namespace snd {

bool attachable(const Tas& tas, const Assembly& a, Point p, TileSet::Id t) {
    if (a.occupied(p)) return false;
    bool touches = false;
    for (Point q : neighbors(p))
        if (a.occupied(q)) {
            touches = true;
            break;
        }
    if (!touches) return false;
    return tas.binding_strength(a, p, t) >= 1;
}

bool attachable(const Tas& tas, const Assembly& a, Point p, const std::string& tile_name) {
    return attachable(tas, a, p, tas.tiles().id_of(tile_name));
}

Assembly attach(const Tas& tas, const Assembly& a, Point p, const std::string& tile_name) {
    TileSet::Id t = tas.tiles().id_of(tile_name);
    if (!attachable(tas, a, p, t)) throw AttachmentError(p, tile_name);
    Assembly b = a;
    b.place(p, t);
    return b;
}

void Frontier::add_options_at(const Assembly& a, Point q) {
    if (a.occupied(q)) return;
    // Union over occupied neighbors of the candidate tiles binding via that
    // neighbor; a candidate found through one bond may also bind elsewhere,
    // which is fine since attachability needs only one strength-1 bond.
    for (Dir d : {Dir::North, Dir::East, Dir::South, Dir::West}) {
        int nb = a.at(step(q, d));
        if (nb < 0) continue;
        const Glue& facing = tas_->tiles()[nb].side(opposite(d));
        if (facing.is_null()) continue;
        for (TileSet::Id t : tas_->candidates(d, facing.label)) {
            if (tas_->tiles()[t].side(d) == facing)
                set_.insert(Option{q, t, tas_->name_rank(t)});
        }
    }
}

void Frontier::rebuild(const Assembly& a) {
    set_.clear();
    std::set<Point> checked;
    for (const auto& [p, t] : a.placements())
        for (Point q : neighbors(p))
            if (!a.occupied(q) && checked.insert(q).second) add_options_at(a, q);
}

void Frontier::after_attach(const Assembly& a, Point p) {
    // Drop every option at the now-occupied point.
    auto lo = set_.lower_bound(Option{p, 0, -1});
    auto hi = set_.lower_bound(Option{north(p), 0, -1});
    set_.erase(lo, hi);
    // New options can appear only at the empty neighbors of p.
    for (Point q : neighbors(p)) add_options_at(a, q);
}

std::vector<Option> frontier(const Tas& tas, const Assembly& a) {
    Frontier f(tas, a);
    return {f.options().begin(), f.options().end()};
}

StepOptions step_options(const Tas& tas, const Assembly& a) {
    return StepOptions{frontier(tas, a)};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SequenceResult run_sequence(const Tas& tas, std::uint64_t rng_seed, std::uint64_t step_cap,
                            bool record_trace) {
    if (step_cap < 1) throw std::invalid_argument("step_cap must be >= 1");
    SequenceResult res;
    res.final = tas.seed_assembly();
    if (record_trace) res.trace.push_back({tas.seed_point(), tas.seed_tile()});
    std::mt19937_64 rng(rng_seed);
    Frontier f(tas, res.final);
    while (!f.empty()) {
        if (res.steps >= step_cap) {
            res.status = RunStatus::StepCapExceeded;
            return res;
        }
        std::uniform_int_distribution<std::size_t> pick(0, f.count() - 1);
        Option o = f.nth(pick(rng));
        res.final.place(o.point, o.tile);
        f.after_attach(res.final, o.point);
        ++res.steps;
        if (record_trace) res.trace.push_back({o.point, o.tile});
    }
    res.status = RunStatus::Terminal;
    return res;
}

std::optional<std::uint64_t> index_of(const Tas& tas, const std::vector<TraceStep>& trace, Point p) {
    (void)tas;
    for (std::size_t i = 0; i < trace.size(); ++i)
        if (trace[i].point == p) return i + 1;
    return std::nullopt;
}

}  // namespace snd
