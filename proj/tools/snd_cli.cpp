#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "snd/builder.hpp"
#include "snd/competition.hpp"
#include "snd/exact.hpp"
#include "snd/io.hpp"
#include "snd/montecarlo.hpp"
#include "snd/render.hpp"
#include "snd/verifier.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerification = 3;

std::uint64_t domain_hash(const snd::Assembly& a) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& [p, t] : a.placements()) {
        std::uint64_t words[2] = {static_cast<std::uint64_t>(p.x), static_cast<std::uint64_t>(p.y)};
        for (std::uint64_t w : words)
            for (int i = 0; i < 8; ++i) {
                h ^= (w >> (8 * i)) & 0xff;
                h *= 1099511628211ULL;
            }
    }
    return h;
}

void write_build_outputs(const snd::GeneratedTas& gen, const std::string& out,
                         const std::string& decl, const std::string& shape) {
    snd::write_file(out, snd::serialize_tas(*gen.tas));
    snd::write_file(decl, snd::serialize_decl(gen.decl));
    snd::write_file(shape, snd::serialize_shape(gen.expected_domain));
    std::printf("tiles %zu r %zu\n", gen.tile_count, gen.decl.pocs.size());
}

// The unique w-correct terminal: grow non-POC options first and place the
// declared winner whenever a POC is the only frontier left.
snd::Assembly grow_correct(const snd::Tas& tas, const snd::SndDeclaration& decl) {
    snd::Assembly a = tas.seed_assembly();
    snd::Frontier frontier(tas, a);
    while (!frontier.empty()) {
        const snd::Option* pick = nullptr;
        for (const snd::Option& o : frontier.options()) {
            if (!decl.is_poc(o.point)) {
                pick = &o;
                break;
            }
            auto it = decl.winner.find(o.point);
            if (it != decl.winner.end() && tas.tiles()[o.tile].name == it->second) pick = &o;
            if (pick) break;
        }
        if (!pick) throw std::runtime_error("no w-correct growth step available");
        snd::Option o = *pick;
        a.place(o.point, o.tile);
        frontier.after_attach(a, o.point);
    }
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probabilistic temperature-1 tile self-assembly toolkit"};
    app.require_subcommand(1);

    // ---- build-counter ----
    auto* bc = app.add_subcommand("build-counter", "Generate the zigzag counter TAS");
    long long bc_N = 0, bc_n = -1;
    std::string bc_delta, bc_out, bc_decl, bc_shape;
    bc->add_option("--N", bc_N)->required();
    bc->add_option("--delta", bc_delta)->required();
    bc->add_option("--n", bc_n);
    bc->add_option("--out", bc_out)->required();
    bc->add_option("--decl", bc_decl)->required();
    bc->add_option("--shape", bc_shape)->required();

    // ---- build-square ----
    auto* bs = app.add_subcommand("build-square", "Generate the N x N square TAS");
    long long bs_N = 0;
    std::string bs_delta, bs_out, bs_decl, bs_shape;
    bs->add_option("--N", bs_N)->required();
    bs->add_option("--delta", bs_delta)->required();
    bs->add_option("--out", bs_out)->required();
    bs->add_option("--decl", bs_decl)->required();
    bs->add_option("--shape", bs_shape)->required();

    // ---- build-fixture ----
    auto* bf = app.add_subcommand("build-fixture", "Generate a worked-example fixture");
    std::string bf_name, bf_out, bf_decl, bf_shape;
    bf->add_option("--name", bf_name)->required();
    bf->add_option("--out", bf_out)->required();
    bf->add_option("--decl", bf_decl)->required();
    bf->add_option("--shape", bf_shape)->required();

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "Monte Carlo shape-probability estimate");
    std::string sim_tas, sim_shape;
    std::uint64_t sim_trials = 0, sim_seed = 0, sim_cap = 0;
    double sim_conf = 99.0;
    sim->add_option("--tas", sim_tas)->required();
    sim->add_option("--shape", sim_shape)->required();
    sim->add_option("--trials", sim_trials)->required();
    sim->add_option("--seed", sim_seed)->required();
    sim->add_option("--cap", sim_cap);
    sim->add_option("--confidence", sim_conf);

    // ---- exact ----
    auto* ex = app.add_subcommand("exact", "Exact terminal probabilities");
    std::string ex_tas;
    std::size_t ex_size_cap = 1000, ex_node_cap = 2000000;
    ex->add_option("--tas", ex_tas)->required();
    ex->add_option("--size-cap", ex_size_cap);
    ex->add_option("--node-cap", ex_node_cap);

    // ---- analyze ----
    auto* an = app.add_subcommand("analyze", "Closed-form competition analytics");
    long long an_lwin = 0, an_llose = 0, an_h = 0;
    std::string an_decl;
    an->add_option("--lwin", an_lwin);
    an->add_option("--llose", an_llose);
    an->add_option("--h", an_h);
    an->add_option("--decl", an_decl);

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "Bounded verification of a declaration");
    std::string ver_tas, ver_decl;
    std::size_t ver_size_cap = 40, ver_node_cap = 20000;
    std::uint64_t ver_trials = 200, ver_seed = 1, ver_cap = 0;
    ver->add_option("--tas", ver_tas)->required();
    ver->add_option("--decl", ver_decl)->required();
    ver->add_option("--size-cap", ver_size_cap);
    ver->add_option("--node-cap", ver_node_cap);
    ver->add_option("--trials", ver_trials);
    ver->add_option("--seed", ver_seed);
    ver->add_option("--cap", ver_cap);

    // ---- render ----
    auto* ren = app.add_subcommand("render", "Draw an assembly as ascii or svg");
    std::string ren_tas, ren_decl, ren_format = "ascii", ren_out;
    std::uint64_t ren_seed = 0;
    bool ren_exact = false;
    bool ren_have_seed = false;
    ren->add_option("--tas", ren_tas)->required();
    auto* seed_opt = ren->add_option("--sample-seed", ren_seed);
    ren->add_flag("--exact-correct", ren_exact);
    ren->add_option("--decl", ren_decl);
    ren->add_option("--format", ren_format)->check(CLI::IsMember({"ascii", "svg"}));
    ren->add_option("--out", ren_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    ren_have_seed = seed_opt->count() > 0;

    try {
        if (*bc) {
            snd::BuildParams params =
                snd::derive_parameters(bc_N, snd::parse_rational(bc_delta), bc_n < 0 ? bc_N : bc_n);
            write_build_outputs(snd::build_counter(params), bc_out, bc_decl, bc_shape);
        } else if (*bs) {
            write_build_outputs(snd::build_square(bs_N, snd::parse_rational(bs_delta)), bs_out,
                                bs_decl, bs_shape);
        } else if (*bf) {
            write_build_outputs(snd::build_fixture(bf_name), bf_out, bf_decl, bf_shape);
        } else if (*sim) {
            auto tas = snd::load_tas(sim_tas);
            auto shape = snd::load_shape(sim_shape);
            if (sim_cap == 0) sim_cap = 16 * shape.size();
            snd::McParams mc;
            mc.trials = sim_trials;
            mc.seed = sim_seed;
            mc.step_cap = sim_cap;
            mc.confidence_pct = sim_conf;
            snd::Estimate est = snd::estimate_shape_probability(*tas, shape, mc);
            std::printf("%.9f %.9f %.9f %" PRIu64 " %" PRIu64 " %" PRIu64 "\n", est.point,
                        est.ci_low, est.ci_high, est.successes, est.trials, est.cap_exceeded);
        } else if (*ex) {
            auto tas = snd::load_tas(ex_tas);
            snd::ProducibleDag dag = snd::enumerate_dag(*tas, ex_size_cap, ex_node_cap);
            if (dag.partial) std::printf("partial enumeration (caps bound); lower bounds only\n");
            for (const auto& tp : snd::exact_terminal_probabilities(dag)) {
                const snd::Assembly& a = dag.nodes[tp.node].assembly;
                std::printf("terminal %016" PRIx64 " size %zu p %s\n", domain_hash(a), a.size(),
                            snd::format_rational(tp.probability).c_str());
            }
        } else if (*an) {
            if (!an_decl.empty()) {
                snd::SndDeclaration decl = snd::load_decl(an_decl);
                std::vector<snd::CompetitionLengths> comps;
                for (const auto& c : decl.competitions) {
                    std::printf("poc (%lld,%lld) Pr %s (%s)%s\n", static_cast<long long>(c.poc.x),
                                static_cast<long long>(c.poc.y),
                                c.rigged
                                    ? "1"
                                    : snd::format_rational(
                                          snd::competition_probability(c.l_win(), c.l_lose()))
                                          .c_str(),
                                c.rigged ? "1.000000"
                                         : snd::format_decimal(snd::competition_probability(
                                                                   c.l_win(), c.l_lose()),
                                                               6)
                                               .c_str(),
                                c.rigged ? " rigged" : "");
                    comps.push_back({c.l_win(), c.l_lose(), c.rigged});
                }
                snd::Rational bound = snd::theorem1_lower_bound(comps);
                std::printf("%s (%s)\n", snd::format_rational(bound).c_str(),
                            snd::format_decimal(bound, 6).c_str());
            } else if (an_h > 0) {
                snd::Rational p = snd::read_gadget_probability(an_h);
                std::printf("%s (%s)\n", snd::format_rational(p).c_str(),
                            snd::format_decimal(p, 6).c_str());
            } else if (an_lwin >= 2 && an_llose >= 2) {
                snd::Rational p = snd::competition_probability(an_lwin, an_llose);
                std::printf("%s (%s)\n", snd::format_rational(p).c_str(),
                            snd::format_decimal(p, 6).c_str());
            } else {
                std::fprintf(stderr, "analyze needs --lwin/--llose, --h, or --decl\n");
                return kExitUsage;
            }
        } else if (*ver) {
            auto tas = snd::load_tas(ver_tas);
            snd::SndDeclaration decl = snd::load_decl(ver_decl);
            if (decl.pocs.empty()) {
                std::printf("deterministic declaration (r=0); nothing to verify\n");
                return 0;
            }
            std::uint64_t cap = ver_cap ? ver_cap : 100000;
            snd::VerificationReport report =
                snd::verify_all(*tas, decl, ver_size_cap, ver_node_cap, ver_trials, ver_seed, cap);
            bool failed = false;
            for (const auto& c : report.checks) {
                const char* status = c.status == snd::CheckStatus::Pass ? "PASS"
                                     : c.status == snd::CheckStatus::Fail ? "FAIL"
                                                                          : "INCONCLUSIVE";
                std::printf("%s %s%s%s\n", status, c.name.c_str(), c.detail.empty() ? "" : ": ",
                            c.detail.c_str());
                failed |= c.status == snd::CheckStatus::Fail;
            }
            if (failed) return kExitVerification;
        } else if (*ren) {
            auto tas = snd::load_tas(ren_tas);
            snd::Assembly a = tas->seed_assembly();
            snd::SndDeclaration decl;
            bool have_decl = !ren_decl.empty();
            if (have_decl) decl = snd::load_decl(ren_decl);
            if (ren_exact) {
                if (!have_decl) {
                    std::fprintf(stderr, "--exact-correct needs --decl\n");
                    return kExitUsage;
                }
                a = grow_correct(*tas, decl);
            } else if (ren_have_seed) {
                snd::SequenceResult r = snd::run_sequence(*tas, ren_seed, 10000000, false);
                a = r.final;
            } else {
                std::fprintf(stderr, "render needs --sample-seed or --exact-correct\n");
                return kExitUsage;
            }
            std::string art = ren_format == "svg" ? snd::render_svg(*tas, a, have_decl ? &decl : nullptr)
                                                  : snd::render_ascii(*tas, a, have_decl ? &decl : nullptr);
            snd::write_file(ren_out, art);
        }
    } catch (const snd::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitData;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
    return 0;
}
