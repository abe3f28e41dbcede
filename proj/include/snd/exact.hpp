#ifndef SND_EXACT_HPP
#define SND_EXACT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "snd/dynamics.hpp"
#include "snd/rational.hpp"
#include "snd/tas.hpp"

namespace snd {

// Producible-assembly DAG: nodes are canonical assemblies, each edge carries
// weight 1/M over the source's M one-step successors.
struct ProducibleDag {
    struct Node {
        Assembly assembly;
        std::vector<std::size_t> succ;  // indices of one-step successors
        std::size_t options = 0;        // M_alpha
        bool terminal() const { return options == 0; }
    };
    std::vector<Node> nodes;  // BFS order from the seed; index 0 = seed
    std::vector<std::size_t> terminals;
    bool partial = false;  // a cap bound before exhausting the system
};

// BFS enumeration up to |dom| <= size_cap and at most node_cap nodes.
ProducibleDag enumerate_dag(const Tas& tas, std::size_t size_cap, std::size_t node_cap);

struct TerminalProbability {
    std::size_t node = 0;
    Rational probability;  // lower bound when the dag is partial
};

// Forward DP over the dag in BFS (topological) order. When the dag is
// complete the results sum to 1.
std::vector<TerminalProbability> exact_terminal_probabilities(const ProducibleDag& dag);

// Sum of terminal probabilities whose domain equals `shape`.
Rational exact_shape_probability(const ProducibleDag& dag, const std::set<Point>& shape);

// Sum of terminal probabilities whose assembly places tile `name` at p.
Rational exact_tile_probability(const Tas& tas, const ProducibleDag& dag, Point p,
                                const std::string& name);

// ---------------------------------------------------------------------------
// Sub-probability trees.

enum class SptKind { Plain, Diamond, Circular };

struct SptEdge {
    Rational probability;
    bool competing = false;  // classification of the child node in M_T
    std::size_t child = 0;
};

struct SptNode {
    SptKind kind = SptKind::Plain;
    std::string label;
    // Context for subtrees of M_T: total children and competing children of
    // this node in the full chain. Negative when unknown (generic SPTs).
    long long mt_children = -1;
    long long mt_competing = -1;
    std::vector<SptEdge> children;
};

struct Spt {
    std::vector<SptNode> nodes;  // index 0 is the root
    std::size_t root = 0;

    std::size_t add_node(SptNode n) {
        nodes.push_back(std::move(n));
        return nodes.size() - 1;
    }
};

// Sum over leaves of the products of edge probabilities along root-to-leaf
// paths.
Rational spt_probability(const Spt& q);

// Per-node sum of outgoing edge probabilities.
Rational out_probability_sum(const Spt& q, std::size_t node);

// True when 0 < p <= 1 on every edge and every node has out-sum <= 1.
bool is_valid_spt(const Spt& q);

struct BottleneckError : std::runtime_error {
    std::vector<std::size_t> witness_path;
    explicit BottleneckError(std::string what, std::vector<std::size_t> path)
        : std::runtime_error(std::move(what)), witness_path(std::move(path)) {}
};

// Restriction of q to a bottleneck node set: the subtree of all paths from
// the root to a bottleneck member. Throws BottleneckError (with a witness
// maximal path) when some maximal path contains zero or two members.
Spt restrict(const Spt& q, const std::set<std::size_t>& bottleneck);

// The split transformation: inserts a diamond node over the competing
// children (edge c/m, per-child 1/c) and a circular node over the
// non-competing children (edge (m-c)/m, per-child 1/(m-c)) of every internal
// node, omitting a gatherer with no children. Requires M_T context
// (mt_children/mt_competing and per-edge competing flags) on internal nodes.
Spt split(const Spt& q);

// ---------------------------------------------------------------------------
// Chain-tree construction for fixtures: materializes the uniform-attachment
// tree M_T of a TAS as an SPT over assembly sequences, with per-node option
// counts and per-child competing classification provided by `competing`.
// Stops a branch at terminal assemblies; throws std::length_error if the
// tree would exceed node_cap nodes.
struct MtContext {
    // Classify the attachment (p, t) onto `a` as competing or not.
    std::function<bool(const Assembly& a, Point p, TileSet::Id t)> competing;
};

Spt build_mt_tree(const Tas& tas, const MtContext& ctx, std::size_t node_cap);

}  // namespace snd

#endif
