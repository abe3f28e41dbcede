#include "snd/exact.hpp"

#include <deque>
#include <unordered_map>

namespace snd {

ProducibleDag enumerate_dag(const Tas& tas, std::size_t size_cap, std::size_t node_cap) {
    if (size_cap < 1 || node_cap < 1) throw std::invalid_argument("caps must be >= 1");
    ProducibleDag dag;
    std::unordered_map<std::string, std::size_t> index;

    Assembly seed = tas.seed_assembly();
    index.emplace(seed.canonical_key(), 0);
    dag.nodes.push_back({seed, {}, 0});

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t id = queue.front();
        queue.pop_front();
        std::vector<Option> opts = frontier(tas, dag.nodes[id].assembly);
        dag.nodes[id].options = opts.size();
        if (opts.empty()) {
            dag.terminals.push_back(id);
            continue;
        }
        if (dag.nodes[id].assembly.size() >= size_cap) {
            // Options exist beyond the size cap: enumeration is cut short.
            dag.nodes[id].options = 0;
            dag.terminals.push_back(id);
            dag.partial = true;
            continue;
        }
        for (const Option& o : opts) {
            Assembly next = dag.nodes[id].assembly;
            next.place(o.point, o.tile);
            std::string key = next.canonical_key();
            auto it = index.find(key);
            std::size_t child;
            if (it != index.end()) {
                child = it->second;
            } else {
                if (dag.nodes.size() >= node_cap) {
                    dag.partial = true;
                    continue;
                }
                child = dag.nodes.size();
                index.emplace(std::move(key), child);
                dag.nodes.push_back({std::move(next), {}, 0});
                queue.push_back(child);
            }
            dag.nodes[id].succ.push_back(child);
        }
    }
    return dag;
}

std::vector<TerminalProbability> exact_terminal_probabilities(const ProducibleDag& dag) {
    // BFS order is topological: every edge grows the domain by one.
    std::vector<Rational> prob(dag.nodes.size(), Rational(0));
    prob[0] = 1;
    for (std::size_t id = 0; id < dag.nodes.size(); ++id) {
        const auto& node = dag.nodes[id];
        if (node.succ.empty()) continue;
        Rational share = prob[id] / Rational(static_cast<long long>(node.options));
        for (std::size_t child : node.succ) prob[child] += share;
    }
    std::vector<TerminalProbability> out;
    out.reserve(dag.terminals.size());
    for (std::size_t t : dag.terminals) out.push_back({t, prob[t]});
    return out;
}

Rational exact_shape_probability(const ProducibleDag& dag, const std::set<Point>& shape) {
    Rational total = 0;
    for (const auto& tp : exact_terminal_probabilities(dag)) {
        const Assembly& a = dag.nodes[tp.node].assembly;
        if (a.size() != shape.size()) continue;
        bool match = true;
        for (const auto& [p, t] : a.placements())
            if (!shape.count(p)) {
                match = false;
                break;
            }
        if (match) total += tp.probability;
    }
    return total;
}

Rational exact_tile_probability(const Tas& tas, const ProducibleDag& dag, Point p,
                                const std::string& name) {
    TileSet::Id want = tas.tiles().id_of(name);
    Rational total = 0;
    for (const auto& tp : exact_terminal_probabilities(dag))
        if (dag.nodes[tp.node].assembly.at(p) == want) total += tp.probability;
    return total;
}

// ---------------------------------------------------------------------------

Rational spt_probability(const Spt& q) {
    // Post-order accumulation: value(leaf) = 1, value(internal) =
    // sum p_i * value(child_i); Pr[Q] = value(root).
    std::vector<Rational> value(q.nodes.size(), Rational(0));
    std::vector<std::pair<std::size_t, bool>> stack{{q.root, false}};
    while (!stack.empty()) {
        auto [id, done] = stack.back();
        stack.pop_back();
        const SptNode& n = q.nodes[id];
        if (n.children.empty()) {
            value[id] = 1;
            continue;
        }
        if (!done) {
            stack.push_back({id, true});
            for (const auto& e : n.children) stack.push_back({e.child, false});
        } else {
            Rational acc = 0;
            for (const auto& e : n.children) acc += e.probability * value[e.child];
            value[id] = acc;
        }
    }
    return value[q.root];
}

Rational out_probability_sum(const Spt& q, std::size_t node) {
    Rational s = 0;
    for (const auto& e : q.nodes[node].children) s += e.probability;
    return s;
}

bool is_valid_spt(const Spt& q) {
    for (std::size_t id = 0; id < q.nodes.size(); ++id) {
        Rational s = 0;
        for (const auto& e : q.nodes[id].children) {
            if (e.probability <= 0 || e.probability > 1) return false;
            s += e.probability;
        }
        if (s > 1) return false;
    }
    return true;
}

Spt restrict(const Spt& q, const std::set<std::size_t>& bottleneck) {
    // Validate: every maximal path holds exactly one bottleneck member.
    {
        std::vector<std::size_t> path;
        std::function<void(std::size_t, int)> walk = [&](std::size_t id, int seen) {
            path.push_back(id);
            if (bottleneck.count(id)) ++seen;
            if (seen > 1)
                throw BottleneckError("maximal path meets the bottleneck twice", path);
            if (q.nodes[id].children.empty()) {
                if (seen == 0)
                    throw BottleneckError("maximal path misses the bottleneck", path);
            } else {
                for (const auto& e : q.nodes[id].children) walk(e.child, seen);
            }
            path.pop_back();
        };
        walk(q.root, 0);
    }

    Spt out;
    std::function<std::size_t(std::size_t)> copy = [&](std::size_t id) -> std::size_t {
        SptNode n = q.nodes[id];
        n.children.clear();
        std::size_t mine = out.add_node(std::move(n));
        if (!bottleneck.count(id)) {
            for (const auto& e : q.nodes[id].children) {
                // Paths through this child eventually meet the bottleneck
                // (validated above), so every child is kept.
                SptEdge ne = e;
                ne.child = copy(e.child);
                out.nodes[mine].children.push_back(std::move(ne));
            }
        }
        return mine;
    };
    out.root = copy(q.root);
    return out;
}

Spt split(const Spt& q) {
    Spt out;
    std::function<std::size_t(std::size_t)> go = [&](std::size_t id) -> std::size_t {
        const SptNode& n = q.nodes[id];
        std::size_t m_prime = n.children.size();
        if (m_prime == 0) {
            SptNode clone = n;
            clone.children.clear();
            return out.add_node(std::move(clone));
        }
        long long m = n.mt_children;
        long long c = n.mt_competing;
        if (m < static_cast<long long>(m_prime) || c < 0 || c > m)
            throw std::invalid_argument("split: node lacks consistent chain context");

        std::vector<SptEdge> diamond_children, circular_children;
        long long c_prime = 0;
        for (const auto& e : n.children) {
            std::size_t sub = go(e.child);
            if (e.competing) {
                ++c_prime;
                diamond_children.push_back({Rational(1, c), false, sub});
            } else {
                circular_children.push_back({Rational(1, m - c), false, sub});
            }
        }

        SptNode clone = n;
        clone.children.clear();
        std::size_t root = out.add_node(std::move(clone));
        if (c_prime > 0) {
            SptNode diamond;
            diamond.kind = SptKind::Diamond;
            diamond.children = std::move(diamond_children);
            std::size_t d = out.add_node(std::move(diamond));
            out.nodes[root].children.push_back({Rational(c, m), false, d});
        }
        if (static_cast<long long>(m_prime) - c_prime > 0) {
            SptNode circular;
            circular.kind = SptKind::Circular;
            circular.children = std::move(circular_children);
            std::size_t o = out.add_node(std::move(circular));
            out.nodes[root].children.push_back({Rational(m - c, m), false, o});
        }
        return root;
    };
    out.root = go(q.root);
    return out;
}

Spt build_mt_tree(const Tas& tas, const MtContext& ctx, std::size_t node_cap) {
    Spt tree;
    struct Item {
        Assembly assembly;
        std::size_t node;
    };

    SptNode root;
    root.label = "seed";
    tree.add_node(std::move(root));

    std::deque<Item> queue;
    queue.push_back({tas.seed_assembly(), 0});
    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();
        std::vector<Option> opts = frontier(tas, item.assembly);
        long long m = static_cast<long long>(opts.size());
        tree.nodes[item.node].mt_children = m;
        long long c = 0;
        for (const Option& o : opts) {
            bool comp = ctx.competing && ctx.competing(item.assembly, o.point, o.tile);
            if (comp) ++c;
            if (tree.nodes.size() >= node_cap)
                throw std::length_error("M_T tree exceeds the node cap");
            Assembly next = item.assembly;
            next.place(o.point, o.tile);
            SptNode child;
            child.label = tas.tiles()[o.tile].name + "@" + to_string(o.point);
            std::size_t cid = tree.add_node(std::move(child));
            tree.nodes[item.node].children.push_back({Rational(1, m), comp, cid});
            queue.push_back({std::move(next), cid});
        }
        tree.nodes[item.node].mt_competing = c;
    }
    return tree;
}

}  // namespace snd
