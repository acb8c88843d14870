#include "polytran/flow.hpp"

#include "polytran/errors.hpp"
#include "polytran/membership.hpp"

#include <optional>
#include <string>

namespace polytran {

int FlowNetwork::add_arc(int from, int to, long long lower, long long upper, Rat cost) {
    if (from < 0 || from >= node_count || to < 0 || to >= node_count) {
        throw std::invalid_argument("arc endpoint outside the node range");
    }
    if (lower < 0 || lower > upper) {
        throw std::invalid_argument("arc bounds must satisfy 0 <= lower <= upper");
    }
    arcs.push_back({from, to, lower, upper, std::move(cost), 0});
    return static_cast<int>(arcs.size()) - 1;
}

namespace {

FlowNetwork polytope_network(const BoundsSpec& spec, const TransportMatrix* cost) {
    if (cost && (cost->rows() != spec.n() || cost->cols() != spec.m())) {
        throw DimensionMismatch("cost matrix is " + std::to_string(cost->rows()) + "x" +
                                std::to_string(cost->cols()) + ", spec expects " + std::to_string(spec.n()) + "x" +
                                std::to_string(spec.m()));
    }
    FlowNetwork net;
    const int source = net.add_node();
    std::vector<int> row_nodes, col_nodes;
    for (int i = 0; i < spec.n(); ++i) row_nodes.push_back(net.add_node());
    for (int j = 0; j < spec.m(); ++j) col_nodes.push_back(net.add_node());
    const int sink = net.add_node();
    net.source = source;
    net.sink = sink;

    for (int i = 0; i < spec.n(); ++i) {
        net.add_arc(source, row_nodes[static_cast<std::size_t>(i)], spec.row_min(i), spec.row_max(i));
    }
    for (int i = 0; i < spec.n(); ++i) {
        for (int j = 0; j < spec.m(); ++j) {
            net.add_arc(row_nodes[static_cast<std::size_t>(i)], col_nodes[static_cast<std::size_t>(j)], 0, 1,
                        cost ? cost->at(i, j) : Rat(0));
        }
    }
    for (int j = 0; j < spec.m(); ++j) {
        net.add_arc(col_nodes[static_cast<std::size_t>(j)], sink, spec.col_min(j), spec.col_max(j));
    }
    if (spec.total()) {
        net.add_arc(sink, source, *spec.total(), *spec.total());
    } else {
        net.add_arc(sink, source, 0, spec.total_row_max());
    }
    return net;
}

// Residual edge pair; `flow` lives on the forward edge only.
struct ResidualEdge {
    int to = 0;
    long long cap = 0;
    Rat cost;
    int twin = 0;
};

struct Residual {
    std::vector<ResidualEdge> edges;
    std::vector<std::vector<int>> adjacency;

    explicit Residual(int nodes) : adjacency(static_cast<std::size_t>(nodes)) {}

    int add(int from, int to, long long cap, Rat cost) {
        const int id = static_cast<int>(edges.size());
        edges.push_back({to, cap, cost, id + 1});
        edges.push_back({from, 0, -edges[static_cast<std::size_t>(id)].cost, id});
        adjacency[static_cast<std::size_t>(from)].push_back(id);
        adjacency[static_cast<std::size_t>(to)].push_back(id + 1);
        return id;
    }
};

// Bellman-Ford shortest path; exact rational arc costs, deterministic edge
// order. Returns the parent edge of every reached node.
bool shortest_path(const Residual& graph, int from, int to, std::vector<int>& parent_edge) {
    const auto nodes = graph.adjacency.size();
    std::vector<std::optional<Rat>> dist(nodes);
    parent_edge.assign(nodes, -1);
    dist[static_cast<std::size_t>(from)] = Rat(0);
    for (std::size_t round = 0; round + 1 < nodes; ++round) {
        bool changed = false;
        for (std::size_t u = 0; u < nodes; ++u) {
            if (!dist[u]) continue;
            for (int e : graph.adjacency[u]) {
                const ResidualEdge& edge = graph.edges[static_cast<std::size_t>(e)];
                if (edge.cap <= 0) continue;
                Rat candidate = *dist[u] + edge.cost;
                auto& entry = dist[static_cast<std::size_t>(edge.to)];
                if (!entry || candidate < *entry) {
                    entry = std::move(candidate);
                    parent_edge[static_cast<std::size_t>(edge.to)] = e;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    return static_cast<bool>(dist[static_cast<std::size_t>(to)]);
}

}  // namespace

FlowNetwork min_cost_flow(FlowNetwork net) {
    const int super_source = net.node_count;
    const int super_sink = net.node_count + 1;
    Residual graph(net.node_count + 2);

    // Lower bounds become node imbalances; negative-cost residual capacity is
    // saturated up front so successive shortest paths stay non-negative.
    std::vector<long long> imbalance(static_cast<std::size_t>(net.node_count + 2), 0);
    std::vector<int> arc_edge(net.arcs.size(), -1);
    std::vector<long long> base_flow(net.arcs.size(), 0);
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
        const FlowArc& arc = net.arcs[a];
        long long preset = arc.lower;
        if (arc.cost < 0) preset = arc.upper;
        base_flow[a] = preset;
        imbalance[static_cast<std::size_t>(arc.from)] -= preset;
        imbalance[static_cast<std::size_t>(arc.to)] += preset;
        arc_edge[a] = graph.add(arc.from, arc.to, arc.upper - preset, arc.cost);
        // Cancelling preset flow above the lower bound is allowed at -cost.
        graph.edges[static_cast<std::size_t>(arc_edge[a]) + 1].cap = preset - arc.lower;
    }

    long long required = 0;
    for (int v = 0; v < net.node_count; ++v) {
        const long long b = imbalance[static_cast<std::size_t>(v)];
        if (b > 0) {
            graph.add(super_source, v, b, Rat(0));
            required += b;
        } else if (b < 0) {
            graph.add(v, super_sink, -b, Rat(0));
        }
    }

    long long routed = 0;
    std::vector<int> parent(static_cast<std::size_t>(net.node_count + 2), -1);
    while (routed < required) {
        if (!shortest_path(graph, super_source, super_sink, parent)) break;
        long long push = required - routed;
        for (int v = super_sink; v != super_source;) {
            const ResidualEdge& edge = graph.edges[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            push = std::min(push, edge.cap);
            v = graph.edges[static_cast<std::size_t>(edge.twin)].to;
        }
        for (int v = super_sink; v != super_source;) {
            ResidualEdge& edge = graph.edges[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            edge.cap -= push;
            graph.edges[static_cast<std::size_t>(edge.twin)].cap += push;
            v = graph.edges[static_cast<std::size_t>(edge.twin)].to;
        }
        routed += push;
    }
    if (routed < required) {
        throw Infeasible("no circulation satisfies the arc bounds");
    }

    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
        const FlowArc& arc = net.arcs[a];
        const ResidualEdge& forward = graph.edges[static_cast<std::size_t>(arc_edge[a])];
        long long preset = arc.cost < 0 ? arc.upper : arc.lower;
        net.arcs[a].flow = preset + ((arc.upper - preset) - forward.cap);
    }
    return net;
}

FlowNetwork make_polytope_network(const BoundsSpec& spec) { return polytope_network(spec, nullptr); }

FlowNetwork make_polytope_network(const BoundsSpec& spec, const TransportMatrix& cost) {
    return polytope_network(spec, &cost);
}

TransportMatrix extract_transport(const FlowNetwork& net, const BoundsSpec& spec) {
    TransportMatrix result(spec.n(), spec.m());
    for (int i = 0; i < spec.n(); ++i) {
        for (int j = 0; j < spec.m(); ++j) {
            const auto arc = static_cast<std::size_t>(spec.n() + i * spec.m() + j);
            result.at(i, j) = net.arcs[arc].flow;
        }
    }
    return result;
}

bool is_feasible(const BoundsSpec& spec) {
    try {
        min_cost_flow(make_polytope_network(spec));
        return true;
    } catch (const Infeasible&) {
        return false;
    }
}

std::pair<TransportMatrix, Rat> solve_min_cost(const TransportMatrix& cost, const BoundsSpec& spec) {
    const FlowNetwork solved = min_cost_flow(make_polytope_network(spec, cost));
    TransportMatrix plan = extract_transport(solved, spec);
    if (!plan.is_integral() || !is_member(plan, spec)) {
        throw InternalError("solver produced a non-integral or infeasible assignment");
    }
    Rat objective = 0;
    for (int i = 0; i < spec.n(); ++i) {
        for (int j = 0; j < spec.m(); ++j) {
            if (plan.at(i, j) == 1) objective += cost.at(i, j);
        }
    }
    return {std::move(plan), std::move(objective)};
}

}  // namespace polytran
