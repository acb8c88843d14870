#pragma once

#include "polytran/bounds_spec.hpp"
#include "polytran/transport_matrix.hpp"

#include <utility>
#include <vector>

namespace polytran {

struct FlowArc {
    int from = 0;
    int to = 0;
    long long lower = 0;
    long long upper = 0;
    Rat cost;
    long long flow = 0;
};

/// Circulation network with integral arc bounds and exact rational costs.
struct FlowNetwork {
    int node_count = 0;
    std::vector<FlowArc> arcs;
    int source = -1;
    int sink = -1;

    int add_node() { return node_count++; }
    int add_arc(int from, int to, long long lower, long long upper, Rat cost = Rat(0));
};

/// Encodes an instance as a circulation: source->row arcs carry the row-sum
/// bounds, row->column arcs the [0,1] entry bounds (and the transport costs
/// when given), column->sink arcs the column-sum bounds, and the sink->source
/// return arc carries [0, sum of row maxima], or [k,k] when the instance
/// fixes the total sum.
FlowNetwork make_polytope_network(const BoundsSpec& spec);
FlowNetwork make_polytope_network(const BoundsSpec& spec, const TransportMatrix& cost);

/// Minimum-cost circulation by successive shortest paths over the
/// lower-bound transform; negative-cost arcs are saturated up front so the
/// initial residual costs are non-negative. Integral bounds give an integral
/// optimum. Throws Infeasible when no circulation satisfies the bounds.
FlowNetwork min_cost_flow(FlowNetwork net);

/// Reads the entry arcs of a solved polytope network back into a matrix.
TransportMatrix extract_transport(const FlowNetwork& net, const BoundsSpec& spec);

/// True iff the instance is non-empty, decided by circulation feasibility.
bool is_feasible(const BoundsSpec& spec);

/// Minimizes the total transport cost over the instance. The optimum is
/// attained at a 0/1 member; returns it with the exact objective value.
/// Throws Infeasible on empty instances.
std::pair<TransportMatrix, Rat> solve_min_cost(const TransportMatrix& cost, const BoundsSpec& spec);

}  // namespace polytran
