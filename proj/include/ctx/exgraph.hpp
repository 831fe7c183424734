#ifndef CTX_EXGRAPH_HPP
#define CTX_EXGRAPH_HPP

#include "ctx/rational.hpp"
#include "ctx/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctx {

/// Default vertex-count cap for the graph algorithms.
inline constexpr int kDefaultGraphCap = 128;

/// A vertex-weighted exclusivity graph: vertices are events, edges join pairs
/// that cannot co-occur. Adjacency is a symmetric bitset with empty diagonal.
struct ExclusivityGraph {
    int n = 0;
    std::vector<Rational> weights;                 // size n, nonnegative
    std::vector<std::string> labels;               // empty, or one label per vertex
    std::vector<std::vector<std::uint64_t>> adj;   // n rows of ceil(n/64) words

    bool adjacent(int i, int j) const {
        return (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) >> 6] >>
                (static_cast<std::size_t>(j) & 63)) & 1u;
    }
    std::size_t edge_count() const;
};

/// Builds and validates a graph; weights default to 1 when empty.
ExclusivityGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<Rational> weights = {},
                            std::vector<std::string> labels = {});

/// Exclusivity graph of a list of measurement events: two events are adjacent
/// exactly when some shared measurement gets different outcomes. Events must
/// be sections over cover contexts; duplicates are rejected. Vertex labels
/// are "m=o" pairs joined by commas.
ExclusivityGraph graph_from_events(const MeasurementScenario& scenario,
                                   const std::vector<Section>& events,
                                   std::vector<Rational> weights = {});

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, the list
/// in lexicographic order.
std::vector<std::vector<int>> maximal_cliques(const ExclusivityGraph& graph,
                                              int cap = kDefaultGraphCap);

struct IndependenceResult {
    Rational weight;
    std::vector<int> witness;  // lexicographically least among the optimal sets
};

/// Exact weighted independence number by branch and bound with a greedy
/// weighted-clique-cover upper bound.
IndependenceResult independence_number(const ExclusivityGraph& graph,
                                       int cap = kDefaultGraphCap);

struct ThetaOptions {
    double tolerance = 1e-9;  // stop when the residual drops below this
    int max_iterations = 200000;
    double rho = 1.0;    // splitting penalty
    double relax = 1.6;  // over-relaxation factor
};

struct ThetaResult {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Weighted Lovasz number through the semidefinite program
///   max sum_ij sqrt(w_i w_j) B_ij  s.t.  B psd, tr B = 1, B_ij = 0 on edges,
/// solved by an alternating-projection splitting scheme: projection onto the
/// semidefinite cone by eigendecomposition, projection onto the affine
/// constraints in closed form, with averaged correction terms. The residual
/// is the maximum of the constraint violations and the gap between the two
/// projected iterates. Throws ConvergenceError when the iteration cap is hit.
ThetaResult lovasz_theta(const ExclusivityGraph& graph, const ThetaOptions& options = {},
                         int cap = kDefaultGraphCap);

struct PackingResult {
    Rational value;
    RatVector witness;  // optimal vertex of the clique-constraint polytope
};

/// Fractional packing number: max w.p over p >= 0 with sum_{i in Q} p_i <= 1
/// for every maximal clique Q (non-maximal clique constraints are dominated).
/// Exact rational simplex; deterministic optimal vertex.
PackingResult fractional_packing(const ExclusivityGraph& graph, int cap = kDefaultGraphCap);

enum class HoleKind { None, OddHole, OddAntihole };

struct HoleWitness {
    HoleKind kind = HoleKind::None;
    std::vector<int> cycle;  // vertices in cycle order (in the complement for antiholes)
};

/// First induced odd cycle of length >= 5 in the graph, then in its
/// complement, searching lengths in increasing order; ordered DFS makes the
/// witness deterministic. HoleKind::None certifies both searches empty.
HoleWitness odd_hole_or_antihole(const ExclusivityGraph& graph, int cap = kDefaultGraphCap);

struct E1Verdict {
    bool member = false;
    std::optional<std::vector<int>> violated_clique;
};

/// Membership of p in the clique-constraint polytope, exact.
E1Verdict e1_membership(const ExclusivityGraph& graph, const RatVector& p);

/// Edge-complement; weights and labels are preserved. An involution.
ExclusivityGraph complement(const ExclusivityGraph& graph);

/// Advertised accuracy of the reported Lovasz number on fixture-scale graphs.
inline constexpr double kThetaReportedPrecision = 1e-4;

struct InvariantReport {
    Rational alpha;
    std::vector<int> alpha_witness;
    double theta = 0.0;
    double theta_precision = kThetaReportedPrecision;
    Rational alpha_star;
    RatVector packing_witness;
};

/// Computes all three invariants and checks the bound chain
/// alpha <= theta <= alpha_star within 1e-6 slack.
InvariantReport graph_invariants(const ExclusivityGraph& graph,
                                 const ThetaOptions& options = {},
                                 int cap = kDefaultGraphCap);

}  // namespace ctx

#endif  // CTX_EXGRAPH_HPP
