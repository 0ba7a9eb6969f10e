#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kordered/graph.hpp"
#include "kordered/ham_solver.hpp"
#include "kordered/rational.hpp"

namespace kord {

// 0 < kappa < epsilon < d < beta < alpha < 1.
struct ExtremalParams {
    Rational kappa{1, 10000};
    Rational epsilon{5, 10000};
    Rational d{2, 1000};
    Rational beta{1, 100};
    Rational alpha{1, 10};

    // Throws PreconditionError unless the ladder is strict.
    void validate() const;
};

enum class ExtremalCase { Dense, Impossible, Sparse };

std::string_view to_string(ExtremalCase c);

struct Classification {
    ExtremalCase label = ExtremalCase::Impossible;
    std::size_t overlap = 0; // |A n B|
    // Disjoint pair handed to the matching solver. Dense: (A n B, V - (A n B)).
    // Sparse: (A - B, B - A). Empty for Impossible.
    VertexSet a;
    VertexSet b;
};

// Needs (1-beta) n/2 <= |A|, |B| <= n/2 and d(A, B) < beta, with the density taken over ordered
// adjacent pairs when A and B overlap. Throws HypothesisError otherwise.
Classification classify_extremal(const Graph& g, const VertexSet& a, const VertexSet& b, const ExtremalParams& params);

struct ClusterPair {
    VertexSet a;
    VertexSet b;
    VertexSet exc_a;     // removed from A for their cross degree
    VertexSet exc_b;
    VertexSet leftovers; // vertices outside the original A u B
    std::size_t low_degree = 0; // vertices below (1 - alpha^(1/4)) n/2 after reassignment
};

// Exc(A) = {x in A : deg(x, B) >= sqrt(alpha)|B|} (and symmetrically); exceptional and leftover
// vertices go to the side holding more of their neighbours, ties to A. low_degree counts
// within-side degrees.
ClusterPair cleanup_sparse(const Graph& g, const VertexSet& a, const VertexSet& b, const ExtremalParams& params);

// Exc(A) = {x in A : deg(x, B) < (1 - sqrt(alpha))|B|}; reassignment goes to the side holding
// fewer neighbours, ties to B. low_degree counts cross degrees.
ClusterPair cleanup_dense(const Graph& g, const VertexSet& a, const VertexSet& b, const ExtremalParams& params);

struct PathSystem {
    std::vector<std::vector<Vertex>> paths; // paths[i] runs from pairs[i].first to pairs[i].second
    VertexSet used;

    bool internally_disjoint() const;
};

class RoutingError : public std::runtime_error {
public:
    RoutingError(std::size_t index, Edge pair)
        : std::runtime_error("cannot route pair #" + std::to_string(index) + " (" + std::to_string(pair.first) +
                             ", " + std::to_string(pair.second) + ")"),
          index_(index), pair_(pair) {}

    std::size_t index() const noexcept { return index_; }
    Edge pair() const noexcept { return pair_; }

private:
    std::size_t index_;
    Edge pair_;
};

// Greedy internally disjoint routing inside `host`, pairs taken in input order, each by BFS
// shortest path of length <= max_len. Interior vertices avoid `forbidden`, every pair endpoint
// and every earlier path. Throws PreconditionError if pairs.size() > pair_budget or an endpoint
// lies outside host; RoutingError names the first pair that cannot be routed.
PathSystem connecting_paths(const Graph& g, const VertexSet& host, std::span<const Edge> pairs, std::size_t max_len,
                            std::size_t pair_budget, const VertexSet& forbidden);

struct StageRecord {
    std::string name;
    double millis = 0.0;
};

struct SolveTrace {
    std::string kind; // "sparse" or "dense"
    std::vector<StageRecord> stages;
    std::size_t exceptional = 0;
    std::size_t low_degree = 0;
    std::size_t transitions = 0;          // A/B changes along S (sparse)
    std::size_t bridge_matching_size = 0; // nu(H) (sparse)
    std::size_t bridges_used = 0;
    std::size_t imbalance = 0;            // r after balancing (dense)
    std::size_t balancing_moves = 0;
    std::vector<Edge> balancing_matching; // the r-matching threaded into the S-path (dense)
    bool low_inner_degree = true;         // Delta(G|_A) < alpha^(1/4)|A| held (dense)
    bool parity_vertex_added = false;
    std::vector<std::size_t> path_lengths;
    std::size_t retries = 0;
    bool certified = false;
};

nlohmann::json to_json(const SolveTrace& trace, bool with_timings);

// A stage gave up. snapshot() is a JSON document describing the state at that point.
class SolverError : public std::runtime_error {
public:
    SolverError(std::string stage, const std::string& message, nlohmann::json snapshot)
        : std::runtime_error(stage + ": " + message), stage_(std::move(stage)), snapshot_(std::move(snapshot)) {}

    const std::string& stage() const noexcept { return stage_; }
    const nlohmann::json& snapshot() const noexcept { return snapshot_; }

private:
    std::string stage_;
    nlohmann::json snapshot_;
};

struct ExtremalOptions {
    ExtremalParams params;
    bool check_hypotheses = true; // structural and density hypotheses plus the degree bound
    std::size_t patch_retries = 10;
    std::uint64_t seed = 1;
};

struct ExtremalSolution {
    HamCycle cycle; // always passes verify_s_cycle
    SolveTrace trace;
};

// Sparse cut between disjoint A and B (d(A, B) < alpha): bridge matching, five-case
// assembly of a short S-cycle, then absorption of the untouched vertices.
ExtremalSolution solve_extremal_sparse(const Graph& g, const VertexSet& a, const VertexSet& b,
                                       const OrderedSequence& s, const ExtremalOptions& opts = {});

// Near-complete bipartite A, B (d(A, B) > 1 - alpha): balancing, r-matching, S-path, bipartite closure.
ExtremalSolution solve_extremal_dense(const Graph& g, const VertexSet& a, const VertexSet& b,
                                      const OrderedSequence& s, const ExtremalOptions& opts = {});

// classify_extremal, then the matching solver. Impossible raises HypothesisError.
ExtremalSolution solve_extremal(const Graph& g, const VertexSet& a, const VertexSet& b, const OrderedSequence& s,
                                const ExtremalOptions& opts = {});

} // namespace kord
