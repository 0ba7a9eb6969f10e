#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kordered/graph.hpp"

namespace kord {

// v_1, ..., v_k: distinct vertices whose cyclic order a Hamiltonian cycle must respect.
struct OrderedSequence {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    friend bool operator==(const OrderedSequence&, const OrderedSequence&) = default;
};

// Throws PreconditionError unless 2 <= k <= n and the entries are distinct vertices of g.
void validate_sequence(const Graph& g, const OrderedSequence& s);

// Permutation of all vertices, read cyclically.
struct HamCycle {
    std::vector<Vertex> order;
};

struct HamPath {
    std::vector<Vertex> order;

    Vertex front() const { return order.front(); }
    Vertex back() const { return order.back(); }
};

enum class DpKernel { Auto, Serial, Layered };

struct ExactOptions {
    std::size_t exact_cap = 24; // largest order the subset DP will accept
    DpKernel kernel = DpKernel::Auto;
};

// Exhaustive: nullopt means no Hamiltonian cycle meets S in cyclic order (either direction).
// Throws PreconditionError for an invalid S or n above the exact cap.
std::optional<HamCycle> find_s_cycle(const Graph& g, const OrderedSequence& s, const ExactOptions& opts = {});
std::optional<HamCycle> find_hamiltonian_cycle(const Graph& g, const ExactOptions& opts = {});

enum class CycleDefect { None, WrongLength, MissingVertex, NonEdge, OrderViolated };

std::string_view to_string(CycleDefect d);

struct CycleCheck {
    CycleDefect defect = CycleDefect::None;

    bool ok() const noexcept { return defect == CycleDefect::None; }
    explicit operator bool() const noexcept { return ok(); }
};

CycleCheck verify_hamiltonian_cycle(const Graph& g, const HamCycle& c);
// Valid Hamiltonian cycle that meets S in order, scanning once from v_1 in either direction.
CycleCheck verify_s_cycle(const Graph& g, const OrderedSequence& s, const HamCycle& c);

struct KOrderedOptions {
    std::size_t exact_cap = 24;
    bool parallel = true;
    std::size_t batch = 512; // sequences per parallel batch
};

struct KOrderedResult {
    bool ordered = false;
    std::optional<OrderedSequence> witness; // lexicographically first failing canonical sequence
    std::size_t sequences_checked = 0;
};

// Enumerates one representative per dihedral class of k-sequences: v_1 is the minimum entry and,
// for k >= 3, v_2 < v_k. Visitor returns false to stop early.
template <class Visitor>
void for_each_canonical_sequence(std::size_t n, std::size_t k, Visitor&& visit);

// Throws NotHamiltonianError when g has no Hamiltonian cycle, PreconditionError if k is out of
// range or n exceeds the exact cap.
KOrderedResult is_k_ordered(const Graph& g, std::size_t k, const KOrderedOptions& opts = {});

// d_{j-1} > j for every 2 <= j <= n/2 over the sorted degrees. Throws PreconditionError for n < 3.
bool posa_condition(const Graph& g);
// Side-wise version over the A-B edges, 2 <= j <= (m+1)/2 with m = |A| = |B|.
// Throws PreconditionError unless |A| == |B| >= 2 and the sides are disjoint.
bool bipartite_posa_condition(const Graph& g, const VertexSet& a, const VertexSet& b);

enum class PathStage { None, RotationExtension, ExactDp };

struct PathSearchOptions {
    std::size_t restarts = 50;
    std::size_t max_rotations = 0; // per restart; 0 picks 8 n^2
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    std::size_t exact_cap = 24;
    bool exact_fallback = true;
};

struct PathSearchResult {
    std::optional<HamPath> path;
    PathStage stage = PathStage::None; // which stage produced the path
    bool authoritative = false;        // true when found, or when the exact stage proved absence
};

// Rotation-extension with restarts, then the subset DP when n <= exact_cap.
// Throws PreconditionError for x == y or vertices out of range.
PathSearchResult find_hamiltonian_path(const Graph& g, Vertex x, Vertex y, const PathSearchOptions& opts = {});

bool is_hamiltonian_path(const Graph& g, const HamPath& p);

namespace reference {

// Single-threaded enumeration, kept as the oracle for the parallel batches.
KOrderedResult is_k_ordered_serial(const Graph& g, std::size_t k, std::size_t exact_cap = 24);

} // namespace reference

template <class Visitor>
void for_each_canonical_sequence(std::size_t n, std::size_t k, Visitor&& visit) {
    if (k < 2 || k > n) {
        return;
    }
    std::vector<Vertex> seq(k);
    std::vector<char> used(n, 0);
    bool stop = false;
    auto extend = [&](auto&& self, std::size_t pos) -> void {
        if (stop) {
            return;
        }
        if (pos == k) {
            if (k >= 3 && seq[1] > seq[k - 1]) {
                return;
            }
            if (!visit(static_cast<const std::vector<Vertex>&>(seq))) {
                stop = true;
            }
            return;
        }
        for (Vertex v = seq[0] + 1; v < n && !stop; ++v) {
            if (used[v]) {
                continue;
            }
            used[v] = 1;
            seq[pos] = v;
            self(self, pos + 1);
            used[v] = 0;
        }
    };
    for (Vertex first = 0; first < n && !stop; ++first) {
        seq[0] = first;
        used[first] = 1;
        extend(extend, 1);
        used[first] = 0;
    }
}

} // namespace kord
