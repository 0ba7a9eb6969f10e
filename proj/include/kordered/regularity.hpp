#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kordered/graph.hpp"
#include "kordered/rational.hpp"

namespace kord {

enum class RegularityMode { Exact, Sampled };

std::string_view to_string(RegularityMode mode);

struct RegularityWitness {
    std::vector<Vertex> x; // subset of A, ascending
    std::vector<Vertex> y; // subset of B, ascending
    Rational deviation;    // |d(X, Y) - d(A, B)|
};

struct RegularityVerdict {
    bool regular = true;
    std::optional<RegularityWitness> witness;
    std::optional<Vertex> failing_vertex; // super-regularity: a vertex whose cross degree is too small
    RegularityMode mode = RegularityMode::Exact;
    bool downgraded = false; // exact was requested but a side exceeded exact_cap
};

struct RegularityOptions {
    RegularityMode mode = RegularityMode::Exact;
    std::size_t exact_cap = 14;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    bool parallel = true;
};

// (A, B) is epsilon-regular when every X in A, Y in B with |X| > eps|A| and |Y| > eps|B|
// has |d(X, Y) - d(A, B)| < eps. Exact mode enumerates every such pair and reports the
// witness with the smallest (Y, X) bitmask; sampled mode only ever reports irregular with a
// witness. Throws PreconditionError unless A, B are disjoint and nonempty and eps > 0.
RegularityVerdict is_epsilon_regular(const Graph& g, const VertexSet& a, const VertexSet& b, const Rational& eps,
                                     const RegularityOptions& opts = {});

// Epsilon-regular, deg(a, B) > delta|B| for every a in A and deg(b, A) > delta|A| for every b in B.
// Degrees are checked first; the lowest failing vertex is reported.
RegularityVerdict is_super_regular(const Graph& g, const VertexSet& a, const VertexSet& b, const Rational& eps,
                                   const Rational& delta, const RegularityOptions& opts = {});

namespace reference {

// Single-threaded exact enumeration, same witness order as the parallel version.
RegularityVerdict is_epsilon_regular_serial(const Graph& g, const VertexSet& a, const VertexSet& b,
                                            const Rational& eps);

} // namespace reference

} // namespace kord
