#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kordered/graph.hpp"

namespace kord {

struct ExperimentRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t min_degree = 0;
    std::string outcome;
    std::vector<Vertex> witness;
    double wall_ms = 0.0;  // emitted only when timings are requested
    nlohmann::json extra = nlohmann::json::object(); // experiment-specific columns
};

struct ExperimentReport {
    std::string experiment;
    std::uint64_t seed = 0;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::string> extra_columns; // keys of ExperimentRow::extra written to CSV
    std::vector<ExperimentRow> rows;
    nlohmann::json aggregate = nlohmann::json::object();
    std::vector<std::string> notes;
    bool violation = false; // a row contradicted what the experiment asserts
};

// One CSV line per row. Witnesses are space-separated vertex lists.
std::string to_csv(const ExperimentReport& report, bool timings = false);
nlohmann::json to_json(const ExperimentReport& report, bool timings = false);

// deg(u) + deg(v) >= n + 2k - 6 for every nonadjacent pair. Throws PreconditionError for k < 3.
bool ore_condition(const Graph& g, std::size_t k);

// Every n in [n_lo, n_hi] and 2 <= k <= n/2: the sharpness graph must have minimum degree
// ordered_degree_bound(n, k) - 1 and its witness must admit no Hamiltonian S-cycle.
// Throws PreconditionError if n_lo < 4, n_lo > n_hi or n_hi exceeds exact_cap.
ExperimentReport sharpness_sweep(std::size_t n_lo, std::size_t n_hi, std::size_t exact_cap = 24);

struct ScanOptions {
    std::size_t n = 12;
    std::size_t k = 4;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    std::size_t exact_cap = 24;
    std::vector<std::size_t> deltas; // empty: bound-2 .. bound+1 and n-1
};

// Random graphs with minimum degree at least each target; reports the k-ordered fraction per target.
ExperimentReport threshold_scan(const ScanOptions& opts);

enum class ExtremalKind { Sparse, Dense };

struct DemoOptions {
    ExtremalKind kind = ExtremalKind::Sparse;
    std::size_t n = 60;
    std::size_t k = 4;
    std::uint64_t seed = 1;
    std::size_t instances = 1;
    std::optional<std::size_t> imbalance; // dense only; default n mod 2
    bool timings = false;                 // stage timings inside each row's trace
};

// Generates instances, draws a random S for each and runs the matching extremal solver.
// Throws ConstructionError when the generator cannot meet the parameters.
ExperimentReport extremal_demo(const DemoOptions& opts);

} // namespace kord
