#include "kordered/ham_solver.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include <omp.h>

#include "kordered/errors.hpp"
#include "kordered/scycle_dp.hpp"

namespace kord {

void validate_sequence(const Graph& g, const OrderedSequence& s) {
    const std::size_t n = g.order();
    if (s.size() < 2 || s.size() > n) {
        throw PreconditionError("sequence length " + std::to_string(s.size()) + " outside [2, " +
                                std::to_string(n) + "]");
    }
    VertexSet seen(n);
    for (Vertex v : s.vertices) {
        if (v >= n) {
            throw PreconditionError("sequence vertex " + std::to_string(v) + " out of range");
        }
        if (seen.contains(v)) {
            throw PreconditionError("sequence repeats vertex " + std::to_string(v));
        }
        seen.insert(v);
    }
}

namespace {

void check_cap(const Graph& g, std::size_t cap) {
    if (g.order() > std::min(cap, dp::kMaxOrder + 1)) {
        throw PreconditionError("graph order " + std::to_string(g.order()) + " exceeds exact cap " +
                                std::to_string(std::min(cap, dp::kMaxOrder + 1)));
    }
}

bool use_layered(DpKernel kernel, const dp::Problem& p) {
    switch (kernel) {
    case DpKernel::Serial:
        return false;
    case DpKernel::Layered:
        return true;
    case DpKernel::Auto:
        break;
    }
    return p.width() >= 16 && !omp_in_parallel();
}

std::optional<HamCycle> run_cycle_dp(const Graph& g, std::span<const Vertex> anchors, DpKernel kernel,
                                     std::vector<std::uint32_t>& reach) {
    const dp::Problem p = dp::cycle_problem(g, anchors);
    if (use_layered(kernel, p)) {
        dp::solve_layered(p, reach);
    } else {
        dp::solve_serial(p, reach);
    }
    auto order = dp::extract(p, reach);
    if (!order) {
        return std::nullopt;
    }
    return HamCycle{std::move(*order)};
}

bool s_cycle_exists(const Graph& g, std::span<const Vertex> anchors, std::vector<std::uint32_t>& reach) {
    const dp::Problem p = dp::cycle_problem(g, anchors);
    dp::solve_serial(p, reach);
    return dp::accepts(p, reach);
}

} // namespace

std::optional<HamCycle> find_s_cycle(const Graph& g, const OrderedSequence& s, const ExactOptions& opts) {
    validate_sequence(g, s);
    check_cap(g, opts.exact_cap);
    if (g.order() < 3) {
        return std::nullopt;
    }
    std::vector<std::uint32_t> reach;
    return run_cycle_dp(g, s.vertices, opts.kernel, reach);
}

std::optional<HamCycle> find_hamiltonian_cycle(const Graph& g, const ExactOptions& opts) {
    check_cap(g, opts.exact_cap);
    if (g.order() < 3) {
        return std::nullopt;
    }
    const Vertex start = 0;
    std::vector<std::uint32_t> reach;
    return run_cycle_dp(g, std::span<const Vertex>(&start, 1), opts.kernel, reach);
}

std::string_view to_string(CycleDefect d) {
    switch (d) {
    case CycleDefect::None:
        return "ok";
    case CycleDefect::WrongLength:
        return "wrong length";
    case CycleDefect::MissingVertex:
        return "missing vertex";
    case CycleDefect::NonEdge:
        return "non-edge";
    case CycleDefect::OrderViolated:
        return "order violated";
    }
    return "unknown";
}

CycleCheck verify_hamiltonian_cycle(const Graph& g, const HamCycle& c) {
    const std::size_t n = g.order();
    if (c.order.size() != n || n < 3) {
        return {CycleDefect::WrongLength};
    }
    VertexSet seen(n);
    for (Vertex v : c.order) {
        if (v >= n || seen.contains(v)) {
            return {CycleDefect::MissingVertex};
        }
        seen.insert(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.adjacent(c.order[i], c.order[(i + 1) % n])) {
            return {CycleDefect::NonEdge};
        }
    }
    return {};
}

CycleCheck verify_s_cycle(const Graph& g, const OrderedSequence& s, const HamCycle& c) {
    if (const auto base = verify_hamiltonian_cycle(g, c); !base) {
        return base;
    }
    const std::size_t n = g.order();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos[c.order[i]] = i;
    }
    for (Vertex v : s.vertices) {
        if (v >= n) {
            return {CycleDefect::OrderViolated};
        }
    }
    auto in_order = [&](bool forward) {
        const std::size_t origin = pos[s.vertices.front()];
        std::size_t last = 0;
        for (std::size_t j = 1; j < s.size(); ++j) {
            const std::size_t p = pos[s.vertices[j]];
            const std::size_t offset = forward ? (p + n - origin) % n : (origin + n - p) % n;
            if (offset <= last) {
                return false;
            }
            last = offset;
        }
        return true;
    };
    if (in_order(true) || in_order(false)) {
        return {};
    }
    return {CycleDefect::OrderViolated};
}

namespace {

void check_k_range(const Graph& g, std::size_t k, std::size_t cap) {
    if (k < 2 || k > g.order()) {
        throw PreconditionError("k = " + std::to_string(k) + " outside [2, n]");
    }
    check_cap(g, cap);
    if (!find_hamiltonian_cycle(g, {cap, DpKernel::Auto})) {
        throw NotHamiltonianError("graph is not Hamiltonian");
    }
}

} // namespace

KOrderedResult is_k_ordered(const Graph& g, std::size_t k, const KOrderedOptions& opts) {
    if (!opts.parallel) {
        return reference::is_k_ordered_serial(g, k, opts.exact_cap);
    }
    check_k_range(g, k, opts.exact_cap);
    KOrderedResult result;
    result.ordered = true;
    if (k <= 3) {
        return result;
    }

    std::vector<std::vector<Vertex>> batch;
    batch.reserve(opts.batch);
    std::size_t processed = 0;

    auto flush = [&]() {
        const auto count = static_cast<std::int64_t>(batch.size());
        std::atomic<std::int64_t> first_failure{count};
#pragma omp parallel
        {
            std::vector<std::uint32_t> reach;
#pragma omp for schedule(dynamic, 8)
            for (std::int64_t i = 0; i < count; ++i) {
                if (i > first_failure.load(std::memory_order_relaxed)) {
                    continue;
                }
                if (!s_cycle_exists(g, batch[static_cast<std::size_t>(i)], reach)) {
                    std::int64_t cur = first_failure.load();
                    while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        }
        const std::int64_t fail = first_failure.load();
        if (fail < count) {
            result.ordered = false;
            result.witness = OrderedSequence{batch[static_cast<std::size_t>(fail)]};
            processed += static_cast<std::size_t>(fail) + 1;
        } else {
            processed += batch.size();
        }
        batch.clear();
        return fail == count;
    };

    for_each_canonical_sequence(g.order(), k, [&](const std::vector<Vertex>& seq) {
        batch.push_back(seq);
        if (batch.size() == opts.batch) {
            return flush();
        }
        return true;
    });
    if (result.ordered && !batch.empty()) {
        flush();
    }
    result.sequences_checked = processed;
    return result;
}

KOrderedResult reference::is_k_ordered_serial(const Graph& g, std::size_t k, std::size_t exact_cap) {
    check_k_range(g, k, exact_cap);
    KOrderedResult result;
    result.ordered = true;
    if (k <= 3) {
        return result;
    }
    std::vector<std::uint32_t> reach;
    for_each_canonical_sequence(g.order(), k, [&](const std::vector<Vertex>& seq) {
        ++result.sequences_checked;
        if (!s_cycle_exists(g, seq, reach)) {
            result.ordered = false;
            result.witness = OrderedSequence{seq};
            return false;
        }
        return true;
    });
    return result;
}

bool posa_condition(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3) {
        throw PreconditionError("posa_condition needs n >= 3");
    }
    auto d = degree_profile(g).degrees;
    std::sort(d.begin(), d.end());
    for (std::size_t k = 2; 2 * k <= n; ++k) {
        if (!(d[k - 2] > k)) {
            return false;
        }
    }
    return true;
}

bool bipartite_posa_condition(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) {
        throw PreconditionError("bipartite_posa_condition: sides overlap");
    }
    const std::size_t m = a.count();
    if (m != b.count() || m < 2) {
        throw PreconditionError("bipartite_posa_condition needs |A| == |B| >= 2");
    }
    auto side_ok = [&](const VertexSet& side, const VertexSet& other) {
        std::vector<std::size_t> d;
        side.for_each([&](Vertex v) { d.push_back(g.degree_into(v, other)); });
        std::sort(d.begin(), d.end());
        for (std::size_t j = 2; 2 * j <= m + 1; ++j) {
            if (!(d[j - 2] > j)) {
                return false;
            }
        }
        return true;
    };
    return side_ok(a, b) && side_ok(b, a);
}

} // namespace kord
