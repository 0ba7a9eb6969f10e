#include "kordered/scycle_dp.hpp"

#include <array>
#include <bit>
#include <string>

#include <omp.h>

#include "kordered/errors.hpp"

namespace kord::dp {

namespace {

Problem base_problem(const Graph& g, Vertex start) {
    const std::size_t n = g.order();
    if (n > kMaxOrder + 1) {
        throw PreconditionError("subset DP limited to " + std::to_string(kMaxOrder + 1) + " vertices, got " +
                                std::to_string(n));
    }
    Problem p;
    p.order = n;
    p.start = start;
    p.adj.assign(n - 1, 0);
    p.required.assign(n - 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t row = 0;
        g.neighbors(v).for_each([&](Vertex u) {
            if (u != start) {
                row |= 1u << p.to_local(u);
            }
        });
        if (v == start) {
            p.start_adj = row;
        } else {
            p.adj[p.to_local(v)] = row;
        }
    }
    return p;
}

struct Binomials {
    std::array<std::array<std::uint64_t, 33>, 33> c{};
    Binomials() {
        for (std::size_t i = 0; i <= 32; ++i) {
            c[i][0] = 1;
            for (std::size_t j = 1; j <= i; ++j) {
                c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0);
            }
        }
    }
};

const Binomials& binomials() {
    static const Binomials b;
    return b;
}

// rank-th subset of size `size` in increasing numeric (colex) order.
std::uint32_t unrank_colex(std::uint64_t rank, std::size_t size) {
    const auto& c = binomials().c;
    std::uint32_t mask = 0;
    std::size_t x = 32;
    for (std::size_t i = size; i >= 1; --i) {
        while (c[x][i] > rank) {
            --x;
        }
        mask |= 1u << x;
        rank -= c[x][i];
    }
    return mask;
}

// Gosper's hack: next larger integer with the same popcount.
std::uint32_t next_same_popcount(std::uint32_t v) {
    const std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

std::uint32_t pull(const Problem& p, std::span<const std::uint32_t> reach, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
        const auto u = static_cast<std::uint32_t>(std::countr_zero(bits));
        const std::uint32_t prev = mask ^ (1u << u);
        if ((p.required[u] & prev) == p.required[u] && (p.adj[u] & reach[prev])) {
            out |= 1u << u;
        }
    }
    return out;
}

void seed_first_layer(const Problem& p, std::vector<std::uint32_t>& reach) {
    for (std::uint32_t u = 0; u < p.width(); ++u) {
        if (((p.start_adj >> u) & 1u) && p.required[u] == 0) {
            reach[1u << u] = 1u << u;
        }
    }
}

} // namespace

Problem cycle_problem(const Graph& g, std::span<const Vertex> anchors) {
    Problem p = base_problem(g, anchors.front());
    std::uint32_t seen = 0;
    for (std::size_t j = 1; j < anchors.size(); ++j) {
        const std::uint32_t local = p.to_local(anchors[j]);
        p.required[local] = seen;
        seen |= 1u << local;
    }
    p.close_cycle = true;
    return p;
}

Problem path_problem(const Graph& g, Vertex x, Vertex y) {
    Problem p = base_problem(g, x);
    const std::uint32_t local = p.to_local(y);
    p.required[local] = p.full() & ~(1u << local);
    p.close_cycle = false;
    return p;
}

void solve_serial(const Problem& p, std::vector<std::uint32_t>& reach) {
    const std::size_t states = std::size_t{1} << p.width();
    reach.assign(states, 0);
    seed_first_layer(p, reach);
    for (std::uint32_t mask = 1; mask < states; ++mask) {
        for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
            const auto v = static_cast<std::uint32_t>(std::countr_zero(ends));
            for (std::uint32_t cand = p.adj[v] & ~mask; cand; cand &= cand - 1) {
                const auto u = static_cast<std::uint32_t>(std::countr_zero(cand));
                if ((p.required[u] & mask) == p.required[u]) {
                    reach[mask | (1u << u)] |= 1u << u;
                }
            }
        }
    }
}

void solve_layered(const Problem& p, std::vector<std::uint32_t>& reach) {
    const std::size_t m = p.width();
    const std::size_t states = std::size_t{1} << m;
    reach.assign(states, 0);
    seed_first_layer(p, reach);
    const auto& c = binomials().c;
    constexpr std::uint64_t chunk = 4096;
    for (std::size_t layer = 2; layer <= m; ++layer) {
        const std::uint64_t total = c[m][layer];
        const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
#pragma omp parallel for schedule(dynamic, 1) if (chunks > 1)
        for (std::int64_t ch = 0; ch < chunks; ++ch) {
            const std::uint64_t begin = static_cast<std::uint64_t>(ch) * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            std::uint32_t mask = unrank_colex(begin, layer);
            for (std::uint64_t r = begin; r < end; ++r) {
                reach[mask] = pull(p, reach, mask);
                if (r + 1 < end) {
                    mask = next_same_popcount(mask);
                }
            }
        }
    }
}

bool accepts(const Problem& p, std::span<const std::uint32_t> reach) {
    if (p.width() == 0) {
        return false;
    }
    const std::uint32_t last = reach[p.full()];
    return p.close_cycle ? (last & p.start_adj) != 0 : last != 0;
}

std::optional<std::vector<Vertex>> extract(const Problem& p, std::span<const std::uint32_t> reach) {
    if (!accepts(p, reach)) {
        return std::nullopt;
    }
    std::uint32_t mask = p.full();
    std::uint32_t ends = reach[mask];
    if (p.close_cycle) {
        ends &= p.start_adj;
    }
    auto last = static_cast<std::uint32_t>(std::countr_zero(ends));
    std::vector<Vertex> order(p.width() + 1);
    std::size_t pos = p.width();
    while (true) {
        order[pos--] = p.to_host(last);
        const std::uint32_t prev = mask ^ (1u << last);
        if (prev == 0) {
            break;
        }
        last = static_cast<std::uint32_t>(std::countr_zero(reach[prev] & p.adj[last]));
        mask = prev;
    }
    order[0] = p.start;
    return order;
}

} // namespace kord::dp
