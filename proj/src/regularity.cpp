#include "kordered/regularity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>

#include <omp.h>

#include "kordered/errors.hpp"
#include "kordered/random.hpp"

namespace kord {

std::string_view to_string(RegularityMode mode) { return mode == RegularityMode::Exact ? "exact" : "sampled"; }

namespace {

void check_pair(const VertexSet& a, const VertexSet& b, const Rational& eps) {
    if (a.empty() || b.empty()) {
        throw PreconditionError("regularity: both sides must be nonempty");
    }
    if (a.intersects(b)) {
        throw PreconditionError("regularity: sides must be disjoint");
    }
    if (!(eps > Rational(0))) {
        throw PreconditionError("regularity: epsilon must be positive");
    }
}

// Smallest subset size s with s > eps * side.
std::size_t min_size(const Rational& eps, std::size_t side) {
    const __int128 prod = static_cast<__int128>(eps.num()) * static_cast<__int128>(side);
    return static_cast<std::size_t>(prod / eps.den()) + 1;
}

// Shared integer test: |e_xy * pq - e * xy| >= eps * xy * pq.
struct DeviationTest {
    std::int64_t e;
    std::int64_t pq;
    std::int64_t num;
    std::int64_t den;

    bool fails(std::int64_t e_xy, std::int64_t xy) const {
        const __int128 diff = static_cast<__int128>(e_xy) * pq - static_cast<__int128>(e) * xy;
        const __int128 mag = diff < 0 ? -diff : diff;
        return mag * den >= static_cast<__int128>(num) * xy * pq;
    }

    Rational deviation(std::int64_t e_xy, std::int64_t xy) const {
        return abs(Rational(e_xy, xy) - Rational(e, pq));
    }
};

struct ExactSetup {
    std::vector<Vertex> av;
    std::vector<Vertex> bv;
    std::vector<std::uint32_t> nbr; // nbr[i]: bitmask over bv of the neighbours of av[i]
    std::size_t sa = 0;
    std::size_t sb = 0;
    DeviationTest test{};
};

ExactSetup setup(const Graph& g, const VertexSet& a, const VertexSet& b, const Rational& eps) {
    ExactSetup s;
    s.av = a.to_vector();
    s.bv = b.to_vector();
    std::int64_t e = 0;
    for (Vertex u : s.av) {
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < s.bv.size(); ++j) {
            if (g.adjacent(u, s.bv[j])) {
                mask |= 1u << j;
            }
        }
        s.nbr.push_back(mask);
        e += std::popcount(mask);
    }
    s.sa = min_size(eps, s.av.size());
    s.sb = min_size(eps, s.bv.size());
    s.test = {e, static_cast<std::int64_t>(s.av.size() * s.bv.size()), eps.num(), eps.den()};
    return s;
}

// First failing X for a fixed Y, by ascending X mask; 0 if none. `sums` is scratch of size 2^|A|.
std::uint32_t scan_y(const ExactSetup& s, std::uint32_t y, std::vector<std::int64_t>& sums, std::int64_t& e_xy) {
    const std::size_t p = s.av.size();
    std::int64_t counts[32];
    for (std::size_t i = 0; i < p; ++i) {
        counts[i] = std::popcount(s.nbr[i] & y);
    }
    const std::int64_t ysize = std::popcount(y);
    sums[0] = 0;
    const std::uint32_t limit = 1u << p;
    for (std::uint32_t x = 1; x < limit; ++x) {
        sums[x] = sums[x & (x - 1)] + counts[std::countr_zero(x)];
        const std::size_t xs = static_cast<std::size_t>(std::popcount(x));
        if (xs >= s.sa && s.test.fails(sums[x], static_cast<std::int64_t>(xs) * ysize)) {
            e_xy = sums[x];
            return x;
        }
    }
    return 0;
}

RegularityWitness make_witness(const ExactSetup& s, std::uint32_t x, std::uint32_t y, std::int64_t e_xy) {
    RegularityWitness w;
    for (std::size_t i = 0; i < s.av.size(); ++i) {
        if (x >> i & 1u) {
            w.x.push_back(s.av[i]);
        }
    }
    for (std::size_t j = 0; j < s.bv.size(); ++j) {
        if (y >> j & 1u) {
            w.y.push_back(s.bv[j]);
        }
    }
    w.deviation = s.test.deviation(e_xy, static_cast<std::int64_t>(w.x.size() * w.y.size()));
    return w;
}

RegularityVerdict exact_serial(const ExactSetup& s) {
    RegularityVerdict v;
    if (s.sa > s.av.size() || s.sb > s.bv.size()) {
        return v;
    }
    std::vector<std::int64_t> sums(std::size_t{1} << s.av.size());
    const std::uint32_t limit = 1u << s.bv.size();
    for (std::uint32_t y = 1; y < limit; ++y) {
        if (static_cast<std::size_t>(std::popcount(y)) < s.sb) {
            continue;
        }
        std::int64_t e_xy = 0;
        if (const std::uint32_t x = scan_y(s, y, sums, e_xy)) {
            v.regular = false;
            v.witness = make_witness(s, x, y, e_xy);
            return v;
        }
    }
    return v;
}

RegularityVerdict exact_parallel(const ExactSetup& s) {
    RegularityVerdict v;
    if (s.sa > s.av.size() || s.sb > s.bv.size()) {
        return v;
    }
    const std::uint32_t limit = 1u << s.bv.size();
    std::atomic<std::uint32_t> best_y{limit};
    std::uint32_t best_x = 0;
    std::int64_t best_e = 0;
#pragma omp parallel
    {
        std::vector<std::int64_t> sums(std::size_t{1} << s.av.size());
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t yi = 1; yi < static_cast<std::int64_t>(limit); ++yi) {
            const auto y = static_cast<std::uint32_t>(yi);
            if (y >= best_y.load(std::memory_order_relaxed) || static_cast<std::size_t>(std::popcount(y)) < s.sb) {
                continue;
            }
            std::int64_t e_xy = 0;
            if (const std::uint32_t x = scan_y(s, y, sums, e_xy)) {
#pragma omp critical(kord_regularity_best)
                {
                    if (y < best_y.load()) {
                        best_y.store(y);
                        best_x = x;
                        best_e = e_xy;
                    }
                }
            }
        }
    }
    if (best_y.load() < limit) {
        v.regular = false;
        v.witness = make_witness(s, best_x, best_y.load(), best_e);
    }
    return v;
}

std::vector<Vertex> random_subset(const std::vector<Vertex>& side, std::size_t lo, std::mt19937_64& rng) {
    const std::size_t size = lo + uniform_below(rng, side.size() - lo + 1);
    std::vector<Vertex> pool = side;
    for (std::size_t i = 0; i < size; ++i) {
        std::swap(pool[i], pool[i + uniform_below(rng, pool.size() - i)]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

RegularityVerdict sampled(const Graph& g, const VertexSet& a, const VertexSet& b, const Rational& eps,
                          const RegularityOptions& opts) {
    RegularityVerdict v;
    v.mode = RegularityMode::Sampled;
    const std::vector<Vertex> av = a.to_vector();
    const std::vector<Vertex> bv = b.to_vector();
    const std::size_t sa = min_size(eps, av.size());
    const std::size_t sb = min_size(eps, bv.size());
    if (sa > av.size() || sb > bv.size()) {
        return v;
    }
    const DeviationTest test{static_cast<std::int64_t>(edges_between(g, a, b)),
                             static_cast<std::int64_t>(av.size() * bv.size()), eps.num(), eps.den()};
    std::mt19937_64 rng(opts.seed);
    for (std::size_t t = 0; t < opts.samples; ++t) {
        auto x = random_subset(av, sa, rng);
        auto y = random_subset(bv, sb, rng);
        const VertexSet yset(g.order(), std::span<const Vertex>(y));
        std::int64_t e_xy = 0;
        for (Vertex u : x) {
            e_xy += static_cast<std::int64_t>(g.degree_into(u, yset));
        }
        const auto xy = static_cast<std::int64_t>(x.size() * y.size());
        if (test.fails(e_xy, xy)) {
            v.regular = false;
            v.witness = RegularityWitness{std::move(x), std::move(y), test.deviation(e_xy, xy)};
            return v;
        }
    }
    return v;
}

} // namespace

RegularityVerdict is_epsilon_regular(const Graph& g, const VertexSet& a, const VertexSet& b, const Rational& eps,
                                     const RegularityOptions& opts) {
    check_pair(a, b, eps);
    const std::size_t cap = std::min<std::size_t>(opts.exact_cap, 20);
    if (opts.mode == RegularityMode::Exact) {
        if (a.count() <= cap && b.count() <= cap) {
            const ExactSetup s = setup(g, a, b, eps);
            return opts.parallel && !omp_in_parallel() ? exact_parallel(s) : exact_serial(s);
        }
        RegularityVerdict v = sampled(g, a, b, eps, opts);
        v.downgraded = true;
        return v;
    }
    return sampled(g, a, b, eps, opts);
}

RegularityVerdict is_super_regular(const Graph& g, const VertexSet& a, const VertexSet& b, const Rational& eps,
                                   const Rational& delta, const RegularityOptions& opts) {
    check_pair(a, b, eps);
    std::optional<Vertex> failing;
    auto check_side = [&](const VertexSet& side, const VertexSet& other) {
        const Rational bound = delta * Rational(static_cast<std::int64_t>(other.count()));
        side.for_each([&](Vertex u) {
            const Rational deg(static_cast<std::int64_t>(g.degree_into(u, other)));
            if (!(deg > bound) && (!failing || u < *failing)) {
                failing = u;
            }
        });
    };
    check_side(a, b);
    check_side(b, a);
    if (failing) {
        RegularityVerdict v;
        v.regular = false;
        v.failing_vertex = failing;
        const bool exact = opts.mode == RegularityMode::Exact && a.count() <= opts.exact_cap && b.count() <= opts.exact_cap;
        v.mode = exact ? RegularityMode::Exact : RegularityMode::Sampled;
        v.downgraded = opts.mode == RegularityMode::Exact && !exact;
        return v;
    }
    return is_epsilon_regular(g, a, b, eps, opts);
}

namespace reference {

RegularityVerdict is_epsilon_regular_serial(const Graph& g, const VertexSet& a, const VertexSet& b,
                                            const Rational& eps) {
    check_pair(a, b, eps);
    if (a.count() > 20 || b.count() > 20) {
        throw PreconditionError("regularity: serial reference is limited to 20 vertices per side");
    }
    return exact_serial(setup(g, a, b, eps));
}

} // namespace reference

} // namespace kord
