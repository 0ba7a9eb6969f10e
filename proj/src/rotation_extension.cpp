#include <algorithm>
#include <random>
#include <string>

#include "kordered/errors.hpp"
#include "kordered/ham_solver.hpp"
#include "kordered/random.hpp"
#include "kordered/scycle_dp.hpp"

namespace kord {

namespace {

// Posa rotation-extension for a Hamiltonian x-y path. The path grows from x over V - {y};
// y is attached once everything else is covered and the current end sees it.
class RotationExtension {
public:
    RotationExtension(const Graph& g, Vertex x, Vertex y, std::uint64_t seed)
        : g_(g), n_(g.order()), x_(x), y_(y), rng_(seed), pos_(n_, kNoVertex), on_path_(n_) {}

    std::optional<HamPath> attempt(std::size_t max_rotations) {
        reset();
        std::size_t rotations = 0;
        while (true) {
            const Vertex end = path_.back();
            if (path_.size() == n_ - 1) {
                if (g_.adjacent(end, y_)) {
                    path_.push_back(y_);
                    return HamPath{path_};
                }
                if (!rotate([&](Vertex new_end) { return g_.adjacent(new_end, y_); })) {
                    return std::nullopt;
                }
            } else if (const VertexSet open = free_neighbours(end); !open.empty()) {
                append(pick_extension(open));
                continue;
            } else if (!rotate([&](Vertex new_end) { return !free_neighbours(new_end).empty(); })) {
                return std::nullopt;
            }
            if (++rotations > max_rotations) {
                return std::nullopt;
            }
        }
    }

private:
    void reset() {
        path_.assign(1, x_);
        std::fill(pos_.begin(), pos_.end(), kNoVertex);
        on_path_ = VertexSet(n_);
        pos_[x_] = 0;
        on_path_.insert(x_);
    }

    VertexSet free_neighbours(Vertex v) const {
        VertexSet open = g_.neighbors(v) - on_path_;
        open.erase(y_);
        return open;
    }

    // Fewest onward options first, ties broken at random.
    Vertex pick_extension(const VertexSet& open) {
        std::vector<Vertex> best;
        std::size_t best_score = SIZE_MAX;
        open.for_each([&](Vertex v) {
            const std::size_t score = free_neighbours(v).count();
            if (score < best_score) {
                best_score = score;
                best.assign(1, v);
            } else if (score == best_score) {
                best.push_back(v);
            }
        });
        return best[uniform_below(rng_, best.size())];
    }

    void append(Vertex v) {
        pos_[v] = static_cast<Vertex>(path_.size());
        path_.push_back(v);
        on_path_.insert(v);
    }

    // Rotation at pivot path[i] (a neighbour of the end): reverse path[i+1..], new end path[i+1].
    template <class Preferred>
    bool rotate(Preferred&& preferred) {
        const Vertex end = path_.back();
        const std::size_t last = path_.size() - 1;
        std::vector<std::size_t> any;
        std::vector<std::size_t> good;
        g_.neighbors(end).for_each([&](Vertex p) {
            const Vertex i = pos_[p];
            if (i == kNoVertex || i + 1 >= last) {
                return;
            }
            any.push_back(i);
            if (preferred(path_[i + 1])) {
                good.push_back(i);
            }
        });
        if (any.empty()) {
            return false;
        }
        const auto& pool = good.empty() ? any : good;
        const std::size_t i = pool[uniform_below(rng_, pool.size())];
        std::reverse(path_.begin() + static_cast<std::ptrdiff_t>(i) + 1, path_.end());
        for (std::size_t j = i + 1; j < path_.size(); ++j) {
            pos_[path_[j]] = static_cast<Vertex>(j);
        }
        return true;
    }

    const Graph& g_;
    std::size_t n_;
    Vertex x_;
    Vertex y_;
    std::mt19937_64 rng_;
    std::vector<Vertex> path_;
    std::vector<Vertex> pos_;
    VertexSet on_path_;
};

} // namespace

bool is_hamiltonian_path(const Graph& g, const HamPath& p) {
    const std::size_t n = g.order();
    if (p.order.size() != n || n == 0) {
        return false;
    }
    VertexSet seen(n);
    for (Vertex v : p.order) {
        if (v >= n || seen.contains(v)) {
            return false;
        }
        seen.insert(v);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!g.adjacent(p.order[i], p.order[i + 1])) {
            return false;
        }
    }
    return true;
}

PathSearchResult find_hamiltonian_path(const Graph& g, Vertex x, Vertex y, const PathSearchOptions& opts) {
    const std::size_t n = g.order();
    if (x >= n || y >= n) {
        throw PreconditionError("path endpoint out of range");
    }
    if (x == y) {
        throw PreconditionError("path endpoints must differ");
    }
    PathSearchResult result;
    const std::size_t budget = opts.max_rotations ? opts.max_rotations : 8 * n * n;
    RotationExtension engine(g, x, y, opts.seed);
    for (std::size_t r = 0; r < opts.restarts; ++r) {
        if (auto path = engine.attempt(budget)) {
            result.path = std::move(path);
            result.stage = PathStage::RotationExtension;
            result.authoritative = true;
            return result;
        }
    }
    if (opts.exact_fallback && n <= std::min(opts.exact_cap, dp::kMaxOrder + 1)) {
        const dp::Problem p = dp::path_problem(g, x, y);
        std::vector<std::uint32_t> reach;
        dp::solve_serial(p, reach);
        if (auto order = dp::extract(p, reach)) {
            result.path = HamPath{std::move(*order)};
            result.stage = PathStage::ExactDp;
        }
        result.authoritative = true;
    }
    return result;
}

} // namespace kord
