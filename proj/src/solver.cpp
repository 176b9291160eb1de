#include "rcdc/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace rcdc {

namespace {

// A pair's rainbow status is decided once every arc on its candidate paths is
// colored; `last_arc` is that point in the assignment order. Pairs whose path
// set would be huge fall back to the shared mask search over their relevant
// arcs instead of an explicit list.
struct PairCheck {
    int from = 0;
    int to = 0;
    int last_arc = 0;
    std::vector<int> path_data;    // arc indices, concatenated
    std::vector<int> path_begin;   // offsets, size = path count + 1
    bool fallback = false;
    std::vector<char> allowed;     // relevant arcs, fallback only
};

constexpr std::size_t kMaxStoredPathArcs = 200'000;

// All simple from->to paths of at most `max_len` arcs restricted to `allowed`
// arcs, in DFS (arc-index) order. Returns false when the budget of stored
// arcs would be exceeded.
bool enumerate_paths(const Digraph& d, int from, int to, int max_len,
                     const std::vector<char>& allowed, PairCheck& out) {
    std::vector<char> on_path(static_cast<std::size_t>(d.vertex_count()), 0);
    std::vector<int> arc_stack;
    bool ok = true;

    auto dfs = [&](auto&& self, int x) -> void {
        if (!ok) return;
        if (x == to) {
            if (out.path_data.size() + arc_stack.size() > kMaxStoredPathArcs) {
                ok = false;
                return;
            }
            out.path_data.insert(out.path_data.end(), arc_stack.begin(), arc_stack.end());
            out.path_begin.push_back(static_cast<int>(out.path_data.size()));
            return;
        }
        if (static_cast<int>(arc_stack.size()) == max_len) return;
        on_path[static_cast<std::size_t>(x)] = 1;
        for (int ai : d.out_arcs(x)) {
            if (!allowed[static_cast<std::size_t>(ai)]) continue;
            const int y = d.arc(ai).head;
            if (on_path[static_cast<std::size_t>(y)]) continue;
            if (y == to && static_cast<int>(arc_stack.size()) + 1 > max_len) continue;
            arc_stack.push_back(ai);
            self(self, y);
            arc_stack.pop_back();
            if (!ok) break;
        }
        on_path[static_cast<std::size_t>(x)] = 0;
    };

    out.path_begin.push_back(0);
    dfs(dfs, from);
    return ok;
}

struct Searcher {
    const Digraph& d;
    SolveTarget target;
    int color_count = 0;
    long long node_budget = 0;
    SolveStats& stats;

    std::vector<int> colors;                      // 0 = unassigned
    std::vector<std::vector<PairCheck>> by_last;  // pair checks keyed by last arc

    enum class Outcome { Found, Exhausted, OverBudget };

    bool pair_satisfied(const PairCheck& check) {
        ++stats.pair_checks;
        if (check.fallback) {
            return detail::rainbow_path_search(d, colors, color_count, check.from,
                                               check.to, &check.allowed)
                .has_value();
        }
        const std::size_t paths = check.path_begin.size() - 1;
        for (std::size_t p = 0; p < paths; ++p) {
            std::uint64_t mask = 0;
            bool rainbow = true;
            for (int idx = check.path_begin[p]; idx < check.path_begin[p + 1]; ++idx) {
                const int color = colors[static_cast<std::size_t>(check.path_data[static_cast<std::size_t>(idx)])];
                const std::uint64_t bit = std::uint64_t{1} << (color - 1);
                if (mask & bit) { rainbow = false; break; }
                mask |= bit;
            }
            if (rainbow) return true;
        }
        return false;
    }

    // Builds the pair checks for the current color budget. Pairs at distance
    // one are always satisfied and skipped.
    void prepare(const std::vector<std::vector<int>>& dist,
                 const std::vector<std::vector<int>>& rdist) {
        const int n = d.vertex_count();
        const int m = d.arc_count();
        by_last.assign(static_cast<std::size_t>(m), {});
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v || dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= 1) continue;
                PairCheck check;
                check.from = u;
                check.to = v;
                std::vector<char> allowed(static_cast<std::size_t>(m), 0);
                const int duv = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                const int reach = target == SolveTarget::Rc ? color_count : duv;
                for (int i = 0; i < m; ++i) {
                    const Arc& a = d.arc(i);
                    const int dx = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(a.tail)];
                    const int dy = rdist[static_cast<std::size_t>(v)][static_cast<std::size_t>(a.head)];
                    if (dx == kUnreachable || dy == kUnreachable) continue;
                    const bool keep = target == SolveTarget::Rc ? dx + 1 + dy <= reach
                                                                : dx + 1 + dy == duv;
                    if (keep) allowed[static_cast<std::size_t>(i)] = 1;
                }
                if (!enumerate_paths(d, u, v, reach, allowed, check)) {
                    check.fallback = true;
                    check.path_data.clear();
                    check.path_begin.clear();
                    check.allowed = allowed;
                    int last = 0;
                    for (int i = 0; i < m; ++i)
                        if (allowed[static_cast<std::size_t>(i)]) last = i;
                    check.last_arc = last;
                } else {
                    int last = 0;
                    for (int arc : check.path_data) last = std::max(last, arc);
                    check.last_arc = last;
                }
                by_last[static_cast<std::size_t>(check.last_arc)].push_back(std::move(check));
            }
        }
        // Cheapest checks first at each depth.
        for (auto& bucket : by_last) {
            std::stable_sort(bucket.begin(), bucket.end(),
                             [](const PairCheck& a, const PairCheck& b) {
                                 return a.path_data.size() < b.path_data.size();
                             });
        }
    }

    Outcome search(int arc, int max_used) {
        const int m = d.arc_count();
        // Feasible colorings at this level use all color_count colors, since
        // every smaller palette was already proven infeasible.
        if (max_used + (m - arc) < color_count) return Outcome::Exhausted;
        const int limit = std::min(color_count, max_used + 1);
        for (int color = 1; color <= limit; ++color) {
            if (++stats.nodes > node_budget) return Outcome::OverBudget;
            colors[static_cast<std::size_t>(arc)] = color;
            bool ok = true;
            for (const PairCheck& check : by_last[static_cast<std::size_t>(arc)]) {
                if (!pair_satisfied(check)) { ok = false; break; }
            }
            if (ok) {
                if (arc + 1 == m) return Outcome::Found;
                const Outcome deeper = search(arc + 1, std::max(max_used, color));
                if (deeper != Outcome::Exhausted) return deeper;
            }
            colors[static_cast<std::size_t>(arc)] = 0;
        }
        colors[static_cast<std::size_t>(arc)] = 0;
        return Outcome::Exhausted;
    }
};

SolveResult solve(const Digraph& d, SolveTarget target, const SolveLimits& limits) {
    if (d.vertex_count() < 2)
        throw std::invalid_argument("solver needs a nontrivial digraph");
    if (limits.max_colors < 1 || limits.node_budget < 1)
        throw std::invalid_argument("solver limits must be positive");
    if (!is_strongly_connected(d))
        throw std::invalid_argument("solver requires a strongly connected digraph");

    const int n = d.vertex_count();
    const int m = d.arc_count();
    std::vector<std::vector<int>> dist, rdist;
    dist.reserve(static_cast<std::size_t>(n));
    rdist.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        dist.push_back(distances_from(d, v));
        rdist.push_back(distances_to(d, v));
    }
    int diam = 0;
    for (const auto& row : dist)
        diam = std::max(diam, *std::max_element(row.begin(), row.end()));

    SolveResult result;
    result.target = target;
    result.lower = diam;
    result.upper = std::min(n, m);  // diam <= rc* <= src* <= n, and m all-distinct works

    const int highest = std::min({result.upper, limits.max_colors, kMaxColors});
    for (int c = diam; c <= highest; ++c) {
        Searcher searcher{d, target, c, limits.node_budget, result.stats};
        searcher.colors.assign(static_cast<std::size_t>(m), 0);
        searcher.prepare(dist, rdist);
        const auto outcome = searcher.search(0, 0);
        if (outcome == Searcher::Outcome::OverBudget) {
            result.status = SolveStatus::BudgetExceeded;
            result.lower = c;
            return result;
        }
        if (outcome == Searcher::Outcome::Found) {
            ArcColoring certificate(searcher.colors, c);
            ++result.stats.colorings_tested;
            const auto report = target == SolveTarget::Rc
                                    ? is_rainbow_connected(d, certificate)
                                    : is_strong_rainbow_connected(d, certificate);
            if (!report.verdict)
                throw std::logic_error("solver candidate failed re-verification");
            result.status = SolveStatus::Exact;
            result.value = c;
            result.lower = c;
            result.upper = c;
            if (limits.find_certificate) result.certificate = std::move(certificate);
            return result;
        }
        result.lower = c + 1;
    }
    // Only reachable when max_colors caps the sweep below the true value.
    result.status = SolveStatus::Bounds;
    return result;
}

}  // namespace

SolveResult exact_rc(const Digraph& d, const SolveLimits& limits) {
    return solve(d, SolveTarget::Rc, limits);
}

SolveResult exact_src(const Digraph& d, const SolveLimits& limits) {
    return solve(d, SolveTarget::Src, limits);
}

std::vector<Digraph> enumerate_strong_digraphs(int n, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n > 4) throw std::invalid_argument("exhaustive enumeration supports n <= 4 only");
    std::vector<Arc> universe;
    for (int t = 0; t < n; ++t)
        for (int h = 0; h < n; ++h)
            if (t != h) universe.push_back({t, h});
    std::vector<Digraph> out;
    const std::uint64_t total = std::uint64_t{1} << universe.size();
    for (std::uint64_t mask = 0; mask < total && out.size() < cap; ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t b = 0; b < universe.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) arcs.push_back(universe[b]);
        Digraph candidate(n, std::move(arcs));
        if (is_strongly_connected(candidate)) out.push_back(std::move(candidate));
    }
    return out;
}

}  // namespace rcdc
