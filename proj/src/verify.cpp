#include "rcdc/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace rcdc {

namespace {

void check_vertex(const Digraph& d, int v, const char* what) {
    if (v < 0 || v >= d.vertex_count())
        throw std::invalid_argument(std::string(what) + " vertex out of range");
}

void check_coloring(const Digraph& d, const ArcColoring& coloring) {
    if (coloring.size() != d.arc_count())
        throw std::invalid_argument("coloring does not match digraph arc count");
    if (coloring.color_count() > kMaxColors)
        throw std::invalid_argument("color count exceeds capacity of 64");
}

// Cuts cycles out of a vertex walk; keeps the first occurrence of each vertex.
std::vector<int> simplify_walk(std::vector<int> walk) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
        // Last occurrence of walk[i] further along; splice the cycle away.
        for (std::size_t j = walk.size(); j-- > i + 1;) {
            if (walk[j] == walk[i]) {
                walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                           walk.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                break;
            }
        }
    }
    return walk;
}

}  // namespace

namespace detail {

std::vector<char> geodesic_arc_filter(const Digraph& d, int from, int to) {
    const auto from_dist = distances_from(d, from);
    if (from_dist[static_cast<std::size_t>(to)] == kUnreachable)
        throw std::invalid_argument("target is unreachable from source");
    const auto to_dist = distances_to(d, to);
    const int total = from_dist[static_cast<std::size_t>(to)];
    std::vector<char> allowed(static_cast<std::size_t>(d.arc_count()), 0);
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& a = d.arc(i);
        const int dx = from_dist[static_cast<std::size_t>(a.tail)];
        const int dy = to_dist[static_cast<std::size_t>(a.head)];
        if (dx != kUnreachable && dy != kUnreachable && dx + 1 + dy == total)
            allowed[static_cast<std::size_t>(i)] = 1;
    }
    return allowed;
}

std::optional<std::vector<int>> rainbow_path_search(const Digraph& d,
                                                    std::span<const int> colors,
                                                    int color_count, int from, int to,
                                                    const std::vector<char>* allowed) {
    if (color_count > kMaxColors)
        throw std::invalid_argument("color count exceeds capacity of 64");
    if (from == to) return std::vector<int>{from};

    struct State {
        int vertex;
        std::uint64_t mask;
        int parent;   // index into the state pool, -1 at the source
        int via_arc;
    };
    std::vector<State> pool{{from, 0, -1, -1}};
    // Reached color-sets per vertex; a state dominated by a stored subset is
    // never expanded, which preserves completeness.
    std::vector<std::vector<std::uint64_t>> seen(
        static_cast<std::size_t>(d.vertex_count()));
    seen[static_cast<std::size_t>(from)].push_back(0);

    for (std::size_t head = 0; head < pool.size(); ++head) {
        const State current = pool[head];
        for (int ai : d.out_arcs(current.vertex)) {
            if (allowed && !(*allowed)[static_cast<std::size_t>(ai)]) continue;
            const int color = colors[static_cast<std::size_t>(ai)];
            if (color == 0) continue;  // unusable arc
            const std::uint64_t bit = std::uint64_t{1} << (color - 1);
            if (current.mask & bit) continue;
            const std::uint64_t mask = current.mask | bit;
            const int y = d.arc(ai).head;

            auto& masks = seen[static_cast<std::size_t>(y)];
            bool dominated = false;
            for (std::uint64_t known : masks) {
                if ((known & mask) == known) { dominated = true; break; }
            }
            if (dominated) continue;
            std::erase_if(masks, [mask](std::uint64_t known) {
                return (known & mask) == mask;  // drop supersets of the new set
            });
            masks.push_back(mask);
            pool.push_back({y, mask, static_cast<int>(head), ai});
            if (y == to) {
                std::vector<int> walk;
                for (int at = static_cast<int>(pool.size()) - 1; at != -1;
                     at = pool[static_cast<std::size_t>(at)].parent)
                    walk.push_back(pool[static_cast<std::size_t>(at)].vertex);
                std::reverse(walk.begin(), walk.end());
                return simplify_walk(std::move(walk));
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

std::optional<std::vector<int>> exists_rainbow_path(const Digraph& d,
                                                    const ArcColoring& coloring,
                                                    int from, int to) {
    check_vertex(d, from, "source");
    check_vertex(d, to, "target");
    check_coloring(d, coloring);
    return detail::rainbow_path_search(d, coloring.colors(), coloring.color_count(),
                                       from, to, nullptr);
}

std::optional<std::vector<int>> exists_rainbow_geodesic(const Digraph& d,
                                                        const ArcColoring& coloring,
                                                        int from, int to) {
    check_vertex(d, from, "source");
    check_vertex(d, to, "target");
    check_coloring(d, coloring);
    if (from == to) return std::vector<int>{from};
    const auto allowed = detail::geodesic_arc_filter(d, from, to);
    return detail::rainbow_path_search(d, coloring.colors(), coloring.color_count(),
                                       from, to, &allowed);
}

namespace {

VerificationReport run_verification(const Digraph& d, const ArcColoring& coloring,
                                    VerifyMode mode) {
    check_coloring(d, coloring);
    if (!is_strongly_connected(d))
        throw std::invalid_argument("verification requires a strongly connected digraph");

    VerificationReport report;
    report.mode = mode;
    for (int u = 0; u < d.vertex_count(); ++u) {
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (u == v) continue;
            std::optional<std::vector<int>> witness;
            if (d.has_arc(u, v)) {
                witness = std::vector<int>{u, v};  // single arcs are always rainbow
            } else if (mode == VerifyMode::Rainbow) {
                witness = exists_rainbow_path(d, coloring, u, v);
            } else {
                witness = exists_rainbow_geodesic(d, coloring, u, v);
            }
            if (witness)
                report.witnesses.emplace(std::make_pair(u, v), std::move(*witness));
            else
                report.failures.emplace_back(u, v);
        }
    }
    report.verdict = report.failures.empty();
    return report;
}

}  // namespace

VerificationReport is_rainbow_connected(const Digraph& d, const ArcColoring& coloring) {
    return run_verification(d, coloring, VerifyMode::Rainbow);
}

VerificationReport is_strong_rainbow_connected(const Digraph& d,
                                               const ArcColoring& coloring) {
    return run_verification(d, coloring, VerifyMode::Strong);
}

}  // namespace rcdc
