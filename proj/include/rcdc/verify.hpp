#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rcdc/coloring.hpp"
#include "rcdc/digraph.hpp"

namespace rcdc {

// The color-set search keeps one bit per color; larger palettes are rejected
// with a capacity error.
inline constexpr int kMaxColors = 64;

enum class VerifyMode { Rainbow, Strong };

struct VerificationReport {
    VerifyMode mode = VerifyMode::Rainbow;
    bool verdict = false;
    // Ordered pairs with no qualifying rainbow path, lexicographic.
    std::vector<std::pair<int, int>> failures;
    // Witness path (vertex sequence) per satisfied pair.
    std::map<std::pair<int, int>, std::vector<int>> witnesses;
};

// Returns a rainbow directed from->to path (vertex sequence) if one exists.
// The search is complete: states are (vertex, used-color set) and a state is
// pruned only when a subset color-set was already reached at that vertex.
std::optional<std::vector<int>> exists_rainbow_path(const Digraph& d,
                                                    const ArcColoring& coloring,
                                                    int from, int to);

// Same restricted to geodesics: the search runs inside geodesic_dag(d, from,
// to), so every candidate path has length exactly d(from, to).
std::optional<std::vector<int>> exists_rainbow_geodesic(const Digraph& d,
                                                        const ArcColoring& coloring,
                                                        int from, int to);

// Verdict over all n(n-1) ordered pairs. Requires strong connectivity.
// Distinct pairs are independent; the report is assembled in lexicographic
// pair order regardless.
VerificationReport is_rainbow_connected(const Digraph& d, const ArcColoring& coloring);
VerificationReport is_strong_rainbow_connected(const Digraph& d, const ArcColoring& coloring);

namespace detail {

// Shared mask search used by the public entry points and the exact solver.
// colors[i] == 0 marks arc i as unusable (solver partial assignments);
// `allowed`, when non-null, restricts the arc set (e.g. to a geodesic DAG).
// Complete for rainbow walks, hence for rainbow paths; the returned vertex
// sequence is simplified to a path.
std::optional<std::vector<int>> rainbow_path_search(const Digraph& d,
                                                    std::span<const int> colors,
                                                    int color_count, int from, int to,
                                                    const std::vector<char>* allowed);

// Marks arcs (x,y) with d(from,x) + 1 + d(y,to) == d(from,to).
std::vector<char> geodesic_arc_filter(const Digraph& d, int from, int to);

}  // namespace detail

}  // namespace rcdc
