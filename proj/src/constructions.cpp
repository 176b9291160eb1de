#include "rcdc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rcdc {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

[[noreturn]] void hypothesis_fail(const std::string& what) {
    throw std::invalid_argument(what);
}

}  // namespace

PairIndex pair_index(int i, int base) {
    if (base < 1) throw std::invalid_argument("pair index base must be >= 1");
    if (i < 0) throw std::invalid_argument("pair index needs i >= 0");
    return {i / base, i % base, base};
}

bool circulant_formula_applicable(int n, int k) {
    if (k < 2 || k > n - 1) return false;
    return n >= (k - 1) * ceil_div(n, k);
}

int circulant_distance_formula(int n, int k, int i) {
    if (!circulant_formula_applicable(n, k))
        hypothesis_fail("distance formula needs 2 <= k <= n-1 and n >= (k-1)*ceil(n/k)");
    if (i < 0 || i >= n) hypothesis_fail("vertex offset out of range");
    return i / k + i % k;
}

int circulant_diameter_formula(int n, int k) {
    if (!circulant_formula_applicable(n, k))
        hypothesis_fail("diameter formula needs 2 <= k <= n-1 and n >= (k-1)*ceil(n/k)");
    return (n - 1) / k + std::max((n - 1) % k, k - 2);
}

ColoredDigraph color_circulant_interval(int n, int k) {
    if (k < 1 || k > n - 2)
        hypothesis_fail("interval coloring needs 1 <= k <= n-2");
    std::vector<int> gens(static_cast<std::size_t>(k));
    std::iota(gens.begin(), gens.end(), 1);
    Digraph d = make_circulant({n, std::move(gens)});
    const int c = ceil_div(n, k);
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count()));
    for (int i = 0; i < d.arc_count(); ++i)
        colors[static_cast<std::size_t>(i)] = d.arc(i).tail / k + 1;
    return {std::move(d), ArcColoring(std::move(colors), c)};
}

ColoredDigraph color_c2k(int k, C2kVariant variant) {
    if (k < 2) hypothesis_fail("two-block coloring needs k >= 2");
    const int n = 2 * k;
    const int second = variant == C2kVariant::OneK ? k : k + 1;
    Digraph d = make_circulant({n, {1, second}});
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count()));
    for (int i = 0; i < d.arc_count(); ++i)
        colors[static_cast<std::size_t>(i)] = d.arc(i).tail % k + 1;
    return {std::move(d), ArcColoring(std::move(colors), k)};
}

ColoredDigraph color_square(int k) {
    if (k < 3) hypothesis_fail("square coloring needs k >= 3");
    const int n = (k - 1) * (k - 1);
    const int base = k - 1;
    Digraph d = make_circulant({n, {1, k}});
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count()));
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& arc = d.arc(i);
        const int jump = ((arc.head - arc.tail) % n + n) % n;
        const int block = arc.tail / base;
        const int offset = arc.tail % base;
        int color0 = 0;
        if (jump == k) {
            color0 = block;
        } else {  // 1-jump
            if (offset == 0 || offset == k - 2)
                color0 = block;
            else
                color0 = k - 2 + offset;
        }
        colors[static_cast<std::size_t>(i)] = color0 + 1;
    }
    return {std::move(d), ArcColoring(std::move(colors), 2 * k - 4)};
}

ColoredDigraph color_multiple(int k, int a) {
    if (k < 3 || a < k - 1)
        hypothesis_fail("multiple coloring needs a >= k-1 >= 2");
    const int n = a * k;
    Digraph d = make_circulant({n, {1, k}});
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count()));
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& arc = d.arc(i);
        const int jump = ((arc.head - arc.tail) % n + n) % n;
        const int block = arc.tail / k;
        const int offset = arc.tail % k;
        int color0;
        if (jump == k) {
            color0 = block;
        } else if (block >= k - 2) {
            // One block-colored 1-jump at each end of the block; the interior
            // 1-jumps use the shared palette a..a+k-3.
            if (offset == 0 || offset == k - 1)
                color0 = block;
            else
                color0 = a - 1 + offset;
        } else {
            // Low blocks shift the block-colored 1-jump to offset k-2-block
            // and rotate the shared palette around it.
            if (offset == k - 2 - block)
                color0 = block;
            else if (offset <= k - 3 - block)
                color0 = a + block + offset;
            else if (offset <= k - 2)
                color0 = a + offset - (k - 1 - block);
            else  // offset == k-1, the wrap-around 1-jump
                color0 = a + block;
        }
        colors[static_cast<std::size_t>(i)] = color0 + 1;
    }
    return {std::move(d), ArcColoring(std::move(colors), a + k - 2)};
}

ColoredDigraph color_bior_path(int n) {
    if (n < 2) hypothesis_fail("path coloring needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    Digraph d = biorient(n, edges);
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count()));
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& arc = d.arc(i);
        colors[static_cast<std::size_t>(i)] = std::min(arc.tail, arc.head) + 1;
    }
    return {std::move(d), ArcColoring(std::move(colors), n - 1)};
}

ColoredDigraph color_bior_cycle(int n) {
    if (n < 4) hypothesis_fail("cycle coloring needs n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    Digraph d = biorient(n, edges);
    const int half = ceil_div(n, 2);
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count()));
    // Both arcs of edge i share color i mod ceil(n/2), so any run of at most
    // ceil(n/2) consecutive edges is rainbow.
    for (int i = 0; i < d.arc_count(); ++i) {
        const int edge = i / 2;
        colors[static_cast<std::size_t>(i)] = edge % half + 1;
    }
    return {std::move(d), ArcColoring(std::move(colors), half)};
}

ColoredDigraph color_bior_star(int leaves) {
    if (leaves < 2) hypothesis_fail("star coloring needs at least two leaves");
    std::vector<std::pair<int, int>> edges;
    for (int leaf = 1; leaf <= leaves; ++leaf) edges.emplace_back(0, leaf);
    Digraph d = biorient(leaves + 1, edges);
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count()));
    for (int i = 0; i < d.arc_count(); ++i)
        colors[static_cast<std::size_t>(i)] = d.arc(i).head == 0 ? 1 : 2;
    return {std::move(d), ArcColoring(std::move(colors), 2)};
}

ColoredDigraph color_bior_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.size() < 2)
        hypothesis_fail("multipartite coloring needs at least two parts");
    int n = 0;
    bool has_big_part = false;
    for (int size : part_sizes) {
        if (size < 1) hypothesis_fail("part sizes must be positive");
        if (size >= 2) has_big_part = true;
        n += size;
    }
    if (!has_big_part)
        hypothesis_fail("multipartite coloring needs some part of size >= 2");
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int v = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of[static_cast<std::size_t>(v++)] = static_cast<int>(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(w)])
                edges.emplace_back(u, w);
    Digraph d = biorient(n, edges);
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count()));
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& arc = d.arc(i);
        colors[static_cast<std::size_t>(i)] =
            part_of[static_cast<std::size_t>(arc.tail)] < part_of[static_cast<std::size_t>(arc.head)] ? 1 : 2;
    }
    return {std::move(d), ArcColoring(std::move(colors), 2)};
}

SubcycleOutcome color_subcycle(int n, const std::vector<Arc>& missing) {
    if (n < 3) hypothesis_fail("sub-cycle digraphs need n >= 3");
    auto is_cycle_arc = [n](const Arc& a) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) return false;
        return (a.tail + 1) % n == a.head || (a.head + 1) % n == a.tail;
    };
    for (std::size_t i = 0; i < missing.size(); ++i) {
        if (!is_cycle_arc(missing[i]))
            hypothesis_fail("missing entry is not an arc of the biorientation of C_n");
        for (std::size_t j = i + 1; j < missing.size(); ++j)
            if (missing[i] == missing[j]) hypothesis_fail("duplicate missing arc");
    }
    auto removed = [&](int tail, int head) {
        return std::find(missing.begin(), missing.end(), Arc{tail, head}) != missing.end();
    };
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        if (!removed(i, j)) arcs.push_back({i, j});
        if (!removed(j, i)) arcs.push_back({j, i});
    }
    Digraph d(n, std::move(arcs));
    if (!is_strongly_connected(d))
        hypothesis_fail("removals disconnect the digraph");

    const int asym = count_asymmetric_arcs(d);
    SubcycleOutcome outcome{std::move(d), asym, std::nullopt, std::nullopt};
    if (asym == 0)
        hypothesis_fail("at least one asymmetric arc is required");
    if (asym >= 3) {
        outcome.exact_value = n;  // no (n-1)-coloring can be rainbow connected
        return outcome;
    }
    // Each surviving symmetric pair gets its own color; the asymmetric arcs
    // share one. Never more than n-1 colors in total.
    const Digraph& dd = outcome.digraph;
    std::vector<int> colors(static_cast<std::size_t>(dd.arc_count()), 0);
    int next_pair_color = 0;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const auto fwd = dd.arc_index(i, j);
        const auto bwd = dd.arc_index(j, i);
        if (fwd && bwd) {
            ++next_pair_color;
            colors[static_cast<std::size_t>(*fwd)] = next_pair_color;
            colors[static_cast<std::size_t>(*bwd)] = next_pair_color;
        }
    }
    const int c = n - 1;
    const int asym_color = std::min(next_pair_color + 1, c);
    for (int i = 0; i < dd.arc_count(); ++i)
        if (colors[static_cast<std::size_t>(i)] == 0) colors[static_cast<std::size_t>(i)] = asym_color;
    outcome.coloring = ArcColoring(std::move(colors), c);
    return outcome;
}

ColoredDigraph gap_gadget(bool with_extra_arc) {
    // u1..u4 = 0..3, v1..v4 = 4..7, a1 = 8, a2 = 9, b1..b3 = 10..12.
    std::vector<Arc> arcs;
    std::vector<int> colors;
    auto add = [&](int tail, int head, int color) {
        arcs.push_back({tail, head});
        colors.push_back(color);
    };
    // Pendant arcs u_i -> v_i carry the four mutually forced colors: the
    // u_i -> v_j geodesics are unique and traverse both pendants.
    for (int i = 0; i < 4; ++i) add(i, 4 + i, i + 1);
    for (int i = 0; i < 3; ++i) add(4 + i, 8, 6);  // v_i -> a1
    for (int i = 0; i < 3; ++i) add(8, i, 5);      // a1 -> u_i
    // Relay colors: hub-bound arcs reuse {5,6}; the b_j -> a2 and a2 -> b_j
    // arcs spread {2,3} and {1,3} so each cluster finds a distinct relay.
    const int toward_a2[3] = {2, 3, 2};
    const int from_a2[3] = {1, 3, 1};
    for (int j = 0; j < 3; ++j) {
        const int b = 10 + j;
        add(8, b, 5);
        add(b, 8, 6);
        add(b, 9, toward_a2[j]);
        add(9, b, from_a2[j]);
    }
    add(9, 3, 1);  // a2 -> u4
    add(7, 9, 2);  // v4 -> a2
    if (with_extra_arc) add(8, 9, 1);  // a1 -> a2
    return {Digraph(13, std::move(arcs)), ArcColoring(std::move(colors), 6)};
}

namespace {

std::string describe(std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : kv) {
        if (!first) out << ' ';
        first = false;
        out << key << '=' << value;
    }
    return out.str();
}

PredictedValue not_applicable(Family family, std::string params, std::string reason) {
    PredictedValue value;
    value.family = family_name(family);
    value.params = std::move(params);
    value.applicable = false;
    value.reason = std::move(reason);
    return value;
}

PredictedValue exact(Family family, std::string params, int rc,
                     std::optional<int> src) {
    PredictedValue value;
    value.family = family_name(family);
    value.params = std::move(params);
    value.rc = rc;
    value.src = src;
    value.applicable = true;
    return value;
}

}  // namespace

std::string family_name(Family family) {
    switch (family) {
        case Family::Interval: return "interval";
        case Family::TwoBlock: return "c2k";
        case Family::OddTwoJump: return "c2k1";
        case Family::Square: return "square";
        case Family::Multiple: return "multiple";
        case Family::BiorPath: return "path";
        case Family::BiorCycle: return "cycle";
        case Family::BiorStar: return "star";
        case Family::BiorMultipartite: return "multipartite";
        case Family::Subcycle: return "subcycle";
        case Family::DirectedCycle: return "dircycle";
        case Family::CompleteBiorientation: return "complete";
    }
    throw std::logic_error("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::pair<const char*, Family> table[] = {
        {"interval", Family::Interval},
        {"c2k", Family::TwoBlock},
        {"c2k1", Family::OddTwoJump},
        {"square", Family::Square},
        {"multiple", Family::Multiple},
        {"path", Family::BiorPath},
        {"cycle", Family::BiorCycle},
        {"star", Family::BiorStar},
        {"multipartite", Family::BiorMultipartite},
        {"subcycle", Family::Subcycle},
        {"dircycle", Family::DirectedCycle},
        {"complete", Family::CompleteBiorientation},
    };
    for (const auto& [key, family] : table)
        if (name == key) return family;
    return std::nullopt;
}

PredictedValue predict(const PredictQuery& q) {
    switch (q.family) {
        case Family::Interval: {
            auto params = describe({{"n", q.n}, {"k", q.k}});
            if (q.k < 1 || q.k > q.n - 2)
                return not_applicable(q.family, params, "needs 1 <= k <= n-2");
            const int value = ceil_div(q.n, q.k);
            return exact(q.family, params, value, value);
        }
        case Family::TwoBlock: {
            auto params = describe({{"k", q.k}}) +
                          (q.variant == C2kVariant::OneK ? " set={1,k}" : " set={1,k+1}");
            if (q.k < 2) return not_applicable(q.family, params, "needs k >= 2");
            return exact(q.family, params, q.k, q.k);
        }
        case Family::OddTwoJump: {
            auto params = describe({{"k", q.k}});
            if (q.k < 2)
                return not_applicable(q.family, params,
                                      "needs k >= 2 (k=1 yields the complete biorientation)");
            return exact(q.family, params, q.k + 1, q.k + 1);
        }
        case Family::Square: {
            auto params = describe({{"k", q.k}});
            if (q.k < 3) return not_applicable(q.family, params, "needs k >= 3");
            return exact(q.family, params, 2 * q.k - 4, 2 * q.k - 4);
        }
        case Family::Multiple: {
            auto params = describe({{"k", q.k}, {"a", q.a}});
            if (q.k < 3 || q.a < q.k - 1)
                return not_applicable(q.family, params, "needs a >= k-1 >= 2");
            return exact(q.family, params, q.a + q.k - 2, q.a + q.k - 2);
        }
        case Family::BiorPath: {
            auto params = describe({{"n", q.n}});
            if (q.n < 2) return not_applicable(q.family, params, "needs n >= 2");
            return exact(q.family, params, q.n - 1, q.n - 1);
        }
        case Family::BiorCycle: {
            auto params = describe({{"n", q.n}});
            if (q.n < 4) return not_applicable(q.family, params, "needs n >= 4");
            const int value = ceil_div(q.n, 2);
            return exact(q.family, params, value, value);
        }
        case Family::BiorStar: {
            auto params = describe({{"n", q.n}});
            if (q.n < 2) return not_applicable(q.family, params, "needs at least two leaves");
            return exact(q.family, params, 2, 2);
        }
        case Family::BiorMultipartite: {
            std::ostringstream params;
            params << "parts=";
            for (std::size_t i = 0; i < q.parts.size(); ++i)
                params << (i ? "," : "") << q.parts[i];
            if (q.parts.size() < 2)
                return not_applicable(q.family, params.str(), "needs at least two parts");
            if (std::none_of(q.parts.begin(), q.parts.end(), [](int s) { return s >= 2; }))
                return not_applicable(q.family, params.str(), "needs some part of size >= 2");
            if (std::any_of(q.parts.begin(), q.parts.end(), [](int s) { return s < 1; }))
                return not_applicable(q.family, params.str(), "part sizes must be positive");
            return exact(q.family, params.str(), 2, 2);
        }
        case Family::Subcycle: {
            auto params = describe({{"n", q.n}, {"asym", q.asymmetric_arcs}});
            if (q.n < 3 || q.asymmetric_arcs < 1)
                return not_applicable(q.family, params, "needs n >= 3 and k >= 1 asymmetric arcs");
            if (q.asymmetric_arcs >= 3)
                return exact(q.family, params, q.n, q.n);
            // Only rc is pinned when k <= 2; src stays open.
            return exact(q.family, params, q.n - 1, std::nullopt);
        }
        case Family::DirectedCycle: {
            auto params = describe({{"n", q.n}});
            if (q.n < 3) return not_applicable(q.family, params, "needs n >= 3");
            return exact(q.family, params, q.n, q.n);
        }
        case Family::CompleteBiorientation: {
            auto params = describe({{"n", q.n}});
            if (q.n < 2) return not_applicable(q.family, params, "needs n >= 2");
            return exact(q.family, params, 1, 1);
        }
    }
    throw std::logic_error("unknown family");
}

}  // namespace rcdc
