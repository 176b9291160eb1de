#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rcdc/coloring.hpp"
#include "rcdc/digraph.hpp"
#include "rcdc/verify.hpp"

namespace rcdc {

enum class SolveTarget { Rc, Src };
enum class SolveStatus { Exact, Bounds, BudgetExceeded };

struct SolveLimits {
    int max_colors = kMaxColors;
    long long node_budget = 10'000'000;  // color assignments explored
    bool find_certificate = true;
};

struct SolveStats {
    long long nodes = 0;             // color assignments tried
    long long colorings_tested = 0;  // complete assignments re-verified
    long long pair_checks = 0;

    friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

// Exact value (or bounds) for rc*/src*. The search iterates c upward from
// diameter(D) and accepts the first feasible c, so lower == value == upper on
// exact results; lower always stays >= diameter(D) and upper <= min(n, m).
// The certificate is the lexicographically least optimal coloring and always
// re-verifies in the target mode.
struct SolveResult {
    SolveTarget target = SolveTarget::Rc;
    SolveStatus status = SolveStatus::Exact;
    std::optional<int> value;
    int lower = 0;
    int upper = 0;
    SolveStats stats;
    std::optional<ArcColoring> certificate;
};

// Backtracking over arc colors in arc-index order with color-canonical
// symmetry breaking: arc j may use at most 1 + the largest color of arcs
// before it. A partial assignment is cut only when some vertex pair whose
// candidate paths are fully colored admits no rainbow one, which preserves
// both exactness and the lexicographic-least certificate; complete
// assignments are accepted only after the full verifier agrees. Deterministic
// for identical inputs, including stats.
SolveResult exact_rc(const Digraph& d, const SolveLimits& limits = {});
SolveResult exact_src(const Digraph& d, const SolveLimits& limits = {});

// Every strongly connected digraph on n labeled vertices (at most `cap`),
// ordered by ascending arc-subset bitmask over the lexicographic arc
// universe. Exhaustive mode is limited to n <= 4.
std::vector<Digraph> enumerate_strong_digraphs(int n, std::size_t cap);

}  // namespace rcdc
