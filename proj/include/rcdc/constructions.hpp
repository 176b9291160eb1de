#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcdc/coloring.hpp"
#include "rcdc/digraph.hpp"

namespace rcdc {

// Vertex i of a circulant written as the pair (block, offset) with
// i = block*base + offset, 0 <= offset < base.
struct PairIndex {
    int block = 0;
    int offset = 0;
    int base = 1;

    int vertex() const { return block * base + offset; }
    friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

PairIndex pair_index(int i, int base);

// Closed forms for C_n({1,k}). They hold whenever n >= (k-1)*ceil(n/k).
bool circulant_formula_applicable(int n, int k);
// d(v_0, v_i) = floor(i/k) + (i mod k).
int circulant_distance_formula(int n, int k, int i);
// diam = floor((n-1)/k) + max(( n-1) mod k, k-2).
int circulant_diameter_formula(int n, int k);

struct ColoredDigraph {
    Digraph digraph;
    ArcColoring coloring;
};

// C_n({1..k}) colored by blocks of k consecutive vertices (the last block may
// be smaller); every arc takes its tail's block index. ceil(n/k) colors,
// strongly rainbow connected. Requires 1 <= k <= n-2.
ColoredDigraph color_circulant_interval(int n, int k);

enum class C2kVariant { OneK, OneKPlusOne };  // C_2k({1,k}) / C_2k({1,k+1})

// C_2k with antipodal classes {v_r, v_{r+k}}; every arc takes its tail's
// class. k colors, strongly rainbow connected. Requires k >= 2.
ColoredDigraph color_c2k(int k, C2kVariant variant);

// C_{(k-1)^2}({1,k}) under base-(k-1) pair indexing: k-jumps take their
// tail's block; 1-jumps leaving offset 0 or k-2 take the block index, the
// remaining 1-jumps take k-2+offset. 2k-4 colors. Requires k >= 3.
ColoredDigraph color_square(int k);

// C_{a*k}({1,k}) under base-k pair indexing, a blocks of k vertices; k-jumps
// take their tail's block, 1-jumps follow the two per-block rules (one
// block-colored 1-jump per block, the rest spread over a..a+k-3). a+k-2
// colors. Requires a >= k-1 >= 2.
ColoredDigraph color_multiple(int k, int a);

// Biorientation colorings. Path: pair i..i+1 takes color i+1 (n-1 colors).
// Cycle: pair i takes i mod ceil(n/2), 1-based (ceil(n/2) colors, n >= 4).
// Star (center 0, `leaves` >= 2 leaves): in-arcs 1, out-arcs 2.
// Complete multipartite (>= 2 parts, some part >= 2): 1 when the tail's part
// index is lower, else 2.
ColoredDigraph color_bior_path(int n);
ColoredDigraph color_bior_cycle(int n);
ColoredDigraph color_bior_star(int leaves);
ColoredDigraph color_bior_multipartite(const std::vector<int>& part_sizes);

// Spanning strong sub-digraph of the biorientation of C_n obtained by
// deleting `missing` arcs. With k <= 2 asymmetric arcs the outcome carries an
// (n-1)-coloring that is rainbow connected: the asymmetric arcs share one
// color and each surviving symmetric pair gets its own. With k >= 3 no such
// coloring exists and the outcome instead carries the exact value n.
struct SubcycleOutcome {
    Digraph digraph;
    int asymmetric_arcs = 0;
    std::optional<ArcColoring> coloring;
    std::optional<int> exact_value;
};
SubcycleOutcome color_subcycle(int n, const std::vector<Arc>& missing);

// Two-hub gadget on 13 vertices: four source/sink pendants u_i -> v_i, hubs
// a1 (serving clusters 1..3) and a2 (serving cluster 4), and three relay
// vertices b_j joined to both hubs by symmetric pairs. `with_extra_arc` adds
// a1 -> a2. The bundled 6-coloring fixes color i on u_i -> v_i and is the
// deterministic assignment used by the tests.
//
// Vertex ids: u1..u4 = 0..3, v1..v4 = 4..7, a1 = 8, a2 = 9, b1..b3 = 10..12.
ColoredDigraph gap_gadget(bool with_extra_arc);

enum class Family {
    Interval,        // C_n({1..k})
    TwoBlock,        // C_2k({1,k}) / C_2k({1,k+1})
    OddTwoJump,      // C_{2k+1}({1,k+1})
    Square,          // C_{(k-1)^2}({1,k})
    Multiple,        // C_{a*k}({1,k})
    BiorPath,
    BiorCycle,
    BiorStar,
    BiorMultipartite,
    Subcycle,        // spanning strong sub-digraph of bior C_n, k asymmetric arcs
    DirectedCycle,
    CompleteBiorientation,
};

struct PredictQuery {
    Family family = Family::Interval;
    int n = 0;
    int k = 0;
    int a = 0;
    int asymmetric_arcs = 0;
    std::vector<int> parts;
    C2kVariant variant = C2kVariant::OneK;
};

// Exact rc*/src* predicted by the family's closed form. Inapplicability is
// data, not an error. src is left unset where only rc is known (sub-cycle
// digraphs with at most two asymmetric arcs).
struct PredictedValue {
    std::string family;
    std::string params;
    std::optional<int> rc;
    std::optional<int> src;
    bool applicable = false;
    std::string reason;  // set when not applicable
};

PredictedValue predict(const PredictQuery& query);

std::string family_name(Family family);
std::optional<Family> family_from_name(const std::string& name);

}  // namespace rcdc
