#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rcdc {

// Sentinel for "no directed path" in distance vectors.
inline constexpr int kUnreachable = -1;

struct Arc {
    int tail = 0;
    int head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable vertex-indexed digraph. Vertices are 0..n-1. Arcs keep their
// construction order and that list position is the arc's stable identity:
// colorings are plain arrays indexed by it. No loops, no duplicate arcs.
//
// Instances never mutate after construction, so concurrent reads are safe.
class Digraph {
  public:
    Digraph(int vertex_count, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int index) const { return arcs_[static_cast<std::size_t>(index)]; }

    // Arc indices leaving `v`, in ascending arc-index order.
    std::span<const int> out_arcs(int v) const;

    std::optional<int> arc_index(int tail, int head) const;
    bool has_arc(int tail, int head) const { return arc_index(tail, head).has_value(); }

  private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_flat_;   // arc indices grouped by tail
    std::vector<int> out_begin_;  // offsets into out_flat_, size n_+1
    std::vector<std::pair<long long, int>> index_;  // (tail*n+head, arc index), sorted
};

// (n, S) description of the circulant digraph C_n(S): vertex i has an arc to
// i+s (mod n) for every generator s.
struct CirculantSpec {
    int n = 0;
    std::vector<int> generators;  // distinct, each in 1..n-1; kept sorted

    friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

// Realizes C_n(S) with arcs ordered by (generator ascending, tail ascending).
Digraph make_circulant(const CirculantSpec& spec);

// Replaces each undirected edge {u,v} by the two arcs uv and vu. Arcs appear
// in edge order, forward arc first.
Digraph biorient(int vertex_count, const std::vector<std::pair<int, int>>& edges);

bool is_strongly_connected(const Digraph& d);

// Exact BFS distances from `source`; kUnreachable where no path exists.
std::vector<int> distances_from(const Digraph& d, int source);

// Distances into `target` (BFS on reversed arcs).
std::vector<int> distances_to(const Digraph& d, int target);

// Max distance over ordered pairs. Throws if not strongly connected.
int diameter(const Digraph& d);

// Arcs uv whose reverse vu is absent.
int count_asymmetric_arcs(const Digraph& d);

// Rewrites a two-generator spec {a1,a2} as {1, b*a2 mod n} where b is the
// modular inverse of a1; the realizations are isomorphic via i -> b*i.
// `unit` selects which generator plays a1 (it must be coprime to n). When
// unset, every coprime generator is tried and the lexicographically least
// resulting spec wins. Throws when no generator is coprime to n.
CirculantSpec normalize_circulant_pair(const CirculantSpec& spec,
                                       std::optional<int> unit = std::nullopt);

// Sub-digraph on the same vertex set keeping exactly the arcs (x,y) with
// d(u,x) + 1 + d(y,v) = d(u,v). The result is acyclic; its u->v paths are
// exactly the u->v geodesics of `d`. Throws when v is unreachable from u.
Digraph geodesic_dag(const Digraph& d, int from, int to);

// Text format: header "digraph <n> <m>", then one "<tail> <head>" line per
// arc. Lines starting with '#' are comments. Arc order defines arc indices.
Digraph read_digraph(std::istream& in);
Digraph load_digraph(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& d);
void save_digraph(const std::string& path, const Digraph& d);

}  // namespace rcdc
