#include "rcdc/digraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rcdc {

namespace {

long long pair_key(int n, int tail, int head) {
    return static_cast<long long>(tail) * n + head;
}

}  // namespace

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
    if (n_ < 1) throw std::invalid_argument("digraph needs at least one vertex");
    index_.reserve(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.tail == a.head) throw std::invalid_argument("loops are not allowed");
        index_.emplace_back(pair_key(n_, a.tail, a.head), static_cast<int>(i));
    }
    std::sort(index_.begin(), index_.end());
    for (std::size_t i = 1; i < index_.size(); ++i)
        if (index_[i].first == index_[i - 1].first)
            throw std::invalid_argument("duplicate arc");

    std::vector<int> degree(static_cast<std::size_t>(n_), 0);
    for (const Arc& a : arcs_) ++degree[static_cast<std::size_t>(a.tail)];
    out_begin_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) out_begin_[v + 1] = out_begin_[v] + degree[v];
    out_flat_.resize(arcs_.size());
    std::vector<int> cursor(out_begin_.begin(), out_begin_.end() - 1);
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        out_flat_[static_cast<std::size_t>(cursor[arcs_[i].tail]++)] = static_cast<int>(i);
}

std::span<const int> Digraph::out_arcs(int v) const {
    return {out_flat_.data() + out_begin_[v],
            out_flat_.data() + out_begin_[v + 1]};
}

std::optional<int> Digraph::arc_index(int tail, int head) const {
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_) return std::nullopt;
    const long long key = pair_key(n_, tail, head);
    auto it = std::lower_bound(index_.begin(), index_.end(),
                               std::make_pair(key, 0));
    if (it == index_.end() || it->first != key) return std::nullopt;
    return it->second;
}

Digraph make_circulant(const CirculantSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("circulant needs n >= 2");
    std::vector<int> gens = spec.generators;
    std::sort(gens.begin(), gens.end());
    if (gens.empty()) throw std::invalid_argument("generator set is empty");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] < 1 || gens[i] >= spec.n)
            throw std::invalid_argument("generator out of range 1..n-1");
        if (i > 0 && gens[i] == gens[i - 1])
            throw std::invalid_argument("duplicate generator");
    }
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(spec.n) * gens.size());
    for (int s : gens)
        for (int i = 0; i < spec.n; ++i)
            arcs.push_back({i, (i + s) % spec.n});
    return Digraph(spec.n, std::move(arcs));
}

Digraph biorient(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size() * 2);
    std::vector<std::pair<int, int>> seen;
    seen.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        auto key = std::minmax(u, v);
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw std::invalid_argument("duplicate edge");
        seen.push_back(key);
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return Digraph(vertex_count, std::move(arcs));
}

std::vector<int> distances_from(const Digraph& d, int source) {
    if (source < 0 || source >= d.vertex_count())
        throw std::invalid_argument("source vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(d.vertex_count()), kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int ai : d.out_arcs(x)) {
            const int y = d.arc(ai).head;
            if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::vector<int> distances_to(const Digraph& d, int target) {
    if (target < 0 || target >= d.vertex_count())
        throw std::invalid_argument("target vertex out of range");
    // BFS over reversed arcs.
    std::vector<std::vector<int>> rev(static_cast<std::size_t>(d.vertex_count()));
    for (const Arc& a : d.arcs()) rev[static_cast<std::size_t>(a.head)].push_back(a.tail);
    std::vector<int> dist(static_cast<std::size_t>(d.vertex_count()), kUnreachable);
    dist[static_cast<std::size_t>(target)] = 0;
    std::deque<int> queue{target};
    while (!queue.empty()) {
        const int y = queue.front();
        queue.pop_front();
        for (int x : rev[static_cast<std::size_t>(y)]) {
            if (dist[static_cast<std::size_t>(x)] == kUnreachable) {
                dist[static_cast<std::size_t>(x)] = dist[static_cast<std::size_t>(y)] + 1;
                queue.push_back(x);
            }
        }
    }
    return dist;
}

bool is_strongly_connected(const Digraph& d) {
    const auto fwd = distances_from(d, 0);
    if (std::find(fwd.begin(), fwd.end(), kUnreachable) != fwd.end()) return false;
    const auto bwd = distances_to(d, 0);
    return std::find(bwd.begin(), bwd.end(), kUnreachable) == bwd.end();
}

int diameter(const Digraph& d) {
    if (!is_strongly_connected(d))
        throw std::invalid_argument("diameter requires a strongly connected digraph");
    int best = 0;
    for (int u = 0; u < d.vertex_count(); ++u) {
        const auto dist = distances_from(d, u);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

int count_asymmetric_arcs(const Digraph& d) {
    int count = 0;
    for (const Arc& a : d.arcs())
        if (!d.has_arc(a.head, a.tail)) ++count;
    return count;
}

namespace {

// Inverse of a modulo n, if it exists.
std::optional<int> mod_inverse(int a, int n) {
    long long t = 0, new_t = 1, r = n, new_r = a % n;
    while (new_r != 0) {
        const long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) return std::nullopt;
    return static_cast<int>(((t % n) + n) % n);
}

}  // namespace

CirculantSpec normalize_circulant_pair(const CirculantSpec& spec,
                                       std::optional<int> unit) {
    if (spec.generators.size() != 2)
        throw std::invalid_argument("normalization needs exactly two generators");
    std::vector<int> gens = spec.generators;
    std::sort(gens.begin(), gens.end());

    auto apply = [&](int a1) -> std::optional<CirculantSpec> {
        const auto b = mod_inverse(a1, spec.n);
        if (!b) return std::nullopt;
        const int other = a1 == gens[0] ? gens[1] : gens[0];
        const int mapped = static_cast<int>(
            (static_cast<long long>(*b) * other) % spec.n);
        std::vector<int> out{1, mapped};
        std::sort(out.begin(), out.end());
        return CirculantSpec{spec.n, std::move(out)};
    };

    if (unit) {
        if (*unit != gens[0] && *unit != gens[1])
            throw std::invalid_argument("chosen unit is not a generator");
        const auto result = apply(*unit);
        if (!result) throw std::invalid_argument("chosen generator is not coprime to n");
        return *result;
    }
    std::optional<CirculantSpec> best;
    for (int a1 : gens) {
        const auto candidate = apply(a1);
        if (!candidate) continue;
        if (!best || candidate->generators < best->generators) best = candidate;
    }
    if (!best)
        throw std::invalid_argument("no generator is coprime to n; normalization undefined");
    return *best;
}

Digraph geodesic_dag(const Digraph& d, int from, int to) {
    const auto from_dist = distances_from(d, from);
    if (from_dist[static_cast<std::size_t>(to)] == kUnreachable)
        throw std::invalid_argument("target is unreachable from source");
    const auto to_dist = distances_to(d, to);
    const int total = from_dist[static_cast<std::size_t>(to)];
    std::vector<Arc> kept;
    for (const Arc& a : d.arcs()) {
        const int dx = from_dist[static_cast<std::size_t>(a.tail)];
        const int dy = to_dist[static_cast<std::size_t>(a.head)];
        if (dx != kUnreachable && dy != kUnreachable && dx + 1 + dy == total)
            kept.push_back(a);
    }
    return Digraph(d.vertex_count(), std::move(kept));
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("digraph parse error: " + what);
}

// Next non-comment, non-blank line.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) parse_fail("missing header");
    std::istringstream header(line);
    std::string tag;
    int n = 0, m = 0;
    if (!(header >> tag >> n >> m) || tag != "digraph")
        parse_fail("header must be 'digraph <n> <m>'");
    if (n < 1 || m < 0) parse_fail("bad vertex or arc count");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, line)) parse_fail("fewer arcs than declared");
        std::istringstream row(line);
        int tail = 0, head = 0;
        if (!(row >> tail >> head)) parse_fail("bad arc line: " + line);
        arcs.push_back({tail, head});
    }
    try {
        return Digraph(n, std::move(arcs));
    } catch (const std::invalid_argument& e) {
        parse_fail(e.what());
    }
}

Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << "digraph " << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

void save_digraph(const std::string& path, const Digraph& d) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_digraph(out, d);
}

}  // namespace rcdc
