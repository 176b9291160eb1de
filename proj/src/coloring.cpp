#include "rcdc/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rcdc {

ArcColoring::ArcColoring(std::vector<int> colors, int color_count)
    : colors_(std::move(colors)), color_count_(color_count) {
    if (color_count_ < 1) throw std::invalid_argument("color count must be >= 1");
    for (int c : colors_)
        if (c < 1 || c > color_count_)
            throw std::invalid_argument("arc color outside 1..c");
}

int ArcColoring::used_color_count() const {
    std::vector<int> sorted(colors_.begin(), colors_.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return static_cast<int>(sorted.size());
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("coloring parse error: " + what);
}

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

ArcColoring read_coloring(std::istream& in, const Digraph& d) {
    std::string line;
    if (!next_data_line(in, line)) parse_fail("missing header");
    std::istringstream header(line);
    std::string tag;
    int m = 0, c = 0;
    if (!(header >> tag >> m >> c) || tag != "coloring")
        parse_fail("header must be 'coloring <m> <c>'");
    if (m != d.arc_count()) parse_fail("arc count does not match digraph");
    if (c < 1) parse_fail("color count must be >= 1");
    std::vector<int> colors(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, line)) parse_fail("fewer entries than declared");
        std::istringstream row(line);
        int tail = 0, head = 0, color = 0;
        if (!(row >> tail >> head >> color)) parse_fail("bad entry: " + line);
        const auto idx = d.arc_index(tail, head);
        if (!idx) parse_fail("entry names a non-arc: " + line);
        if (colors[static_cast<std::size_t>(*idx)] != 0)
            parse_fail("duplicate entry for arc: " + line);
        if (color < 1 || color > c) parse_fail("color outside 1..c: " + line);
        colors[static_cast<std::size_t>(*idx)] = color;
    }
    return ArcColoring(std::move(colors), c);
}

ArcColoring load_coloring(const std::string& path, const Digraph& d) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_coloring(in, d);
}

void write_coloring(std::ostream& out, const Digraph& d, const ArcColoring& coloring) {
    if (coloring.size() != d.arc_count())
        throw std::invalid_argument("coloring does not match digraph");
    out << "coloring " << d.arc_count() << ' ' << coloring.color_count() << '\n';
    for (int i = 0; i < d.arc_count(); ++i)
        out << d.arc(i).tail << ' ' << d.arc(i).head << ' ' << coloring.color_of(i) << '\n';
}

void save_coloring(const std::string& path, const Digraph& d, const ArcColoring& coloring) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_coloring(out, d, coloring);
}

std::string coloring_to_string(const Digraph& d, const ArcColoring& coloring) {
    std::ostringstream out;
    write_coloring(out, d, coloring);
    return out.str();
}

}  // namespace rcdc
