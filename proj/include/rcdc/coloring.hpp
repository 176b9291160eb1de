#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rcdc/digraph.hpp"

namespace rcdc {

// Total arc-coloring: one color in 1..c per arc index. The palette size c
// may exceed the number of values actually used.
class ArcColoring {
  public:
    ArcColoring(std::vector<int> colors, int color_count);

    int size() const { return static_cast<int>(colors_.size()); }
    int color_count() const { return color_count_; }
    int used_color_count() const;
    int color_of(int arc_index) const { return colors_[static_cast<std::size_t>(arc_index)]; }
    std::span<const int> colors() const { return colors_; }

    friend bool operator==(const ArcColoring&, const ArcColoring&) = default;

  private:
    std::vector<int> colors_;
    int color_count_;
};

// Text format: header "coloring <m> <c>", then one "<tail> <head> <color>"
// line per arc in any order; each (tail, head) must match exactly one arc of
// the digraph. '#' lines are comments.
ArcColoring read_coloring(std::istream& in, const Digraph& d);
ArcColoring load_coloring(const std::string& path, const Digraph& d);
void write_coloring(std::ostream& out, const Digraph& d, const ArcColoring& coloring);
void save_coloring(const std::string& path, const Digraph& d, const ArcColoring& coloring);
std::string coloring_to_string(const Digraph& d, const ArcColoring& coloring);

}  // namespace rcdc
