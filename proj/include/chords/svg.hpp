#pragma once

#include <string>

#include "chords/interval_set.hpp"
#include "chords/plfunc.hpp"

namespace chords {

// Static plot: the function graph on top, a horizontal bar underneath
// marking the chord set (solid segments for intervals, dots for isolated
// points). Byte-deterministic for a fixed input.
std::string render_plot_svg(const PLFunction& f, const IntervalSet& chords);

}  // namespace chords
