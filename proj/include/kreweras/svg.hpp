#ifndef KREWERAS_SVG_HPP
#define KREWERAS_SVG_HPP

#include <cstdint>
#include <string>

#include "kreweras/bump.hpp"
#include "kreweras/web.hpp"

namespace kreweras {

/// Semicircle rendering of a bump diagram: solid blue arcs, dashed crimson
/// arcs, positions and letters along the baseline.
std::string bump_to_svg(const BumpDiagram& d);

/// Circle rendering of a web: boundary vertices equally spaced on the rim
/// (labels counterclockwise), internal vertices relaxed toward the average of
/// their neighbors.  Layout is deterministic for a fixed seed.  When a
/// coloring is given, edges render solid blue / dashed crimson / wavy green.
std::string web_to_svg(const Web& w, const EdgeColoring* coloring = nullptr,
                       std::uint64_t seed = 0);

}  // namespace kreweras

#endif
