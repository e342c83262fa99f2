#ifndef WALKS_RENDER_HPP
#define WALKS_RENDER_HPP

#include "walks/words.hpp"

#include <string>

namespace walks {

/// Lattice path of w as a standalone SVG document: integer grid at 24 px
/// per unit, one arrow per step, a dot at the start.
std::string render_svg(const Word& w);

/// Character picture of the same path. Unit steps get connectors, longer
/// steps only show their endpoints. S marks the start, E the end.
std::string render_ascii(const Word& w);

}  // namespace walks

#endif
