#pragma once

#include <string>

#include "spotlight/tiling.hpp"

namespace spotlight {

// One character per bounding-box cell: spotlight origins 'H', 'V', or 'o'
// (undirected); continuation cells '>' (east) or 'v' (south); cells outside
// the region '.'. Rows north to south, trailing newline per row.
std::string render_ascii(const Tiling& tiling);

// Standalone SVG document: one rounded rectangle per spotlight with an
// arrowhead showing its direction (a dot for undirected singletons).
// Deterministic output, but geometry is presentation-only.
std::string render_svg(const Tiling& tiling);

// {"region": <grid text>, "spots": [{"row","col","dir","len"}, ...]} with
// spots in canonical order. indent < 0 emits one compact line (for streams).
std::string tiling_to_json(const Tiling& tiling, int indent = 2);

// Parses and validates a tiling document, reconstructing a placement witness.
// Throws std::invalid_argument on malformed input or an untileable spot list.
Tiling tiling_from_json(const std::string& text);

}  // namespace spotlight
