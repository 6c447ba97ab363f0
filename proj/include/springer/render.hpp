// Deterministic chord-diagram renderings of a link pattern: standalone SVG
// with semicircular arcs, and a plain-ASCII form for terminals.  Identical
// input yields byte-identical output.

#pragma once

#include "springer/link_pattern.hpp"

#include <string>

namespace springer {

/// Standalone SVG: points on a baseline (fixed points hollow), arcs as
/// semicircles above, labels beneath.  Integer geometry only.
[[nodiscard]] std::string render_svg(const LinkPattern& p);

/// ASCII art: arcs drawn as slash-underscore brackets with nesting
/// reflected in height; crossing arcs share columns, with verticals drawn
/// over horizontals.
[[nodiscard]] std::string render_ascii(const LinkPattern& p);

} // namespace springer
