#pragma once

#include "wdms/surface.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wdms {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), column(c) {}
};

// Line-oriented document:
//   surface genus=<g>
//   boundary <name> marked=<k>
//   decoration <name> weight=<w>
//   polygon <dec> : <side> ...        side = arc:<name> | bseg:<boundary>.<k>
//   shift <arc>=<int>
//   select <dec> <dec> ...
// '#' starts a comment. Polygon sides are listed clockwise; the two
// occurrences of an arc are assigned in reading order.
struct WdmsDocument {
    MixedAngulation angulation;
    std::vector<std::string> selection; // optional `select` block, decoration names
};

WdmsDocument parse_wdms(const std::string& text);

// Deterministic: blocks in declaration order, side lists rotated to start at
// the lexicographically least side token.
std::string serialize_wdms(const WdmsDocument& doc);

WdmsDocument load_wdms_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace wdms
