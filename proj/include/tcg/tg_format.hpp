#pragma once

#include <string>
#include <string_view>

#include "tcg/temporal_graph.hpp"

namespace tcg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical plain-text temporal graph format.
///
///   tgraph 1
///   vertex <label>
///   edge <u> <v> <t1> [<t2> ...]
///
/// '#' starts a comment; blank lines are ignored; repeated edge lines merge;
/// line order is irrelevant. `vertex` lines are optional and only needed for
/// isolated vertices. Throws ParseError with a line number on bad input.
TemporalGraph parse_tg(std::string_view text);

/// Canonical serialisation: header, isolated-vertex declarations sorted by
/// label, edge lines sorted by label pair with ascending times.
/// parse_tg(serialise_tg(g)) == g.
std::string serialise_tg(const TemporalGraph& g);

TemporalGraph load_tg_file(const std::string& path);

}  // namespace tcg
