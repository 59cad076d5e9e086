#pragma once

#include <string>

#include "hdal/automaton.hpp"

namespace hdal {

/// Graphviz rendering of the 2-skeleton. Vertices are circles (double for
/// accept cells), edges are labelled arrows, squares are shaded boxes tied to
/// their lowest and highest corners. Start cells get an arrow from an
/// invisible point. Cells above dimension 2 are listed in comments.
std::string toDot(const Hda& x, const std::string& name = "hda");

}  // namespace hdal
