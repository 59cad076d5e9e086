#pragma once

#include <string>

#include "hdal/automaton.hpp"
#include "hdal/ipomset.hpp"

namespace hdal::fixtures {

/// 3×3 vertex grid v<row><col>, row 0 on top. Filled squares (a b) and (a d)
/// in the bottom row, empty c-squares above them. Start v20, accepts v01, v02.
Hda conflictGrid();

/// One edge labelled `label` from "0" (start) to "1" (accept).
Hda singleEdge(const Symbol& label);

/// Unmarked vertex into an a-edge with a start and into a c-edge with an
/// accept; the pushout accepts a → c although every corner accepts nothing.
Span pushoutCounterexample();

/// a < b and c < d with nothing else: the smallest non-interval order.
Ipomset twoPlusTwo();

}  // namespace hdal::fixtures
