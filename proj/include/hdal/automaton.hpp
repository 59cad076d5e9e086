#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hdal/ipomset.hpp"
#include "hdal/language.hpp"
#include "hdal/precubical.hpp"

namespace hdal {

/// Precubical set with start and accept cells. Marking lists are sorted and
/// free of duplicates.
struct Hda {
  PrecubicalSet carrier;
  std::vector<CellIndex> start;
  std::vector<CellIndex> accept;

  bool isStart(CellIndex x) const;
  bool isAccept(CellIndex x) const;
};

/// Builds an Hda from cell ids. Throws UnknownCell.
Hda makeHda(PrecubicalSet carrier, const std::vector<std::string>& startIds,
            const std::vector<std::string>& acceptIds);

/// Precubical map that must also preserve start and accept cells.
struct HdaMap {
  PrecubicalMap map;
};

/// Reasons f is not an HDA map X → Y; empty if it is.
std::vector<std::string> validateHdaMap(const HdaMap& f, const Hda& x, const Hda& y);

struct Step {
  enum class Kind { Up, Down };
  Kind kind;
  EventMask positions;  // A for an up-step (on the upper cell), B for a down-step (on the lower cell)

  friend bool operator==(const Step&, const Step&) = default;
};

/// x_0, φ_1, x_1, ..., φ_n, x_n with cells.size() == steps.size() + 1.
struct Path {
  std::vector<CellIndex> cells;
  std::vector<Step> steps;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Throws InvalidPath unless every step is a non-empty up- or down-step of X.
void validatePath(const PrecubicalSet& x, const Path& path);

/// Label of a single step, or of the length-0 path at `cell` (identity on its word).
Ipomset identityLabel(const PrecubicalSet& x, CellIndex cell);
Ipomset upLabel(const PrecubicalSet& x, CellIndex upper, EventMask a);
Ipomset downLabel(const PrecubicalSet& x, CellIndex upper, EventMask b);

/// Glued label of all steps. Throws InvalidPath.
Ipomset evLabel(const PrecubicalSet& x, const Path& path);

/// Event count of the path's label: dimension of the first cell plus up-step sizes.
std::size_t pathEvents(const PrecubicalSet& x, const Path& path);

/// Calls `visit` for every path from a start cell to an accept cell with at
/// most `maxEvents` events. Up-steps consume budget and down-step runs
/// lower the dimension, so the search is finite.
void forEachAcceptingPath(const Hda& x, std::size_t maxEvents, const std::function<void(const Path&)>& visit);
std::vector<Path> acceptingPaths(const Hda& x, std::size_t maxEvents);

/// Labels of all accepting paths with at most `maxEvents` events, sorted and
/// distinct. Computed by search over (cell, label) states, without listing paths.
std::vector<Ipomset> pathLabels(const Hda& x, std::size_t maxEvents);

/// Normalized language restricted to `maxEvents` events.
Language language(const Hda& x, std::size_t maxEvents);

/// One vertex that is both start and accept.
Hda unitHda();

/// Cells (x, y) with start = start × start and accept = accept × accept.
Hda tensorHda(const Hda& x, const Hda& y);
Hda tensorPower(const Hda& x, std::size_t n);

struct HdaCocone {
  Hda apex;
  std::vector<HdaMap> legs;
};

HdaCocone coproductHda(const std::vector<Hda>& parts);

/// left ← apex → right.
struct Span {
  Hda apex;
  Hda left;
  Hda right;
  HdaMap leftMap;
  HdaMap rightMap;
};

/// Markings of the pushout are the images of all markings. Throws InvalidMap
/// if a span leg is not an HDA map.
HdaCocone pushoutHda(const Span& span);

/// Coproduct of X^{⊗0}, ..., X^{⊗n}.
Hda replicate(const Hda& x, std::size_t n);

struct HdaChain {
  std::vector<Hda> automata;  // A_1 .. A_N
  std::vector<HdaMap> maps;   // A_k → A_{k+1}
};

/// A_1 = A and A_{k+1} = pushout of A_k ← A^{⊗k} (unmarked) → A^{⊗k+1},
/// where x ↦ (x, s) for the single start vertex s of A. Start markings are
/// dropped during the chain and the image of s is marked at the end.
/// Throws InvalidArgument unless A has exactly one start cell, a vertex.
HdaChain replicationChainPrefix(const Hda& a, std::size_t n);

/// Number of cells one dimension up that have `cell` as an elementary face.
/// Throws UnknownCell.
std::size_t branchingDegree(const Hda& x, CellIndex cell);
std::size_t startCellCount(const Hda& x);

}  // namespace hdal
