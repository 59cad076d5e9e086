#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hdal/ipomset.hpp"

namespace hdal {

/// Labelled linearly ordered set in skeletal form: a word whose positions
/// 0..n-1 carry the order.
class LoSet {
 public:
  LoSet() = default;
  explicit LoSet(std::vector<Symbol> letters) : letters_(std::move(letters)) {}
  LoSet(std::initializer_list<Symbol> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Symbol& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Symbol>& letters() const { return letters_; }

  /// The word with the letter at `position` removed.
  LoSet without(std::size_t position) const;
  /// The word restricted to the positions outside `removed`.
  LoSet withoutPositions(EventMask removed) const;

  friend bool operator==(const LoSet&, const LoSet&) = default;
  friend std::strong_ordering operator<=>(const LoSet&, const LoSet&) = default;

 private:
  std::vector<Symbol> letters_;
};

/// Concatenation; the unit is the empty word.
LoSet tensorLoSet(const LoSet& u, const LoSet& v);

std::string toString(const LoSet& u);

/// Coface map d = (f, A, B): source → target where f is given by its image
/// positions and {A, B} partitions the complement of the image.
struct CofaceMap {
  LoSet source;
  LoSet target;
  std::vector<std::size_t> image;
  EventMask partA = 0;
  EventMask partB = 0;

  friend bool operator==(const CofaceMap&, const CofaceMap&) = default;
};

/// Throws ShapeMismatch unless the coface invariants hold.
void checkCoface(const CofaceMap& d);

CofaceMap identityCoface(const LoSet& u);

/// d_{A,B}: U∖(A∪B) → U. Throws PositionOutOfRange or InvalidArgument.
CofaceMap faceInclusion(const LoSet& u, EventMask a, EventMask b);

/// outer ∘ inner = (e∘d, e(A) ∪ C, e(B) ∪ D). Throws ShapeMismatch unless
/// inner.target == outer.source.
CofaceMap composeCoface(const CofaceMap& outer, const CofaceMap& inner);

/// Componentwise tensor (d1 ⊛ d2).
CofaceMap tensorCoface(const CofaceMap& d1, const CofaceMap& d2);

using CellIndex = std::size_t;

/// Finite precubical set with elementary faces stored explicitly.
///
/// Cells are added bottom-up: every face of a new cell must already exist and
/// have the shape of the cell's word with the corresponding letter deleted.
/// The precubical identities are not enforced on insertion; use
/// `validatePrecubical`.
class PrecubicalSet {
 public:
  /// faces[i] = {δ^0_i(x), δ^1_i(x)}.
  using Faces = std::vector<std::array<CellIndex, 2>>;

  CellIndex addCell(std::string id, LoSet shape, Faces faces = {});

  std::size_t cellCount() const { return cells_.size(); }
  const std::string& id(CellIndex x) const { return cells_.at(x).id; }
  const LoSet& shape(CellIndex x) const { return cells_.at(x).shape; }
  std::size_t dimension(CellIndex x) const { return cells_.at(x).shape.size(); }
  std::size_t maxDimension() const;

  /// Elementary face δ^ν_i(x).
  CellIndex face(CellIndex x, std::size_t position, int nu) const;
  const Faces& faces(CellIndex x) const { return cells_.at(x).faces; }

  std::optional<CellIndex> find(std::string_view id) const;
  /// Throws UnknownCell.
  CellIndex at(std::string_view id) const;

  /// Cell indices grouped by shape.
  std::map<LoSet, std::vector<CellIndex>> cellsByShape() const;

  /// Cells ordered by (dimension, id): the serialization order.
  std::vector<CellIndex> sortedCells() const;

 private:
  struct Cell {
    std::string id;
    LoSet shape;
    Faces faces;
  };
  std::vector<Cell> cells_;
  std::unordered_map<std::string, CellIndex> index_;
};

/// Broken precubical identity δ^μ_i δ^ν_j(x) ≠ δ^ν_{j-1} δ^μ_i(x), i < j.
struct FaceViolation {
  CellIndex cell;
  std::size_t i, j;
  int mu, nu;
};

/// Empty iff X satisfies every precubical identity.
std::vector<FaceViolation> validatePrecubical(const PrecubicalSet& x);

/// δ_{A,B}(cell): elementary faces applied in descending position order.
/// Throws UnknownCell, PositionOutOfRange, InvalidArgument (A ∩ B ≠ ∅).
CellIndex applyFace(const PrecubicalSet& x, CellIndex cell, EventMask a, EventMask b);

/// Shape-preserving cell function X → Y; cells[x] is the image of x.
struct PrecubicalMap {
  std::vector<CellIndex> cells;

  friend bool operator==(const PrecubicalMap&, const PrecubicalMap&) = default;
};

PrecubicalMap identityMap(const PrecubicalSet& x);
PrecubicalMap composeMaps(const PrecubicalMap& outer, const PrecubicalMap& inner);

/// Human-readable reasons the map is not a precubical map X → Y; empty if it is.
std::vector<std::string> validatePrecubicalMap(const PrecubicalMap& f, const PrecubicalSet& x,
                                               const PrecubicalSet& y);

/// X ⊗ Y with cells (x, y) of shape word(x)·word(y).
struct TensorProduct {
  PrecubicalSet carrier;
  std::size_t rightCount = 0;
  std::vector<CellIndex> pairs;  // pairs[x * rightCount + y] = (x, y)

  CellIndex cell(CellIndex x, CellIndex y) const { return pairs[x * rightCount + y]; }
};

TensorProduct tensor(const PrecubicalSet& x, const PrecubicalSet& y);

/// Colimit object with one leg per diagram object.
struct Cocone {
  PrecubicalSet apex;
  std::vector<PrecubicalMap> legs;
};

/// Pointwise disjoint union; cell ids are tagged "k:id".
Cocone coproduct(const std::vector<PrecubicalSet>& parts);

struct DiagramArrow {
  std::size_t from;
  std::size_t to;
  PrecubicalMap map;
};

struct Diagram {
  std::vector<PrecubicalSet> objects;
  std::vector<DiagramArrow> arrows;
};

/// Pointwise quotient of the disjoint union by the equivalence generated by
/// x ~ F(f)(x). Each class is named by its least tagged id "k:id".
/// Throws IllFormedDiagram for bad indices or invalid arrow maps.
Cocone finiteColimit(const Diagram& diagram);

}  // namespace hdal
