#include "hdal/precubical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hdal/error.hpp"

namespace hdal {

LoSet LoSet::without(std::size_t position) const {
  std::vector<Symbol> rest = letters_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(position));
  return LoSet(std::move(rest));
}

LoSet LoSet::withoutPositions(EventMask removed) const {
  std::vector<Symbol> rest;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (!has(removed, i)) rest.push_back(letters_[i]);
  return LoSet(std::move(rest));
}

LoSet tensorLoSet(const LoSet& u, const LoSet& v) {
  std::vector<Symbol> w = u.letters();
  w.insert(w.end(), v.letters().begin(), v.letters().end());
  return LoSet(std::move(w));
}

std::string toString(const LoSet& u) {
  std::string out = "(";
  for (std::size_t i = 0; i < u.size(); ++i) out += (i ? " " : "") + u[i];
  return out + ")";
}

void checkCoface(const CofaceMap& d) {
  const std::size_t m = d.target.size();
  if (d.image.size() != d.source.size())
    fail(Errc::ShapeMismatch, "coface image has the wrong length");
  EventMask imageMask = 0;
  for (std::size_t k = 0; k < d.image.size(); ++k) {
    if (d.image[k] >= m) fail(Errc::ShapeMismatch, "coface image position out of range");
    if (k > 0 && d.image[k] <= d.image[k - 1]) fail(Errc::ShapeMismatch, "coface image is not increasing");
    if (d.target[d.image[k]] != d.source[k]) fail(Errc::ShapeMismatch, "coface does not preserve labels");
    imageMask |= bit(d.image[k]);
  }
  if ((d.partA & d.partB) != 0) fail(Errc::ShapeMismatch, "coface parts overlap");
  if ((d.partA | d.partB) != (lowMask(m) & ~imageMask))
    fail(Errc::ShapeMismatch, "coface parts do not partition the complement of the image");
}

CofaceMap identityCoface(const LoSet& u) {
  CofaceMap d{u, u, std::vector<std::size_t>(u.size()), 0, 0};
  std::iota(d.image.begin(), d.image.end(), std::size_t{0});
  return d;
}

CofaceMap faceInclusion(const LoSet& u, EventMask a, EventMask b) {
  if (((a | b) & ~lowMask(u.size())) != 0)
    fail(Errc::PositionOutOfRange, "face positions exceed " + toString(u));
  if ((a & b) != 0) fail(Errc::InvalidArgument, "face position sets must be disjoint");
  CofaceMap d{u.withoutPositions(a | b), u, {}, a, b};
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!has(a | b, i)) d.image.push_back(i);
  return d;
}

CofaceMap composeCoface(const CofaceMap& outer, const CofaceMap& inner) {
  if (inner.target != outer.source)
    fail(Errc::ShapeMismatch, "cannot compose: " + toString(inner.target) + " vs " + toString(outer.source));
  CofaceMap d{inner.source, outer.target, {}, outer.partA, outer.partB};
  for (std::size_t k : inner.image) d.image.push_back(outer.image[k]);
  for (std::size_t a : indicesOf(inner.partA)) d.partA |= bit(outer.image[a]);
  for (std::size_t b : indicesOf(inner.partB)) d.partB |= bit(outer.image[b]);
  return d;
}

CofaceMap tensorCoface(const CofaceMap& d1, const CofaceMap& d2) {
  const std::size_t shift = d1.target.size();
  CofaceMap d{tensorLoSet(d1.source, d2.source), tensorLoSet(d1.target, d2.target), d1.image,
              d1.partA | (d2.partA << shift), d1.partB | (d2.partB << shift)};
  for (std::size_t k : d2.image) d.image.push_back(k + shift);
  return d;
}

CellIndex PrecubicalSet::addCell(std::string id, LoSet shape, Faces faces) {
  if (index_.contains(id)) fail(Errc::DuplicateCell, "duplicate cell id '" + id + "'");
  if (faces.size() != shape.size())
    fail(Errc::ShapeMismatch, "cell '" + id + "' needs " + std::to_string(shape.size()) + " face pairs");
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (CellIndex f : faces[i]) {
      if (f >= cells_.size()) fail(Errc::UnknownCell, "face of cell '" + id + "' does not exist");
      if (cells_[f].shape != shape.without(i))
        fail(Errc::ShapeMismatch, "face " + std::to_string(i) + " of cell '" + id + "' has shape " +
                                      toString(cells_[f].shape));
    }
  const CellIndex x = cells_.size();
  index_.emplace(id, x);
  cells_.push_back({std::move(id), std::move(shape), std::move(faces)});
  return x;
}

std::size_t PrecubicalSet::maxDimension() const {
  std::size_t d = 0;
  for (const auto& c : cells_) d = std::max(d, c.shape.size());
  return d;
}

CellIndex PrecubicalSet::face(CellIndex x, std::size_t position, int nu) const {
  const auto& c = cells_.at(x);
  if (position >= c.shape.size())
    fail(Errc::PositionOutOfRange, "cell '" + c.id + "' has no position " + std::to_string(position));
  return c.faces[position][nu == 0 ? 0 : 1];
}

std::optional<CellIndex> PrecubicalSet::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CellIndex PrecubicalSet::at(std::string_view id) const {
  auto x = find(id);
  if (!x) fail(Errc::UnknownCell, "unknown cell '" + std::string(id) + "'");
  return *x;
}

std::map<LoSet, std::vector<CellIndex>> PrecubicalSet::cellsByShape() const {
  std::map<LoSet, std::vector<CellIndex>> out;
  for (CellIndex x = 0; x < cells_.size(); ++x) out[cells_[x].shape].push_back(x);
  return out;
}

std::vector<CellIndex> PrecubicalSet::sortedCells() const {
  std::vector<CellIndex> order(cells_.size());
  std::iota(order.begin(), order.end(), CellIndex{0});
  std::sort(order.begin(), order.end(), [this](CellIndex a, CellIndex b) {
    if (dimension(a) != dimension(b)) return dimension(a) < dimension(b);
    return id(a) < id(b);
  });
  return order;
}

std::vector<FaceViolation> validatePrecubical(const PrecubicalSet& x) {
  std::vector<FaceViolation> out;
  for (CellIndex c = 0; c < x.cellCount(); ++c) {
    const std::size_t n = x.dimension(c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (int mu = 0; mu < 2; ++mu)
          for (int nu = 0; nu < 2; ++nu) {
            const CellIndex lhs = x.face(x.face(c, j, nu), i, mu);
            const CellIndex rhs = x.face(x.face(c, i, mu), j - 1, nu);
            if (lhs != rhs) out.push_back({c, i, j, mu, nu});
          }
  }
  return out;
}

CellIndex applyFace(const PrecubicalSet& x, CellIndex cell, EventMask a, EventMask b) {
  if (cell >= x.cellCount()) fail(Errc::UnknownCell, "cell index " + std::to_string(cell) + " out of range");
  if (((a | b) & ~lowMask(x.dimension(cell))) != 0)
    fail(Errc::PositionOutOfRange, "face positions exceed the dimension of '" + x.id(cell) + "'");
  if ((a & b) != 0) fail(Errc::InvalidArgument, "face position sets must be disjoint");
  auto positions = indicesOf(a | b);
  for (auto it = positions.rbegin(); it != positions.rend(); ++it)
    cell = x.face(cell, *it, has(a, *it) ? 0 : 1);
  return cell;
}

PrecubicalMap identityMap(const PrecubicalSet& x) {
  PrecubicalMap f{std::vector<CellIndex>(x.cellCount())};
  std::iota(f.cells.begin(), f.cells.end(), CellIndex{0});
  return f;
}

PrecubicalMap composeMaps(const PrecubicalMap& outer, const PrecubicalMap& inner) {
  PrecubicalMap f;
  f.cells.reserve(inner.cells.size());
  for (CellIndex c : inner.cells) f.cells.push_back(outer.cells.at(c));
  return f;
}

std::vector<std::string> validatePrecubicalMap(const PrecubicalMap& f, const PrecubicalSet& x,
                                               const PrecubicalSet& y) {
  std::vector<std::string> out;
  if (f.cells.size() != x.cellCount()) {
    out.push_back("map covers " + std::to_string(f.cells.size()) + " cells, source has " +
                  std::to_string(x.cellCount()));
    return out;
  }
  for (CellIndex c = 0; c < x.cellCount(); ++c)
    if (f.cells[c] >= y.cellCount()) {
      out.push_back("image of '" + x.id(c) + "' does not exist");
      return out;
    }
  for (CellIndex c = 0; c < x.cellCount(); ++c) {
    const CellIndex fc = f.cells[c];
    if (x.shape(c) != y.shape(fc)) {
      out.push_back("'" + x.id(c) + "' and its image '" + y.id(fc) + "' differ in shape");
      continue;
    }
    for (std::size_t i = 0; i < x.dimension(c); ++i)
      for (int nu = 0; nu < 2; ++nu)
        if (f.cells[x.face(c, i, nu)] != y.face(fc, i, nu))
          out.push_back("map does not commute with face (" + std::to_string(nu) + "," + std::to_string(i) +
                        ") of '" + x.id(c) + "'");
  }
  return out;
}

TensorProduct tensor(const PrecubicalSet& x, const PrecubicalSet& y) {
  TensorProduct t;
  t.rightCount = y.cellCount();
  t.pairs.assign(x.cellCount() * y.cellCount(), 0);
  const std::size_t top = x.maxDimension() + y.maxDimension();
  for (std::size_t d = 0; d <= top; ++d)
    for (CellIndex a = 0; a < x.cellCount(); ++a)
      for (CellIndex b = 0; b < y.cellCount(); ++b) {
        const std::size_t left = x.dimension(a);
        if (left + y.dimension(b) != d) continue;
        PrecubicalSet::Faces faces(d);
        for (std::size_t i = 0; i < d; ++i)
          for (int nu = 0; nu < 2; ++nu)
            faces[i][static_cast<std::size_t>(nu)] =
                i < left ? t.cell(x.face(a, i, nu), b) : t.cell(a, y.face(b, i - left, nu));
        t.pairs[a * t.rightCount + b] =
            t.carrier.addCell("(" + x.id(a) + "," + y.id(b) + ")", tensorLoSet(x.shape(a), y.shape(b)),
                              std::move(faces));
      }
  return t;
}

Cocone coproduct(const std::vector<PrecubicalSet>& parts) {
  Cocone out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& part = parts[k];
    PrecubicalMap leg;
    for (CellIndex c = 0; c < part.cellCount(); ++c) {
      PrecubicalSet::Faces faces = part.faces(c);
      for (auto& pair : faces)
        for (auto& f : pair) f = leg.cells[f];
      leg.cells.push_back(out.apex.addCell(std::to_string(k) + ":" + part.id(c), part.shape(c), std::move(faces)));
    }
    out.legs.push_back(std::move(leg));
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Cocone finiteColimit(const Diagram& diagram) {
  const auto& objects = diagram.objects;
  std::vector<std::size_t> offset(objects.size() + 1, 0);
  for (std::size_t k = 0; k < objects.size(); ++k) offset[k + 1] = offset[k] + objects[k].cellCount();
  const std::size_t total = offset.back();

  UnionFind classes(total);
  for (const auto& arrow : diagram.arrows) {
    if (arrow.from >= objects.size() || arrow.to >= objects.size())
      fail(Errc::IllFormedDiagram, "arrow refers to a missing object");
    auto problems = validatePrecubicalMap(arrow.map, objects[arrow.from], objects[arrow.to]);
    if (!problems.empty()) fail(Errc::IllFormedDiagram, "arrow " + std::to_string(arrow.from) + "->" +
                                                            std::to_string(arrow.to) + ": " + problems.front());
    for (CellIndex c = 0; c < arrow.map.cells.size(); ++c)
      classes.unite(offset[arrow.from] + c, offset[arrow.to] + arrow.map.cells[c]);
  }

  std::vector<std::size_t> owner(total);
  std::vector<CellIndex> local(total);
  std::vector<std::string> tagged(total);
  for (std::size_t k = 0; k < objects.size(); ++k)
    for (CellIndex c = 0; c < objects[k].cellCount(); ++c) {
      owner[offset[k] + c] = k;
      local[offset[k] + c] = c;
      tagged[offset[k] + c] = std::to_string(k) + ":" + objects[k].id(c);
    }

  // Representative of each class: member with the least tagged id.
  std::vector<std::size_t> rep(total);
  std::iota(rep.begin(), rep.end(), std::size_t{0});
  for (std::size_t g = 0; g < total; ++g) {
    const std::size_t root = classes.find(g);
    if (tagged[g] < tagged[rep[root]]) rep[root] = g;
  }

  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < total; ++g)
    if (classes.find(g) == g) reps.push_back(rep[g]);
  auto dim = [&](std::size_t g) { return objects[owner[g]].dimension(local[g]); };
  std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
    if (dim(a) != dim(b)) return dim(a) < dim(b);
    return tagged[a] < tagged[b];
  });

  Cocone out;
  std::vector<CellIndex> classCell(total, 0);
  for (std::size_t g : reps) {
    const auto& obj = objects[owner[g]];
    PrecubicalSet::Faces faces(dim(g));
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (int nu = 0; nu < 2; ++nu)
        faces[i][static_cast<std::size_t>(nu)] =
            classCell[classes.find(offset[owner[g]] + obj.face(local[g], i, nu))];
    classCell[classes.find(g)] = out.apex.addCell(tagged[g], obj.shape(local[g]), std::move(faces));
  }

  for (std::size_t k = 0; k < objects.size(); ++k) {
    PrecubicalMap leg;
    for (CellIndex c = 0; c < objects[k].cellCount(); ++c) leg.cells.push_back(classCell[classes.find(offset[k] + c)]);
    out.legs.push_back(std::move(leg));
  }
  for (std::size_t k = 0; k < objects.size(); ++k)
    if (!validatePrecubicalMap(out.legs[k], objects[k], out.apex).empty())
      fail(Errc::IllFormedDiagram, "induced face maps are not well defined");
  return out;
}

}  // namespace hdal
