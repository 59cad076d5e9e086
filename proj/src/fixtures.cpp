#include "hdal/fixtures.hpp"

namespace hdal::fixtures {

namespace {

CellIndex edge(PrecubicalSet& x, const Symbol& label, const std::string& from, const std::string& to) {
  return x.addCell(from + ">" + to, {label}, {{x.at(from), x.at(to)}});
}

}  // namespace

Hda conflictGrid() {
  PrecubicalSet x;
  for (const char* v : {"v00", "v01", "v02", "v10", "v11", "v12", "v20", "v21", "v22"}) x.addCell(v, {});
  edge(x, "b", "v00", "v01");
  const CellIndex b1 = edge(x, "b", "v10", "v11");
  const CellIndex b2 = edge(x, "b", "v20", "v21");
  const CellIndex d1 = edge(x, "d", "v11", "v12");
  const CellIndex d2 = edge(x, "d", "v21", "v22");
  const CellIndex a0 = edge(x, "a", "v20", "v10");
  const CellIndex a1 = edge(x, "a", "v21", "v11");
  const CellIndex a2 = edge(x, "a", "v22", "v12");
  edge(x, "c", "v10", "v00");
  edge(x, "c", "v11", "v01");
  edge(x, "c", "v12", "v02");
  // Position 0 is a; deleting it leaves the b- or d-edges, deleting 1 the a-edges.
  x.addCell("ab", {"a", "b"}, {{b2, b1}, {a0, a1}});
  x.addCell("ad", {"a", "d"}, {{d2, d1}, {a1, a2}});
  return makeHda(std::move(x), {"v20"}, {"v01", "v02"});
}

Hda singleEdge(const Symbol& label) {
  PrecubicalSet x;
  x.addCell("0", {});
  x.addCell("1", {});
  edge(x, label, "0", "1");
  return makeHda(std::move(x), {"0"}, {"1"});
}

Span pushoutCounterexample() {
  PrecubicalSet point;
  point.addCell("o", {});

  PrecubicalSet left;
  left.addCell("s", {});
  left.addCell("o", {});
  edge(left, "a", "s", "o");

  PrecubicalSet right;
  right.addCell("o", {});
  right.addCell("t", {});
  edge(right, "c", "o", "t");

  Span span{makeHda(std::move(point), {}, {}), makeHda(std::move(left), {"s"}, {}),
            makeHda(std::move(right), {}, {"t"}), {}, {}};
  span.leftMap.map.cells = {span.left.carrier.at("o")};
  span.rightMap.map.cells = {span.right.carrier.at("o")};
  return span;
}

Ipomset twoPlusTwo() {
  IposetData d;
  d.labels = {"a", "b", "c", "d"};
  d.precedence = {{0, 1}, {2, 3}};
  d.eventOrder = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return canonicalize(d);
}

}  // namespace hdal::fixtures
