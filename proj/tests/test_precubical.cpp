#include <doctest.h>

#include "hdal/error.hpp"
#include "hdal/precubical.hpp"
#include "oracle.hpp"

using namespace hdal;

namespace {

Errc errorOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

// Square "ab": the a-edges run along the bottom and top, b-edges on the sides.
PrecubicalSet square() {
  PrecubicalSet x;
  const auto v00 = x.addCell("00", {}), v10 = x.addCell("10", {}), v01 = x.addCell("01", {}),
             v11 = x.addCell("11", {});
  const auto bottom = x.addCell("a0", {"a"}, {{v00, v10}});
  const auto top = x.addCell("a1", {"a"}, {{v01, v11}});
  const auto left = x.addCell("b0", {"b"}, {{v00, v01}});
  const auto right = x.addCell("b1", {"b"}, {{v10, v11}});
  x.addCell("ab", {"a", "b"}, {{left, right}, {bottom, top}});
  return x;
}

PrecubicalSet edge(const Symbol& a) {
  PrecubicalSet x;
  const auto s = x.addCell("s", {}), t = x.addCell("t", {});
  x.addCell("e", {a}, {{s, t}});
  return x;
}

PrecubicalSet point() {
  PrecubicalSet x;
  x.addCell("p", {});
  return x;
}

std::size_t countDim(const PrecubicalSet& x, std::size_t d) {
  std::size_t n = 0;
  for (CellIndex c = 0; c < x.cellCount(); ++c) n += x.dimension(c) == d;
  return n;
}

}  // namespace

TEST_CASE("lo-set operations") {
  const LoSet u{"a", "b", "c"};
  CHECK((u.without(1) == LoSet{"a", "c"}));
  CHECK((u.withoutPositions(0b101) == LoSet{"b"}));
  CHECK((tensorLoSet(u, LoSet{"d"}) == LoSet{"a", "b", "c", "d"}));
  CHECK(toString(LoSet{}).size() < toString(u).size());
}

TEST_CASE("cofaces") {
  const LoSet u{"a", "b", "c"};
  const CofaceMap id = identityCoface(u);
  CHECK(id.image == std::vector<std::size_t>{0, 1, 2});
  CHECK_NOTHROW(checkCoface(id));

  const CofaceMap d = faceInclusion(u, 0b001, 0b100);
  CHECK((d.source == LoSet{"b"}));
  CHECK(d.image == std::vector<std::size_t>{1});
  CHECK((composeCoface(id, d) == d));
  CHECK((composeCoface(d, identityCoface(d.source)) == d));

  CHECK(errorOf([&] { faceInclusion(u, 0b011, 0b010); }) == Errc::InvalidArgument);
  CHECK(errorOf([&] { faceInclusion(u, 0b1000, 0); }) == Errc::PositionOutOfRange);

  CofaceMap bad = d;
  bad.partB = 0;
  CHECK(errorOf([&] { checkCoface(bad); }) == Errc::ShapeMismatch);
  CHECK(errorOf([&] { composeCoface(d, d); }) == Errc::ShapeMismatch);
}

TEST_CASE("coface composition matches cube-vertex functions") {
  for (const auto& u : oracle::allWords(3, {"a", "b"}))
    for (const auto& d : oracle::allCofaces(LoSet{}, u)) {
      CHECK((oracle::cofaceFromFunction(oracle::cofaceFunction(d), d.source, d.target) == d));
    }
}

TEST_CASE("tensor of cofaces concatenates") {
  const CofaceMap d1 = faceInclusion({"a", "b"}, 0b01, 0);
  const CofaceMap d2 = faceInclusion({"c"}, 0, 0b1);
  const CofaceMap t = tensorCoface(d1, d2);
  CHECK((t.target == LoSet{"a", "b", "c"}));
  CHECK((t.source == LoSet{"b"}));
  CHECK(t.partA == 0b001);
  CHECK(t.partB == 0b100);
}

TEST_CASE("cells and faces") {
  const PrecubicalSet x = square();
  CHECK(x.cellCount() == 9);
  CHECK(x.maxDimension() == 2);
  CHECK(validatePrecubical(x).empty());

  const CellIndex ab = x.at("ab");
  CHECK(x.id(x.face(ab, 0, 0)) == "b0");
  CHECK(x.id(x.face(ab, 1, 1)) == "a1");
  CHECK(x.id(applyFace(x, ab, 0b11, 0)) == "00");
  CHECK(x.id(applyFace(x, ab, 0, 0b11)) == "11");
  CHECK(x.id(applyFace(x, ab, 0b01, 0b10)) == "01");
  CHECK(applyFace(x, ab, 0, 0) == ab);
  CHECK_FALSE(x.find("zz").has_value());
  CHECK(errorOf([&] { x.at("zz"); }) == Errc::UnknownCell);
  CHECK(errorOf([&] { x.face(ab, 2, 0); }) == Errc::PositionOutOfRange);

  const auto byShape = x.cellsByShape();
  CHECK(byShape.at(LoSet{}).size() == 4);
  CHECK(byShape.at(LoSet{"a"}).size() == 2);
}

TEST_CASE("addCell rejects bad cells") {
  PrecubicalSet x = edge("a");
  CHECK(errorOf([&] { x.addCell("s", {}); }) == Errc::DuplicateCell);
  CHECK(errorOf([&] { x.addCell("f", {"a"}); }) == Errc::ShapeMismatch);
  CHECK(errorOf([&] { x.addCell("f", {"a"}, {{0, 7}}); }) == Errc::UnknownCell);
  CHECK(errorOf([&] { x.addCell("f", {"a"}, {{0, 2}}); }) == Errc::ShapeMismatch);
}

TEST_CASE("identity violations are reported") {
  PrecubicalSet x;
  const auto v00 = x.addCell("00", {}), v10 = x.addCell("10", {}), v01 = x.addCell("01", {}),
             v11 = x.addCell("11", {});
  const auto bottom = x.addCell("a0", {"a"}, {{v00, v10}});
  const auto top = x.addCell("a1", {"a"}, {{v01, v11}});
  const auto left = x.addCell("b0", {"b"}, {{v00, v01}});
  const auto right = x.addCell("b1", {"b"}, {{v10, v11}});
  x.addCell("ab", {"a", "b"}, {{right, left}, {bottom, top}});
  CHECK_FALSE(validatePrecubical(x).empty());
}

TEST_CASE("maps") {
  const PrecubicalSet x = square();
  const PrecubicalMap id = identityMap(x);
  CHECK(validatePrecubicalMap(id, x, x).empty());
  CHECK((composeMaps(id, id) == id));

  // Collapsing the square onto its bottom edge is not a map: b-cells have no a-image.
  PrecubicalMap bad = id;
  bad.cells[x.at("b0")] = x.at("a0");
  CHECK_FALSE(validatePrecubicalMap(bad, x, x).empty());
}

TEST_CASE("tensor products") {
  const PrecubicalSet x = square();
  const TensorProduct unit = tensor(point(), x);
  CHECK(unit.carrier.cellCount() == x.cellCount());
  CHECK(validatePrecubical(unit.carrier).empty());

  const TensorProduct e2 = tensor(edge("a"), edge("b"));
  CHECK(countDim(e2.carrier, 0) == 4);
  CHECK(countDim(e2.carrier, 1) == 4);
  CHECK(countDim(e2.carrier, 2) == 1);
  CHECK(validatePrecubical(e2.carrier).empty());
  const CellIndex sq = e2.cell(2, 2);
  CHECK((e2.carrier.shape(sq) == LoSet{"a", "b"}));
  CHECK(e2.carrier.face(sq, 0, 0) == e2.cell(0, 2));
  CHECK(e2.carrier.face(sq, 1, 1) == e2.cell(2, 1));

  const TensorProduct big = tensor(x, x);
  CHECK(countDim(big.carrier, 4) == 1);
  CHECK(countDim(big.carrier, 2) == 4 * 1 + 4 * 4 + 1 * 4);
  CHECK(validatePrecubical(big.carrier).empty());
}

TEST_CASE("coproducts") {
  const Cocone c = coproduct({square(), edge("a"), PrecubicalSet{}});
  CHECK(c.apex.cellCount() == 12);
  CHECK(c.legs.size() == 3);
  CHECK(validatePrecubicalMap(c.legs[0], square(), c.apex).empty());
  CHECK(validatePrecubicalMap(c.legs[1], edge("a"), c.apex).empty());
  CHECK(validatePrecubical(c.apex).empty());
}

TEST_CASE("coequalizing the endpoints of an edge gives a loop") {
  Diagram d;
  d.objects = {point(), edge("a")};
  d.arrows = {{0, 1, PrecubicalMap{{0}}}, {0, 1, PrecubicalMap{{1}}}};
  const Cocone c = finiteColimit(d);
  REQUIRE(c.apex.cellCount() == 2);
  const CellIndex e = c.legs[1].cells[2];
  CHECK(c.apex.dimension(e) == 1);
  CHECK(c.apex.face(e, 0, 0) == c.apex.face(e, 0, 1));
  CHECK(validatePrecubicalMap(c.legs[1], d.objects[1], c.apex).empty());

  Diagram wrong;
  wrong.objects = {point(), edge("a")};
  wrong.arrows = {{0, 1, PrecubicalMap{{2}}}};
  CHECK(errorOf([&] { finiteColimit(wrong); }) == Errc::IllFormedDiagram);
}

TEST_CASE("pushout of two edges along a shared vertex") {
  Diagram d;
  d.objects = {point(), edge("a"), edge("b")};
  d.arrows = {{0, 1, PrecubicalMap{{1}}}, {0, 2, PrecubicalMap{{0}}}};
  const Cocone c = finiteColimit(d);
  CHECK(countDim(c.apex, 0) == 3);
  CHECK(countDim(c.apex, 1) == 2);
  CHECK(c.legs[1].cells[1] == c.legs[2].cells[0]);
}
