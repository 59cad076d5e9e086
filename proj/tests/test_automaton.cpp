#include <doctest.h>

#include <random>
#include <set>

#include "hdal/automaton.hpp"
#include "hdal/error.hpp"
#include "hdal/fixtures.hpp"
#include "oracle.hpp"

using namespace hdal;

namespace {

constexpr auto kUp = Step::Kind::Up;
constexpr auto kDown = Step::Kind::Down;

// Filled (a b) square; position 0 is a, so deleting it leaves a b-edge.
Hda filledSquare(std::vector<std::string> start, std::vector<std::string> accept) {
  PrecubicalSet x;
  const auto v00 = x.addCell("00", {}), v10 = x.addCell("10", {}), v01 = x.addCell("01", {}),
             v11 = x.addCell("11", {});
  const auto bottom = x.addCell("a0", {"a"}, {{v00, v10}});
  const auto top = x.addCell("a1", {"a"}, {{v01, v11}});
  const auto left = x.addCell("b0", {"b"}, {{v00, v01}});
  const auto right = x.addCell("b1", {"b"}, {{v10, v11}});
  x.addCell("ab", {"a", "b"}, {{left, right}, {bottom, top}});
  return makeHda(std::move(x), start, accept);
}

Ipomset event(const Symbol& a, bool src = false, bool tgt = false) {
  IposetData d{{a}, {}, {}, {}, {}};
  if (src) d.sources = {0};
  if (tgt) d.targets = {0};
  return validate(d);
}

std::set<std::string> keys(const std::vector<Ipomset>& items) {
  std::set<std::string> out;
  for (const auto& p : items) out.insert(oracle::key(p));
  return out;
}

Errc errorOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("step labels") {
  const Hda sq = filledSquare({"00"}, {"11"});
  const PrecubicalSet& x = sq.carrier;
  CHECK(identityLabel(x, x.at("00")).empty());

  const Ipomset still = identityLabel(x, x.at("ab"));
  CHECK(still.size() == 2);
  CHECK(still.sources() == 0b11);
  CHECK(still.targets() == 0b11);
  CHECK_FALSE(still.comparable(0, 1));

  const Ipomset up = upLabel(x, x.at("ab"), 0b10);
  CHECK(up.sources() == 0b01);
  CHECK(up.targets() == 0b11);
  const Ipomset down = downLabel(x, x.at("ab"), 0b01);
  CHECK(down.sources() == 0b11);
  CHECK(down.targets() == 0b10);
}

TEST_CASE("path labels") {
  const Hda edge = fixtures::singleEdge("a");
  const PrecubicalSet& x = edge.carrier;
  const Path through{{x.at("0"), x.at("0>1"), x.at("1")}, {{kUp, 0b1}, {kDown, 0b1}}};
  CHECK((evLabel(x, through) == event("a")));
  CHECK(pathEvents(x, through) == 1);
  CHECK(evLabel(x, Path{{x.at("0")}, {}}).empty());

  const Hda sq = filledSquare({"00"}, {"11"});
  const PrecubicalSet& y = sq.carrier;
  const Path interior{{y.at("00"), y.at("ab"), y.at("11")}, {{kUp, 0b11}, {kDown, 0b11}}};
  const Ipomset both = evLabel(y, interior);
  CHECK((both == validate({{"a", "b"}, {}, {{0, 1}}, {}, {}})));

  // a starts, b starts, a ends, b ends.
  const Path staggered{{y.at("00"), y.at("a0"), y.at("ab"), y.at("b1"), y.at("11")},
                       {{kUp, 0b1}, {kUp, 0b10}, {kDown, 0b01}, {kDown, 0b1}}};
  CHECK((evLabel(y, staggered) == both));
  CHECK(pathEvents(y, staggered) == 2);

  const Path boundary{{y.at("00"), y.at("a0"), y.at("10"), y.at("b1"), y.at("11")},
                      {{kUp, 0b1}, {kDown, 0b1}, {kUp, 0b1}, {kDown, 0b1}}};
  CHECK((evLabel(y, boundary) == validate({{"a", "b"}, {{0, 1}}, {}, {}, {}})));

  const Path broken{{y.at("00"), y.at("a1")}, {{kUp, 0b1}}};
  CHECK(errorOf([&] { validatePath(y, broken); }) == Errc::InvalidPath);
  const Path empty{{y.at("a0"), y.at("a0")}, {{kUp, 0}}};
  CHECK(errorOf([&] { validatePath(y, empty); }) == Errc::InvalidPath);
}

TEST_CASE("accepting paths") {
  PrecubicalSet lone;
  lone.addCell("v", {});
  const Hda trivial = makeHda(lone, {"v"}, {"v"});
  const auto paths = acceptingPaths(trivial, 3);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].steps.empty());

  const Hda a = fixtures::singleEdge("a");
  CHECK(acceptingPaths(a, 0).empty());
  const auto one = acceptingPaths(a, 1);
  REQUIRE(one.size() == 1);
  CHECK((evLabel(a.carrier, one[0]) == event("a")));

  const Hda sq = filledSquare({"00"}, {"11"});
  std::set<std::string> labels;
  forEachAcceptingPath(sq, 2, [&](const Path& p) {
    validatePath(sq.carrier, p);
    const Ipomset l = evLabel(sq.carrier, p);
    CHECK(isInterval(l));
    labels.insert(oracle::key(l));
  });
  CHECK(labels.size() == 3);
}

TEST_CASE("languages of small automata") {
  const Hda a = fixtures::singleEdge("a");
  CHECK(isEqual(language(a, 3), normalize({event("a")})));
  CHECK(language(makeHda(a.carrier, {}, {"1"}), 3).empty());

  const Language square = language(filledSquare({"00"}, {"11"}), 2);
  CHECK((square.generators() == std::vector<Ipomset>{validate({{"a", "b"}, {}, {{0, 1}}, {}, {}})}));

  CHECK(expand(language(fixtures::conflictGrid(), 4), 4).size() == 10);
}

TEST_CASE("path labels agree with the path oracle") {
  std::mt19937 rng(31);
  for (int round = 0; round < 60; ++round) {
    const Hda x = oracle::randomHda(rng, 5, 6, {"a", "b"});
    CHECK((keys(pathLabels(x, 3)) == oracle::pathLabelKeys(x, 3)));
  }
}

TEST_CASE("labels are invariant under maps and languages are functorial") {
  std::mt19937 rng(32);
  for (int round = 0; round < 30; ++round) {
    const Hda x = oracle::randomHda(rng, 4, 5, {"a", "b"});
    const Hda y = oracle::randomHda(rng, 4, 5, {"a", "b"});
    const HdaCocone c = coproductHda({x, y});
    REQUIRE(validateHdaMap(c.legs[0], x, c.apex).empty());
    forEachAcceptingPath(x, 3, [&](const Path& p) {
      Path image = p;
      for (auto& cell : image.cells) cell = c.legs[0].map.cells[cell];
      CHECK((evLabel(c.apex.carrier, image) == evLabel(x.carrier, p)));
    });
    CHECK(isSubset(language(x, 3), language(c.apex, 3)));
  }
}

TEST_CASE("maps must keep markings") {
  const Hda a = fixtures::singleEdge("a");
  CHECK(validateHdaMap(HdaMap{identityMap(a.carrier)}, a, a).empty());
  const Hda unmarked = makeHda(a.carrier, {"0"}, {});
  CHECK_FALSE(validateHdaMap(HdaMap{identityMap(a.carrier)}, a, unmarked).empty());
  CHECK(validateHdaMap(HdaMap{identityMap(a.carrier)}, unmarked, a).empty());
}

TEST_CASE("tensor products of automata") {
  const Hda grid = fixtures::conflictGrid();
  const Hda withUnit = tensorHda(unitHda(), grid);
  CHECK(withUnit.carrier.cellCount() == grid.carrier.cellCount());
  CHECK(withUnit.start.size() == 1);
  CHECK(isEqual(language(withUnit, 4), language(grid, 4)));

  const Hda a = fixtures::singleEdge("a");
  const Hda aa = tensorHda(a, a);
  CHECK(aa.carrier.maxDimension() == 2);
  CHECK(isEqual(language(aa, 2), normalize({parallel(event("a"), event("a"))})));

  CHECK(tensorPower(a, 0).carrier.cellCount() == 1);
  CHECK(tensorPower(a, 3).carrier.cellCount() == 27);
  const Ipomset aaa = parallel(parallel(event("a"), event("a")), event("a"));
  CHECK(isEqual(language(tensorPower(a, 3), 3), normalize({aaa})));
}

TEST_CASE("pushouts") {
  const Span counter = fixtures::pushoutCounterexample();
  for (const Hda* corner : {&counter.apex, &counter.left, &counter.right}) CHECK(language(*corner, 3).empty());
  const HdaCocone p = pushoutHda(counter);
  const Ipomset aThenC = validate({{"a", "c"}, {{0, 1}}, {}, {}, {}});
  CHECK(isEqual(language(p.apex, 3), normalize({aThenC})));

  const Hda grid = fixtures::conflictGrid();
  const HdaMap id{identityMap(grid.carrier)};
  const HdaCocone same = pushoutHda(Span{grid, grid, grid, id, id});
  CHECK(same.apex.carrier.cellCount() == grid.carrier.cellCount());
  CHECK(isEqual(language(same.apex, 4), language(grid, 4)));

  Span bad = counter;
  bad.apex = makeHda(counter.apex.carrier, {"o"}, {});
  CHECK(errorOf([&] { pushoutHda(bad); }) == Errc::InvalidMap);
}

TEST_CASE("replication") {
  const Hda a = fixtures::singleEdge("a");
  const Hda none = replicate(a, 0);
  CHECK(isEqual(language(none, 3), Language::epsilon()));

  const Language three = language(replicate(a, 3), 3);
  const Ipomset aa = parallel(event("a"), event("a"));
  CHECK(isEqual(three, normalize({Ipomset{}, event("a"), aa, parallel(aa, event("a"))})));
  for (std::size_t n = 0; n <= 4; ++n) CHECK(startCellCount(replicate(a, n)) == n + 1);
}

TEST_CASE("replication chain") {
  const Hda a = fixtures::singleEdge("a");
  const HdaChain chain = replicationChainPrefix(a, 3);
  REQUIRE(chain.automata.size() == 3);
  REQUIRE(chain.maps.size() == 2);
  CHECK(chain.automata[0].carrier.cellCount() == a.carrier.cellCount());
  CHECK(chain.automata[1].carrier.maxDimension() == 2);
  for (std::size_t k = 0; k < chain.maps.size(); ++k)
    CHECK(validatePrecubicalMap(chain.maps[k].map, chain.automata[k].carrier, chain.automata[k + 1].carrier)
              .empty());

  const Ipomset aa = parallel(event("a"), event("a"));
  CHECK(isEqual(language(chain.automata[1], 2), normalize({event("a"), aa})));

  CHECK(errorOf([&] { replicationChainPrefix(a, 0); }) == Errc::InvalidArgument);
  CHECK(errorOf([&] { replicationChainPrefix(makeHda(a.carrier, {"0", "1"}, {"1"}), 2); }) ==
        Errc::InvalidArgument);
}

TEST_CASE("branching degree") {
  const Hda a = fixtures::singleEdge("a");
  CHECK(branchingDegree(a, a.carrier.at("0")) == 1);
  CHECK(branchingDegree(a, a.carrier.at("0>1")) == 0);

  const Hda grid = fixtures::conflictGrid();
  CHECK(branchingDegree(grid, grid.carrier.at("v11")) == 4);
  CHECK(branchingDegree(grid, grid.carrier.at("v21>v11")) == 2);
  CHECK(branchingDegree(grid, grid.carrier.at("v20>v10")) == 1);
  CHECK(branchingDegree(grid, grid.carrier.at("v10>v00")) == 0);
  CHECK(errorOf([&] { branchingDegree(grid, 1000); }) == Errc::UnknownCell);

  const Hda cube = tensorPower(a, 3);
  for (CellIndex c = 0; c < cube.carrier.cellCount(); ++c)
    CHECK(branchingDegree(cube, c) == 3 - cube.carrier.dimension(c));
}
