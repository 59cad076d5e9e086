#include "hdal/automaton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <utility>

#include "hdal/error.hpp"

namespace hdal {

namespace {

void sortUnique(std::vector<CellIndex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<CellIndex> imageOf(const std::vector<CellIndex>& cells, const PrecubicalMap& f) {
  std::vector<CellIndex> out;
  for (CellIndex c : cells) out.push_back(f.cells[c]);
  return out;
}

struct Move {
  CellIndex to;
  Step step;
};

// moves[x]: every non-empty up-step and down-step leaving x.
std::vector<std::vector<Move>> stepGraph(const PrecubicalSet& x) {
  std::vector<std::vector<Move>> moves(x.cellCount());
  for (CellIndex y = 0; y < x.cellCount(); ++y) {
    const EventMask all = lowMask(x.dimension(y));
    for (EventMask s = 1; s <= all && all != 0; ++s) {
      moves[applyFace(x, y, s, 0)].push_back({y, {Step::Kind::Up, s}});
      moves[y].push_back({applyFace(x, y, 0, s), {Step::Kind::Down, s}});
    }
  }
  return moves;
}

}  // namespace

bool Hda::isStart(CellIndex x) const { return std::binary_search(start.begin(), start.end(), x); }
bool Hda::isAccept(CellIndex x) const { return std::binary_search(accept.begin(), accept.end(), x); }

Hda makeHda(PrecubicalSet carrier, const std::vector<std::string>& startIds,
            const std::vector<std::string>& acceptIds) {
  Hda h{std::move(carrier), {}, {}};
  for (const auto& id : startIds) h.start.push_back(h.carrier.at(id));
  for (const auto& id : acceptIds) h.accept.push_back(h.carrier.at(id));
  sortUnique(h.start);
  sortUnique(h.accept);
  return h;
}

std::vector<std::string> validateHdaMap(const HdaMap& f, const Hda& x, const Hda& y) {
  auto out = validatePrecubicalMap(f.map, x.carrier, y.carrier);
  if (!out.empty()) return out;
  for (CellIndex c : x.start)
    if (!y.isStart(f.map.cells[c])) out.push_back("start cell '" + x.carrier.id(c) + "' is not mapped to a start cell");
  for (CellIndex c : x.accept)
    if (!y.isAccept(f.map.cells[c]))
      out.push_back("accept cell '" + x.carrier.id(c) + "' is not mapped to an accept cell");
  return out;
}

void validatePath(const PrecubicalSet& x, const Path& path) {
  if (path.cells.size() != path.steps.size() + 1) fail(Errc::InvalidPath, "path needs one more cell than steps");
  for (CellIndex c : path.cells)
    if (c >= x.cellCount()) fail(Errc::InvalidPath, "path visits a missing cell");
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const auto [kind, s] = path.steps[k];
    const CellIndex from = path.cells[k], to = path.cells[k + 1];
    const std::string where = "step " + std::to_string(k + 1);
    if (s == 0) fail(Errc::InvalidPath, where + " has no positions");
    if (kind == Step::Kind::Up) {
      if ((s & ~lowMask(x.dimension(to))) != 0 || applyFace(x, to, s, 0) != from)
        fail(Errc::InvalidPath, where + " is not an up-step");
    } else {
      if ((s & ~lowMask(x.dimension(from))) != 0 || applyFace(x, from, 0, s) != to)
        fail(Errc::InvalidPath, where + " is not a down-step");
    }
  }
}

Ipomset identityLabel(const PrecubicalSet& x, CellIndex cell) {
  const auto& w = x.shape(cell).letters();
  return discrete(w, lowMask(w.size()), lowMask(w.size()));
}

Ipomset upLabel(const PrecubicalSet& x, CellIndex upper, EventMask a) {
  const auto& w = x.shape(upper).letters();
  return discrete(w, lowMask(w.size()) & ~a, lowMask(w.size()));
}

Ipomset downLabel(const PrecubicalSet& x, CellIndex upper, EventMask b) {
  const auto& w = x.shape(upper).letters();
  return discrete(w, lowMask(w.size()), lowMask(w.size()) & ~b);
}

Ipomset evLabel(const PrecubicalSet& x, const Path& path) {
  validatePath(x, path);
  Ipomset label = identityLabel(x, path.cells.front());
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const auto [kind, s] = path.steps[k];
    label = glue(label, kind == Step::Kind::Up ? upLabel(x, path.cells[k + 1], s) : downLabel(x, path.cells[k], s));
  }
  return label;
}

std::size_t pathEvents(const PrecubicalSet& x, const Path& path) {
  std::size_t n = x.dimension(path.cells.front());
  for (const auto& s : path.steps)
    if (s.kind == Step::Kind::Up) n += static_cast<std::size_t>(popcount(s.positions));
  return n;
}

void forEachAcceptingPath(const Hda& x, std::size_t maxEvents, const std::function<void(const Path&)>& visit) {
  const auto moves = stepGraph(x.carrier);
  Path path;
  auto walk = [&](auto&& self, std::size_t used) -> void {
    const CellIndex here = path.cells.back();
    if (x.isAccept(here)) visit(path);
    for (const auto& m : moves[here]) {
      if (m.step.kind == Step::Kind::Up) {
        const auto extra = static_cast<std::size_t>(popcount(m.step.positions));
        if (used + extra > maxEvents) continue;
        path.cells.push_back(m.to);
        path.steps.push_back(m.step);
        self(self, used + extra);
      } else {
        path.cells.push_back(m.to);
        path.steps.push_back(m.step);
        self(self, used);
      }
      path.cells.pop_back();
      path.steps.pop_back();
    }
  };
  for (CellIndex s : x.start) {
    if (x.carrier.dimension(s) > maxEvents) continue;
    path = Path{{s}, {}};
    walk(walk, x.carrier.dimension(s));
  }
}

std::vector<Path> acceptingPaths(const Hda& x, std::size_t maxEvents) {
  std::vector<Path> out;
  forEachAcceptingPath(x, maxEvents, [&out](const Path& p) { out.push_back(p); });
  return out;
}

std::vector<Ipomset> pathLabels(const Hda& x, std::size_t maxEvents) {
  const auto moves = stepGraph(x.carrier);
  std::set<std::pair<CellIndex, Ipomset>> seen;
  std::deque<std::pair<CellIndex, Ipomset>> queue;
  auto push = [&](CellIndex c, Ipomset label) {
    if (seen.emplace(c, label).second) queue.emplace_back(c, std::move(label));
  };
  for (CellIndex s : x.start)
    if (x.carrier.dimension(s) <= maxEvents) push(s, identityLabel(x.carrier, s));

  std::set<Ipomset> out;
  while (!queue.empty()) {
    auto [here, label] = std::move(queue.front());
    queue.pop_front();
    if (x.isAccept(here)) out.insert(label);
    for (const auto& m : moves[here]) {
      const auto s = m.step.positions;
      if (m.step.kind == Step::Kind::Up) {
        if (label.size() + static_cast<std::size_t>(popcount(s)) > maxEvents) continue;
        push(m.to, glue(label, upLabel(x.carrier, m.to, s)));
      } else {
        push(m.to, glue(label, downLabel(x.carrier, here, s)));
      }
    }
  }
  return {out.begin(), out.end()};
}

Language language(const Hda& x, std::size_t maxEvents) { return normalize(pathLabels(x, maxEvents), maxEvents); }

Hda unitHda() {
  Hda h;
  h.carrier.addCell("*", {});
  h.start = {0};
  h.accept = {0};
  return h;
}

Hda tensorHda(const Hda& x, const Hda& y) {
  TensorProduct t = tensor(x.carrier, y.carrier);
  Hda h{std::move(t.carrier), {}, {}};
  for (CellIndex a : x.start)
    for (CellIndex b : y.start) h.start.push_back(t.cell(a, b));
  for (CellIndex a : x.accept)
    for (CellIndex b : y.accept) h.accept.push_back(t.cell(a, b));
  sortUnique(h.start);
  sortUnique(h.accept);
  return h;
}

Hda tensorPower(const Hda& x, std::size_t n) {
  if (n == 0) return unitHda();
  Hda power = x;
  for (std::size_t k = 1; k < n; ++k) power = tensorHda(power, x);
  return power;
}

HdaCocone coproductHda(const std::vector<Hda>& parts) {
  std::vector<PrecubicalSet> carriers;
  for (const auto& p : parts) carriers.push_back(p.carrier);
  Cocone c = coproduct(carriers);
  HdaCocone out{{std::move(c.apex), {}, {}}, {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto s = imageOf(parts[k].start, c.legs[k]);
    auto a = imageOf(parts[k].accept, c.legs[k]);
    out.apex.start.insert(out.apex.start.end(), s.begin(), s.end());
    out.apex.accept.insert(out.apex.accept.end(), a.begin(), a.end());
    out.legs.push_back({std::move(c.legs[k])});
  }
  sortUnique(out.apex.start);
  sortUnique(out.apex.accept);
  return out;
}

HdaCocone pushoutHda(const Span& span) {
  for (const auto& [leg, target, name] : {std::tuple{&span.leftMap, &span.left, "left"},
                                          std::tuple{&span.rightMap, &span.right, "right"}}) {
    auto problems = validateHdaMap(*leg, span.apex, *target);
    if (!problems.empty()) fail(Errc::InvalidMap, std::string(name) + " span map: " + problems.front());
  }
  Diagram d{{span.apex.carrier, span.left.carrier, span.right.carrier},
            {{0, 1, span.leftMap.map}, {0, 2, span.rightMap.map}}};
  Cocone c = finiteColimit(d);
  HdaCocone out{{std::move(c.apex), {}, {}}, {}};
  const Hda* parts[] = {&span.apex, &span.left, &span.right};
  for (std::size_t k = 0; k < 3; ++k) {
    auto s = imageOf(parts[k]->start, c.legs[k]);
    auto a = imageOf(parts[k]->accept, c.legs[k]);
    out.apex.start.insert(out.apex.start.end(), s.begin(), s.end());
    out.apex.accept.insert(out.apex.accept.end(), a.begin(), a.end());
    out.legs.push_back({std::move(c.legs[k])});
  }
  sortUnique(out.apex.start);
  sortUnique(out.apex.accept);
  return out;
}

Hda replicate(const Hda& x, std::size_t n) {
  std::vector<Hda> powers;
  for (std::size_t k = 0; k <= n; ++k) powers.push_back(tensorPower(x, k));
  return coproductHda(powers).apex;
}

HdaChain replicationChainPrefix(const Hda& a, std::size_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "chain prefix needs at least one automaton");
  if (a.start.size() != 1 || a.carrier.dimension(a.start.front()) != 0)
    fail(Errc::InvalidArgument, "chain construction needs exactly one start vertex");
  const CellIndex base = a.start.front();

  HdaChain chain;
  Hda current{a.carrier, {}, a.accept};
  Hda power = current;                       // A^{⊗k} with accept markings only
  PrecubicalMap toCurrent = identityMap(a.carrier);  // A^{⊗k} ≅ A_k
  CellIndex powerBase = base;                // (s, ..., s) in A^{⊗k}
  std::vector<CellIndex> startImages{base};

  for (std::size_t k = 1; k < n; ++k) {
    TensorProduct t = tensor(power.carrier, a.carrier);
    Hda next{t.carrier, {}, {}};
    for (CellIndex x : power.accept)
      for (CellIndex y : a.accept) next.accept.push_back(t.cell(x, y));
    sortUnique(next.accept);

    Span span{Hda{power.carrier, {}, {}}, current, next, {toCurrent}, {}};
    for (CellIndex x = 0; x < power.carrier.cellCount(); ++x) span.rightMap.map.cells.push_back(t.cell(x, base));
    HdaCocone pushed = pushoutHda(span);

    chain.automata.push_back(std::move(current));
    chain.maps.push_back(pushed.legs[1]);
    current = std::move(pushed.apex);
    toCurrent = pushed.legs[2].map;
    powerBase = t.cell(powerBase, base);
    startImages.push_back(toCurrent.cells[powerBase]);
    power = std::move(next);
  }
  chain.automata.push_back(std::move(current));
  for (std::size_t k = 0; k < n; ++k) chain.automata[k].start = {startImages[k]};
  return chain;
}

std::size_t branchingDegree(const Hda& x, CellIndex cell) {
  if (cell >= x.carrier.cellCount()) fail(Errc::UnknownCell, "cell index " + std::to_string(cell) + " out of range");
  const std::size_t d = x.carrier.dimension(cell);
  std::size_t count = 0;
  for (CellIndex y = 0; y < x.carrier.cellCount(); ++y) {
    if (x.carrier.dimension(y) != d + 1) continue;
    const auto& faces = x.carrier.faces(y);
    if (std::any_of(faces.begin(), faces.end(), [cell](const auto& f) { return f[0] == cell || f[1] == cell; }))
      ++count;
  }
  return count;
}

std::size_t startCellCount(const Hda& x) { return x.start.size(); }

}  // namespace hdal
