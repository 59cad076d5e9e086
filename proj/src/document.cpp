#include "hdal/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hdal/error.hpp"

namespace hdal {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(Errc::ParseError, std::string("expected an object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) fail(Errc::ParseError, std::string("missing field '") + name + "'");
  return *it;
}

const Json& arrayField(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) fail(Errc::ParseError, std::string("field '") + name + "' must be an array");
  return a;
}

std::size_t asIndex(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(Errc::ParseError, "expected a non-negative integer, got " + j.dump());
  return j.get<std::size_t>();
}

std::string asString(const Json& j) {
  if (!j.is_string()) fail(Errc::ParseError, "expected a string, got " + j.dump());
  return j.get<std::string>();
}

Symbol asSymbol(const Json& j) {
  Symbol s = asString(j);
  if (s.empty()) fail(Errc::ParseError, "symbols must be non-empty");
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs(const Json& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : a) {
    if (!p.is_array() || p.size() != 2) fail(Errc::ParseError, "expected a pair, got " + p.dump());
    out.emplace_back(asIndex(p[0]), asIndex(p[1]));
  }
  return out;
}

std::vector<std::size_t> indices(const Json& a) {
  std::vector<std::size_t> out;
  for (const auto& i : a) out.push_back(asIndex(i));
  return out;
}

Json ids(const PrecubicalSet& x, const std::vector<CellIndex>& cells) {
  std::vector<std::string> names;
  for (CellIndex c : cells) names.push_back(x.id(c));
  std::sort(names.begin(), names.end());
  return Json(names);
}

std::vector<std::string> idList(const Json& a) {
  std::vector<std::string> out;
  for (const auto& s : a) out.push_back(asString(s));
  return out;
}

void expectKind(const Json& j, const char* kind) {
  if (j.is_object() && j.contains("kind") && j["kind"] != kind)
    fail(Errc::ParseError, std::string("expected a '") + kind + "' document, got " + j["kind"].dump());
}

}  // namespace

Json toJson(const Ipomset& p) {
  Json j;
  j["kind"] = "ipomset";
  j["events"] = p.labels();
  Json prec = Json::array(), order = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k : indicesOf(p.successors(i))) prec.push_back({i, k});
    for (std::size_t k : indicesOf(p.eventsAfter(i))) order.push_back({i, k});
  }
  j["precedence"] = prec;
  j["eventOrder"] = order;
  j["sources"] = indicesOf(p.sources());
  j["targets"] = indicesOf(p.targets());
  return j;
}

Ipomset ipomsetFromJson(const Json& j) {
  expectKind(j, "ipomset");
  IposetData d;
  for (const auto& l : arrayField(j, "events")) d.labels.push_back(asSymbol(l));
  d.precedence = pairs(arrayField(j, "precedence"));
  d.eventOrder = pairs(arrayField(j, "eventOrder"));
  if (j.contains("sources")) d.sources = indices(arrayField(j, "sources"));
  if (j.contains("targets")) d.targets = indices(arrayField(j, "targets"));
  return canonicalize(d);
}

Json toJson(const Language& l) {
  Json j;
  j["kind"] = "language";
  Json gens = Json::array();
  for (const auto& g : l.generators()) {
    Json e = toJson(g);
    e.erase("kind");
    gens.push_back(std::move(e));
  }
  j["generators"] = gens;
  if (l.eventBound()) j["eventBound"] = *l.eventBound();
  return j;
}

Language languageFromJson(const Json& j) {
  expectKind(j, "language");
  std::vector<Ipomset> gens;
  for (const auto& g : arrayField(j, "generators")) gens.push_back(ipomsetFromJson(g));
  std::optional<std::size_t> bound;
  if (j.contains("eventBound")) bound = asIndex(j["eventBound"]);
  return normalize(std::move(gens), bound);
}

Json ipomsetsToJson(const std::vector<Ipomset>& items) {
  Json j;
  j["kind"] = "ipomsets";
  Json list = Json::array();
  for (const auto& p : items) {
    Json e = toJson(p);
    e.erase("kind");
    list.push_back(std::move(e));
  }
  j["items"] = list;
  return j;
}

Json toJson(const PrecubicalSet& x) {
  Json j;
  j["kind"] = "precubical";
  Json cells = Json::array();
  for (CellIndex c : x.sortedCells()) {
    Json cell;
    cell["id"] = x.id(c);
    cell["word"] = x.shape(c).letters();
    Json faces = Json::array();
    for (const auto& f : x.faces(c)) faces.push_back({x.id(f[0]), x.id(f[1])});
    cell["faces"] = faces;
    cells.push_back(std::move(cell));
  }
  j["cells"] = cells;
  return j;
}

PrecubicalSet precubicalFromJson(const Json& j) {
  struct Raw {
    std::string id;
    std::vector<Symbol> word;
    std::vector<std::array<std::string, 2>> faces;
  };
  std::vector<Raw> raw;
  for (const auto& c : arrayField(j, "cells")) {
    Raw r{asString(field(c, "id")), {}, {}};
    for (const auto& l : arrayField(c, "word")) r.word.push_back(asSymbol(l));
    if (c.contains("faces"))
      for (const auto& f : arrayField(c, "faces")) {
        if (!f.is_array() || f.size() != 2) fail(Errc::ParseError, "faces of '" + r.id + "' must be id pairs");
        r.faces.push_back({asString(f[0]), asString(f[1])});
      }
    raw.push_back(std::move(r));
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.word.size() < b.word.size(); });

  PrecubicalSet x;
  for (auto& r : raw) {
    PrecubicalSet::Faces faces;
    for (const auto& [lo, hi] : r.faces) {
      auto l = x.find(lo), h = x.find(hi);
      if (!l || !h) fail(Errc::UnknownCell, "face of '" + r.id + "' names an unknown or higher cell");
      faces.push_back({*l, *h});
    }
    x.addCell(std::move(r.id), LoSet(std::move(r.word)), std::move(faces));
  }
  auto violations = validatePrecubical(x);
  if (!violations.empty()) {
    const auto& v = violations.front();
    fail(Errc::InvalidPrecubicalSet, "cell '" + x.id(v.cell) + "' breaks the identity for positions " +
                                         std::to_string(v.i) + "," + std::to_string(v.j) + " orientations " +
                                         std::to_string(v.mu) + "," + std::to_string(v.nu));
  }
  return x;
}

Json toJson(const Hda& x) {
  Json j = toJson(x.carrier);
  j["kind"] = "hda";
  j["start"] = ids(x.carrier, x.start);
  j["accept"] = ids(x.carrier, x.accept);
  return j;
}

Hda hdaFromJson(const Json& j) {
  expectKind(j, "hda");
  PrecubicalSet x = precubicalFromJson(j);
  std::vector<std::string> start, accept;
  if (j.contains("start")) start = idList(arrayField(j, "start"));
  if (j.contains("accept")) accept = idList(arrayField(j, "accept"));
  return makeHda(std::move(x), start, accept);
}

Json mapToJson(const PrecubicalMap& f, const PrecubicalSet& x, const PrecubicalSet& y) {
  Json cells = Json::object();
  for (CellIndex c : x.sortedCells()) cells[x.id(c)] = y.id(f.cells[c]);
  Json j;
  j["cells"] = cells;
  return j;
}

PrecubicalMap mapFromJson(const Json& j, const PrecubicalSet& x, const PrecubicalSet& y) {
  const Json& cells = field(j, "cells");
  if (!cells.is_object()) fail(Errc::ParseError, "map cells must be an object");
  PrecubicalMap f{std::vector<CellIndex>(x.cellCount(), 0)};
  std::vector<bool> seen(x.cellCount(), false);
  for (const auto& [from, to] : cells.items()) {
    const CellIndex c = x.at(from);
    f.cells[c] = y.at(asString(to));
    seen[c] = true;
  }
  for (CellIndex c = 0; c < x.cellCount(); ++c)
    if (!seen[c]) fail(Errc::InvalidMap, "map does not assign cell '" + x.id(c) + "'");
  return f;
}

Json toJson(const Span& s) {
  Json j;
  j["kind"] = "span";
  j["apex"] = toJson(s.apex);
  j["left"] = toJson(s.left);
  j["right"] = toJson(s.right);
  j["leftMap"] = mapToJson(s.leftMap.map, s.apex.carrier, s.left.carrier);
  j["rightMap"] = mapToJson(s.rightMap.map, s.apex.carrier, s.right.carrier);
  return j;
}

Span spanFromJson(const Json& j) {
  expectKind(j, "span");
  Span s{hdaFromJson(field(j, "apex")), hdaFromJson(field(j, "left")), hdaFromJson(field(j, "right")), {}, {}};
  s.leftMap.map = mapFromJson(field(j, "leftMap"), s.apex.carrier, s.left.carrier);
  s.rightMap.map = mapFromJson(field(j, "rightMap"), s.apex.carrier, s.right.carrier);
  return s;
}

Json toJson(const HdaChain& c) {
  Json j;
  j["kind"] = "chain";
  Json automata = Json::array(), maps = Json::array();
  for (const auto& a : c.automata) automata.push_back(toJson(a));
  for (std::size_t k = 0; k < c.maps.size(); ++k)
    maps.push_back(mapToJson(c.maps[k].map, c.automata[k].carrier, c.automata[k + 1].carrier));
  j["automata"] = automata;
  j["maps"] = maps;
  return j;
}

std::string documentKind(const Json& j) { return asString(field(j, "kind")); }

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseJson(buffer.str());
}

}  // namespace hdal
