#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hdal/automaton.hpp"
#include "hdal/ipomset.hpp"
#include "hdal/language.hpp"
#include "hdal/precubical.hpp"

namespace hdal {

using Json = nlohmann::ordered_json;

// Readers throw ParseError for malformed structure and the domain error for
// content that parses but is invalid (cycles, unknown cells, bad faces).

Json toJson(const Ipomset& p);
Ipomset ipomsetFromJson(const Json& j);

Json toJson(const Language& l);
Language languageFromJson(const Json& j);

Json ipomsetsToJson(const std::vector<Ipomset>& items);

/// Cells sorted by (dimension, id); faces as [lower, upper] id pairs per position.
Json toJson(const PrecubicalSet& x);
PrecubicalSet precubicalFromJson(const Json& j);

Json toJson(const Hda& x);
Hda hdaFromJson(const Json& j);

/// {"cells": {source id: target id}}.
Json mapToJson(const PrecubicalMap& f, const PrecubicalSet& x, const PrecubicalSet& y);
PrecubicalMap mapFromJson(const Json& j, const PrecubicalSet& x, const PrecubicalSet& y);

Json toJson(const Span& s);
Span spanFromJson(const Json& j);

Json toJson(const HdaChain& c);

/// Value of the "kind" field, or ParseError.
std::string documentKind(const Json& j);

Json readJsonFile(const std::string& path);
Json parseJson(const std::string& text);

}  // namespace hdal
