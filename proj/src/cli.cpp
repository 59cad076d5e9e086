#include "hdal/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hdal/document.hpp"
#include "hdal/dot.hpp"
#include "hdal/error.hpp"

namespace hdal {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::optional<std::size_t> maxEvents;
  std::optional<std::size_t> n;
  std::string out;
  std::string format = "json";
};

// What a verb produced; rendered once at the end.
struct Result {
  Json json;
  std::optional<Hda> hda;
  std::string text;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WitnessError {
  Error error;
  std::vector<std::size_t> witness;
};

void needInputs(const Options& o, std::size_t count) {
  if (o.inputs.size() != count)
    throw UsageError("expected " + std::to_string(count) + " input file(s), got " + std::to_string(o.inputs.size()));
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

std::string ipomsetLines(const std::vector<Ipomset>& items) {
  std::string out;
  for (const auto& p : items) out += toString(p) + "\n";
  return out;
}

Result fromHda(Hda h) {
  Result r{toJson(h), std::nullopt, {}};
  r.hda = std::move(h);
  return r;
}

Result fromLanguage(const Language& l) { return {toJson(l), std::nullopt, ipomsetLines(l.generators())}; }

Result validateDocument(const Json& j) {
  const std::string kind = documentKind(j);
  Json ok;
  ok["kind"] = "valid";
  ok["document"] = kind;
  if (kind == "ipomset") {
    ipomsetFromJson(j);
  } else if (kind == "language") {
    languageFromJson(j);
  } else if (kind == "precubical") {
    precubicalFromJson(j);
  } else if (kind == "hda") {
    hdaFromJson(j);
  } else if (kind == "span") {
    const Span s = spanFromJson(j);
    for (const auto* leg : {&s.leftMap, &s.rightMap}) {
      auto problems = validateHdaMap(*leg, s.apex, leg == &s.leftMap ? s.left : s.right);
      if (!problems.empty()) fail(Errc::InvalidMap, problems.front());
    }
  } else {
    fail(Errc::ParseError, "unknown document kind '" + kind + "'");
  }
  return {ok, std::nullopt, "valid " + kind + "\n"};
}

// glue and par accept two ipomsets or two languages.
Result combine(const std::vector<Json>& docs, bool sequential) {
  const std::string k0 = documentKind(docs[0]), k1 = documentKind(docs[1]);
  if (k0 == "ipomset" && k1 == "ipomset") {
    const Ipomset p = ipomsetFromJson(docs[0]), q = ipomsetFromJson(docs[1]);
    const Ipomset r = sequential ? glue(p, q) : parallel(p, q);
    return {toJson(r), std::nullopt, toString(r) + "\n"};
  }
  if (k0 == "language" && k1 == "language") {
    const Language a = languageFromJson(docs[0]), b = languageFromJson(docs[1]);
    return fromLanguage(sequential ? seqCompose(a, b) : parCompose(a, b));
  }
  throw UsageError("expected two ipomsets or two languages");
}

Result run(const std::string& verb, const Options& o) {
  std::vector<Json> docs;
  for (const auto& path : o.inputs) docs.push_back(readJsonFile(path));

  if (verb == "validate") {
    needInputs(o, 1);
    return validateDocument(docs[0]);
  }
  if (verb == "language") {
    needInputs(o, 1);
    return fromLanguage(language(hdaFromJson(docs[0]), need(o.maxEvents, "--max-events")));
  }
  if (verb == "expand") {
    needInputs(o, 1);
    const Language l = languageFromJson(docs[0]);
    const auto bound = o.maxEvents ? o.maxEvents : l.eventBound();
    const auto items = expand(l, need(bound, "--max-events (the language has no eventBound)"));
    return {ipomsetsToJson(items), std::nullopt, ipomsetLines(items)};
  }
  if (verb == "tensor") {
    needInputs(o, 2);
    return fromHda(tensorHda(hdaFromJson(docs[0]), hdaFromJson(docs[1])));
  }
  if (verb == "coproduct") {
    std::vector<Hda> parts;
    for (const auto& d : docs) parts.push_back(hdaFromJson(d));
    return fromHda(coproductHda(parts).apex);
  }
  if (verb == "pushout") {
    needInputs(o, 1);
    return fromHda(pushoutHda(spanFromJson(docs[0])).apex);
  }
  if (verb == "replicate") {
    needInputs(o, 1);
    return fromHda(replicate(hdaFromJson(docs[0]), need(o.n, "--n")));
  }
  if (verb == "chain") {
    needInputs(o, 1);
    const HdaChain c = replicationChainPrefix(hdaFromJson(docs[0]), need(o.n, "--n"));
    Result r{toJson(c), std::nullopt, {}};
    r.hda = c.automata.back();
    return r;
  }
  if (verb == "glue" || verb == "par") {
    needInputs(o, 2);
    return combine(docs, verb == "glue");
  }
  if (verb == "closure") {
    needInputs(o, 1);
    return fromLanguage(parClosureBounded(languageFromJson(docs[0]), need(o.n, "--n")));
  }
  if (verb == "subsume") {
    needInputs(o, 2);
    const Ipomset p = ipomsetFromJson(docs[0]), q = ipomsetFromJson(docs[1]);
    const auto f = subsumes(p, q);
    Json j;
    j["kind"] = "subsumption";
    j["holds"] = f.has_value();
    if (f) j["mapping"] = *f;
    return {j, std::nullopt, f ? "P is subsumed by Q\n" : "P is not subsumed by Q\n"};
  }
  if (verb == "interval") {
    needInputs(o, 1);
    const Ipomset p = ipomsetFromJson(docs[0]);
    const auto rep = intervalRepresentation(p);
    if (const auto* w = std::get_if<TwoPlusTwoWitness>(&rep)) {
      Error e(Errc::NotInterval, "events " + std::to_string(w->a) + "<" + std::to_string(w->b) + " and " +
                                     std::to_string(w->c) + "<" + std::to_string(w->d) + " form a 2+2");
      throw WitnessError{e, {w->a, w->b, w->c, w->d}};
    }
    const auto& r = std::get<IntervalRepresentation>(rep);
    Json j;
    j["kind"] = "interval";
    j["begin"] = r.begin;
    j["end"] = r.end;
    std::string text;
    for (std::size_t e = 0; e < p.size(); ++e)
      text += std::to_string(e) + " " + p.label(e) + " [" + std::to_string(r.begin[e]) + ", " +
              std::to_string(r.end[e]) + "]\n";
    return {j, std::nullopt, text};
  }
  if (verb == "dot") {
    needInputs(o, 1);
    Hda h = hdaFromJson(docs[0]);
    Result r{toJson(h), std::move(h), {}};
    return r;
  }
  throw UsageError("unknown verb '" + verb + "'");
}

std::string render(const std::string& verb, const Result& r, const std::string& format) {
  if (format == "dot" || verb == "dot") {
    if (!r.hda) throw UsageError("--format dot needs an automaton result");
    return toDot(*r.hda);
  }
  if (format == "text" && !r.text.empty()) return r.text;
  return r.json.dump(2) + "\n";
}

Json errorRecord(const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  return j;
}

}  // namespace

int runCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval ipomsets and higher-dimensional automata"};
  app.require_subcommand(1);
  Options o;
  static const char* verbs[][2] = {
      {"validate", "check a document of any kind"},
      {"language", "bounded language of an automaton"},
      {"expand", "all members of a language up to a size"},
      {"tensor", "tensor product of two automata"},
      {"coproduct", "disjoint union of automata"},
      {"pushout", "pushout of a span of automata"},
      {"replicate", "coproduct of the tensor powers 0..n"},
      {"chain", "first n automata of the replication chain"},
      {"glue", "gluing composition of ipomsets or languages"},
      {"par", "parallel composition of ipomsets or languages"},
      {"closure", "parallel closure of a language up to n factors"},
      {"subsume", "decide whether the first ipomset is subsumed by the second"},
      {"interval", "interval representation or a 2+2 witness"},
      {"dot", "Graphviz rendering of an automaton"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", o.inputs, "input documents")->check(CLI::ExistingFile);
    sub->add_option("--max-events", o.maxEvents, "event bound");
    sub->add_option("--n", o.n, "replication bound");
    sub->add_option("--out", o.out, "write output here instead of stdout");
    sub->add_option("--format", o.format, "json (default), text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();

  auto emit = [&](const std::string& text) {
    if (o.out.empty()) {
      out << text;
      return;
    }
    std::ofstream file(o.out);
    if (!file) throw UsageError("cannot write '" + o.out + "'");
    file << text;
  };

  try {
    const Result r = run(verb, o);
    emit(render(verb, r, o.format));
    return 0;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const WitnessError& w) {
    Json j = errorRecord(w.error);
    j["witness"] = w.witness;
    out << j.dump() << "\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) {
      err << "parse error: " << e.what() << "\n";
      return 2;
    }
    out << errorRecord(e).dump() << "\n";
    return 1;
  }
}

}  // namespace hdal
