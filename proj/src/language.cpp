#include "hdal/language.hpp"

#include <algorithm>
#include <set>

#include "hdal/error.hpp"

namespace hdal {

Language Language::epsilon() { return normalize({Ipomset{}}); }

Language Language::withEventBound(std::optional<std::size_t> bound) const {
  Language out = *this;
  out.eventBound_ = bound;
  return out;
}

Language normalize(std::vector<Ipomset> input, std::optional<std::size_t> bound) {
  std::vector<Ipomset> elements;
  for (auto& p : input) {
    if (isInterval(p)) {
      elements.push_back(std::move(p));
      continue;
    }
    for (auto& q : intervalRefinements(p)) elements.push_back(std::move(q));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::vector<bool> dominated(elements.size(), false);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size() && !dominated[i]; ++j) {
      if (i == j || dominated[j] || elements[i].size() != elements[j].size()) continue;
      if (subsumes(elements[i], elements[j])) dominated[i] = true;
    }

  Language out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!dominated[i]) out.generators_.push_back(std::move(elements[i]));
  out.eventBound_ = bound;
  return out;
}

bool contains(const Language& l, const Ipomset& p) {
  return std::any_of(l.generators().begin(), l.generators().end(),
                     [&p](const Ipomset& g) { return g.size() == p.size() && subsumes(p, g).has_value(); });
}

Language seqCompose(const Language& l1, const Language& l2) {
  std::vector<Ipomset> out;
  for (const auto& p : l1.generators())
    for (const auto& q : l2.generators())
      if (sequentiallyMatch(p, q)) out.push_back(glue(p, q));
  return normalize(std::move(out));
}

Language parCompose(const Language& l1, const Language& l2) {
  std::vector<Ipomset> out;
  for (const auto& p : l1.generators())
    for (const auto& q : l2.generators()) out.push_back(parallel(p, q));
  return normalize(std::move(out));
}

Language parClosureBounded(const Language& l, std::size_t bound) {
  Language power = Language::epsilon();
  Language result = power;
  for (std::size_t n = 1; n <= bound; ++n) {
    power = parCompose(l, power);
    result = unite(result, power);
  }
  return result;
}

Language unite(const Language& l1, const Language& l2) {
  std::vector<Ipomset> all = l1.generators();
  all.insert(all.end(), l2.generators().begin(), l2.generators().end());
  return normalize(std::move(all));
}

bool isSubset(const Language& l1, const Language& l2) {
  return std::all_of(l1.generators().begin(), l1.generators().end(),
                     [&l2](const Ipomset& p) { return contains(l2, p); });
}

bool isEqual(const Language& l1, const Language& l2) { return isSubset(l1, l2) && isSubset(l2, l1); }

Language restrict(const Language& l, std::size_t maxEvents) {
  std::vector<Ipomset> kept;
  for (const auto& g : l.generators())
    if (g.size() <= maxEvents) kept.push_back(g);
  return normalize(std::move(kept), maxEvents);
}

std::vector<Ipomset> downSet(const Ipomset& p) {
  const std::size_t n = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> open;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!p.comparable(i, j)) open.emplace_back(i, j);

  std::vector<EventMask> succ(n);
  for (std::size_t i = 0; i < n; ++i) succ[i] = p.successors(i);
  std::vector<EventMask> apart(n, 0);
  std::set<Ipomset> found;

  auto comparable = [&succ](std::size_t i, std::size_t j) { return has(succ[i], j) || has(succ[j], i); };

  // Adds x < y and closes; false if that violates an interface or a kept-apart pair.
  auto extend = [&](std::size_t x, std::size_t y) {
    EventMask below = bit(x);
    for (std::size_t i = 0; i < n; ++i)
      if (has(succ[i], x)) below |= bit(i);
    const EventMask above = bit(y) | succ[y];
    if ((above & p.sources()) != 0 || (below & p.targets()) != 0) return false;
    for (std::size_t a : indicesOf(below))
      if ((apart[a] & above) != 0) return false;
    for (std::size_t a : indicesOf(below)) succ[a] |= above;
    return true;
  };

  auto emit = [&]() {
    IposetData d;
    d.labels = p.labels();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j : indicesOf(succ[i])) d.precedence.emplace_back(i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j : indicesOf(p.eventsAfter(i)))
        if (!comparable(i, j)) d.eventOrder.emplace_back(i, j);
    d.sources = indicesOf(p.sources());
    d.targets = indicesOf(p.targets());
    Ipomset q = canonicalize(d);
    if (isInterval(q)) found.insert(std::move(q));
  };

  auto visit = [&](auto&& self, std::size_t k) -> void {
    if (k == open.size()) {
      emit();
      return;
    }
    const auto [i, j] = open[k];
    if (comparable(i, j)) {
      self(self, k + 1);
      return;
    }
    apart[i] |= bit(j);
    apart[j] |= bit(i);
    self(self, k + 1);
    apart[i] &= ~bit(j);
    apart[j] &= ~bit(i);

    for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
      const auto saved = succ;
      if (extend(x, y)) self(self, k + 1);
      succ = saved;
    }
  };
  visit(visit, 0);
  return {found.begin(), found.end()};
}

std::vector<Ipomset> expand(const Language& l, std::size_t maxEvents) {
  std::set<Ipomset> out;
  for (const auto& g : l.generators()) {
    if (g.size() > maxEvents) continue;
    for (auto& q : downSet(g)) out.insert(std::move(q));
  }
  return {out.begin(), out.end()};
}

}  // namespace hdal
