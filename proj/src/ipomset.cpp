#include "hdal/ipomset.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "hdal/error.hpp"

namespace hdal {

int popcount(EventMask m) { return std::popcount(m); }

EventMask maskOf(std::span<const std::size_t> indices) {
  EventMask m = 0;
  for (std::size_t i : indices) m |= bit(i);
  return m;
}

std::vector<std::size_t> indicesOf(EventMask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

namespace {

void closeTransitively(std::vector<EventMask>& rel) {
  const std::size_t n = rel.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (has(rel[i], k)) rel[i] |= rel[k];
}

std::vector<EventMask> transpose(const std::vector<EventMask>& rel) {
  std::vector<EventMask> out(rel.size(), 0);
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j : indicesOf(rel[i])) out[j] |= bit(i);
  return out;
}

// Checked relations before renumbering.
struct Checked {
  std::vector<Symbol> labels;
  std::vector<EventMask> succ;
  std::vector<EventMask> before;
  EventMask sources = 0;
  EventMask targets = 0;
};

Checked check(const IposetData& raw) {
  const std::size_t n = raw.labels.size();
  if (n > kMaxEvents)
    fail(Errc::TooManyEvents, "ipomset has " + std::to_string(n) + " events, at most " +
                                  std::to_string(kMaxEvents) + " supported");
  for (std::size_t i = 0; i < n; ++i)
    if (raw.labels[i].empty()) fail(Errc::LabelMissing, "event " + std::to_string(i) + " has no label");

  auto inRange = [n](std::size_t e) {
    if (e >= n) fail(Errc::EventOutOfRange, "event " + std::to_string(e) + " out of range");
  };

  Checked c;
  c.labels = raw.labels;
  c.succ.assign(n, 0);
  for (auto [x, y] : raw.precedence) {
    inRange(x);
    inRange(y);
    c.succ[x] |= bit(y);
  }
  closeTransitively(c.succ);
  for (std::size_t i = 0; i < n; ++i)
    if (has(c.succ[i], i))
      fail(Errc::CycleInPrecedence, "precedence has a cycle through event " + std::to_string(i));
  const auto pred = transpose(c.succ);

  std::vector<EventMask> order(n, 0);
  for (auto [x, y] : raw.eventOrder) {
    inRange(x);
    inRange(y);
    order[x] |= bit(y);
  }
  closeTransitively(order);
  for (std::size_t i = 0; i < n; ++i)
    if (has(order[i], i))
      fail(Errc::EventOrderCycle, "event order has a cycle through event " + std::to_string(i));

  c.before.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) c.before[i] = order[i] & ~c.succ[i] & ~pred[i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (has(c.succ[i], j) || has(c.succ[j], i)) continue;
      if (!has(c.before[i], j) && !has(c.before[j], i))
        fail(Errc::EventOrderIncomplete, "concurrent events " + std::to_string(i) + " and " +
                                             std::to_string(j) + " are not ordered");
    }

  for (std::size_t s : raw.sources) {
    inRange(s);
    if (pred[s] != 0) fail(Errc::SourceNotMinimal, "source " + std::to_string(s) + " has a predecessor");
    c.sources |= bit(s);
  }
  for (std::size_t t : raw.targets) {
    inRange(t);
    if (c.succ[t] != 0) fail(Errc::TargetNotMaximal, "target " + std::to_string(t) + " has a successor");
    c.targets |= bit(t);
  }
  return c;
}

// Relation of i towards j: 0 precedes, 1 follows, 2 event-before, 3 event-after.
int relation(const Checked& c, std::size_t i, std::size_t j) {
  if (has(c.succ[i], j)) return 0;
  if (has(c.succ[j], i)) return 1;
  return has(c.before[i], j) ? 2 : 3;
}

std::vector<int> rankBy(const auto& keys) {
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return ranks;
}

std::size_t classCount(const std::vector<int>& colors) {
  auto c = colors;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

std::vector<int> refine(const Checked& c, std::vector<int> colors) {
  const std::size_t n = colors.size();
  std::size_t classes = classCount(colors);
  for (;;) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[i].first = colors[i];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sig[i].second.emplace_back(relation(c, i, j), colors[j]);
      std::sort(sig[i].second.begin(), sig[i].second.end());
    }
    colors = rankBy(sig);
    const std::size_t next = classCount(colors);
    if (next == classes) return colors;
    classes = next;
  }
}

}  // namespace

Ipomset canonicalize(const IposetData& raw) {
  Checked c = check(raw);
  const std::size_t n = c.labels.size();

  auto build = [&c, n](const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inverse(n);
    for (std::size_t k = 0; k < n; ++k) inverse[perm[k]] = k;
    auto mapMask = [&inverse](EventMask m) {
      EventMask out = 0;
      for (std::size_t e : indicesOf(m)) out |= bit(inverse[e]);
      return out;
    };
    Ipomset p;
    p.labels_.resize(n);
    p.succ_.resize(n);
    p.before_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      p.labels_[k] = c.labels[perm[k]];
      p.succ_[k] = mapMask(c.succ[perm[k]]);
      p.before_[k] = mapMask(c.before[perm[k]]);
    }
    p.sources_ = mapMask(c.sources);
    p.targets_ = mapMask(c.targets);
    return p;
  };

  // Acyclic tournament: out-degrees are exactly 0..n-1.
  std::vector<std::size_t> outDegree(n);
  EventMask seen = 0;
  bool transitive = true;
  for (std::size_t i = 0; i < n; ++i) {
    outDegree[i] = static_cast<std::size_t>(popcount(c.succ[i] | c.before[i]));
    if (has(seen, outDegree[i])) transitive = false;
    seen |= bit(outDegree[i]);
  }
  if (transitive) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[n - 1 - outDegree[i]] = i;
    return build(perm);
  }

  using Key = std::tuple<Symbol, bool, bool>;
  std::vector<Key> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = {c.labels[i], has(c.sources, i), has(c.targets, i)};

  std::optional<Ipomset> best;

  // Individualization-refinement over the tournament < ∪ ⋖.
  auto search = [&](auto&& self, std::vector<int> colors) -> void {
    colors = refine(c, std::move(colors));
    if (classCount(colors) == n) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[static_cast<std::size_t>(colors[i])] = i;
      Ipomset candidate = build(perm);
      if (!best || candidate < *best) best = std::move(candidate);
      return;
    }
    std::vector<std::size_t> size(n, 0);
    for (int col : colors) ++size[static_cast<std::size_t>(col)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n);
      for (std::size_t u = 0; u < n; ++u) {
        next[u] = 2 * colors[u] + 1;
        if (colors[u] == target && u != v) next[u] += 1;
      }
      self(self, std::move(next));
    }
  };
  search(search, rankBy(keys));
  return *best;
}

Ipomset validate(const IposetData& raw) { return canonicalize(raw); }

EventMask Ipomset::predecessors(std::size_t e) const {
  EventMask m = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (has(succ_[i], e)) m |= bit(i);
  return m;
}

std::size_t Ipomset::precedenceCount() const {
  std::size_t total = 0;
  for (EventMask m : succ_) total += static_cast<std::size_t>(popcount(m));
  return total;
}

namespace {

std::vector<std::size_t> sortedByEventOrder(const Ipomset& p, EventMask set) {
  auto events = indicesOf(set);
  std::sort(events.begin(), events.end(),
            [&p](std::size_t a, std::size_t b) { return p.eventBefore(a, b); });
  return events;
}

}  // namespace

std::vector<std::size_t> Ipomset::orderedSources() const { return sortedByEventOrder(*this, sources_); }
std::vector<std::size_t> Ipomset::orderedTargets() const { return sortedByEventOrder(*this, targets_); }

IposetData Ipomset::data() const {
  IposetData d;
  d.labels = labels_;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : indicesOf(succ_[i])) d.precedence.emplace_back(i, j);
    for (std::size_t j : indicesOf(before_[i])) d.eventOrder.emplace_back(i, j);
  }
  d.sources = indicesOf(sources_);
  d.targets = indicesOf(targets_);
  return d;
}

std::ostream& operator<<(std::ostream& os, const Ipomset& p) {
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p.label(i);
  os << " |";
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j : indicesOf(p.successors(i))) os << ' ' << i << '<' << j;
  os << " |";
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j : indicesOf(p.eventsAfter(i))) os << ' ' << i << '.' << j;
  os << " | S";
  for (std::size_t s : indicesOf(p.sources())) os << ' ' << s;
  os << " | T";
  for (std::size_t t : indicesOf(p.targets())) os << ' ' << t;
  return os << "]";
}

std::string toString(const Ipomset& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Ipomset discrete(std::span<const Symbol> word, EventMask sources, EventMask targets) {
  IposetData d;
  d.labels.assign(word.begin(), word.end());
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j) d.eventOrder.emplace_back(i, j);
  const EventMask all = lowMask(word.size());
  d.sources = indicesOf(sources & all);
  d.targets = indicesOf(targets & all);
  return canonicalize(d);
}

std::optional<std::vector<std::size_t>> subsumes(const Ipomset& p, const Ipomset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  if (popcount(p.sources()) != popcount(q.sources()) || popcount(p.targets()) != popcount(q.targets()))
    return std::nullopt;
  if (p.precedenceCount() < q.precedenceCount()) return std::nullopt;
  {
    auto lp = p.labels();
    auto lq = q.labels();
    std::sort(lp.begin(), lp.end());
    std::sort(lq.begin(), lq.end());
    if (lp != lq) return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (p.label(x) == q.label(y) && p.isSource(x) == q.isSource(y) && p.isTarget(x) == q.isTarget(y))
        candidates[x].push_back(y);
    if (candidates[x].empty()) return std::nullopt;
  }

  std::vector<std::size_t> f(n);
  EventMask used = 0;
  auto consistent = [&](std::size_t x) {
    for (std::size_t y = 0; y < x; ++y) {
      const std::size_t fx = f[x];
      const std::size_t fy = f[y];
      if (q.precedes(fx, fy) && !p.precedes(x, y)) return false;
      if (q.precedes(fy, fx) && !p.precedes(y, x)) return false;
      if (!p.comparable(x, y)) {
        if (p.eventBefore(x, y) && !q.eventBefore(fx, fy)) return false;
        if (p.eventBefore(y, x) && !q.eventBefore(fy, fx)) return false;
      }
    }
    return true;
  };
  auto assign = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y : candidates[x]) {
      if (has(used, y)) continue;
      f[x] = y;
      if (!consistent(x)) continue;
      used |= bit(y);
      if (self(self, x + 1)) return true;
      used &= ~bit(y);
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return f;
}

std::variant<IntervalRepresentation, TwoPlusTwoWitness> intervalRepresentation(const Ipomset& p) {
  const std::size_t n = p.size();
  std::vector<EventMask> pred(n);
  for (std::size_t x = 0; x < n; ++x) pred[x] = p.predecessors(x);

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const EventMask onlyX = pred[x] & ~pred[y];
      const EventMask onlyY = pred[y] & ~pred[x];
      if (onlyX != 0 && onlyY != 0) {
        const auto a = static_cast<std::size_t>(std::countr_zero(onlyX));
        const auto c = static_cast<std::size_t>(std::countr_zero(onlyY));
        return TwoPlusTwoWitness{a, x, c, y};
      }
    }

  // Predecessor sets form a chain D_0 ⊂ D_1 ⊂ ... ⊂ D_m.
  std::vector<EventMask> chain(pred.begin(), pred.end());
  std::sort(chain.begin(), chain.end(),
            [](EventMask a, EventMask b) { return popcount(a) < popcount(b); });
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());

  IntervalRepresentation rep;
  rep.begin.resize(n);
  rep.end.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep.begin[x] = static_cast<long>(std::find(chain.begin(), chain.end(), pred[x]) - chain.begin());
    long firstContaining = static_cast<long>(chain.size());
    for (std::size_t k = 0; k < chain.size(); ++k)
      if (has(chain[k], x)) {
        firstContaining = static_cast<long>(k);
        break;
      }
    rep.end[x] = firstContaining - 1;
  }
  return rep;
}

bool isInterval(const Ipomset& p) {
  return std::holds_alternative<IntervalRepresentation>(intervalRepresentation(p));
}

std::vector<Ipomset> intervalRefinements(const Ipomset& p) {
  // Every interval extension of a witness a<b, c<d contains a<d or c<b, and
  // neither pair touches an interface, so both branches stay well formed.
  std::set<Ipomset> seen, found;
  auto visit = [&](auto&& self, const Ipomset& q) -> void {
    if (!seen.insert(q).second) return;
    const auto rep = intervalRepresentation(q);
    const auto* w = std::get_if<TwoPlusTwoWitness>(&rep);
    if (!w) {
      found.insert(q);
      return;
    }
    for (auto [x, y] : {std::pair{w->a, w->d}, std::pair{w->c, w->b}}) {
      IposetData d = q.data();
      d.precedence.emplace_back(x, y);
      self(self, canonicalize(d));
    }
  };
  visit(visit, p);
  std::vector<Ipomset> out;
  for (const auto& q : found)
    if (std::none_of(found.begin(), found.end(), [&q](const Ipomset& r) { return r != q && subsumes(q, r); }))
      out.push_back(q);
  return out;
}

bool sequentiallyMatch(const Ipomset& p, const Ipomset& q) {
  const auto tp = p.orderedTargets();
  const auto sq = q.orderedSources();
  if (tp.size() != sq.size()) return false;
  for (std::size_t k = 0; k < tp.size(); ++k)
    if (p.label(tp[k]) != q.label(sq[k])) return false;
  return true;
}

Ipomset glue(const Ipomset& p, const Ipomset& q) {
  if (!sequentiallyMatch(p, q))
    fail(Errc::SequentialMismatch, "targets of " + toString(p) + " do not match sources of " + toString(q));
  const auto tp = p.orderedTargets();
  const auto sq = q.orderedSources();

  std::vector<std::size_t> image(q.size());
  for (std::size_t k = 0; k < sq.size(); ++k) image[sq[k]] = tp[k];
  IposetData d;
  d.labels = p.labels();
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (q.isSource(y)) continue;
    image[y] = d.labels.size();
    d.labels.push_back(q.label(y));
  }

  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y : indicesOf(p.successors(x))) d.precedence.emplace_back(x, y);
    for (std::size_t y : indicesOf(p.eventsAfter(x))) d.eventOrder.emplace_back(x, y);
  }
  for (std::size_t x = 0; x < q.size(); ++x) {
    for (std::size_t y : indicesOf(q.successors(x))) d.precedence.emplace_back(image[x], image[y]);
    for (std::size_t y : indicesOf(q.eventsAfter(x))) d.eventOrder.emplace_back(image[x], image[y]);
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.isTarget(x)) continue;
    for (std::size_t y = 0; y < q.size(); ++y)
      if (!q.isSource(y)) d.precedence.emplace_back(x, image[y]);
  }
  d.sources = indicesOf(p.sources());
  for (std::size_t y : indicesOf(q.targets())) d.targets.push_back(image[y]);

  try {
    return canonicalize(d);
  } catch (const Error& e) {
    fail(Errc::InternalOrderCycle, std::string("gluing produced an invalid order: ") + e.what());
  }
}

Ipomset parallel(const Ipomset& p, const Ipomset& q) {
  IposetData d = p.data();
  const std::size_t offset = p.size();
  for (const auto& l : q.labels()) d.labels.push_back(l);
  const IposetData e = q.data();
  for (auto [x, y] : e.precedence) d.precedence.emplace_back(x + offset, y + offset);
  for (auto [x, y] : e.eventOrder) d.eventOrder.emplace_back(x + offset, y + offset);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) d.eventOrder.emplace_back(x, y + offset);
  for (std::size_t s : e.sources) d.sources.push_back(s + offset);
  for (std::size_t t : e.targets) d.targets.push_back(t + offset);
  return canonicalize(d);
}

}  // namespace hdal
