#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hdal/ipomset.hpp"

namespace hdal {

/// Down-closed language of interval ipomsets, stored as the antichain of its
/// ⊑-maximal generators. Two normalized languages denote the same
/// down-closure iff their generator lists are equal.
class Language {
 public:
  /// The empty language.
  Language() = default;

  /// The language {ε}.
  static Language epsilon();

  const std::vector<Ipomset>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  /// Largest event count covered, when the language is a bounded extraction.
  std::optional<std::size_t> eventBound() const { return eventBound_; }
  Language withEventBound(std::optional<std::size_t> bound) const;

  friend bool operator==(const Language& a, const Language& b) {
    return a.generators_ == b.generators_;
  }

 private:
  friend Language normalize(std::vector<Ipomset> elements, std::optional<std::size_t> bound);

  std::vector<Ipomset> generators_;
  std::optional<std::size_t> eventBound_;
};

/// Antichain of the maximal elements of ↓elements. Non-interval elements
/// contribute their maximal interval refinements.
Language normalize(std::vector<Ipomset> elements, std::optional<std::size_t> bound = std::nullopt);

bool contains(const Language& l, const Ipomset& p);

Language seqCompose(const Language& l1, const Language& l2);
Language parCompose(const Language& l1, const Language& l2);

/// ⋃_{0 ≤ n ≤ bound} L^{∥n}, with L^{∥0} = {ε}.
Language parClosureBounded(const Language& l, std::size_t bound);

Language unite(const Language& l1, const Language& l2);
bool isSubset(const Language& l1, const Language& l2);
bool isEqual(const Language& l1, const Language& l2);

/// Generators with at most `maxEvents` events; the bounded part of L.
Language restrict(const Language& l, std::size_t maxEvents);

/// All interval ipomsets Q ⊑ P, sorted.
std::vector<Ipomset> downSet(const Ipomset& p);

/// All members of L with at most `maxEvents` events, sorted.
std::vector<Ipomset> expand(const Language& l, std::size_t maxEvents);

}  // namespace hdal
