#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hdal {

using Symbol = std::string;

/// Bit set over event (or cube position) indices; bit i stands for index i.
using EventMask = std::uint64_t;

inline constexpr std::size_t kMaxEvents = 64;

constexpr EventMask bit(std::size_t i) { return EventMask{1} << i; }
constexpr bool has(EventMask m, std::size_t i) { return (m >> i) & 1U; }
constexpr EventMask lowMask(std::size_t n) {
  return n >= kMaxEvents ? ~EventMask{0} : bit(n) - 1;
}
int popcount(EventMask m);
EventMask maskOf(std::span<const std::size_t> indices);
std::vector<std::size_t> indicesOf(EventMask m);

/// Raw, unchecked iposet description with arbitrary event numbering.
struct IposetData {
  std::vector<Symbol> labels;
  std::vector<std::pair<std::size_t, std::size_t>> precedence;
  std::vector<std::pair<std::size_t, std::size_t>> eventOrder;
  std::vector<std::size_t> sources;
  std::vector<std::size_t> targets;
};

/// A finite labelled iposet in canonical form.
///
/// Precedence is stored transitively closed. The event order is kept only on
/// precedence-incomparable pairs (its essential part); this is enough to decide
/// subsumption and makes mutually subsuming ipomsets structurally equal.
///
/// Events are numbered so that i < j whenever event i precedes event j in the
/// union of precedence and essential event order, provided that union is
/// acyclic. Otherwise the numbering is the least encoding found by
/// individualization-refinement. Either way structural equality coincides
/// with isomorphism.
class Ipomset {
 public:
  /// The empty ipomset.
  Ipomset() = default;

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const Symbol& label(std::size_t e) const { return labels_[e]; }
  const std::vector<Symbol>& labels() const { return labels_; }

  bool precedes(std::size_t x, std::size_t y) const { return has(succ_[x], y); }
  bool comparable(std::size_t x, std::size_t y) const {
    return precedes(x, y) || precedes(y, x);
  }
  /// Essential event order: only ever true on incomparable pairs.
  bool eventBefore(std::size_t x, std::size_t y) const { return has(before_[x], y); }

  EventMask successors(std::size_t e) const { return succ_[e]; }
  EventMask predecessors(std::size_t e) const;
  EventMask eventsAfter(std::size_t e) const { return before_[e]; }

  EventMask sources() const { return sources_; }
  EventMask targets() const { return targets_; }
  bool isSource(std::size_t e) const { return has(sources_, e); }
  bool isTarget(std::size_t e) const { return has(targets_, e); }

  std::size_t precedenceCount() const;

  /// Interface events sorted by the essential event order (interfaces are
  /// antichains, so this order is linear on them).
  std::vector<std::size_t> orderedSources() const;
  std::vector<std::size_t> orderedTargets() const;

  IposetData data() const;

  friend bool operator==(const Ipomset&, const Ipomset&) = default;
  friend std::strong_ordering operator<=>(const Ipomset&, const Ipomset&) = default;

 private:
  friend Ipomset canonicalize(const IposetData& raw);

  std::vector<Symbol> labels_;
  std::vector<EventMask> succ_;
  std::vector<EventMask> before_;
  EventMask sources_ = 0;
  EventMask targets_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Ipomset& p);
std::string toString(const Ipomset& p);

/// Checks a raw description and returns its canonical form. The given
/// precedence and event order are transitively closed first; the event order
/// is then reduced to incomparable pairs.
///
/// Errors: CycleInPrecedence, EventOrderCycle, EventOrderIncomplete,
/// SourceNotMinimal, TargetNotMaximal, LabelMissing, EventOutOfRange,
/// TooManyEvents.
Ipomset validate(const IposetData& raw);

/// Renumbers a well-formed description into canonical form. Same checks as
/// `validate`.
Ipomset canonicalize(const IposetData& raw);

/// Ipomset with no precedence whose events follow `word` in event order.
/// This is the ev label of a cube cell with the given interfaces.
Ipomset discrete(std::span<const Symbol> word, EventMask sources, EventMask targets);

/// Decides P ⊑ Q. Returns f with f[x] the Q-event assigned to P-event x.
std::optional<std::vector<std::size_t>> subsumes(const Ipomset& p, const Ipomset& q);

struct IntervalRepresentation {
  std::vector<long> begin;
  std::vector<long> end;
};

/// Induced 2+2: a < b and c < d, all four cross pairs incomparable.
struct TwoPlusTwoWitness {
  std::size_t a, b, c, d;
};

std::variant<IntervalRepresentation, TwoPlusTwoWitness> intervalRepresentation(
    const Ipomset& p);

bool isInterval(const Ipomset& p);

/// The ⊑-maximal interval ipomsets Q ⊑ P, sorted; {P} when P is interval.
std::vector<Ipomset> intervalRefinements(const Ipomset& p);

/// True iff (T_P, ⋖) and (S_Q, ⋖) are isomorphic as labelled linear orders.
bool sequentiallyMatch(const Ipomset& p, const Ipomset& q);

/// Gluing composition P * Q. Errors: SequentialMismatch, InternalOrderCycle.
Ipomset glue(const Ipomset& p, const Ipomset& q);

/// Parallel composition P ∥ Q.
Ipomset parallel(const Ipomset& p, const Ipomset& q);

}  // namespace hdal
