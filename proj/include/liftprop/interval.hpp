#pragma once

// The unit interval with doubled endpoints: [0,1] plus two extra points 0'
// and 1'. In the corrected variant 0 ⤳ 0' and 1 ⤳ 1' only; in the
// indistinguishable variant 0' and 1' are also generizations of 0 and 1.
//
// Real coordinates are dyadic rationals so that every comparison is exact.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liftprop/finspace.hpp"

namespace liftprop {

// numerator / 2^exponent in lowest terms, within [0, 1].
class Dyadic {
 public:
  static constexpr unsigned kMaxExponent = 62;

  constexpr Dyadic() = default;
  Dyadic(std::uint64_t numerator, unsigned exponent);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic midpoint(Dyadic a, Dyadic b);
  // Accepts "0", "1", "k/2^m" written as "k/N" with N a power of two.
  static std::optional<Dyadic> parse(const std::string& text);

  std::uint64_t numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && exp_ == 0; }

  std::strong_ordering operator<=>(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const = default;

  std::string to_string() const;

 private:
  std::uint64_t num_ = 0;
  unsigned exp_ = 0;
};

enum class Variant { kCorrected, kIndistinguishable };

class IntervalPoint {
 public:
  enum class Kind { kPrime0, kPrime1, kReal };

  static IntervalPoint prime0() { return IntervalPoint(Kind::kPrime0, {}); }
  static IntervalPoint prime1() { return IntervalPoint(Kind::kPrime1, {}); }
  static IntervalPoint real(Dyadic q) { return IntervalPoint(Kind::kReal, q); }

  Kind kind() const { return kind_; }
  bool is_real() const { return kind_ == Kind::kReal; }
  // Only meaningful for real points.
  Dyadic value() const { return value_; }

  auto operator<=>(const IntervalPoint&) const = default;

  // "0'", "1'" or the dyadic value.
  std::string to_string() const;

 private:
  IntervalPoint(Kind k, Dyadic v) : kind_(k), value_(v) {}
  Kind kind_;
  Dyadic value_;
};

// q lies in the closure of {p}.
bool specializes(const IntervalPoint& p, const IntervalPoint& q, Variant v);

struct Interval {
  Dyadic lo;
  Dyadic hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool operator==(const Interval&) const = default;
};

// Finite union of dyadic-endpoint intervals in [0,1], plus the two primes.
class IntervalSet {
 public:
  IntervalSet() = default;
  // Parts must be nonempty, sorted, pairwise disjoint and maximally
  // coalesced; anything else raises DomainError.
  IntervalSet(std::vector<Interval> parts, bool prime0, bool prime1);

  // Sorts and coalesces arbitrary parts; empty parts are dropped.
  static IntervalSet normalized(std::vector<Interval> parts, bool prime0, bool prime1);
  static IntervalSet unit_interval() { return IntervalSet({{Dyadic::zero(), Dyadic::one()}}, false, false); }
  static IntervalSet whole() { return IntervalSet({{Dyadic::zero(), Dyadic::one()}}, true, true); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool has_prime0() const { return prime0_; }
  bool has_prime1() const { return prime1_; }
  bool contains(const IntervalPoint& p) const;
  bool contains_real(Dyadic q) const;
  bool empty() const { return parts_.empty() && !prime0_ && !prime1_; }

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet complement() const;
  bool subset_of(const IntervalSet& o) const { return intersect(o) == *this; }

  bool operator==(const IntervalSet&) const = default;

  std::string to_string() const;

 private:
  std::vector<Interval> parts_;
  bool prime0_ = false;
  bool prime1_ = false;
};

bool is_open_set(const IntervalSet& s, Variant v);

// The maps out of the doubled-endpoint interval.
//   pi:       0' -> 0', 1' -> 1', every real -> m            (into B3)
//   pi_tilde: 0', 0 -> 0'; 1', 1 -> 1'; (0,1) -> m           (into B3)
//   iota:     0' -> 0, 1' -> 1, q -> q                        (into [0,1])
PointId apply_pi(const IntervalPoint& p);
PointId apply_pi_tilde(const IntervalPoint& p);
Dyadic apply_iota(const IntervalPoint& p);

// Preimages as interval sets. For pi and pi_tilde `target` is a set of B3
// points; for iota it is a subset of [0,1] (its prime flags are ignored).
IntervalSet pi_preimage(PointSet target);
IntervalSet pi_tilde_preimage(PointSet target);
IntervalSet iota_preimage(const IntervalSet& target);

struct CanonicalMaps {
  Variant variant;
  bool pi_continuous = false;
  // Computed for the indistinguishable variant only.
  std::optional<bool> pi_tilde_continuous;
  bool iota_continuous = false;
};

CanonicalMaps canonical_maps(Variant v);

enum class FiberRelation { kStrict, kEqual, kOther };

struct FiberComparison {
  FiberRelation zero_side;
  FiberRelation one_side;
};

// Compares the 0' and 1' fibres of the continuous projection of the variant
// (pi when corrected, pi_tilde otherwise) with the 0 and 1 fibres of iota.
FiberComparison fiber_comparison(Variant v);

// Space on the given distinct points, ordered as given, with the restricted
// specialization relation.
FinSpace trace_space(const std::vector<IntervalPoint>& points, Variant v);

// Continuity of x -> I, decided on the trace of the image.
bool map_continuous_to_interval(const FinSpace& x, const std::vector<IntervalPoint>& assign,
                                Variant v);

std::string to_string(Variant v);
std::string to_string(FiberRelation r);

}  // namespace liftprop
