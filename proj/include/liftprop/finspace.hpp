#pragma once

// Finite topological spaces, represented by their specialization preorder.
//
// Arrow convention used throughout the library: an edge x -> y means that y
// lies in the closure of {x}. Closed sets are closed under following arrows,
// open sets are closed under following arrows backwards (generization).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liftprop/error.hpp"

namespace liftprop {

using PointId = std::size_t;

// Subset of the points of some FinSpace, stored as a bit mask over point ids.
// A PointSet does not remember its space; operations taking a (space, set)
// pair reject bits beyond the space size with DomainError.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet single(PointId p) { return PointSet(std::uint64_t{1} << p); }
  static constexpr PointSet first(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(PointId p) const { return (bits_ >> p) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(PointId p) { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(PointId p) { bits_ &= ~(std::uint64_t{1} << p); }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
  constexpr bool operator==(const PointSet&) const = default;

  // Member ids in increasing order.
  std::vector<PointId> members() const;

  // Lowest member id; the set must be nonempty.
  PointId lowest() const { return static_cast<PointId>(std::countr_zero(bits_)); }

 private:
  std::uint64_t bits_ = 0;
};

// Invokes fn(p) for every member p in increasing order.
template <typename Fn>
void for_each_member(PointSet s, Fn&& fn) {
  std::uint64_t bits = s.bits();
  while (bits != 0) {
    fn(static_cast<PointId>(std::countr_zero(bits)));
    bits &= bits - 1;
  }
}

class FinSpace {
 public:
  static constexpr std::size_t kMaxPoints = 64;

  // The empty space.
  FinSpace() = default;

  // Builds the space on `points` whose specialization preorder is the
  // reflexive-transitive closure of `edges` (pairs of point ids, x -> y).
  FinSpace(std::vector<std::string> points,
           const std::vector<std::pair<PointId, PointId>>& edges);

  static FinSpace from_named(std::vector<std::string> points,
                             const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& points() const { return names_; }
  const std::string& name(PointId p) const { return names_.at(p); }

  std::optional<PointId> find(std::string_view name) const;
  // Throws DomainError for unknown names.
  PointId index(std::string_view name) const;
  PointSet set_of(const std::vector<std::string>& names) const;
  PointSet set_of(std::initializer_list<std::string_view> names) const;

  // spec(x, y): y lies in the closure of {x}.
  bool specializes(PointId x, PointId y) const { return up_[x].contains(y); }
  // Closure of {x}.
  PointSet up(PointId x) const { return up_[x]; }
  // Smallest open set containing x.
  PointSet down(PointId x) const { return down_[x]; }
  PointSet all() const { return PointSet::first(size()); }

  // Throws DomainError if s has members outside this space.
  void check_subset(PointSet s) const;

  bool operator==(const FinSpace& other) const {
    return names_ == other.names_ && up_ == other.up_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, PointId> index_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

using SpacePtr = std::shared_ptr<const FinSpace>;

inline SpacePtr share(FinSpace x) { return std::make_shared<const FinSpace>(std::move(x)); }

// Smallest closed superset of s.
PointSet closure(const FinSpace& x, PointSet s);
// Intersection of all open sets containing s.
PointSet min_open(const FinSpace& x, PointSet s);

struct Openness {
  bool open = false;
  bool closed = false;
  bool operator==(const Openness&) const = default;
};
Openness classify(const FinSpace& x, PointSet s);

inline bool is_open(const FinSpace& x, PointSet s) { return classify(x, s).open; }
inline bool is_closed(const FinSpace& x, PointSet s) { return classify(x, s).closed; }

// Connected components, ordered by their lowest point id.
std::vector<PointSet> components(const FinSpace& x);

// Subspace on the members of s; point order is inherited from x.
FinSpace subspace(const FinSpace& x, PointSet s);

// Every open set of x, in increasing bit-mask order. Exponential in |x|.
std::vector<PointSet> open_sets(const FinSpace& x);
// Every closed set of x, in increasing bit-mask order. Exponential in |x|.
std::vector<PointSet> closed_sets(const FinSpace& x);

// A linear extension of the specialization preorder (x before y whenever
// x -> y strictly), ties broken by point order.
std::vector<PointId> linear_extension(const FinSpace& x);

// Relabeling-invariant encoding: the lexicographically least adjacency bit
// string over all point permutations. Supports up to 8 points.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t bits = 0;
  auto operator<=>(const CanonicalForm&) const = default;
};
CanonicalForm canonical_form(const FinSpace& x);

inline bool homeomorphic(const FinSpace& a, const FinSpace& b) {
  return canonical_form(a) == canonical_form(b);
}

// Both continuity tests on a raw assignment dom -> cod. Assignments that are
// not total or leave the codomain raise DomainError.
bool is_monotone(const FinSpace& dom, const FinSpace& cod, const std::vector<PointId>& assign);
bool is_continuous_by_preimage(const FinSpace& dom, const FinSpace& cod,
                               const std::vector<PointId>& assign);

// Continuous map between finite spaces.
class CMap {
 public:
  // Throws DomainError on a malformed assignment and DiscontinuousMap when the
  // assignment is not monotone.
  CMap(SpacePtr dom, SpacePtr cod, std::vector<PointId> assign);

  const FinSpace& dom() const { return *dom_; }
  const FinSpace& cod() const { return *cod_; }
  const SpacePtr& dom_ptr() const { return dom_; }
  const SpacePtr& cod_ptr() const { return cod_; }
  const std::vector<PointId>& assignment() const { return assign_; }
  PointId operator()(PointId p) const { return assign_[p]; }

  PointSet image(PointSet s) const;
  PointSet preimage(PointSet s) const;

  bool operator==(const CMap& other) const {
    return *dom_ == *other.dom_ && *cod_ == *other.cod_ && assign_ == other.assign_;
  }

 private:
  SpacePtr dom_;
  SpacePtr cod_;
  std::vector<PointId> assign_;
};

CMap identity_map(const SpacePtr& x);
// The unique map from the empty space into x.
CMap empty_map(const SpacePtr& x);
// g after f; requires f.cod() == g.dom().
CMap compose(const CMap& g, const CMap& f);

// "{a, b}" using point names.
std::string format_set(const FinSpace& x, PointSet s);

}  // namespace liftprop
