#include "liftprop/interval.hpp"

#include <algorithm>
#include <bit>

#include "liftprop/separation.hpp"

namespace liftprop {

Dyadic::Dyadic(std::uint64_t numerator, unsigned exponent) {
  if (exponent > kMaxExponent) throw DomainError("dyadic exponent too large");
  while (exponent > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --exponent;
  }
  if (numerator > (std::uint64_t{1} << exponent)) {
    throw DomainError("dyadic value outside [0, 1]");
  }
  num_ = numerator;
  exp_ = numerator == 0 ? 0 : exponent;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  const unsigned e = std::max(exp_, o.exp_);
  return (num_ << (e - exp_)) <=> (o.num_ << (e - o.exp_));
}

Dyadic Dyadic::midpoint(Dyadic a, Dyadic b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e + 1);
}

std::optional<Dyadic> Dyadic::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    const std::uint64_t num = std::stoull(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) return std::nullopt;
    if (slash == std::string::npos) {
      if (num > 1) return std::nullopt;
      return Dyadic(num, 0);
    }
    const std::uint64_t den = std::stoull(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1 || !std::has_single_bit(den)) return std::nullopt;
    if (num > den) return std::nullopt;
    return Dyadic(num, static_cast<unsigned>(std::countr_zero(den)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << exp_);
}

std::string IntervalPoint::to_string() const {
  switch (kind_) {
    case Kind::kPrime0: return "0'";
    case Kind::kPrime1: return "1'";
    case Kind::kReal: return value_.to_string();
  }
  return "?";
}

bool specializes(const IntervalPoint& p, const IntervalPoint& q, Variant v) {
  using K = IntervalPoint::Kind;
  if (p == q) return true;
  auto is_real_at = [](const IntervalPoint& x, bool one) {
    return x.is_real() && (one ? x.value().is_one() : x.value().is_zero());
  };
  // 0 ⤳ 0' and 1 ⤳ 1' in both variants.
  if (is_real_at(p, false) && q.kind() == K::kPrime0) return true;
  if (is_real_at(p, true) && q.kind() == K::kPrime1) return true;
  if (v == Variant::kIndistinguishable) {
    if (p.kind() == K::kPrime0 && is_real_at(q, false)) return true;
    if (p.kind() == K::kPrime1 && is_real_at(q, true)) return true;
  }
  return false;
}

namespace {

bool well_formed(const Interval& i) {
  if (i.hi < i.lo) return false;
  return i.lo < i.hi || (i.lo_closed && i.hi_closed);
}

// Lower-bound order: smaller lo first, closed before open at equal lo.
bool starts_before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.lo_closed && !b.lo_closed;
}

// a is sorted before b; true when their union is a single interval.
bool joins(const Interval& a, const Interval& b) {
  if (b.lo < a.hi) return true;
  return b.lo == a.hi && (a.hi_closed || b.lo_closed);
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts, bool prime0, bool prime1)
    : parts_(std::move(parts)), prime0_(prime0), prime1_(prime1) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (!well_formed(parts_[k])) throw DomainError("empty or inverted interval in set");
    if (k > 0 && (!(parts_[k - 1].hi <= parts_[k].lo) || joins(parts_[k - 1], parts_[k]))) {
      throw DomainError("interval set parts are unsorted, overlapping or not coalesced");
    }
  }
}

IntervalSet IntervalSet::normalized(std::vector<Interval> parts, bool prime0, bool prime1) {
  std::erase_if(parts, [](const Interval& i) { return !well_formed(i); });
  std::sort(parts.begin(), parts.end(), starts_before);
  std::vector<Interval> out;
  for (const Interval& i : parts) {
    if (!out.empty() && joins(out.back(), i)) {
      Interval& cur = out.back();
      if (cur.hi < i.hi) {
        cur.hi = i.hi;
        cur.hi_closed = i.hi_closed;
      } else if (cur.hi == i.hi) {
        cur.hi_closed = cur.hi_closed || i.hi_closed;
      }
    } else {
      out.push_back(i);
    }
  }
  return IntervalSet(std::move(out), prime0, prime1);
}

bool IntervalSet::contains_real(Dyadic q) const {
  for (const Interval& i : parts_) {
    const bool above = i.lo < q || (i.lo == q && i.lo_closed);
    const bool below = q < i.hi || (q == i.hi && i.hi_closed);
    if (above && below) return true;
  }
  return false;
}

bool IntervalSet::contains(const IntervalPoint& p) const {
  switch (p.kind()) {
    case IntervalPoint::Kind::kPrime0: return prime0_;
    case IntervalPoint::Kind::kPrime1: return prime1_;
    case IntervalPoint::Kind::kReal: return contains_real(p.value());
  }
  return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  auto parts = parts_;
  parts.insert(parts.end(), o.parts_.begin(), o.parts_.end());
  return normalized(std::move(parts), prime0_ || o.prime0_, prime1_ || o.prime1_);
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> parts;
  for (const Interval& a : parts_) {
    for (const Interval& b : o.parts_) {
      Interval c;
      if (a.lo != b.lo) {
        c.lo = std::max(a.lo, b.lo);
        c.lo_closed = a.lo > b.lo ? a.lo_closed : b.lo_closed;
      } else {
        c.lo = a.lo;
        c.lo_closed = a.lo_closed && b.lo_closed;
      }
      if (a.hi != b.hi) {
        c.hi = std::min(a.hi, b.hi);
        c.hi_closed = a.hi < b.hi ? a.hi_closed : b.hi_closed;
      } else {
        c.hi = a.hi;
        c.hi_closed = a.hi_closed && b.hi_closed;
      }
      parts.push_back(c);
    }
  }
  return normalized(std::move(parts), prime0_ && o.prime0_, prime1_ && o.prime1_);
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> gaps;
  Dyadic from = Dyadic::zero();
  bool from_closed = true;
  for (const Interval& i : parts_) {
    gaps.push_back({from, i.lo, from_closed, !i.lo_closed});
    from = i.hi;
    from_closed = !i.hi_closed;
  }
  gaps.push_back({from, Dyadic::one(), from_closed, true});
  return normalized(std::move(gaps), !prime0_, !prime1_);
}

std::string IntervalSet::to_string() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += " u ";
    out += s;
  };
  if (prime0_) add("{0'}");
  for (const Interval& i : parts_) {
    if (i.lo == i.hi) {
      add("{" + i.lo.to_string() + "}");
    } else {
      add(std::string(i.lo_closed ? "[" : "(") + i.lo.to_string() + "," + i.hi.to_string() +
          (i.hi_closed ? "]" : ")"));
    }
  }
  if (prime1_) add("{1'}");
  return out.empty() ? "{}" : out;
}

bool is_open_set(const IntervalSet& s, Variant v) {
  for (const Interval& i : s.parts()) {
    if (i.lo_closed && !i.lo.is_zero()) return false;
    if (i.hi_closed && !i.hi.is_one()) return false;
  }
  const bool has0 = s.contains_real(Dyadic::zero());
  const bool has1 = s.contains_real(Dyadic::one());
  if (s.has_prime0() && !has0) return false;
  if (s.has_prime1() && !has1) return false;
  if (v == Variant::kIndistinguishable) {
    if (has0 && !s.has_prime0()) return false;
    if (has1 && !s.has_prime1()) return false;
  }
  return true;
}

namespace {

// B3 point ids: 0' = 0, m = 1, 1' = 2 (see catalog()).
constexpr PointId kB3Zero = 0;
constexpr PointId kB3Mid = 1;
constexpr PointId kB3One = 2;

Interval point_interval(Dyadic q) { return {q, q, true, true}; }

}  // namespace

PointId apply_pi(const IntervalPoint& p) {
  switch (p.kind()) {
    case IntervalPoint::Kind::kPrime0: return kB3Zero;
    case IntervalPoint::Kind::kPrime1: return kB3One;
    case IntervalPoint::Kind::kReal: return kB3Mid;
  }
  return kB3Mid;
}

PointId apply_pi_tilde(const IntervalPoint& p) {
  if (p.kind() == IntervalPoint::Kind::kPrime0 || (p.is_real() && p.value().is_zero())) {
    return kB3Zero;
  }
  if (p.kind() == IntervalPoint::Kind::kPrime1 || (p.is_real() && p.value().is_one())) {
    return kB3One;
  }
  return kB3Mid;
}

Dyadic apply_iota(const IntervalPoint& p) {
  switch (p.kind()) {
    case IntervalPoint::Kind::kPrime0: return Dyadic::zero();
    case IntervalPoint::Kind::kPrime1: return Dyadic::one();
    case IntervalPoint::Kind::kReal: return p.value();
  }
  return Dyadic::zero();
}

IntervalSet pi_preimage(PointSet target) {
  std::vector<Interval> parts;
  if (target.contains(kB3Mid)) parts.push_back({Dyadic::zero(), Dyadic::one(), true, true});
  return IntervalSet::normalized(std::move(parts), target.contains(kB3Zero),
                                 target.contains(kB3One));
}

IntervalSet pi_tilde_preimage(PointSet target) {
  std::vector<Interval> parts;
  if (target.contains(kB3Zero)) parts.push_back(point_interval(Dyadic::zero()));
  if (target.contains(kB3Mid)) parts.push_back({Dyadic::zero(), Dyadic::one(), false, false});
  if (target.contains(kB3One)) parts.push_back(point_interval(Dyadic::one()));
  return IntervalSet::normalized(std::move(parts), target.contains(kB3Zero),
                                 target.contains(kB3One));
}

IntervalSet iota_preimage(const IntervalSet& target) {
  return IntervalSet(target.parts(), target.contains_real(Dyadic::zero()),
                     target.contains_real(Dyadic::one()));
}

CanonicalMaps canonical_maps(Variant v) {
  CanonicalMaps out;
  out.variant = v;
  const auto b3_opens = open_sets(*catalog().b3);
  out.pi_continuous = std::all_of(b3_opens.begin(), b3_opens.end(),
                                  [&](PointSet u) { return is_open_set(pi_preimage(u), v); });
  if (v == Variant::kIndistinguishable) {
    out.pi_tilde_continuous = std::all_of(b3_opens.begin(), b3_opens.end(), [&](PointSet u) {
      return is_open_set(pi_tilde_preimage(u), v);
    });
  }
  // Subbasic opens [0,a) and (a,1] of [0,1] on a dyadic grid.
  out.iota_continuous = true;
  for (std::uint64_t k = 0; k <= 16; ++k) {
    const Dyadic a(k, 4);
    const IntervalSet below = IntervalSet::normalized({{Dyadic::zero(), a, true, false}}, false, false);
    const IntervalSet above = IntervalSet::normalized({{a, Dyadic::one(), false, true}}, false, false);
    if (!is_open_set(iota_preimage(below), v) || !is_open_set(iota_preimage(above), v)) {
      out.iota_continuous = false;
    }
  }
  return out;
}

namespace {

FiberRelation relate(const IntervalSet& smaller, const IntervalSet& larger) {
  if (smaller == larger) return FiberRelation::kEqual;
  if (smaller.subset_of(larger)) return FiberRelation::kStrict;
  return FiberRelation::kOther;
}

}  // namespace

FiberComparison fiber_comparison(Variant v) {
  auto projection = v == Variant::kCorrected ? pi_preimage : pi_tilde_preimage;
  const IntervalSet iota0 = iota_preimage(IntervalSet({point_interval(Dyadic::zero())}, false, false));
  const IntervalSet iota1 = iota_preimage(IntervalSet({point_interval(Dyadic::one())}, false, false));
  return {relate(projection(PointSet::single(kB3Zero)), iota0),
          relate(projection(PointSet::single(kB3One)), iota1)};
}

FinSpace trace_space(const std::vector<IntervalPoint>& points, Variant v) {
  std::vector<std::string> names;
  std::vector<std::pair<PointId, PointId>> edges;
  for (PointId i = 0; i < points.size(); ++i) {
    names.push_back(points[i].to_string());
    for (PointId j = 0; j < points.size(); ++j) {
      if (i != j && specializes(points[i], points[j], v)) edges.emplace_back(i, j);
    }
  }
  return FinSpace(std::move(names), edges);
}

bool map_continuous_to_interval(const FinSpace& x, const std::vector<IntervalPoint>& assign,
                                Variant v) {
  if (assign.size() != x.size()) throw DomainError("assignment is not total on the domain");
  std::vector<IntervalPoint> image;
  std::vector<PointId> corestriction;
  for (const IntervalPoint& p : assign) {
    auto it = std::find(image.begin(), image.end(), p);
    if (it == image.end()) {
      image.push_back(p);
      it = image.end() - 1;
    }
    corestriction.push_back(static_cast<PointId>(it - image.begin()));
  }
  return is_monotone(x, trace_space(image, v), corestriction);
}

std::string to_string(Variant v) {
  return v == Variant::kCorrected ? "corrected" : "indistinguishable";
}

std::string to_string(FiberRelation r) {
  switch (r) {
    case FiberRelation::kStrict: return "strict";
    case FiberRelation::kEqual: return "equal";
    case FiberRelation::kOther: return "incomparable";
  }
  return "?";
}

}  // namespace liftprop
