#include "liftprop/urysohn.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "liftprop/separation.hpp"

namespace liftprop {

PointSet component_hull(const FinSpace& x, PointSet a) {
  x.check_subset(a);
  PointSet out;
  for (PointSet block : components(x)) {
    if (block.intersects(a)) out |= block;
  }
  return out;
}

ChainOutcome urysohn_chain(const FinSpace& x, PointSet s, PointSet t) {
  x.check_subset(s);
  x.check_subset(t);
  if (!is_closed(x, s) || !is_closed(x, t)) throw PreconditionError("s and t must be closed");
  if (s.intersects(t)) throw PreconditionError("s and t must be disjoint");

  ChainOutcome out;
  UrysohnChain chain;
  chain[Dyadic::one()] = x.all();
  if (t.empty()) {
    chain[Dyadic::zero()] = x.all();
  } else {
    const PointSet bound = x.all() - t;
    const PointSet hull = component_hull(x, s);
    if (!hull.subset_of(bound)) {
      out.failure = ChainFailure{s, bound};
      return out;
    }
    chain[Dyadic::zero()] = hull;
  }

  for (int depth = 1;; ++depth) {
    if (depth > kMaxChainDepth) {
      throw std::logic_error("Urysohn chain did not stabilise within the depth limit");
    }
    UrysohnChain refined = chain;
    bool grew = false;
    for (auto lo = chain.begin(), hi = std::next(lo); hi != chain.end(); ++lo, ++hi) {
      const PointSet inner = closure(x, lo->second);
      const PointSet hull = component_hull(x, inner);
      if (!hull.subset_of(hi->second) || !closure(x, hull).subset_of(hi->second)) {
        out.failure = ChainFailure{inner, hi->second};
        return out;
      }
      if (hull != lo->second && hull != hi->second) {
        refined[Dyadic::midpoint(lo->first, hi->first)] = hull;
        grew = true;
      }
    }
    chain = std::move(refined);
    if (!grew) break;
  }
  out.chain = std::move(chain);
  return out;
}

std::vector<Dyadic> urysohn_function(const FinSpace& x, const UrysohnChain& chain) {
  std::vector<Dyadic> f(x.size(), Dyadic::one());
  std::vector<bool> done(x.size(), false);
  for (const auto& [level, set] : chain) {
    for_each_member(set, [&](PointId p) {
      if (!done[p]) {
        f[p] = level;
        done[p] = true;
      }
    });
  }
  return f;
}

bool function_continuous(const FinSpace& x, const std::vector<Dyadic>& f) {
  if (f.size() != x.size()) throw DomainError("function is not total on the space");
  const std::set<Dyadic> values(f.begin(), f.end());
  std::vector<Dyadic> thresholds(values.begin(), values.end());
  for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it) {
    thresholds.push_back(Dyadic::midpoint(*it, *std::next(it)));
  }
  for (Dyadic a : thresholds) {
    PointSet below;
    PointSet above;
    for (PointId p = 0; p < x.size(); ++p) {
      if (f[p] < a) below.insert(p);
      if (f[p] > a) above.insert(p);
    }
    if (!is_open(x, below) || !is_open(x, above)) return false;
  }
  return true;
}

UrysohnResult build_lambda(const SpacePtr& x, PointSet s, PointSet t, const UrysohnChain& chain,
                           const std::vector<Dyadic>& f) {
  if (f.size() != x->size()) throw DomainError("function is not total on the space");
  for (PointId p = 0; p < x->size(); ++p) {
    if ((s.contains(p) && !f[p].is_zero()) || (t.contains(p) && !f[p].is_one())) {
      throw PreconditionError("function does not separate s and t");
    }
  }
  if (!function_continuous(*x, f)) throw PreconditionError("function is not continuous");

  UrysohnResult r{chain, f, {}, chi_map(x, {s, t}), {}};
  r.lambda.reserve(x->size());
  for (PointId p = 0; p < x->size(); ++p) {
    if (s.contains(p)) {
      r.lambda.push_back(IntervalPoint::prime0());
    } else if (f[p].is_zero()) {
      r.lambda.push_back(IntervalPoint::real(Dyadic::zero()));
    } else if (t.contains(p)) {
      r.lambda.push_back(IntervalPoint::prime1());
    } else if (f[p].is_one()) {
      r.lambda.push_back(IntervalPoint::real(Dyadic::one()));
    } else {
      r.lambda.push_back(IntervalPoint::real(f[p]));
    }
  }

  r.checks.f_continuous = true;
  r.checks.lambda_continuous = map_continuous_to_interval(*x, r.lambda, Variant::kCorrected);
  r.checks.pi_triangle = true;
  r.checks.iota_triangle = true;
  for (PointId p = 0; p < x->size(); ++p) {
    if (apply_pi(r.lambda[p]) != r.chi(p)) r.checks.pi_triangle = false;
    if (apply_iota(r.lambda[p]) != f[p]) r.checks.iota_triangle = false;
  }
  return r;
}

std::optional<UrysohnResult> urysohn(const SpacePtr& x, PointSet s, PointSet t) {
  auto outcome = urysohn_chain(*x, s, t);
  if (!outcome.ok()) return std::nullopt;
  auto f = urysohn_function(*x, *outcome.chain);
  return build_lambda(x, s, t, *outcome.chain, f);
}

}  // namespace liftprop
