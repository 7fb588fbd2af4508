#pragma once

// Urysohn functions on finite normal spaces and the diagonal they induce into
// the doubled-endpoint interval.

#include <map>
#include <optional>
#include <vector>

#include "liftprop/finspace.hpp"
#include "liftprop/interval.hpp"

namespace liftprop {

// Open sets U_q indexed by dyadic levels, nested so that p < q implies
// closure(U_p) ⊆ U_q. Always contains levels 0 and 1, with U_1 the whole
// space.
using UrysohnChain = std::map<Dyadic, PointSet>;

struct ChainFailure {
  // The set whose component hull escaped its bound.
  PointSet hull_of;
  PointSet bound;
};

struct ChainOutcome {
  std::optional<UrysohnChain> chain;
  std::optional<ChainFailure> failure;
  bool ok() const { return chain.has_value(); }
};

// Maximum number of refinement rounds.
inline constexpr int kMaxChainDepth = 16;

// Union of the connected components meeting a.
PointSet component_hull(const FinSpace& x, PointSet a);

// Throws PreconditionError if s, t are not disjoint closed sets.
ChainOutcome urysohn_chain(const FinSpace& x, PointSet s, PointSet t);

// f(p) = least level whose set contains p.
std::vector<Dyadic> urysohn_function(const FinSpace& x, const UrysohnChain& chain);

// Preimages of [0,a) and (a,1] are open for every a in the image of f and
// every midpoint between consecutive image values.
bool function_continuous(const FinSpace& x, const std::vector<Dyadic>& f);

struct UrysohnChecks {
  bool f_continuous = false;
  bool lambda_continuous = false;
  bool pi_triangle = false;
  bool iota_triangle = false;
  bool all() const { return f_continuous && lambda_continuous && pi_triangle && iota_triangle; }
};

struct UrysohnResult {
  UrysohnChain chain;
  std::vector<Dyadic> f;
  std::vector<IntervalPoint> lambda;
  CMap chi;
  UrysohnChecks checks;
};

// Builds the diagonal into the corrected interval from a separating function:
//   0' on s, 0 where f = 0 off s, 1' on t, 1 where f = 1 off t, f(x) elsewhere.
// Throws PreconditionError unless f(s) ⊆ {0}, f(t) ⊆ {1} and f is continuous.
UrysohnResult build_lambda(const SpacePtr& x, PointSet s, PointSet t, const UrysohnChain& chain,
                           const std::vector<Dyadic>& f);

// Chain, function and diagonal in one go; nullopt when the chain fails.
std::optional<UrysohnResult> urysohn(const SpacePtr& x, PointSet s, PointSet t);

}  // namespace liftprop
