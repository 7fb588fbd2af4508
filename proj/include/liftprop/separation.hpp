#pragma once

// Normality and hereditary normality of finite spaces, decided classically and
// through lifting properties against the catalog maps.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftprop/finspace.hpp"

namespace liftprop {

// Named test spaces and maps.
//
//   tau      L -> 0 <- M -> 1 <- R
//   tau_dag  L' <- 0' -> M' <- 1' -> R'
//   B3       0' <- m -> 1'
//   T5       u' -> u, u' -> r, v' -> r, v' -> v
//   T6       T5 plus Oc with u, r, v -> Oc
//   B4       w -> u, w -> v, u -> Oc, v -> Oc
//
// pi_fin: T5 -> B3 sends u to 0', v to 1' and u', r, v' to m.
// pi_her: T6 -> B4 sends u', r, v' to w and is the identity on u, v, Oc.
// tau_map: tau -> tau_dag sends L to 0', R to 1' and 0, M, 1 to M'.
struct TestCatalog {
  SpacePtr tau;
  SpacePtr tau_dag;
  SpacePtr b3;
  SpacePtr t5;
  SpacePtr t6;
  SpacePtr b4;
  CMap pi_fin;
  CMap pi_her;
  CMap tau_map;
};

const TestCatalog& catalog();

enum class NormalMethod { kBrute, kPairwise, kComponent, kLifting };
enum class HereditaryMethod { kOpenSubspaces, kAllSubspaces, kLifting };

inline constexpr NormalMethod kAllNormalMethods[] = {
    NormalMethod::kBrute, NormalMethod::kPairwise, NormalMethod::kComponent,
    NormalMethod::kLifting};
inline constexpr HereditaryMethod kAllHereditaryMethods[] = {
    HereditaryMethod::kOpenSubspaces, HereditaryMethod::kAllSubspaces,
    HereditaryMethod::kLifting};

std::string_view to_string(NormalMethod m);
std::string_view to_string(HereditaryMethod m);
std::optional<NormalMethod> parse_normal_method(std::string_view s);
std::optional<HereditaryMethod> parse_hereditary_method(std::string_view s);

bool is_normal(const FinSpace& x, NormalMethod method);
bool is_hereditarily_normal(const FinSpace& x, HereditaryMethod method);

// Two disjoint closed sets of a space.
struct SeparationInstance {
  PointSet s;
  PointSet t;
  bool operator==(const SeparationInstance&) const = default;
};

// Disjoint closed pairs (s, t), s and t possibly empty, ordered by
// |s| + |t|, then by the sorted member ids of s, then those of t.
std::vector<SeparationInstance> disjoint_closed_pairs(const FinSpace& x);

// The first pair in disjoint_closed_pairs order whose minimal open
// neighbourhoods meet; nullopt exactly when x is normal.
std::optional<SeparationInstance> separation_witness(const FinSpace& x);

// The characteristic map of a separation instance: s to 0', t to 1', the
// rest to m. Throws PreconditionError if s, t are not disjoint closed sets.
CMap chi_map(const SpacePtr& x, const SeparationInstance& inst);
SeparationInstance fibers(const CMap& chi);

}  // namespace liftprop
