#pragma once

// Deciding the lifting property f ⧄ g for maps of finite spaces.
//
// Given f: A -> B and g: C -> D, f ⧄ g holds when every commuting square
//
//        psi
//    A ------> C
//    |         |
//  f |         | g
//    v         v
//    B ------> D
//        phi
//
// admits a diagonal lambda: B -> C with lambda∘f = psi and g∘lambda = phi.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "liftprop/finspace.hpp"

namespace liftprop {

// Visits every monotone map a -> b exactly once. Points of a are assigned in
// linear_extension(a) order and values are tried in point order of b, so the
// sequence is lexicographic in that variable order. Returning false from
// `visit` stops the enumeration.
void for_each_monotone(const SpacePtr& a, const SpacePtr& b,
                       const std::function<bool(const CMap&)>& visit);
std::vector<CMap> enumerate_monotone(const SpacePtr& a, const SpacePtr& b);

struct LiftStats {
  std::uint64_t squares = 0;
  // Search nodes visited while looking for diagonals.
  std::uint64_t candidates = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct Square {
  CMap psi;  // A -> C
  CMap phi;  // B -> D
};

struct LiftProblem {
  CMap left;   // f: A -> B
  CMap right;  // g: C -> D
};

struct LiftReport {
  bool holds = true;
  // First square without a diagonal, in enumeration order.
  std::optional<Square> witness;
  // Diagonal of the first square that has one.
  std::optional<CMap> sample_lift;
  LiftStats stats;
};

bool square_commutes(const CMap& f, const CMap& g, const CMap& psi, const CMap& phi);
bool is_lift(const CMap& f, const CMap& g, const CMap& psi, const CMap& phi, const CMap& lambda);

// Lexicographically least diagonal (by point order of B), or nullopt.
// Throws PreconditionError when the square is mis-wired or does not commute.
std::optional<CMap> find_lift(const CMap& f, const CMap& g, const CMap& psi, const CMap& phi,
                              LiftStats* stats = nullptr);

// Squares are produced phi-outer (enumerate_monotone(B, D)), psi-inner.
void for_each_square(const CMap& f, const CMap& g,
                     const std::function<bool(const Square&)>& visit);
std::vector<Square> commuting_squares(const CMap& f, const CMap& g);

LiftReport decide_lift(const LiftProblem& problem);

}  // namespace liftprop
