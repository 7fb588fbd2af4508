#pragma once

// Brute-force reference implementations for tests. They only use the raw
// specialization relation of a space and deliberately avoid the library's
// closure/min_open/search code paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "liftprop/finspace.hpp"

namespace liftprop::oracle {

// Open sets as the closure of the basic sets {y : y -> x} under unions.
inline std::vector<std::uint64_t> topology_by_unions(const FinSpace& x) {
  std::vector<std::uint64_t> basis;
  for (PointId p = 0; p < x.size(); ++p) {
    std::uint64_t b = 0;
    for (PointId q = 0; q < x.size(); ++q) {
      if (x.specializes(q, p)) b |= std::uint64_t{1} << q;
    }
    basis.push_back(b);
  }
  std::vector<std::uint64_t> opens = {0};
  for (std::uint64_t b : basis) {
    const std::size_t n = opens.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t u = opens[i] | b;
      if (std::find(opens.begin(), opens.end(), u) == opens.end()) opens.push_back(u);
    }
  }
  std::sort(opens.begin(), opens.end());
  return opens;
}

inline std::vector<std::uint64_t> closed_by_complements(const FinSpace& x) {
  const std::uint64_t all = PointSet::first(x.size()).bits();
  std::vector<std::uint64_t> out;
  for (std::uint64_t u : topology_by_unions(x)) out.push_back(all & ~u);
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest closed superset, by scanning every closed set.
inline std::uint64_t closure(const FinSpace& x, std::uint64_t s) {
  std::uint64_t best = PointSet::first(x.size()).bits();
  for (std::uint64_t c : closed_by_complements(x)) {
    if ((s & ~c) == 0 && std::popcount(c) < std::popcount(best)) best = c;
  }
  return best;
}

// Intersection of every open set containing s.
inline std::uint64_t min_open(const FinSpace& x, std::uint64_t s) {
  std::uint64_t out = PointSet::first(x.size()).bits();
  for (std::uint64_t u : topology_by_unions(x)) {
    if ((s & ~u) == 0) out &= u;
  }
  return out;
}

inline bool is_open(const FinSpace& x, std::uint64_t s) {
  const auto t = topology_by_unions(x);
  return std::find(t.begin(), t.end(), s) != t.end();
}

// Calls fn on every assignment dom -> cod (|cod|^|dom| of them).
inline void for_each_assignment(std::size_t dom, std::size_t cod,
                                const std::function<void(const std::vector<PointId>&)>& fn) {
  std::vector<PointId> a(dom, 0);
  if (dom > 0 && cod == 0) return;
  while (true) {
    fn(a);
    std::size_t i = 0;
    while (i < dom && ++a[i] == cod) a[i++] = 0;
    if (i == dom) return;
  }
}

inline bool monotone(const FinSpace& dom, const FinSpace& cod, const std::vector<PointId>& a) {
  for (PointId x = 0; x < dom.size(); ++x) {
    for (PointId y = 0; y < dom.size(); ++y) {
      if (dom.specializes(x, y) && !cod.specializes(a[x], a[y])) return false;
    }
  }
  return true;
}

inline std::size_t count_monotone(const FinSpace& dom, const FinSpace& cod) {
  std::size_t n = 0;
  for_each_assignment(dom.size(), cod.size(), [&](const std::vector<PointId>& a) {
    if (monotone(dom, cod, a)) ++n;
  });
  return n;
}

// Every assignment lambda: B -> C that is monotone with lambda f = psi and
// g lambda = phi.
inline std::vector<std::vector<PointId>> all_lifts(const CMap& f, const CMap& g, const CMap& psi,
                                                   const CMap& phi) {
  std::vector<std::vector<PointId>> out;
  for_each_assignment(f.cod().size(), g.dom().size(), [&](const std::vector<PointId>& l) {
    for (PointId a = 0; a < f.dom().size(); ++a) {
      if (l[f(a)] != psi(a)) return;
    }
    for (PointId b = 0; b < f.cod().size(); ++b) {
      if (g(l[b]) != phi(b)) return;
    }
    if (monotone(f.cod(), g.dom(), l)) out.push_back(l);
  });
  return out;
}

// Preorders on n points by filtering every relation; rows[x] = {y : x -> y}.
inline std::vector<std::vector<std::uint64_t>> naive_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << off.size()); ++m) {
    std::vector<std::uint64_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
    for (std::size_t k = 0; k < off.size(); ++k) {
      if ((m >> k) & 1U) rows[off[k].first] |= std::uint64_t{1} << off[k].second;
    }
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x) {
      for (std::size_t y = 0; y < n && transitive; ++y) {
        if (((rows[x] >> y) & 1U) && (rows[y] & ~rows[x]) != 0) transitive = false;
      }
    }
    if (transitive) out.push_back(rows);
  }
  return out;
}

// Number of preorders on n points up to relabeling, by Burnside's lemma over
// the naive list.
inline std::size_t burnside_classes(std::size_t n) {
  const auto rels = naive_preorders(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t fixed = 0;
  std::size_t group = 0;
  do {
    ++group;
    for (const auto& rows : rels) {
      bool same = true;
      for (std::size_t x = 0; x < n && same; ++x) {
        for (std::size_t y = 0; y < n && same; ++y) {
          const bool a = (rows[x] >> y) & 1U;
          const bool b = (rows[perm[x]] >> perm[y]) & 1U;
          if (a != b) same = false;
        }
      }
      if (same) ++fixed;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed / group;
}

// Textbook normality: disjoint closed sets have disjoint open neighbourhoods,
// searching over all pairs of open sets.
inline bool normal_by_open_pairs(const FinSpace& x) {
  const auto opens = topology_by_unions(x);
  const auto closed = closed_by_complements(x);
  for (std::uint64_t s : closed) {
    for (std::uint64_t t : closed) {
      if (s & t) continue;
      bool found = false;
      for (std::uint64_t u : opens) {
        if (s & ~u) continue;
        for (std::uint64_t v : opens) {
          if ((t & ~v) == 0 && (u & v) == 0) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

// Relabels x by the permutation perm (new point i is old point perm[i]).
inline FinSpace permuted(const FinSpace& x, const std::vector<PointId>& perm) {
  std::vector<std::string> names;
  for (PointId i = 0; i < perm.size(); ++i) names.push_back("q" + std::to_string(i));
  std::vector<std::pair<PointId, PointId>> edges;
  for (PointId i = 0; i < perm.size(); ++i) {
    for (PointId j = 0; j < perm.size(); ++j) {
      if (i != j && x.specializes(perm[i], perm[j])) edges.emplace_back(i, j);
    }
  }
  return FinSpace(std::move(names), edges);
}

// Same point names with the same specialization relation, in any order.
inline bool same_labeled_space(const FinSpace& a, const FinSpace& b) {
  if (a.size() != b.size()) return false;
  for (PointId x = 0; x < a.size(); ++x) {
    auto bx = b.find(a.name(x));
    if (!bx) return false;
    for (PointId y = 0; y < a.size(); ++y) {
      if (a.specializes(x, y) != b.specializes(*bx, b.index(a.name(y)))) return false;
    }
  }
  return true;
}

// Maps with name-identical domains whose codomains correspond under a
// homeomorphism commuting with the assignments.
inline bool maps_isomorphic(const CMap& f, const CMap& g) {
  if (!same_labeled_space(f.dom(), g.dom())) return false;
  const std::size_t n = f.cod().size();
  if (n != g.cod().size()) return false;
  std::vector<PointId> sigma(n);
  std::iota(sigma.begin(), sigma.end(), PointId{0});
  do {
    bool ok = true;
    for (PointId x = 0; x < n && ok; ++x) {
      for (PointId y = 0; y < n && ok; ++y) {
        if (f.cod().specializes(x, y) != g.cod().specializes(sigma[x], sigma[y])) ok = false;
      }
    }
    for (PointId p = 0; p < f.dom().size() && ok; ++p) {
      if (sigma[f(p)] != g(g.dom().index(f.dom().name(p)))) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace liftprop::oracle
