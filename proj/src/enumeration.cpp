#include "liftprop/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "liftprop/separation.hpp"

namespace liftprop {
namespace {

using Rows = std::vector<std::uint64_t>;  // rows[x] = closure of {x}

// Extends every preorder on k points by a new last point: it specializes to
// a closed set `up`, and an open set `down` specializes to it. Transitivity
// holds exactly when down x up lies inside the old relation.
void extend(const Rows& rows, std::size_t n, std::vector<Rows>& out) {
  const std::size_t k = rows.size();
  if (k == n) {
    out.push_back(rows);
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << k;
  std::vector<std::uint64_t> closed;
  std::vector<std::uint64_t> open;
  for (std::uint64_t m = 0; m < limit; ++m) {
    bool is_closed = true;
    bool is_open = true;
    for (std::size_t x = 0; x < k; ++x) {
      if (!((m >> x) & 1U)) continue;
      if ((rows[x] & ~m) != 0) is_closed = false;
      for (std::size_t y = 0; y < k; ++y) {
        if (((rows[y] >> x) & 1U) && !((m >> y) & 1U)) is_open = false;
      }
    }
    if (is_closed) closed.push_back(m);
    if (is_open) open.push_back(m);
  }
  const std::uint64_t self = std::uint64_t{1} << k;
  for (std::uint64_t up : closed) {
    for (std::uint64_t down : open) {
      bool ok = true;
      for (std::size_t d = 0; d < k && ok; ++d) {
        if (((down >> d) & 1U) && (rows[d] & up) != up) ok = false;
      }
      if (!ok) continue;
      Rows next = rows;
      for (std::size_t d = 0; d < k; ++d) {
        if ((down >> d) & 1U) next[d] |= self;
      }
      next.push_back(up | self);
      extend(next, n, out);
    }
  }
}

}  // namespace

std::vector<std::string> corpus_point_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

std::vector<FinSpace> all_spaces(std::size_t n, bool dedupe) {
  if (n > kMaxEnumerationPoints) {
    throw DomainError("enumeration supports at most " + std::to_string(kMaxEnumerationPoints) +
                      " points");
  }
  std::vector<Rows> relations;
  extend({}, n, relations);
  const auto names = corpus_point_names(n);
  std::vector<FinSpace> out;
  std::set<CanonicalForm> seen;
  for (const Rows& rows : relations) {
    std::vector<std::pair<PointId, PointId>> edges;
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        if (x != y && ((rows[x] >> y) & 1U)) edges.emplace_back(x, y);
      }
    }
    FinSpace space(names, edges);
    if (dedupe && !seen.insert(canonical_form(space)).second) continue;
    out.push_back(std::move(space));
  }
  return out;
}

std::string to_string(Axiom a) {
  return a == Axiom::kNormal ? "normal" : "hereditarilyNormal";
}

Axiom parse_axiom(const std::string& s) {
  if (s == "normal") return Axiom::kNormal;
  if (s == "hereditarilyNormal") return Axiom::kHereditarilyNormal;
  throw DomainError("unknown axiom '" + s + "'");
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

CorpusReport cross_validate(std::size_t n, const std::vector<Axiom>& axioms,
                            const CrossValidateOptions& options) {
  if (n > 5) throw DomainError("cross-validation supports at most 5 points");
  const auto spaces = all_spaces(n, options.dedupe);

  using Verdicts = std::vector<std::map<std::string, bool>>;  // one per axiom
  std::vector<Verdicts> results(spaces.size(), Verdicts(axioms.size()));
  parallel_for(spaces.size(), options.jobs, [&](std::size_t i) {
    for (std::size_t a = 0; a < axioms.size(); ++a) {
      auto& v = results[i][a];
      if (axioms[a] == Axiom::kNormal) {
        for (NormalMethod m : kAllNormalMethods) v[std::string(to_string(m))] = is_normal(spaces[i], m);
      } else {
        for (HereditaryMethod m : kAllHereditaryMethods) {
          v[std::string(to_string(m))] = is_hereditarily_normal(spaces[i], m);
        }
      }
    }
  });

  CorpusReport report;
  report.n = n;
  report.deduped = options.dedupe;
  report.total_labeled = options.dedupe ? all_spaces(n, false).size() : spaces.size();
  if (options.dedupe) report.total_unlabeled = spaces.size();
  for (Axiom a : axioms) {
    auto& counts = report.per_axiom[to_string(a)];
    if (a == Axiom::kNormal) {
      for (NormalMethod m : kAllNormalMethods) counts[std::string(to_string(m))] = 0;
    } else {
      for (HereditaryMethod m : kAllHereditaryMethods) counts[std::string(to_string(m))] = 0;
    }
  }
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t a = 0; a < axioms.size(); ++a) {
      const auto& v = results[i][a];
      auto& counts = report.per_axiom[to_string(axioms[a])];
      for (const auto& [method, verdict] : v) counts[method] += verdict ? 1 : 0;
      const bool first = v.begin()->second;
      if (std::any_of(v.begin(), v.end(), [&](const auto& kv) { return kv.second != first; })) {
        report.mismatches.push_back({i, spaces[i], axioms[a], v});
      }
    }
  }
  return report;
}

}  // namespace liftprop
