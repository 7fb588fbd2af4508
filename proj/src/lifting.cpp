#include "liftprop/lifting.hpp"

#include <deque>

namespace liftprop {
namespace {

// Monotone assignments from one finite space into another with per-point
// value domains, solved by arc consistency plus backtracking (MAC).
class MonotoneSearch {
 public:
  MonotoneSearch(const FinSpace& from, const FinSpace& to, std::vector<PointSet> domains,
                 std::vector<PointId> order)
      : from_(from), to_(to), domains_(std::move(domains)), order_(std::move(order)) {
    neighbors_.resize(from_.size());
    for (PointId x = 0; x < from_.size(); ++x) {
      for_each_member(from_.up(x) | from_.down(x), [&](PointId y) {
        if (y != x) neighbors_[x].push_back(y);
      });
    }
  }

  // Calls visit on each solution in lexicographic order of `order`; stops
  // early when visit returns false.
  void run(const std::function<bool(const std::vector<PointId>&)>& visit) {
    std::vector<PointSet> doms = domains_;
    std::deque<PointId> all;
    for (PointId x = 0; x < from_.size(); ++x) all.push_back(x);
    if (!propagate(doms, all)) return;
    std::vector<PointId> assign(from_.size());
    descend(0, doms, assign, visit);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Values of x still supported by some value of y.
  PointSet supported(PointId x, PointId y, PointSet dx, PointSet dy) const {
    PointSet keep;
    const bool forward = from_.specializes(x, y);
    const bool backward = from_.specializes(y, x);
    for_each_member(dx, [&](PointId c) {
      if (forward && !to_.up(c).intersects(dy)) return;
      if (backward && !to_.down(c).intersects(dy)) return;
      keep.insert(c);
    });
    return keep;
  }

  // AC-3 over the binary monotonicity constraints; `changed` seeds the queue
  // with variables whose domains were just narrowed.
  bool propagate(std::vector<PointSet>& doms, std::deque<PointId> changed) const {
    std::vector<bool> queued(from_.size(), false);
    for (PointId v : changed) queued[v] = true;
    while (!changed.empty()) {
      const PointId y = changed.front();
      changed.pop_front();
      queued[y] = false;
      for (PointId x : neighbors_[y]) {
        const PointSet revised = supported(x, y, doms[x], doms[y]);
        if (revised == doms[x]) continue;
        if (revised.empty()) return false;
        doms[x] = revised;
        if (!queued[x]) {
          queued[x] = true;
          changed.push_back(x);
        }
      }
    }
    return true;
  }

  bool descend(std::size_t depth, const std::vector<PointSet>& doms,
               std::vector<PointId>& assign,
               const std::function<bool(const std::vector<PointId>&)>& visit) {
    if (depth == order_.size()) return visit(assign);
    const PointId v = order_[depth];
    bool keep_going = true;
    for_each_member(doms[v], [&](PointId c) {
      if (!keep_going) return;
      ++nodes_;
      std::vector<PointSet> next = doms;
      next[v] = PointSet::single(c);
      if (!propagate(next, {v})) return;
      assign[v] = c;
      keep_going = descend(depth + 1, next, assign, visit);
    });
    return keep_going;
  }

  const FinSpace& from_;
  const FinSpace& to_;
  std::vector<PointSet> domains_;
  std::vector<PointId> order_;
  std::vector<std::vector<PointId>> neighbors_;
  std::uint64_t nodes_ = 0;
};

bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || *a == *b; }

void check_wiring(const CMap& f, const CMap& g, const CMap& psi, const CMap& phi) {
  if (!same_space(f.dom_ptr(), psi.dom_ptr()) || !same_space(f.cod_ptr(), phi.dom_ptr()) ||
      !same_space(g.dom_ptr(), psi.cod_ptr()) || !same_space(g.cod_ptr(), phi.cod_ptr())) {
    throw PreconditionError("square is not wired A -> C, B -> D over f: A -> B, g: C -> D");
  }
}

std::vector<PointId> identity_order(std::size_t n) {
  std::vector<PointId> order(n);
  for (PointId p = 0; p < n; ++p) order[p] = p;
  return order;
}

}  // namespace

void for_each_monotone(const SpacePtr& a, const SpacePtr& b,
                       const std::function<bool(const CMap&)>& visit) {
  MonotoneSearch search(*a, *b, std::vector<PointSet>(a->size(), b->all()), linear_extension(*a));
  search.run([&](const std::vector<PointId>& assign) { return visit(CMap(a, b, assign)); });
}

std::vector<CMap> enumerate_monotone(const SpacePtr& a, const SpacePtr& b) {
  std::vector<CMap> out;
  for_each_monotone(a, b, [&](const CMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool square_commutes(const CMap& f, const CMap& g, const CMap& psi, const CMap& phi) {
  check_wiring(f, g, psi, phi);
  for (PointId a = 0; a < f.dom().size(); ++a) {
    if (g(psi(a)) != phi(f(a))) return false;
  }
  return true;
}

bool is_lift(const CMap& f, const CMap& g, const CMap& psi, const CMap& phi, const CMap& lambda) {
  check_wiring(f, g, psi, phi);
  if (!same_space(lambda.dom_ptr(), f.cod_ptr()) || !same_space(lambda.cod_ptr(), g.dom_ptr())) {
    return false;
  }
  for (PointId a = 0; a < f.dom().size(); ++a) {
    if (lambda(f(a)) != psi(a)) return false;
  }
  for (PointId b = 0; b < f.cod().size(); ++b) {
    if (g(lambda(b)) != phi(b)) return false;
  }
  return true;
}

std::optional<CMap> find_lift(const CMap& f, const CMap& g, const CMap& psi, const CMap& phi,
                              LiftStats* stats) {
  if (!square_commutes(f, g, psi, phi)) throw PreconditionError("square does not commute");
  const FinSpace& b = f.cod();
  const FinSpace& c = g.dom();
  std::vector<PointSet> domains(b.size());
  for (PointId y = 0; y < b.size(); ++y) {
    domains[y] = g.preimage(PointSet::single(phi(y)));
  }
  for (PointId x = 0; x < f.dom().size(); ++x) {
    domains[f(x)] &= PointSet::single(psi(x));
  }
  MonotoneSearch search(b, c, std::move(domains), identity_order(b.size()));
  std::optional<std::vector<PointId>> found;
  search.run([&](const std::vector<PointId>& assign) {
    found = assign;
    return false;
  });
  if (stats) stats->candidates += search.nodes();
  if (!found) return std::nullopt;
  return CMap(f.cod_ptr(), g.dom_ptr(), std::move(*found));
}

void for_each_square(const CMap& f, const CMap& g,
                     const std::function<bool(const Square&)>& visit) {
  bool keep_going = true;
  for_each_monotone(f.cod_ptr(), g.cod_ptr(), [&](const CMap& phi) {
    std::vector<PointSet> domains(f.dom().size());
    for (PointId x = 0; x < f.dom().size(); ++x) {
      domains[x] = g.preimage(PointSet::single(phi(f(x))));
    }
    MonotoneSearch psis(f.dom(), g.dom(), std::move(domains), linear_extension(f.dom()));
    psis.run([&](const std::vector<PointId>& assign) {
      keep_going = visit(Square{CMap(f.dom_ptr(), g.dom_ptr(), assign), phi});
      return keep_going;
    });
    return keep_going;
  });
}

std::vector<Square> commuting_squares(const CMap& f, const CMap& g) {
  std::vector<Square> out;
  for_each_square(f, g, [&](const Square& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

LiftReport decide_lift(const LiftProblem& problem) {
  const auto start = std::chrono::steady_clock::now();
  LiftReport report;
  for_each_square(problem.left, problem.right, [&](const Square& sq) {
    ++report.stats.squares;
    auto lambda = find_lift(problem.left, problem.right, sq.psi, sq.phi, &report.stats);
    if (!lambda) {
      report.holds = false;
      report.witness = sq;
      return false;
    }
    if (!report.sample_lift) report.sample_lift = std::move(lambda);
    return true;
  });
  report.stats.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace liftprop
