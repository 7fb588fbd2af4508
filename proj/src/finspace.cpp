#include "liftprop/finspace.hpp"

#include <algorithm>
#include <numeric>

namespace liftprop {

std::vector<PointId> PointSet::members() const {
  std::vector<PointId> out;
  out.reserve(size());
  for_each_member(*this, [&](PointId p) { out.push_back(p); });
  return out;
}

FinSpace::FinSpace(std::vector<std::string> points,
                   const std::vector<std::pair<PointId, PointId>>& edges)
    : names_(std::move(points)) {
  const std::size_t n = names_.size();
  if (n > kMaxPoints) {
    throw DomainError("space has " + std::to_string(n) + " points; at most " +
                      std::to_string(kMaxPoints) + " are supported");
  }
  for (PointId p = 0; p < n; ++p) {
    if (!index_.emplace(names_[p], p).second) {
      throw DomainError("duplicate point identifier '" + names_[p] + "'");
    }
  }
  up_.resize(n);
  for (PointId p = 0; p < n; ++p) up_[p].insert(p);
  for (auto [x, y] : edges) {
    if (x >= n || y >= n) throw DomainError("edge endpoint outside the space");
    up_[x].insert(y);
  }
  // Warshall: once row k is final, every row reaching k absorbs it.
  for (PointId k = 0; k < n; ++k) {
    for (PointId i = 0; i < n; ++i) {
      if (up_[i].contains(k)) up_[i] |= up_[k];
    }
  }
  down_.assign(n, PointSet{});
  for (PointId x = 0; x < n; ++x) {
    for_each_member(up_[x], [&](PointId y) { down_[y].insert(x); });
  }
}

FinSpace FinSpace::from_named(std::vector<std::string> points,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, PointId> idx;
  for (PointId p = 0; p < points.size(); ++p) idx.emplace(points[p], p);
  std::vector<std::pair<PointId, PointId>> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) {
      throw DomainError("edge " + a + " -> " + b + " mentions an unknown point");
    }
    ids.emplace_back(ia->second, ib->second);
  }
  return FinSpace(std::move(points), ids);
}

std::optional<PointId> FinSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointId FinSpace::index(std::string_view name) const {
  if (auto p = find(name)) return *p;
  throw DomainError("unknown point '" + std::string(name) + "'");
}

PointSet FinSpace::set_of(const std::vector<std::string>& names) const {
  PointSet s;
  for (const auto& n : names) s.insert(index(n));
  return s;
}

PointSet FinSpace::set_of(std::initializer_list<std::string_view> names) const {
  PointSet s;
  for (auto n : names) s.insert(index(n));
  return s;
}

void FinSpace::check_subset(PointSet s) const {
  if (!s.subset_of(all())) throw DomainError("point set has members outside the space");
}

PointSet closure(const FinSpace& x, PointSet s) {
  x.check_subset(s);
  PointSet out;
  for_each_member(s, [&](PointId p) { out |= x.up(p); });
  return out;
}

PointSet min_open(const FinSpace& x, PointSet s) {
  x.check_subset(s);
  PointSet out;
  for_each_member(s, [&](PointId p) { out |= x.down(p); });
  return out;
}

Openness classify(const FinSpace& x, PointSet s) {
  return {min_open(x, s) == s, closure(x, s) == s};
}

std::vector<PointSet> components(const FinSpace& x) {
  std::vector<PointSet> out;
  PointSet seen;
  for (PointId p = 0; p < x.size(); ++p) {
    if (seen.contains(p)) continue;
    PointSet block = PointSet::single(p);
    PointSet frontier = block;
    while (!frontier.empty()) {
      PointSet next;
      for_each_member(frontier, [&](PointId q) { next |= x.up(q) | x.down(q); });
      frontier = next - block;
      block |= next;
    }
    seen |= block;
    out.push_back(block);
  }
  return out;
}

FinSpace subspace(const FinSpace& x, PointSet s) {
  x.check_subset(s);
  const auto ids = s.members();
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (PointId p : ids) names.push_back(x.name(p));
  std::vector<std::pair<PointId, PointId>> edges;
  for (PointId i = 0; i < ids.size(); ++i) {
    for (PointId j = 0; j < ids.size(); ++j) {
      if (i != j && x.specializes(ids[i], ids[j])) edges.emplace_back(i, j);
    }
  }
  return FinSpace(std::move(names), edges);
}

namespace {

std::vector<PointSet> filter_subsets(const FinSpace& x, bool want_open) {
  if (x.size() > 24) throw DomainError("too many points to list all open sets");
  std::vector<PointSet> out;
  const std::uint64_t limit = std::uint64_t{1} << x.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const PointSet s(bits);
    const Openness o = classify(x, s);
    if (want_open ? o.open : o.closed) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<PointSet> open_sets(const FinSpace& x) { return filter_subsets(x, true); }
std::vector<PointSet> closed_sets(const FinSpace& x) { return filter_subsets(x, false); }

std::vector<PointId> linear_extension(const FinSpace& x) {
  std::vector<PointId> order;
  order.reserve(x.size());
  PointSet placed;
  while (order.size() < x.size()) {
    for (PointId p = 0; p < x.size(); ++p) {
      if (placed.contains(p)) continue;
      // Strict generizations of p: points reaching p that p does not reach.
      const PointSet strict_gen = x.down(p) - x.up(p);
      if (strict_gen.subset_of(placed)) {
        order.push_back(p);
        placed.insert(p);
        break;
      }
    }
  }
  return order;
}

CanonicalForm canonical_form(const FinSpace& x) {
  const std::size_t n = x.size();
  if (n > 8) throw DomainError("canonical form supports at most 8 points");
  std::vector<PointId> perm(n);
  std::iota(perm.begin(), perm.end(), PointId{0});
  CanonicalForm best{n, ~std::uint64_t{0}};
  if (n == 0) return {0, 0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        code = (code << 1) | (x.specializes(perm[i], perm[j]) ? 1U : 0U);
      }
    }
    best.bits = std::min(best.bits, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

void check_assignment(const FinSpace& dom, const FinSpace& cod,
                      const std::vector<PointId>& assign) {
  if (assign.size() != dom.size()) {
    throw DomainError("assignment is not total on the domain");
  }
  for (PointId v : assign) {
    if (v >= cod.size()) throw DomainError("assignment value outside the codomain");
  }
}

}  // namespace

bool is_monotone(const FinSpace& dom, const FinSpace& cod, const std::vector<PointId>& assign) {
  check_assignment(dom, cod, assign);
  for (PointId x = 0; x < dom.size(); ++x) {
    bool ok = true;
    for_each_member(dom.up(x), [&](PointId y) {
      if (!cod.specializes(assign[x], assign[y])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_continuous_by_preimage(const FinSpace& dom, const FinSpace& cod,
                               const std::vector<PointId>& assign) {
  check_assignment(dom, cod, assign);
  for (PointSet u : open_sets(cod)) {
    PointSet pre;
    for (PointId x = 0; x < dom.size(); ++x) {
      if (u.contains(assign[x])) pre.insert(x);
    }
    if (!is_open(dom, pre)) return false;
  }
  return true;
}

CMap::CMap(SpacePtr dom, SpacePtr cod, std::vector<PointId> assign)
    : dom_(std::move(dom)), cod_(std::move(cod)), assign_(std::move(assign)) {
  if (!dom_ || !cod_) throw DomainError("map needs a domain and a codomain");
  if (!is_monotone(*dom_, *cod_, assign_)) {
    for (PointId x = 0; x < dom_->size(); ++x) {
      for (PointId y = 0; y < dom_->size(); ++y) {
        if (dom_->specializes(x, y) && !cod_->specializes(assign_[x], assign_[y])) {
          throw DiscontinuousMap("discontinuous map: " + dom_->name(x) + " -> " +
                                 dom_->name(y) + " is sent to " + cod_->name(assign_[x]) +
                                 ", " + cod_->name(assign_[y]) +
                                 " which are not related");
        }
      }
    }
  }
}

PointSet CMap::image(PointSet s) const {
  dom_->check_subset(s);
  PointSet out;
  for_each_member(s, [&](PointId p) { out.insert(assign_[p]); });
  return out;
}

PointSet CMap::preimage(PointSet s) const {
  cod_->check_subset(s);
  PointSet out;
  for (PointId p = 0; p < assign_.size(); ++p) {
    if (s.contains(assign_[p])) out.insert(p);
  }
  return out;
}

CMap identity_map(const SpacePtr& x) {
  std::vector<PointId> assign(x->size());
  std::iota(assign.begin(), assign.end(), PointId{0});
  return CMap(x, x, std::move(assign));
}

CMap empty_map(const SpacePtr& x) { return CMap(share(FinSpace{}), x, {}); }

CMap compose(const CMap& g, const CMap& f) {
  if (!(f.cod() == g.dom())) throw DomainError("composition of maps that do not meet");
  std::vector<PointId> assign(f.dom().size());
  for (PointId p = 0; p < assign.size(); ++p) assign[p] = g(f(p));
  return CMap(f.dom_ptr(), g.cod_ptr(), std::move(assign));
}

std::string format_set(const FinSpace& x, PointSet s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](PointId p) {
    if (!first) out += ", ";
    out += x.name(p);
    first = false;
  });
  return out + "}";
}

}  // namespace liftprop
