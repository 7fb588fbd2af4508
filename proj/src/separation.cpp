#include "liftprop/separation.hpp"

#include <algorithm>
#include <tuple>

#include "liftprop/lifting.hpp"

namespace liftprop {
namespace {

TestCatalog build_catalog() {
  auto tau = share(FinSpace::from_named({"L", "0", "M", "1", "R"},
                                        {{"L", "0"}, {"M", "0"}, {"M", "1"}, {"R", "1"}}));
  auto tau_dag = share(FinSpace::from_named(
      {"L'", "0'", "M'", "1'", "R'"}, {{"0'", "L'"}, {"0'", "M'"}, {"1'", "M'"}, {"1'", "R'"}}));
  auto b3 = share(FinSpace::from_named({"0'", "m", "1'"}, {{"m", "0'"}, {"m", "1'"}}));
  const std::vector<std::pair<std::string, std::string>> t5_edges = {
      {"u'", "u"}, {"u'", "r"}, {"v'", "r"}, {"v'", "v"}};
  auto t5 = share(FinSpace::from_named({"u", "u'", "r", "v'", "v"}, t5_edges));
  auto t6_edges = t5_edges;
  t6_edges.insert(t6_edges.end(), {{"u", "Oc"}, {"r", "Oc"}, {"v", "Oc"}});
  auto t6 = share(FinSpace::from_named({"u", "u'", "r", "v'", "v", "Oc"}, t6_edges));
  auto b4 = share(FinSpace::from_named({"u", "w", "v", "Oc"},
                                       {{"w", "u"}, {"w", "v"}, {"u", "Oc"}, {"v", "Oc"}}));

  auto by_name = [](const SpacePtr& dom, const SpacePtr& cod,
                    const std::vector<std::string>& targets) {
    std::vector<PointId> assign;
    for (const auto& t : targets) assign.push_back(cod->index(t));
    return CMap(dom, cod, std::move(assign));
  };
  // Point orders: T5 = u u' r v' v, T6 = T5 Oc, tau = L 0 M 1 R.
  CMap pi_fin = by_name(t5, b3, {"0'", "m", "m", "m", "1'"});
  CMap pi_her = by_name(t6, b4, {"u", "w", "w", "w", "v", "Oc"});
  CMap tau_map = by_name(tau, tau_dag, {"0'", "M'", "M'", "M'", "1'"});
  return TestCatalog{tau, tau_dag, b3, t5, t6, b4, pi_fin, pi_her, tau_map};
}

bool separated(const FinSpace& x, const SeparationInstance& p) {
  return !min_open(x, p.s).intersects(min_open(x, p.t));
}

bool normal_brute(const FinSpace& x) {
  const auto closed = closed_sets(x);
  for (PointSet s : closed) {
    for (PointSet t : closed) {
      if (!s.intersects(t) && !separated(x, {s, t})) return false;
    }
  }
  return true;
}

bool normal_pairwise(const FinSpace& x) {
  for (PointId p = 0; p < x.size(); ++p) {
    for (PointId q = p + 1; q < x.size(); ++q) {
      if (!x.up(p).intersects(x.up(q)) && x.down(p).intersects(x.down(q))) return false;
    }
  }
  return true;
}

bool normal_component(const FinSpace& x) {
  for (PointSet block : components(x)) {
    const auto ids = block.members();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (!x.up(ids[i]).intersects(x.up(ids[j]))) return false;
      }
    }
  }
  return true;
}

bool lifts_against(const FinSpace& x, const CMap& right) {
  return decide_lift({empty_map(share(x)), right}).holds;
}

}  // namespace

const TestCatalog& catalog() {
  static const TestCatalog instance = build_catalog();
  return instance;
}

std::string_view to_string(NormalMethod m) {
  switch (m) {
    case NormalMethod::kBrute: return "brute";
    case NormalMethod::kPairwise: return "pairwise";
    case NormalMethod::kComponent: return "component";
    case NormalMethod::kLifting: return "lifting";
  }
  return "?";
}

std::string_view to_string(HereditaryMethod m) {
  switch (m) {
    case HereditaryMethod::kOpenSubspaces: return "openSubspaces";
    case HereditaryMethod::kAllSubspaces: return "allSubspaces";
    case HereditaryMethod::kLifting: return "lifting";
  }
  return "?";
}

std::optional<NormalMethod> parse_normal_method(std::string_view s) {
  for (NormalMethod m : kAllNormalMethods) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::optional<HereditaryMethod> parse_hereditary_method(std::string_view s) {
  for (HereditaryMethod m : kAllHereditaryMethods) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

bool is_normal(const FinSpace& x, NormalMethod method) {
  switch (method) {
    case NormalMethod::kBrute: return normal_brute(x);
    case NormalMethod::kPairwise: return normal_pairwise(x);
    case NormalMethod::kComponent: return normal_component(x);
    case NormalMethod::kLifting: return lifts_against(x, catalog().pi_fin);
  }
  return false;
}

bool is_hereditarily_normal(const FinSpace& x, HereditaryMethod method) {
  switch (method) {
    case HereditaryMethod::kOpenSubspaces:
      for (PointSet o : open_sets(x)) {
        if (!normal_brute(subspace(x, o))) return false;
      }
      return true;
    case HereditaryMethod::kAllSubspaces: {
      const std::uint64_t limit = std::uint64_t{1} << x.size();
      for (std::uint64_t bits = 0; bits < limit; ++bits) {
        if (!normal_brute(subspace(x, PointSet(bits)))) return false;
      }
      return true;
    }
    case HereditaryMethod::kLifting: return lifts_against(x, catalog().pi_her);
  }
  return false;
}

std::vector<SeparationInstance> disjoint_closed_pairs(const FinSpace& x) {
  const auto closed = closed_sets(x);
  std::vector<SeparationInstance> out;
  for (PointSet s : closed) {
    for (PointSet t : closed) {
      if (!s.intersects(t)) out.push_back({s, t});
    }
  }
  auto key = [](const SeparationInstance& p) {
    return std::make_tuple(p.s.size() + p.t.size(), p.s.members(), p.t.members());
  };
  std::sort(out.begin(), out.end(),
            [&](const SeparationInstance& a, const SeparationInstance& b) { return key(a) < key(b); });
  return out;
}

std::optional<SeparationInstance> separation_witness(const FinSpace& x) {
  for (const auto& p : disjoint_closed_pairs(x)) {
    if (!separated(x, p)) return p;
  }
  return std::nullopt;
}

CMap chi_map(const SpacePtr& x, const SeparationInstance& inst) {
  if (inst.s.intersects(inst.t)) throw PreconditionError("s and t are not disjoint");
  if (!is_closed(*x, inst.s) || !is_closed(*x, inst.t)) {
    throw PreconditionError("s and t must be closed");
  }
  const auto& b3 = catalog().b3;
  const PointId zero = b3->index("0'");
  const PointId mid = b3->index("m");
  const PointId one = b3->index("1'");
  std::vector<PointId> assign(x->size(), mid);
  for_each_member(inst.s, [&](PointId p) { assign[p] = zero; });
  for_each_member(inst.t, [&](PointId p) { assign[p] = one; });
  return CMap(x, b3, std::move(assign));
}

SeparationInstance fibers(const CMap& chi) {
  const auto& b3 = *catalog().b3;
  if (!(chi.cod() == b3)) throw DomainError("fibers expects a map into B3");
  return {chi.preimage(PointSet::single(b3.index("0'"))),
          chi.preimage(PointSet::single(b3.index("1'")))};
}

}  // namespace liftprop
