#include "pg/counting.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pg {

BigCount mu_in_group(const PermGroup& g, const Partition& t) {
  if (g.kind() == GroupKind::Symmetric) return mu_symmetric(t);
  long count = 0;
  for (const Perm& p : g.elements()) {
    if (cycle_type(p) == t) ++count;
  }
  return BigCount(count);
}

namespace {

long census_count(const Component& comp, const Partition& t) {
  auto it = comp.census.find(t.bracket());
  return it == comp.census.end() ? 0 : it->second;
}

// Shared procedure engine. Policies pick the next type among the
// unabsorbed ones and an admissible quotient component for it; every
// choice must produce the same total.
template <typename TypePick, typename ComponentPick>
ProcedureTrace procedure_engine(const PowerGraphBundle& b, TypePick pick_type,
                                ComponentPick pick_component) {
  ProcedureTrace trace;
  trace.total = 0;
  ComponentReport type_comps = components(b.type_graph);
  std::set<int> unabsorbed;
  for (int i = 0; i < b.type_graph.vertex_count(); ++i) unabsorbed.insert(i);
  while (!unabsorbed.empty()) {
    int tv = pick_type(unabsorbed);
    const Partition& t = b.type_values[tv];
    int comp = pick_component(tv);
    long k = census_count(b.quotient_components.components[comp], t);
    if (k <= 0) {
      throw std::logic_error("procedure: chosen component misses the type");
    }
    BigCount denom = BigCount(totient(t.order())) * k;
    ProcedureStep step;
    step.type = t;
    step.component = comp;
    step.k = k;
    step.term = divide_exact(mu_in_group(b.group, t), denom);
    for (int v : type_comps.components[type_comps.component_of[tv]].vertices) {
      step.absorbed.push_back(b.type_values[v]);
      if (unabsorbed.erase(v) == 0) {
        throw std::logic_error("procedure: absorbed type sets overlap");
      }
    }
    trace.total += step.term;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

int first_component_of_type(const PowerGraphBundle& b, int type_vertex) {
  for (int v = 0; v < b.quotient_graph.vertex_count(); ++v) {
    if (b.t_assign[v] == type_vertex) {
      return b.quotient_components.component_of[v];
    }
  }
  throw std::logic_error("procedure: type has no quotient vertex");
}

}  // namespace

ProcedureTrace count_via_theorem_a(const PowerGraphBundle& b) {
  return procedure_engine(
      b, [](const std::set<int>& open) { return *open.begin(); },
      [&b](int tv) { return first_component_of_type(b, tv); });
}

ProcedureTrace run_procedure_sn(int n, const BundleOptions& opts) {
  BundleOptions o = opts;
  o.build_explicit = false;
  return count_via_theorem_a(build_bundle(PermGroup::symmetric(n), o));
}

ProcedureTrace run_procedure_sn_shuffled(int n, std::uint64_t seed,
                                         const BundleOptions& opts) {
  BundleOptions o = opts;
  o.build_explicit = false;
  PowerGraphBundle b = build_bundle(PermGroup::symmetric(n), o);
  std::mt19937_64 rng(seed);
  auto pick_type = [&rng](const std::set<int>& open) {
    std::uniform_int_distribution<std::size_t> dist(0, open.size() - 1);
    auto it = open.begin();
    std::advance(it, dist(rng));
    return *it;
  };
  auto pick_component = [&b, &rng](int tv) {
    std::vector<int> candidates;
    for (int v = 0; v < b.quotient_graph.vertex_count(); ++v) {
      if (b.t_assign[v] == tv) candidates.push_back(v);
    }
    std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
    return b.quotient_components.component_of[candidates[dist(rng)]];
  };
  return procedure_engine(b, pick_type, pick_component);
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Small: return "small";
    case Regime::Prime: return "prime";
    case Regime::PrimePlusOne: return "prime_plus_one";
    case Regime::Neither: return "neither";
  }
  return "?";
}

ClosedFormResult closed_form_sn(int n) {
  if (n < 2) throw std::invalid_argument("closed_form_sn: n >= 2 required");
  ClosedFormResult r;
  r.n = n;
  if (n <= 7) {
    static const long c0[] = {1, 4, 13, 31, 83, 128};
    static const int ct[] = {1, 2, 3, 3, 4, 3};
    static const int co[] = {1, 2, 2, 2, 2, 2};
    r.c0 = c0[n - 2];
    r.c0_type = ct[n - 2];
    r.c0_order = co[n - 2];
    r.regime = Regime::Small;
    return r;
  }
  if (is_prime(n)) {
    r.regime = Regime::Prime;
    r.c0 = factorial(n - 2) + 1;
    r.c0_type = r.c0_order = 2;
  } else if (is_prime(n - 1)) {
    r.regime = Regime::PrimePlusOne;
    r.c0 = BigCount(n) * factorial(n - 3) + 1;
    r.c0_type = r.c0_order = 2;
  } else {
    r.regime = Regime::Neither;
    r.c0 = 1;
    r.c0_type = r.c0_order = 1;
  }
  return r;
}

namespace {

// Completeness of the pi-preimage of a set of classes as a subgraph of
// P_0(G), by the pairwise power-membership test with early exit.
bool preimage_complete(const PowerGraphBundle& b, const std::vector<int>& cls) {
  std::vector<Perm> members;
  for (int c : cls) {
    auto ms = b.class_member_perms(c);
    members.insert(members.end(), ms.begin(), ms.end());
  }
  auto in_cyclic = [](const Perm& x, const Perm& y) {
    // x in <y>?
    int o = order_of_perm(y);
    Perm q = y;
    for (int e = 1; e < o; ++e) {
      if (q == x) return true;
      q = compose(q, y);
    }
    return false;
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!in_cyclic(members[i], members[j]) &&
          !in_cyclic(members[j], members[i])) {
        return false;
      }
    }
  }
  return true;
}

std::size_t preimage_size(const PowerGraphBundle& b, const std::vector<int>& cls) {
  std::size_t s = 0;
  for (int c : cls) s += b.classes[c].size;
  return s;
}

ComponentShape shape_of(const PowerGraphBundle& b, const Component& comp) {
  ComponentShape s;
  s.size = comp.vertices.size();
  s.is_complete = comp.is_complete;
  s.type_census = comp.census;
  s.explicit_size = preimage_size(b, comp.vertices);
  s.explicit_complete = preimage_complete(b, comp.vertices);
  return s;
}

}  // namespace

StructureReport structure_report(const PowerGraphBundle& b) {
  MainComponent mc = main_component(b);
  StructureReport report;
  report.n = b.group.degree();
  const auto& comps = b.quotient_components.components;
  report.main = shape_of(b, comps[mc.component]);

  ComponentReport type_comps = components(b.type_graph);
  int main_type_vertex = b.type_vertex(mc.types.front());
  report.main_type_complete =
      type_comps.components[type_comps.component_of[main_type_vertex]].is_complete;

  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (static_cast<int>(c) == mc.component) continue;
    report.others.push_back(shape_of(b, comps[c]));
  }
  return report;
}

bool ConnectivityReport::all_equal() const {
  auto f = flags();
  return std::all_of(f.begin(), f.end(), [&](bool v) { return v == f[0]; });
}

ConnectivityReport connectivity_equivalences(int n, const BundleOptions& opts) {
  if (n < 2) throw std::invalid_argument("connectivity_equivalences: n >= 2 required");
  ConnectivityReport r;
  r.n = n;
  r.arithmetic = (n == 2) || (!is_prime(n) && !is_prime(n - 1));
  r.type_connected = components(type_graph_sn(n).first).count() == 1;
  r.order_connected = components(order_graph_sn(n).first).count() == 1;

  BigCount group_order = factorial(n);
  if (group_order <= BigCount(static_cast<unsigned long>(opts.max_order))) {
    BundleOptions o = opts;
    o.build_explicit = true;  // skipped internally past the explicit cap
    PowerGraphBundle b = build_bundle(PermGroup::symmetric(n), o);
    r.quotient_connected = b.quotient_components.count() == 1;
    // component counts agree between P_0 and its tame quotient
    r.p0_connected = b.has_explicit
                         ? components(b.explicit_graph).count() == 1
                         : r.quotient_connected;
  } else {
    bool connected = closed_form_sn(n).c0 == 1;
    r.quotient_connected = connected;
    r.p0_connected = connected;
  }
  return r;
}

LemmaCheckReport lemma_checks(const PowerGraphBundle& b) {
  LemmaCheckReport report;
  auto violation = [&report](std::string msg) {
    report.all_ok = false;
    report.violations.push_back(std::move(msg));
  };
  const auto& comps = b.quotient_components.components;

  for (std::size_t tv = 0; tv < b.type_values.size(); ++tv) {
    const Partition& t = b.type_values[tv];
    TypeCensusRow row;
    row.type = t;
    row.isolated = b.type_graph.neighbors(static_cast<int>(tv)).empty();

    long global = 0;
    std::vector<std::pair<int, long>> admissible;  // (component, k_C)
    for (std::size_t c = 0; c < comps.size(); ++c) {
      long k = census_count(comps[c], t);
      if (k > 0) {
        admissible.emplace_back(static_cast<int>(c), k);
        global += k;
      }
    }
    row.k_global = BigCount(global);
    row.admissible = static_cast<long>(admissible.size());
    if (admissible.empty()) {
      violation("type " + t.bracket() + " appears in no component");
      report.rows.push_back(std::move(row));
      continue;
    }

    BigCount expected_global =
        divide_exact(mu_in_group(b.group, t), BigCount(totient(t.order())));
    if (row.k_global != expected_global) {
      violation("census of " + t.bracket() + ": " + to_decimal(row.k_global) +
                " classes, mu/phi = " + to_decimal(expected_global));
    }
    row.k_component = admissible.front().second;
    for (auto [c, k] : admissible) {
      if (k != row.k_component) {
        violation("k_C(" + t.bracket() + ") varies across admissible components");
        break;
      }
    }
    if (BigCount(row.admissible) * row.k_component != row.k_global) {
      violation("admissible count of " + t.bracket() +
                " != k_global / k_C");
    }
    if (row.isolated && row.k_component != 1) {
      violation("isolated type " + t.bracket() + " has k_C > 1");
    }
    report.rows.push_back(std::move(row));
  }

  // within one component the ratio k_global(T) / k_C(T) is constant
  for (std::size_t c = 0; c < comps.size(); ++c) {
    BigCount num0, den0;
    bool first = true;
    for (const auto& [key, k] : comps[c].census) {
      Partition t = Partition::parse(key);
      BigCount global =
          divide_exact(mu_in_group(b.group, t), BigCount(totient(t.order())));
      if (first) {
        num0 = global;
        den0 = k;
        first = false;
      } else if (num0 * k != den0 * global) {
        violation("component " + std::to_string(c) +
                  ": ratio differs between types " + key + " and others");
      }
    }
  }
  return report;
}

}  // namespace pg
