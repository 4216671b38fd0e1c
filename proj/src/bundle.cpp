#include "pg/bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

namespace pg {

GraphMap PowerGraphBundle::pi() const {
  if (!has_explicit) {
    throw std::logic_error("bundle: explicit graph was not built");
  }
  return GraphMap{&explicit_graph, &quotient_graph, pi_assign};
}

GraphMap PowerGraphBundle::t_tilde() const {
  return GraphMap{&quotient_graph, &type_graph, t_assign};
}

GraphMap PowerGraphBundle::o_tilde() const {
  return GraphMap{&quotient_graph, &order_graph, o_assign};
}

GraphMap PowerGraphBundle::o_type() const {
  return GraphMap{&type_graph, &order_graph, ot_assign};
}

int PowerGraphBundle::class_of(const Perm& p) const {
  Perm rep = cyclic_class(p).representative;
  // classes are sorted by representative image word
  int lo = 0, hi = static_cast<int>(classes.size()) - 1;
  while (lo <= hi) {
    int mid = (lo + hi) / 2;
    if (classes[mid].rep == rep) return mid;
    if (classes[mid].rep < rep) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return -1;
}

int PowerGraphBundle::type_vertex(const Partition& t) const {
  auto it = std::lower_bound(type_values.begin(), type_values.end(), t);
  if (it != type_values.end() && *it == t) {
    return static_cast<int>(it - type_values.begin());
  }
  return -1;
}

std::vector<Perm> PowerGraphBundle::class_member_perms(int class_idx) const {
  return class_members(
      CyclicClass{classes.at(class_idx).rep, classes.at(class_idx).size,
                  classes.at(class_idx).order});
}

namespace {

// Per-element canonical class representative; optionally chunked over
// threads (results land at fixed indices, so the output is deterministic).
std::vector<Perm> canonical_reps(const std::vector<Perm>& elements, int threads) {
  std::vector<Perm> canon(elements.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (elements[i].is_identity()) {
        canon[i] = elements[i];  // placeholder, skipped later
      } else {
        canon[i] = cyclic_class(elements[i]).representative;
      }
    }
  };
  if (threads <= 1 || elements.size() < 4096) {
    work(0, elements.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (elements.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t lo = t * chunk;
      std::size_t hi = std::min(elements.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return canon;
}

}  // namespace

PowerGraphBundle build_bundle(const PermGroup& g, const BundleOptions& opts) {
  if (g.size() > opts.max_order) {
    throw CapExceeded("build_bundle: |G| = " + std::to_string(g.size()) +
                      " exceeds the order cap " + std::to_string(opts.max_order));
  }
  PowerGraphBundle b(g);
  const auto& elems = b.group.elements();

  // Cyclic classes. Elements are sorted by image word and the canonical
  // representative is the least member, so first appearance order equals
  // sorted order of representatives.
  std::vector<Perm> canon = canonical_reps(elems, opts.threads);
  std::unordered_map<std::uint64_t, int> class_index;
  std::vector<int> elem_class(elems.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_identity()) continue;
    auto [it, inserted] = class_index.try_emplace(
        canon[i].code(), static_cast<int>(b.classes.size()));
    if (inserted) {
      ClassInfo info;
      info.rep = canon[i];
      info.order = order_of_perm(canon[i]);
      info.size = static_cast<int>(totient(info.order));
      info.type = cycle_type(canon[i]);
      b.classes.push_back(std::move(info));
    }
    elem_class[i] = it->second;
  }

  // Quotient graph: subgroup-first edge generation. For each class with
  // representative x of order m, <x^{m/e}> is the subgroup of order e
  // inside <x>; each proper divisor e contributes the edge to its class.
  {
    std::vector<std::string> labels;
    labels.reserve(b.classes.size());
    for (const auto& c : b.classes) labels.push_back(cycle_text(c.rep));
    b.quotient_graph = LabeledGraph(std::move(labels));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t c = 0; c < b.classes.size(); ++c) {
      int m = b.classes[c].order;
      for (long e : proper_divisors(m)) {
        Perm y = perm_power(b.classes[c].rep, m / e);
        int d = class_index.at(cyclic_class(y).representative.code());
        edges.emplace_back(std::min<int>(c, d), std::max<int>(c, d));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) b.quotient_graph.add_edge(u, v);
    b.quotient_graph.finalize();
  }

  // Order graph: element orders != 1, edge iff proper divisor.
  {
    std::set<long> orders;
    for (const auto& c : b.classes) orders.insert(c.order);
    b.order_values.assign(orders.begin(), orders.end());
    std::vector<std::string> labels;
    for (long o : b.order_values) labels.push_back(std::to_string(o));
    b.order_graph = LabeledGraph(std::move(labels));
    for (std::size_t i = 0; i < b.order_values.size(); ++i) {
      for (std::size_t j = i + 1; j < b.order_values.size(); ++j) {
        if (b.order_values[j] % b.order_values[i] == 0) {
          b.order_graph.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
    b.order_graph.finalize();
    std::map<long, int> order_index;
    for (std::size_t i = 0; i < b.order_values.size(); ++i) {
      order_index[b.order_values[i]] = static_cast<int>(i);
    }
    b.o_assign.reserve(b.classes.size());
    for (const auto& c : b.classes) b.o_assign.push_back(order_index.at(c.order));
  }

  // Type graph. For S_n the vertex set is all nontrivial partitions of n;
  // in general the set of class types (closed under proper powers).
  {
    if (b.group.kind() == GroupKind::Symmetric) {
      for (auto& t : partitions_of(b.group.degree())) {
        if (!t.is_trivial()) b.type_values.push_back(std::move(t));
      }
      std::sort(b.type_values.begin(), b.type_values.end());
    } else {
      std::set<Partition> types;
      for (const auto& c : b.classes) types.insert(c.type);
      b.type_values.assign(types.begin(), types.end());
    }
    std::vector<std::string> labels;
    for (const auto& t : b.type_values) labels.push_back(t.bracket());
    b.type_graph = LabeledGraph(std::move(labels));
    std::map<Partition, int> type_index;
    for (std::size_t i = 0; i < b.type_values.size(); ++i) {
      type_index[b.type_values[i]] = static_cast<int>(i);
    }
    // Edge exponents reduce to divisors of o(T): gcd(a, m_j) depends on a
    // only through gcd(a, o(T)).
    for (std::size_t i = 0; i < b.type_values.size(); ++i) {
      const Partition& t = b.type_values[i];
      for (long d : proper_divisors(t.order())) {
        Partition p = power(t, d);
        if (p == t || p.is_trivial()) continue;
        auto it = type_index.find(p);
        if (it != type_index.end() && it->second != static_cast<int>(i)) {
          b.type_graph.add_edge(static_cast<int>(i), it->second);
        }
      }
    }
    b.type_graph.finalize();
    b.t_assign.reserve(b.classes.size());
    for (const auto& c : b.classes) b.t_assign.push_back(type_index.at(c.type));
    b.ot_assign.reserve(b.type_values.size());
    std::map<long, int> order_index;
    for (std::size_t i = 0; i < b.order_values.size(); ++i) {
      order_index[b.order_values[i]] = static_cast<int>(i);
    }
    for (const auto& t : b.type_values) {
      auto it = order_index.find(t.order());
      if (it == order_index.end()) {
        throw std::logic_error("bundle: type order missing from the order graph");
      }
      b.ot_assign.push_back(it->second);
    }
  }

  b.quotient_components = components(b.quotient_graph, [&b](int v) {
    return b.classes[v].type.bracket();
  });

  // pi on the non-identity elements (explicit vertex order), kept even
  // when the explicit graph itself is skipped.
  if (!elems.empty()) {
    b.pi_assign.assign(elem_class.begin() + 1, elem_class.end());
  }

  // Explicit graph: classes are internally complete and adjacent classes
  // are joined completely (generators of nested cyclic subgroups are
  // mutually powers).
  if (opts.build_explicit && g.size() - 1 <= opts.max_explicit_order &&
      g.size() > 1) {
    b.has_explicit = true;
    b.explicit_vertices.assign(elems.begin() + 1, elems.end());  // drop id
    std::vector<std::string> labels;
    labels.reserve(b.explicit_vertices.size());
    for (const Perm& p : b.explicit_vertices) labels.push_back(cycle_text(p));
    b.explicit_graph = LabeledGraph(std::move(labels));

    std::vector<std::vector<int>> members(b.classes.size());
    for (std::size_t v = 0; v < b.explicit_vertices.size(); ++v) {
      members[b.pi_assign[v]].push_back(static_cast<int>(v));
    }
    for (const auto& cls : members) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          b.explicit_graph.add_edge(cls[i], cls[j]);
        }
      }
    }
    for (auto [cu, cv] : b.quotient_graph.proper_edges()) {
      for (int u : members[cu]) {
        for (int v : members[cv]) b.explicit_graph.add_edge(u, v);
      }
    }
    b.explicit_graph.finalize();
  }

  return b;
}

LabeledGraph build_explicit_power_graph(const PermGroup& g,
                                        const BundleOptions& opts) {
  if (g.size() == 1) return LabeledGraph(std::vector<std::string>{});
  if (g.size() - 1 > opts.max_explicit_order) {
    throw CapExceeded("build_explicit_power_graph: |G| exceeds the cap");
  }
  BundleOptions o = opts;
  o.build_explicit = true;
  PowerGraphBundle b = build_bundle(g, o);
  return b.explicit_graph;
}

std::pair<LabeledGraph, std::vector<int>> build_quotient_power_graph(
    const PermGroup& g, const BundleOptions& opts) {
  BundleOptions o = opts;
  o.build_explicit = false;
  PowerGraphBundle b = build_bundle(g, o);
  return {b.quotient_graph, b.pi_assign};
}

std::pair<LabeledGraph, std::vector<int>> build_order_graph(
    const PermGroup& g, const BundleOptions& opts) {
  BundleOptions o = opts;
  o.build_explicit = false;
  PowerGraphBundle b = build_bundle(g, o);
  return {b.order_graph, b.o_assign};
}

std::pair<LabeledGraph, std::vector<int>> build_type_graph(
    const PermGroup& g, const BundleOptions& opts) {
  BundleOptions o = opts;
  o.build_explicit = false;
  PowerGraphBundle b = build_bundle(g, o);
  return {b.type_graph, b.t_assign};
}

std::pair<LabeledGraph, std::vector<Partition>> type_graph_sn(int n) {
  std::vector<Partition> types;
  for (auto& t : partitions_of(n)) {
    if (!t.is_trivial()) types.push_back(std::move(t));
  }
  std::sort(types.begin(), types.end());
  std::vector<std::string> labels;
  for (const auto& t : types) labels.push_back(t.bracket());
  LabeledGraph graph(std::move(labels));
  std::map<Partition, int> index;
  for (std::size_t i = 0; i < types.size(); ++i) {
    index[types[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (long d : proper_divisors(types[i].order())) {
      Partition p = power(types[i], d);
      if (p == types[i] || p.is_trivial()) continue;
      auto it = index.find(p);
      if (it != index.end()) graph.add_edge(static_cast<int>(i), it->second);
    }
  }
  graph.finalize();
  return {std::move(graph), std::move(types)};
}

std::pair<LabeledGraph, std::vector<long>> order_graph_sn(int n) {
  std::set<long> orders;
  for (const auto& t : partitions_of(n)) {
    if (!t.is_trivial()) orders.insert(t.order());
  }
  std::vector<long> values(orders.begin(), orders.end());
  std::vector<std::string> labels;
  for (long o : values) labels.push_back(std::to_string(o));
  LabeledGraph graph(std::move(labels));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[j] % values[i] == 0) {
        graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  graph.finalize();
  return {std::move(graph), std::move(values)};
}

MainComponent main_component(const PowerGraphBundle& b) {
  if (b.group.kind() != GroupKind::Symmetric) {
    throw std::invalid_argument("main_component: symmetric-group bundle required");
  }
  MainComponent mc;
  int n = b.group.degree();
  if (n < 2) {
    throw std::invalid_argument("main_component: degree >= 2 required");
  }
  if (n < 3) {
    mc.degenerate = true;
    mc.component = 0;
  } else {
    int cls = b.class_of(parse_perm("(1 2)", n));
    mc.component = b.quotient_components.component_of.at(cls);
  }
  for (const auto& [key, cnt] : b.quotient_components.components[mc.component].census) {
    mc.types.push_back(Partition::parse(key));
  }
  std::sort(mc.types.begin(), mc.types.end());
  return mc;
}

LabeledGraph explicit_power_graph_bruteforce(const PermGroup& g) {
  std::vector<Perm> verts;
  for (const Perm& p : g.elements()) {
    if (!p.is_identity()) verts.push_back(p);
  }
  // sorted power tables make the pairwise membership test a binary search
  std::vector<std::vector<std::uint64_t>> powers(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Perm p = verts[i];
    int o = order_of_perm(p);
    powers[i].reserve(o - 1);
    Perm q = p;
    for (int e = 1; e < o; ++e) {
      powers[i].push_back(q.code());
      q = compose(q, p);
    }
    std::sort(powers[i].begin(), powers[i].end());
  }
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (const Perm& p : verts) labels.push_back(cycle_text(p));
  LabeledGraph graph(std::move(labels));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      bool adjacent =
          std::binary_search(powers[j].begin(), powers[j].end(), verts[i].code()) ||
          std::binary_search(powers[i].begin(), powers[i].end(), verts[j].code());
      if (adjacent) graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  graph.finalize();
  return graph;
}

}  // namespace pg
