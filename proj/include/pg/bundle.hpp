#ifndef PG_BUNDLE_HPP
#define PG_BUNDLE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "pg/graph.hpp"
#include "pg/group.hpp"

namespace pg {

struct BundleOptions {
  bool build_explicit = true;               // skipped when |G| exceeds the cap
  std::size_t max_explicit_order = 45'000;  // covers S_8
  std::size_t max_order = 400'000;          // quotient pipeline; covers S_9
  int threads = 1;
};

struct ClassInfo {
  Perm rep;
  int size = 0;    // phi(order)
  int order = 0;   // subgroup order o(rep)
  Partition type;  // cycle type of rep
};

// The four graphs of one group and the projections between them:
//   explicit_graph  P_0(G)        vertices: non-identity elements
//   quotient_graph  ~P_0(G)       vertices: cyclic-generator classes
//   order_graph     O_0(G)        vertices: element orders != 1
//   type_graph      P_0(T(G))     vertices: nontrivial cycle types
// Maps: pi (explicit -> quotient), t~ (quotient -> type),
//       o~ (quotient -> order), o_T (type -> order), with o_T o t~ = o~.
struct PowerGraphBundle {
  explicit PowerGraphBundle(PermGroup g) : group(std::move(g)) {}

  PermGroup group;

  bool has_explicit = false;
  LabeledGraph explicit_graph;
  std::vector<Perm> explicit_vertices;

  LabeledGraph quotient_graph;
  std::vector<ClassInfo> classes;

  LabeledGraph order_graph;
  std::vector<long> order_values;

  LabeledGraph type_graph;
  std::vector<Partition> type_values;

  std::vector<int> pi_assign;  // explicit vertex -> class
  std::vector<int> t_assign;   // class -> type vertex
  std::vector<int> o_assign;   // class -> order vertex
  std::vector<int> ot_assign;  // type vertex -> order vertex

  // Quotient components with census keyed by type bracket text, so
  // k_C(T) is a direct census lookup.
  ComponentReport quotient_components;

  GraphMap pi() const;       // requires has_explicit
  GraphMap t_tilde() const;
  GraphMap o_tilde() const;
  GraphMap o_type() const;

  int class_of(const Perm& p) const;  // -1 when absent; p != id
  int type_vertex(const Partition& t) const;  // -1 when absent
  std::vector<Perm> class_member_perms(int class_idx) const;
};

PowerGraphBundle build_bundle(const PermGroup& g, const BundleOptions& opts = {});

// Single-graph entry points matching the bundle fields; each enforces its
// cap with CapExceeded instead of skipping.
LabeledGraph build_explicit_power_graph(const PermGroup& g,
                                        const BundleOptions& opts = {});
std::pair<LabeledGraph, std::vector<int>> build_quotient_power_graph(
    const PermGroup& g, const BundleOptions& opts = {});
std::pair<LabeledGraph, std::vector<int>> build_order_graph(
    const PermGroup& g, const BundleOptions& opts = {});
std::pair<LabeledGraph, std::vector<int>> build_type_graph(
    const PermGroup& g, const BundleOptions& opts = {});

// Partition-arithmetic-only builds for S_n; no group enumeration, so they
// scale far past the group caps.
std::pair<LabeledGraph, std::vector<Partition>> type_graph_sn(int n);
std::pair<LabeledGraph, std::vector<long>> order_graph_sn(int n);

struct MainComponent {
  int component = -1;        // index into quotient_components
  bool degenerate = false;   // degree < 3: the unique component is reported
  std::vector<Partition> types;  // admissible types of the component
};

// The component of the quotient graph containing the class of (1 2).
// Requires a symmetric-group bundle.
MainComponent main_component(const PowerGraphBundle& b);

// Test oracle: P_0(G) built by the O(|G|^2) pairwise power-membership
// test, independent of the class-derived construction above.
LabeledGraph explicit_power_graph_bruteforce(const PermGroup& g);

}  // namespace pg

#endif  // PG_BUNDLE_HPP
