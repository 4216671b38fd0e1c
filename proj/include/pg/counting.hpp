#ifndef PG_COUNTING_HPP
#define PG_COUNTING_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pg/bigcount.hpp"
#include "pg/bundle.hpp"

namespace pg {

struct ProcedureStep {
  Partition type;                   // T_i
  int component = -1;               // chosen quotient component C_i
  long k = 0;                       // k_{C_i}(T_i)
  BigCount term;                    // mu / (phi(o) * k), exact
  std::vector<Partition> absorbed;  // T(C_i) = type-graph component of T_i
};

struct ProcedureTrace {
  std::vector<ProcedureStep> steps;
  BigCount total;
  int step_count() const { return static_cast<int>(steps.size()); }
};

// mu_T(G): by formula for symmetric groups, by enumeration otherwise.
BigCount mu_in_group(const PermGroup& g, const Partition& t);

// One term per type-graph component, with every division exact over the
// integers. Precondition: the group is fusion controlled (the caller
// asserts it; verify with is_fusion_controlled at small degree).
ProcedureTrace count_via_theorem_a(const PowerGraphBundle& b);

// The S_n component-count procedure: absorb one type-graph component per
// step, deterministically picking the least unabsorbed type.
ProcedureTrace run_procedure_sn(int n, const BundleOptions& opts = {});

// Same procedure with seeded random type and component selection; the
// total must not depend on the choices.
ProcedureTrace run_procedure_sn_shuffled(int n, std::uint64_t seed,
                                         const BundleOptions& opts = {});

enum class Regime { Small, Prime, PrimePlusOne, Neither };

std::string regime_name(Regime r);

struct ClosedFormResult {
  int n = 0;
  BigCount c0;
  int c0_type = 0;
  int c0_order = 0;
  Regime regime = Regime::Small;
};

// c_0(S_n), c_0(T(S_n)), c_0(O(S_n)): table values for 2 <= n <= 7,
// regime formulas ((n-2)!+1 / n(n-3)!+1 / 1) for n >= 8.
ClosedFormResult closed_form_sn(int n);

struct ComponentShape {
  std::size_t size = 0;       // quotient vertices
  bool is_complete = false;   // in the quotient graph
  std::map<std::string, long> type_census;
  std::size_t explicit_size = 0;   // pi-preimage size in P_0(G)
  bool explicit_complete = false;  // pairwise power test on the preimage
};

struct StructureReport {
  int n = 0;
  ComponentShape main;
  bool main_type_complete = false;  // the type-graph component of the main
  std::vector<ComponentShape> others;
};

// Per-component shapes for an S_n bundle: the main component plus every
// other component with its census and its explicit companion.
StructureReport structure_report(const PowerGraphBundle& b);

struct ConnectivityReport {
  int n = 0;
  bool p0_connected = false;        // (ii)
  bool quotient_connected = false;  // (iii)
  bool type_connected = false;      // (iv)
  bool order_connected = false;     // (v)
  bool arithmetic = false;          // (vi) n = 2 or n not in P u (P+1)
  std::array<bool, 5> flags() const {
    return {p0_connected, quotient_connected, type_connected,
            order_connected, arithmetic};
  }
  bool all_equal() const;
};

// Graph flags by BFS where the caps allow, by closed form otherwise; the
// type and order graphs come from partition arithmetic at any n.
ConnectivityReport connectivity_equivalences(int n, const BundleOptions& opts = {});

struct TypeCensusRow {
  Partition type;
  BigCount k_global;            // quotient vertices of this type = mu/phi
  long admissible = 0;          // number of components containing the type
  long k_component = 0;         // common k_C(T) across those components
  bool isolated = false;        // in the type graph
};

struct LemmaCheckReport {
  bool all_ok = true;
  std::vector<std::string> violations;
  std::vector<TypeCensusRow> rows;
};

// Census identities for a fusion-controlled bundle: k_{~P_0}(T) = mu/phi;
// k_C(T) constant across the components admissible for T, whose number is
// mu/(phi k_C(T)); ratios constant across the types within one component;
// isolated types spread over mu/phi singleton components.
LemmaCheckReport lemma_checks(const PowerGraphBundle& b);

}  // namespace pg

#endif  // PG_COUNTING_HPP
