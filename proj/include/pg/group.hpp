#ifndef PG_GROUP_HPP
#define PG_GROUP_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pg/perm.hpp"

namespace pg {

// Raised when a computation would exceed a configured enumeration cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GroupKind { Symmetric, Alternating, Generated };

struct GroupCaps {
  int max_sym_degree = 10;   // symmetric / alternating enumeration
  int max_brute_degree = 7;  // normalizer and fusion-control brute force
  std::size_t max_generated_order = 4'000'000;
};

// Explicitly enumerated permutation group. Elements are kept sorted by
// image word (identity first) so downstream constructions are
// deterministic regardless of how the group was produced.
class PermGroup {
 public:
  static PermGroup symmetric(int n, const GroupCaps& caps = {});
  static PermGroup alternating(int n, const GroupCaps& caps = {});
  static PermGroup generated(int degree, std::vector<Perm> gens,
                             const GroupCaps& caps = {});

  GroupKind kind() const { return kind_; }
  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  // Stored generators, or a standard generating set for the named kinds.
  std::vector<Perm> generating_set() const;

  bool contains(const Perm& p) const;

 private:
  PermGroup(GroupKind kind, int degree, std::vector<Perm> elements,
            std::vector<Perm> generators);

  friend PermGroup normalizer_in_symmetric(const PermGroup&, const GroupCaps&);

  GroupKind kind_;
  int degree_;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

// The class [x] of generators of one cyclic subgroup <x>.
struct CyclicClass {
  Perm representative;  // lexicographically least image word in the class
  int class_size = 0;   // phi(subgroup_order)
  int subgroup_order = 0;
};

// Rejects the identity: the class [1] is excluded from all proper graphs.
CyclicClass cyclic_class(const Perm& psi);

std::vector<Perm> class_members(const CyclicClass& c);  // sorted

// N_{S_n}(G) by brute force over S_n; degree capped.
PermGroup normalizer_in_symmetric(const PermGroup& g, const GroupCaps& caps = {});

struct FusionWitness {
  Perm psi;
  Perm x;
  Perm conjugated;  // psi^x, an element of G missed by every y in N_{S_n}(G)
};

struct FusionResult {
  bool controlled = false;
  std::optional<FusionWitness> witness;  // set when controlled is false
};

FusionResult is_fusion_controlled(const PermGroup& g, const GroupCaps& caps = {});

// F_x on cyclic classes: [psi] -> [psi^x], as an index map into `classes`.
// Throws std::invalid_argument if x fails to map every class into the list.
std::vector<int> fx_automorphism(const Perm& x,
                                 const std::vector<CyclicClass>& classes);

}  // namespace pg

#endif  // PG_GROUP_HPP
