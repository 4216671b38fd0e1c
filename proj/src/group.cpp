#include "pg/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace pg {

PermGroup::PermGroup(GroupKind kind, int degree, std::vector<Perm> elements,
                     std::vector<Perm> generators)
    : kind_(kind),
      degree_(degree),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
}

PermGroup PermGroup::symmetric(int n, const GroupCaps& caps) {
  if (n < 1 || n > Perm::max_degree || n > caps.max_sym_degree) {
    throw CapExceeded("symmetric: degree " + std::to_string(n) +
                      " exceeds the enumeration cap");
  }
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Perm> elems;
  do {
    elems.push_back(Perm::from_images(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return PermGroup(GroupKind::Symmetric, n, std::move(elems), {});
}

PermGroup PermGroup::alternating(int n, const GroupCaps& caps) {
  if (n < 1 || n > Perm::max_degree || n > caps.max_sym_degree) {
    throw CapExceeded("alternating: degree " + std::to_string(n) +
                      " exceeds the enumeration cap");
  }
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Perm> elems;
  do {
    Perm p = Perm::from_images(word);
    if (is_even(p)) elems.push_back(p);
  } while (std::next_permutation(word.begin(), word.end()));
  return PermGroup(GroupKind::Alternating, n, std::move(elems), {});
}

PermGroup PermGroup::generated(int degree, std::vector<Perm> gens,
                               const GroupCaps& caps) {
  if (degree < 1 || degree > Perm::max_degree) {
    throw CapExceeded("generated: degree " + std::to_string(degree) +
                      " out of range");
  }
  for (const Perm& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generated: generator degree mismatch");
    }
  }
  std::vector<Perm> elems;
  std::unordered_set<std::uint64_t> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id.code());
  elems.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = compose(g, cur);
      if (seen.insert(next.code()).second) {
        if (elems.size() >= caps.max_generated_order) {
          throw CapExceeded("generated: closure exceeds the order cap");
        }
        elems.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return PermGroup(GroupKind::Generated, degree, std::move(elems),
                   std::move(gens));
}

std::vector<Perm> PermGroup::generating_set() const {
  if (!generators_.empty()) return generators_;
  if (degree_ == 1) return {Perm::identity(1)};
  std::vector<int> cycle(degree_);
  switch (kind_) {
    case GroupKind::Symmetric: {
      if (degree_ == 2) return {parse_perm("(1 2)", 2)};
      for (int i = 0; i < degree_; ++i) cycle[i] = (i + 1) % degree_ + 1;
      return {parse_perm("(1 2)", degree_), Perm::from_images(cycle)};
    }
    case GroupKind::Alternating: {
      if (degree_ <= 2) return {Perm::identity(degree_)};
      if (degree_ == 3) return {parse_perm("(1 2 3)", 3)};
      std::vector<Perm> gens = {parse_perm("(1 2 3)", degree_)};
      if (degree_ % 2 == 1) {
        for (int i = 0; i < degree_; ++i) cycle[i] = (i + 1) % degree_ + 1;
        gens.push_back(Perm::from_images(cycle));  // n-cycle, n odd: even
      } else {
        cycle[0] = 1;  // (2 3 ... n), an (n-1)-cycle, n even: even
        for (int i = 1; i < degree_; ++i) cycle[i] = i % (degree_ - 1) + 2;
        gens.push_back(Perm::from_images(cycle));
      }
      return gens;
    }
    case GroupKind::Generated:
      break;
  }
  return elements_;  // generated group with no stored generators
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

CyclicClass cyclic_class(const Perm& psi) {
  if (psi.is_identity()) {
    throw std::invalid_argument("cyclic_class: the identity class is excluded");
  }
  int o = order_of_perm(psi);
  Perm best = psi;
  Perm p = psi;
  for (int m = 2; m < o; ++m) {
    p = compose(p, psi);
    if (std::gcd(m, o) == 1 && p < best) best = p;
  }
  CyclicClass c;
  c.representative = best;
  c.subgroup_order = o;
  c.class_size = static_cast<int>(totient(o));
  return c;
}

std::vector<Perm> class_members(const CyclicClass& c) {
  std::vector<Perm> members = {c.representative};
  Perm p = c.representative;
  for (int m = 2; m < c.subgroup_order; ++m) {
    p = compose(p, c.representative);
    if (std::gcd(m, c.subgroup_order) == 1) members.push_back(p);
  }
  std::sort(members.begin(), members.end());
  return members;
}

PermGroup normalizer_in_symmetric(const PermGroup& g, const GroupCaps& caps) {
  int n = g.degree();
  if (n > caps.max_brute_degree) {
    throw CapExceeded("normalizer_in_symmetric: degree " + std::to_string(n) +
                      " exceeds the brute-force cap");
  }
  std::vector<Perm> gens = g.generating_set();
  std::vector<Perm> result;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    Perm x = Perm::from_images(word);
    bool ok = true;
    for (const Perm& h : gens) {
      if (!g.contains(conjugate(h, x))) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(x);
  } while (std::next_permutation(word.begin(), word.end()));
  // The collected set is already a group; no closure pass needed.
  return PermGroup(GroupKind::Generated, n, std::move(result), {});
}

FusionResult is_fusion_controlled(const PermGroup& g, const GroupCaps& caps) {
  int n = g.degree();
  if (n > caps.max_brute_degree) {
    throw CapExceeded("is_fusion_controlled: degree " + std::to_string(n) +
                      " exceeds the brute-force cap");
  }
  PermGroup norm = normalizer_in_symmetric(g, caps);

  std::size_t sym_order = 1;
  for (int i = 2; i <= n; ++i) sym_order *= i;
  if (norm.size() == sym_order) return {true, std::nullopt};  // N = S_n

  // Bucket G by type: the S_n-conjugates of psi inside G are exactly the
  // elements of the same type.
  std::unordered_map<std::string, std::vector<Perm>> by_type;
  for (const Perm& e : g.elements()) {
    if (e.is_identity()) continue;
    by_type[cycle_type(e).bracket()].push_back(e);
  }

  for (const Perm& psi : g.elements()) {
    if (psi.is_identity()) continue;
    std::unordered_set<std::uint64_t> reached;
    for (const Perm& y : norm.elements()) {
      reached.insert(conjugate(psi, y).code());
    }
    for (const Perm& target : by_type[cycle_type(psi).bracket()]) {
      if (reached.count(target.code())) continue;
      // find a conjugating witness in S_n
      std::vector<int> word(n);
      std::iota(word.begin(), word.end(), 1);
      do {
        Perm x = Perm::from_images(word);
        if (conjugate(psi, x) == target) {
          return {false, FusionWitness{psi, x, target}};
        }
      } while (std::next_permutation(word.begin(), word.end()));
    }
  }
  return {true, std::nullopt};
}

std::vector<int> fx_automorphism(const Perm& x,
                                 const std::vector<CyclicClass>& classes) {
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    index[classes[i].representative.code()] = static_cast<int>(i);
  }
  std::vector<int> map(classes.size(), -1);
  std::vector<bool> hit(classes.size(), false);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Perm c = conjugate(classes[i].representative, x);
    auto it = index.find(cyclic_class(c).representative.code());
    if (it == index.end()) {
      throw std::invalid_argument(
          "fx_automorphism: x does not normalize the class set");
    }
    map[i] = it->second;
    hit[it->second] = true;
  }
  for (bool h : hit) {
    if (!h) {
      throw std::invalid_argument("fx_automorphism: image is not a bijection");
    }
  }
  return map;
}

}  // namespace pg
