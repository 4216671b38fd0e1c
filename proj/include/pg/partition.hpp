#ifndef PG_PARTITION_HPP
#define PG_PARTITION_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "pg/bigcount.hpp"

namespace pg {

// Euler's totient, by direct coprime count (arguments stay desk scale).
long totient(long m);

bool is_prime(long m);

// Divisors d of m with 1 < d < m, ascending.
std::vector<long> proper_divisors(long m);

// An integer partition of n kept in ascending order. The parts vector is
// the single source of truth; the normal form (distinct ascending parts
// with multiplicities >= 1) is derived on demand and multiplicity-0
// entries are never materialized.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition trivial(int n);  // [1^n]

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }

  // (part, multiplicity) pairs, parts strictly ascending.
  std::vector<std::pair<int, int>> normal_form() const;

  long order() const;  // lcm of the distinct parts
  long gcd_parts() const;
  bool is_trivial() const;

  std::string bracket() const;      // "[1,1,2]"
  std::string normal_text() const;  // "1^2 2"

  // Accepts either serialization.
  static Partition parse(const std::string& text);

  bool operator==(const Partition&) const = default;

  // Deterministic total order used wherever a "least type" is needed:
  // smaller n first, then fewer parts, then lexicographic on parts.
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  int n_ = 0;
  std::vector<int> parts_;
};

// Every partition of n exactly once, ordered lexicographically on the
// ascending part lists ([1^n] first, [n] last). Rejects n < 1.
std::vector<Partition> partitions_of(int n);

enum class PowerKind { Identity, Trivializing, Proper };

// T^a: each part m becomes m/gcd(a,m) with multiplicity scaled by
// gcd(a,m); the result is renormalized. Requires a >= 1.
Partition power(const Partition& t, long a);

// power(T, gcd(a, o(T))); equal to power(T, a) for every a >= 1.
Partition power_class(const Partition& t, long a);

// Identity iff gcd(a,o(T)) = 1, Trivializing iff o(T) | a, Proper
// otherwise. For o(T) = 1 the first two coincide; reports Trivializing.
PowerKind classify_power(const Partition& t, long a);

// Number of permutations of this type in S_n: n! / (prod m_j^{t_j} t_j!).
BigCount mu_symmetric(const Partition& t);

}  // namespace pg

#endif  // PG_PARTITION_HPP
