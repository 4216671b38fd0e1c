#ifndef PG_PERM_HPP
#define PG_PERM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pg/partition.hpp"

namespace pg {

// Permutation of {1..n} stored as an image word, 0-based internally.
// Composition convention everywhere: compose(a, b)(i) = a(b(i)).
class Perm {
 public:
  static constexpr int max_degree = 16;

  Perm() = default;

  static Perm identity(int degree);

  // images[i] = psi(i+1), 1-based values; must be a bijection of {1..n}.
  static Perm from_images(const std::vector<int>& images_one_based);

  int degree() const { return degree_; }
  int image(int i) const { return images_[i]; }  // 0-based
  bool is_identity() const;

  // Images packed as nibbles; unique key within one degree.
  std::uint64_t code() const;

  // Lexicographic on the image word (padding beyond degree stays zero).
  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, max_degree> images_{};
};

Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm perm_power(const Perm& p, long e);  // negative e = powers of the inverse
Perm conjugate(const Perm& p, const Perm& x);  // p^x = x^-1 p x
int order_of_perm(const Perm& p);
std::vector<int> support(const Perm& p);  // 1-based moved points
Partition cycle_type(const Perm& p);
bool is_even(const Perm& p);

std::string cycle_text(const Perm& p);  // "(1 2)(3 4 5)"; identity is "id"
std::string image_word(const Perm& p);  // "2 1 4 5 3"

// Accepts "id", disjoint cycle notation, or an image word of full length.
Perm parse_perm(const std::string& text, int degree);

}  // namespace pg

#endif  // PG_PERM_HPP
