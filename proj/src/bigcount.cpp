#include "pg/bigcount.hpp"

#include <stdexcept>

namespace pg {

BigCount factorial(unsigned n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool divides(const BigCount& d, const BigCount& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

BigCount divide_exact(const BigCount& a, const BigCount& d) {
  if (d == 0 || !divides(d, a)) {
    throw std::domain_error("divide_exact: " + a.get_str() +
                            " is not a multiple of " + d.get_str());
  }
  BigCount q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::string to_decimal(const BigCount& v) { return v.get_str(); }

}  // namespace pg
