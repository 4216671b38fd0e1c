#ifndef PG_BIGCOUNT_HPP
#define PG_BIGCOUNT_HPP

#include <gmpxx.h>

#include <string>

namespace pg {

// Exact non-negative integer used on every counting path. Factorials such
// as (n-2)!+1 overflow machine words long before the closed forms get
// interesting, so counts are mpz-backed throughout.
using BigCount = mpz_class;

BigCount factorial(unsigned n);

bool divides(const BigCount& d, const BigCount& a);

// a / d, throwing std::domain_error unless the division is exact.
BigCount divide_exact(const BigCount& a, const BigCount& d);

std::string to_decimal(const BigCount& v);

}  // namespace pg

#endif  // PG_BIGCOUNT_HPP
