#include "pg/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pg {

long totient(long m) {
  if (m < 1) throw std::invalid_argument("totient: m must be positive");
  long count = 0;
  for (long k = 1; k <= m; ++k) {
    if (std::gcd(k, m) == 1) ++count;
  }
  return count;
}

bool is_prime(long m) {
  if (m < 2) return false;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

std::vector<long> proper_divisors(long m) {
  std::vector<long> out;
  for (long d = 2; d < m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: no parts");
  long sum = 0;
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
    sum += p;
  }
  std::sort(parts_.begin(), parts_.end());
  n_ = static_cast<int>(sum);
}

Partition Partition::trivial(int n) {
  if (n < 1) throw std::invalid_argument("Partition::trivial: n must be positive");
  return Partition(std::vector<int>(n, 1));
}

std::vector<std::pair<int, int>> Partition::normal_form() const {
  std::vector<std::pair<int, int>> nf;
  for (int p : parts_) {
    if (!nf.empty() && nf.back().first == p) {
      ++nf.back().second;
    } else {
      nf.emplace_back(p, 1);
    }
  }
  return nf;
}

long Partition::order() const {
  long l = 1;
  for (auto [m, t] : normal_form()) l = std::lcm(l, static_cast<long>(m));
  return l;
}

long Partition::gcd_parts() const {
  long g = 0;
  for (auto [m, t] : normal_form()) g = std::gcd(g, static_cast<long>(m));
  return g;
}

bool Partition::is_trivial() const {
  return !parts_.empty() && parts_.back() == 1;
}

std::string Partition::bracket() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

std::string Partition::normal_text() const {
  std::string s;
  for (auto [m, t] : normal_form()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(m);
    if (t > 1) s += '^' + std::to_string(t);
  }
  return s;
}

Partition Partition::parse(const std::string& text) {
  std::string body = text;
  auto fail = [&]() -> Partition {
    throw std::invalid_argument("Partition::parse: cannot parse '" + text + "'");
  };

  // strip whitespace at both ends
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) return fail();
  body = body.substr(first, last - first + 1);

  std::vector<int> parts;
  if (body.front() == '[') {
    if (body.back() != ']') return fail();
    std::stringstream ss(body.substr(1, body.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        parts.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        return fail();
      }
    }
  } else {
    std::stringstream ss(body);
    std::string tok;
    while (ss >> tok) {
      int m = 0, t = 1;
      auto caret = tok.find('^');
      try {
        if (caret == std::string::npos) {
          m = std::stoi(tok);
        } else {
          m = std::stoi(tok.substr(0, caret));
          t = std::stoi(tok.substr(caret + 1));
        }
      } catch (const std::exception&) {
        return fail();
      }
      if (t < 1) return fail();
      for (int i = 0; i < t; ++i) parts.push_back(m);
    }
  }
  if (parts.empty()) return fail();
  return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = parts_.size() <=> other.parts_.size(); c != 0) return c;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (auto c = parts_[i] <=> other.parts_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void emit_partitions(int remaining, int min_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be positive");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, 1, prefix, out);
  return out;
}

Partition power(const Partition& t, long a) {
  if (a < 1) throw std::invalid_argument("power: exponent must be positive");
  std::vector<int> parts;
  parts.reserve(t.parts().size());
  for (auto [m, mult] : t.normal_form()) {
    long g = std::gcd(a, static_cast<long>(m));
    int new_part = static_cast<int>(m / g);
    long new_mult = static_cast<long>(mult) * g;
    for (long i = 0; i < new_mult; ++i) parts.push_back(new_part);
  }
  return Partition(std::move(parts));
}

Partition power_class(const Partition& t, long a) {
  return power(t, std::gcd(a, t.order()));
}

PowerKind classify_power(const Partition& t, long a) {
  if (a < 1) throw std::invalid_argument("classify_power: exponent must be positive");
  long o = t.order();
  long g = std::gcd(a, o);
  if (g == o) return PowerKind::Trivializing;  // includes o = 1
  if (g == 1) return PowerKind::Identity;
  return PowerKind::Proper;
}

BigCount mu_symmetric(const Partition& t) {
  BigCount denom = 1;
  for (auto [m, mult] : t.normal_form()) {
    BigCount mp;
    mpz_ui_pow_ui(mp.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(mult));
    denom *= mp * factorial(static_cast<unsigned>(mult));
  }
  return divide_exact(factorial(static_cast<unsigned>(t.n())), denom);
}

}  // namespace pg
