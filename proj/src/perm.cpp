#include "pg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pg {

Perm Perm::identity(int degree) {
  if (degree < 1 || degree > max_degree) {
    throw std::invalid_argument("Perm: degree out of range");
  }
  Perm p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::from_images(const std::vector<int>& images_one_based) {
  int n = static_cast<int>(images_one_based.size());
  if (n < 1 || n > max_degree) {
    throw std::invalid_argument("Perm: degree out of range");
  }
  std::vector<bool> seen(n, false);
  Perm p;
  p.degree_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    int v = images_one_based[i];
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument("Perm: image word is not a bijection");
    }
    seen[v - 1] = true;
    p.images_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Perm::code() const {
  std::uint64_t c = 0;
  for (int i = 0; i < degree_; ++i) {
    c |= static_cast<std::uint64_t>(images_[i]) << (4 * i);
  }
  return c;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a.image(b.image(i)) + 1;
  return Perm::from_images(img);
}

Perm inverse(const Perm& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p.image(i)] = i + 1;
  return Perm::from_images(img);
}

int order_of_perm(const Perm& p) {
  long o = 1;
  std::vector<bool> visited(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (visited[i]) continue;
    int len = 0, j = i;
    do {
      visited[j] = true;
      j = p.image(j);
      ++len;
    } while (j != i);
    o = std::lcm(o, static_cast<long>(len));
  }
  return static_cast<int>(o);
}

Perm perm_power(const Perm& p, long e) {
  Perm base = p;
  if (e < 0) {
    base = inverse(p);
    e = -e;
  }
  Perm r = Perm::identity(p.degree());
  while (e > 0) {
    if (e & 1) r = compose(r, base);
    base = compose(base, base);
    e >>= 1;
  }
  return r;
}

Perm conjugate(const Perm& p, const Perm& x) {
  if (p.degree() != x.degree()) {
    throw std::invalid_argument("conjugate: degree mismatch");
  }
  Perm xi = inverse(x);
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) {
    img[i] = xi.image(p.image(x.image(i))) + 1;
  }
  return Perm::from_images(img);
}

std::vector<int> support(const Perm& p) {
  std::vector<int> s;
  for (int i = 0; i < p.degree(); ++i) {
    if (p.image(i) != i) s.push_back(i + 1);
  }
  return s;
}

Partition cycle_type(const Perm& p) {
  std::vector<int> lengths;
  std::vector<bool> visited(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (visited[i]) continue;
    int len = 0, j = i;
    do {
      visited[j] = true;
      j = p.image(j);
      ++len;
    } while (j != i);
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

bool is_even(const Perm& p) {
  int cycles = 0;
  std::vector<bool> visited(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (visited[i]) continue;
    ++cycles;
    int j = i;
    do {
      visited[j] = true;
      j = p.image(j);
    } while (j != i);
  }
  return (p.degree() - cycles) % 2 == 0;
}

std::string cycle_text(const Perm& p) {
  std::string s;
  std::vector<bool> visited(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (visited[i] || p.image(i) == i) {
      visited[i] = true;
      continue;
    }
    s += '(';
    int j = i;
    bool head = true;
    do {
      if (!head) s += ' ';
      head = false;
      s += std::to_string(j + 1);
      visited[j] = true;
      j = p.image(j);
    } while (j != i);
    s += ')';
  }
  return s.empty() ? "id" : s;
}

std::string image_word(const Perm& p) {
  std::string s;
  for (int i = 0; i < p.degree(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p.image(i) + 1);
  }
  return s;
}

Perm parse_perm(const std::string& text, int degree) {
  if (degree < 1 || degree > Perm::max_degree) {
    throw std::invalid_argument("parse_perm: degree out of range");
  }
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw std::invalid_argument("parse_perm: empty input");
  }
  std::string body = text.substr(first, last - first + 1);

  if (body == "id" || body == "()") return Perm::identity(degree);

  if (body.front() == '(') {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
      if (pos == body.size()) break;
      if (body[pos] != '(') {
        throw std::invalid_argument("parse_perm: expected '(' in '" + text + "'");
      }
      auto close = body.find(')', pos);
      if (close == std::string::npos) {
        throw std::invalid_argument("parse_perm: unbalanced parentheses");
      }
      std::string inner = body.substr(pos + 1, close - pos - 1);
      for (char& c : inner) {
        if (c == ',') c = ' ';
      }
      std::vector<int> cycle;
      std::stringstream ss(inner);
      int v;
      while (ss >> v) {
        if (v < 1 || v > degree) {
          throw std::invalid_argument("parse_perm: point out of range in '" + text + "'");
        }
        if (used[v - 1]) {
          throw std::invalid_argument("parse_perm: cycles must be disjoint in '" + text + "'");
        }
        used[v - 1] = true;
        cycle.push_back(v);
      }
      if (!ss.eof()) {
        throw std::invalid_argument("parse_perm: bad cycle in '" + text + "'");
      }
      for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
        img[cycle[i] - 1] = cycle[i + 1];
      }
      if (cycle.size() > 1) img[cycle.back() - 1] = cycle.front();
      pos = close + 1;
    }
    return Perm::from_images(img);
  }

  // image word
  std::vector<int> img;
  std::stringstream ss(body);
  int v;
  while (ss >> v) img.push_back(v);
  if (!ss.eof() || static_cast<int>(img.size()) != degree) {
    throw std::invalid_argument("parse_perm: bad image word '" + text + "'");
  }
  return Perm::from_images(img);
}

}  // namespace pg
