#include "pg/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace pg {

LabeledGraph::LabeledGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), adj_(labels_.size()) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw std::invalid_argument("LabeledGraph: duplicate vertex labels");
  }
}

int LabeledGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

void LabeledGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::invalid_argument("add_edge: vertex out of range");
  }
  if (u == v) {
    throw std::invalid_argument("add_edge: loops are implicit, not stored");
  }
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  dirty_ = true;
}

void LabeledGraph::finalize() {
  if (!dirty_) return;
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  dirty_ = false;
}

void LabeledGraph::require_finalized() const {
  if (dirty_) {
    throw std::logic_error("LabeledGraph: finalize() before querying");
  }
}

std::size_t LabeledGraph::proper_edge_count() const {
  require_finalized();
  std::size_t total = 0;
  for (const auto& nbrs : adj_) total += nbrs.size();
  return total / 2;
}

bool LabeledGraph::has_edge(int u, int v) const {
  require_finalized();
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::invalid_argument("has_edge: vertex out of range");
  }
  if (u == v) return true;  // implicit loop
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& LabeledGraph::neighbors(int v) const {
  require_finalized();
  return adj_.at(v);
}

std::vector<std::pair<int, int>> LabeledGraph::proper_edges() const {
  require_finalized();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ComponentReport components(const LabeledGraph& g) {
  return components(g, [&g](int v) { return g.label(v); });
}

ComponentReport components(const LabeledGraph& g, const CensusKeyFn& key) {
  int n = g.vertex_count();
  UnionFind uf(n);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) uf.unite(u, v);
  }
  // deterministic component ids: ordered by least contained vertex
  ComponentReport report;
  report.component_of.assign(n, -1);
  std::vector<int> root_to_comp(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = report.count();
      report.components.emplace_back();
    }
    int c = root_to_comp[r];
    report.component_of[v] = c;
    report.components[c].vertices.push_back(v);
    ++report.components[c].census[key(v)];
  }
  for (auto& comp : report.components) {
    std::size_t size = comp.vertices.size();
    comp.is_complete = true;
    for (int v : comp.vertices) {
      if (g.neighbors(v).size() != size - 1) {
        comp.is_complete = false;
        break;
      }
    }
  }
  return report;
}

LabeledGraph delete_vertex(const LabeledGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("delete_vertex: no such vertex");
  }
  std::vector<std::string> labels;
  std::vector<int> remap(g.vertex_count(), -1);
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u == v) continue;
    remap[u] = static_cast<int>(labels.size());
    labels.push_back(g.label(u));
  }
  LabeledGraph out(std::move(labels));
  for (auto [a, b] : g.proper_edges()) {
    if (a != v && b != v) out.add_edge(remap[a], remap[b]);
  }
  out.finalize();
  return out;
}

QuotientResult quotient(const LabeledGraph& g,
                        const std::vector<std::vector<int>>& classes,
                        std::vector<std::string> class_labels) {
  int n = g.vertex_count();
  std::vector<int> class_of(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw std::invalid_argument("quotient: empty class");
    }
    for (int v : classes[c]) {
      if (v < 0 || v >= n || class_of[v] != -1) {
        throw std::invalid_argument("quotient: classes do not partition the vertices");
      }
      class_of[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (class_of[v] < 0) {
      throw std::invalid_argument("quotient: classes do not partition the vertices");
    }
  }
  if (class_labels.empty()) {
    class_labels.reserve(classes.size());
    for (const auto& cls : classes) {
      int least = *std::min_element(cls.begin(), cls.end());
      class_labels.push_back(g.label(least));
    }
  } else if (class_labels.size() != classes.size()) {
    throw std::invalid_argument("quotient: one label per class required");
  }
  QuotientResult out{LabeledGraph(std::move(class_labels)), std::move(class_of)};
  for (auto [a, b] : g.proper_edges()) {
    int ca = out.projection[a], cb = out.projection[b];
    if (ca != cb) out.graph.add_edge(ca, cb);
  }
  out.graph.finalize();
  return out;
}

namespace {

void require_wellformed(const GraphMap& m) {
  if (!m.source || !m.target) {
    throw std::invalid_argument("GraphMap: null source or target");
  }
  if (static_cast<int>(m.assignment.size()) != m.source->vertex_count()) {
    throw std::invalid_argument("GraphMap: assignment is not total");
  }
  for (int t : m.assignment) {
    if (t < 0 || t >= m.target->vertex_count()) {
      throw std::invalid_argument("GraphMap: image vertex out of range");
    }
  }
}

void require_homomorphism(const GraphMap& m) {
  if (!is_homomorphism(m)) {
    throw std::invalid_argument("GraphMap: not a homomorphism");
  }
}

}  // namespace

bool is_homomorphism(const GraphMap& m) {
  require_wellformed(m);
  for (auto [u, v] : m.source->proper_edges()) {
    int a = m.assignment[u], b = m.assignment[v];
    if (a == b) continue;  // collapsing onto the implicit loop is allowed
    if (!m.target->has_edge(a, b)) return false;
  }
  return true;
}

bool is_two_homomorphism(const GraphMap& m) {
  require_wellformed(m);
  for (auto [u, v] : m.source->proper_edges()) {
    int a = m.assignment[u], b = m.assignment[v];
    if (a == b || !m.target->has_edge(a, b)) return false;
  }
  return true;
}

bool is_complete_map(const GraphMap& m) {
  require_homomorphism(m);
  std::vector<bool> vertex_hit(m.target->vertex_count(), false);
  for (int t : m.assignment) vertex_hit[t] = true;
  for (bool h : vertex_hit) {
    if (!h) return false;
  }
  // every proper target edge must be the image of a proper source edge;
  // loops are covered by reflexivity
  auto target_edges = m.target->proper_edges();
  std::set<std::pair<int, int>> missing(target_edges.begin(), target_edges.end());
  for (auto [u, v] : m.source->proper_edges()) {
    int a = m.assignment[u], b = m.assignment[v];
    if (a == b) continue;
    missing.erase({std::min(a, b), std::max(a, b)});
  }
  return missing.empty();
}

bool is_tame(const GraphMap& m) {
  require_homomorphism(m);
  ComponentReport rep = components(*m.source);
  std::vector<int> fiber_comp(m.target->vertex_count(), -1);
  for (int v = 0; v < m.source->vertex_count(); ++v) {
    int t = m.assignment[v];
    if (fiber_comp[t] < 0) {
      fiber_comp[t] = rep.component_of[v];
    } else if (fiber_comp[t] != rep.component_of[v]) {
      return false;
    }
  }
  return true;
}

bool is_locally_surjective(const GraphMap& m) {
  require_homomorphism(m);
  for (int v = 0; v < m.source->vertex_count(); ++v) {
    // closed neighborhoods: the implicit loop puts v in N[v]
    std::set<int> image;
    image.insert(m.assignment[v]);
    for (int w : m.source->neighbors(v)) image.insert(m.assignment[w]);
    std::set<int> expected;
    int t = m.assignment[v];
    expected.insert(t);
    for (int w : m.target->neighbors(t)) expected.insert(w);
    if (image != expected) return false;
  }
  return true;
}

bool is_pseudo_covering(const GraphMap& m) {
  return is_locally_surjective(m) && is_complete_map(m);
}

bool is_graph_automorphism(const LabeledGraph& g, const std::vector<int>& f) {
  int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int t : f) {
    if (t < 0 || t >= n || hit[t]) return false;
    hit[t] = true;
  }
  // a bijection mapping every edge to an edge is onto the edge set
  for (auto [u, v] : g.proper_edges()) {
    if (!g.has_edge(f[u], f[v])) return false;
  }
  return true;
}

bool is_orbit_map(const GraphMap& m,
                  const std::vector<std::vector<int>>& generators) {
  require_wellformed(m);
  for (const auto& f : generators) {
    if (!is_graph_automorphism(*m.source, f)) {
      throw std::invalid_argument("is_orbit_map: generator is not an automorphism");
    }
  }
  int n = m.source->vertex_count();
  std::vector<int> orbit_of(n, -1);
  int orbits = 0;
  for (int start = 0; start < n; ++start) {
    if (orbit_of[start] >= 0) continue;
    int id = orbits++;
    std::vector<int> stack = {start};
    orbit_of[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& f : generators) {
        int w = f[v];
        if (orbit_of[w] < 0) {
          orbit_of[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  // orbits == fibers: same-orbit vertices share an image, and each image
  // value belongs to a single orbit
  std::vector<int> orbit_image(orbits, -1);
  std::vector<int> image_orbit(m.target->vertex_count(), -1);
  for (int v = 0; v < n; ++v) {
    int o = orbit_of[v], t = m.assignment[v];
    if (orbit_image[o] < 0) orbit_image[o] = t;
    if (orbit_image[o] != t) return false;
    if (image_orbit[t] < 0) image_orbit[t] = o;
    if (image_orbit[t] != o) return false;
  }
  return true;
}

std::vector<int> isolated_vertices(const LabeledGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).empty()) out.push_back(v);
  }
  return out;
}

void write_graph(std::ostream& os, const LabeledGraph& g) {
  auto edges = g.proper_edges();
  os << "vertices " << g.vertex_count() << "\n";
  os << "edges " << edges.size() << "\n";
  for (const auto& l : g.labels()) os << l << "\n";
  for (auto [u, v] : edges) os << u << " " << v << "\n";
}

LabeledGraph read_graph(std::istream& is) {
  std::string word;
  int k = 0;
  std::size_t m = 0;
  if (!(is >> word) || word != "vertices" || !(is >> k) || k < 0) {
    throw GraphIoError("graph file: expected 'vertices k' header");
  }
  if (!(is >> word) || word != "edges" || !(is >> m)) {
    throw GraphIoError("graph file: expected 'edges m' header");
  }
  is.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
  std::vector<std::string> labels;
  labels.reserve(k);
  std::string line;
  for (int i = 0; i < k; ++i) {
    if (!std::getline(is, line)) {
      throw GraphIoError("graph file: missing vertex label");
    }
    labels.push_back(line);
  }
  LabeledGraph g(std::move(labels));
  for (std::size_t i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw GraphIoError("graph file: bad edge line");
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw GraphIoError(std::string("graph file: ") + e.what());
    }
  }
  g.finalize();
  return g;
}

void write_map(std::ostream& os, const GraphMap& m) {
  for (std::size_t i = 0; i < m.assignment.size(); ++i) {
    os << i << " -> " << m.assignment[i] << "\n";
  }
}

std::vector<int> read_map(std::istream& is) {
  std::vector<int> assignment;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::stringstream ss(line);
    std::size_t i;
    std::string arrow;
    int j;
    if (!(ss >> i >> arrow >> j) || arrow != "->") {
      throw GraphIoError("map file: expected 'i -> j' lines");
    }
    if (i != assignment.size()) {
      throw GraphIoError("map file: source vertices out of order");
    }
    assignment.push_back(j);
  }
  return assignment;
}

}  // namespace pg
