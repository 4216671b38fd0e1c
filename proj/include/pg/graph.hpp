#ifndef PG_GRAPH_HPP
#define PG_GRAPH_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pg {

// Finite reflexive simple graph. A loop sits on every vertex by
// convention and is never stored; only proper edges are materialized.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::vector<std::string> labels);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  int index_of(const std::string& label) const;  // -1 when absent

  void add_edge(int u, int v);  // proper edge, u != v
  void finalize();              // sort + dedup adjacency; idempotent
  bool finalized() const { return !dirty_; }

  std::size_t proper_edge_count() const;
  bool has_edge(int u, int v) const;  // reflexive: has_edge(v, v) is true
  const std::vector<int>& neighbors(int v) const;  // proper, sorted
  std::vector<std::pair<int, int>> proper_edges() const;  // u < v, sorted

 private:
  void require_finalized() const;

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  bool dirty_ = false;
};

// A candidate homomorphism: total vertex map between two graphs.
struct GraphMap {
  const LabeledGraph* source = nullptr;
  const LabeledGraph* target = nullptr;
  std::vector<int> assignment;  // source vertex -> target vertex
};

struct Component {
  std::vector<int> vertices;  // sorted ids
  bool is_complete = false;   // every pair joined (singletons count)
  std::map<std::string, long> census;
};

struct ComponentReport {
  std::vector<Component> components;  // ordered by least contained vertex
  std::vector<int> component_of;      // vertex -> component index
  int count() const { return static_cast<int>(components.size()); }
};

using CensusKeyFn = std::function<std::string(int)>;

// Connected components over proper edges (loops never connect anything).
// The census of each component is keyed by `key`, defaulting to labels.
ComponentReport components(const LabeledGraph& g);
ComponentReport components(const LabeledGraph& g, const CensusKeyFn& key);

LabeledGraph delete_vertex(const LabeledGraph& g, int v);

struct QuotientResult {
  LabeledGraph graph;
  std::vector<int> projection;  // source vertex -> class index
};

// Quotient by a partition of the vertex set: proper edge between distinct
// classes iff some cross pair is a proper edge of g. Class labels default
// to the label of the least member.
QuotientResult quotient(const LabeledGraph& g,
                        const std::vector<std::vector<int>>& classes,
                        std::vector<std::string> class_labels = {});

bool is_homomorphism(const GraphMap& m);
bool is_two_homomorphism(const GraphMap& m);

// The four refinements below reject non-homomorphisms.
bool is_complete_map(const GraphMap& m);
bool is_tame(const GraphMap& m);
bool is_locally_surjective(const GraphMap& m);
bool is_pseudo_covering(const GraphMap& m);  // locally surjective + complete

bool is_graph_automorphism(const LabeledGraph& g, const std::vector<int>& f);

// True iff the fibers of m coincide with the orbits of the group generated
// by the given vertex bijections. Generators are validated up front.
bool is_orbit_map(const GraphMap& m,
                  const std::vector<std::vector<int>>& generators);

std::vector<int> isolated_vertices(const LabeledGraph& g);

struct GraphIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exchange format: "vertices k" / "edges m" header, one vertex label per
// line, then one "i j" proper edge per line (0-based indices).
void write_graph(std::ostream& os, const LabeledGraph& g);
LabeledGraph read_graph(std::istream& is);

// Map format: one "i -> j" line per source vertex.
void write_map(std::ostream& os, const GraphMap& m);
std::vector<int> read_map(std::istream& is);

}  // namespace pg

#endif  // PG_GRAPH_HPP
