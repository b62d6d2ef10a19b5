#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace qmono {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
};

/// Finite directed multigraph. Loops and parallel arrows are allowed;
/// vertex and arrow names must be unique. Immutable after construction.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  bool empty() const { return vertices_.empty(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
  const std::string& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }

  bool has_vertex(const std::string& name) const;
  bool has_arrow(const std::string& name) const;
  int vertex_index(const std::string& name) const;  // -1 when absent
  int arrow_index(const std::string& name) const;   // -1 when absent

  int source_of(int a) const { return arrow_sources_[static_cast<std::size_t>(a)]; }
  int target_of(int a) const { return arrow_targets_[static_cast<std::size_t>(a)]; }

  const std::vector<int>& out_arrows(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in_arrows(int v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(int v) const { return static_cast<int>(out_arrows(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_arrows(v).size()); }

  bool operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && arrow_names_equal(other);
  }

 private:
  bool arrow_names_equal(const Quiver& other) const;

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> arrow_sources_;
  std::vector<int> arrow_targets_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> arrow_index_;
};

/// Full subquiver on the given vertices (arrows with both ends inside),
/// preserving the parent's declaration order.
Quiver subquiver_on(const Quiver& q, const std::vector<std::string>& vertices);

/// Partition into connected components (direction ignored). Components are
/// ordered by their lexicographically smallest vertex name.
std::vector<Quiver> connected_components(const Quiver& q);

/// True iff q is connected and every vertex has exactly one incoming and one
/// outgoing arrow; a single vertex with one loop counts (basic 1-cycle).
bool is_basic_cycle(const Quiver& q);

/// For a basic cycle, the vertex ids in cycle order, starting at the
/// lexicographically smallest vertex name.
std::vector<int> basic_cycle_order(const Quiver& q);

bool has_oriented_cycle(const Quiver& q);

/// Maximal subquiver in which every vertex has at least one incoming arrow
/// (iterated removal of in-degree-0 vertices). May be empty.
Quiver eliminate_sources(const Quiver& q);

/// Maximal subquiver in which every vertex has at least one outgoing arrow.
Quiver eliminate_sinks(const Quiver& q);

}  // namespace qmono
