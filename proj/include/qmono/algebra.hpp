#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qmono/quiver.hpp"

namespace qmono {

/// Ordered relation "first, then second": the length-two path obtained by
/// traversing `first` and continuing along `second`. The DSL writes it as
/// `relation second.first` (composition order, rightmost acts first).
struct LengthTwoPath {
  std::string first;
  std::string second;
};

struct MonomialPresentation {
  Quiver quiver;
  std::vector<LengthTwoPath> forbidden;
};

/// A path, stored in traversal order: arrows[0] acts first. An empty arrow
/// list is the trivial path at `source`.
struct Path {
  int source = -1;
  std::vector<int> arrows;

  bool trivial() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const Path& other) const = default;
};

class MonomialAlgebra;
using AlgebraPtr = std::shared_ptr<const MonomialAlgebra>;

/// A validated quadratic monomial algebra: quiver + forbidden length-two
/// paths, with the full nonzero-path basis enumerated at construction.
/// Immutable; operations are const and thread-safe.
class MonomialAlgebra {
 public:
  /// Checks composability of every relation and finite-dimensionality
  /// (acyclicity of the path-extension graph), then enumerates the basis.
  /// Throws NON_COMPOSABLE_RELATION or INFINITE_DIMENSIONAL (the message
  /// names one extension cycle).
  static AlgebraPtr validate(const MonomialPresentation& presentation);

  const Quiver& quiver() const { return presentation_.quiver; }
  const MonomialPresentation& presentation() const { return presentation_; }

  int dimension() const { return static_cast<int>(paths_.size()); }
  const std::vector<Path>& nonzero_paths() const { return paths_; }
  /// Number of nonzero paths of each length, index = length.
  const std::vector<int>& path_counts_by_length() const { return counts_by_length_; }

  /// Interned forbidden pairs (first arrow id, second arrow id), sorted.
  const std::vector<std::pair<int, int>>& forbidden_pairs() const { return forbidden_; }
  bool is_forbidden(int first_arrow, int second_arrow) const;

  /// Arrows b with "a then b" forbidden: the left annihilators of a, equal
  /// to the out-neighbours of a in the relation quiver.
  const std::vector<int>& left_annihilators(int arrow) const {
    return left_annihilators_[static_cast<std::size_t>(arrow)];
  }

  bool is_projective_arrow_module(int arrow) const {
    return left_annihilators(arrow).empty();
  }
  bool is_projective_arrow_module(const std::string& arrow_name) const;

  /// N(a): arrows a' with the same target whose left annihilators contain
  /// those of a. Defined only when A·a is non-projective; throws
  /// PROJECTIVE_ARROW_MODULE otherwise.
  std::vector<int> neighbor_set(int arrow) const;
  std::vector<std::string> neighbor_set(const std::string& arrow_name) const;
  bool in_neighbor_set(int arrow, int candidate) const;

  /// Basis of the left ideal A·a: nonzero paths whose first arrow is a.
  std::vector<Path> arrow_module_basis(int arrow) const;
  std::vector<Path> arrow_module_basis(const std::string& arrow_name) const;

  /// Basis of A·e_v: nonzero paths starting at v, trivial path included.
  std::vector<Path> projective_module_basis(int vertex) const;

  /// Basis of Z(a) = sum of a'A over a' in N(a): nonzero paths whose last
  /// arrow lies in N(a). Throws PROJECTIVE_ARROW_MODULE like neighbor_set.
  std::vector<Path> right_ideal_basis(int arrow) const;
  std::vector<Path> right_ideal_basis(const std::string& arrow_name) const;

  /// Whole-module dimensions without materializing bases.
  int arrow_module_dimension(int arrow) const {
    return static_cast<int>(arrow_module_paths_[static_cast<std::size_t>(arrow)].size());
  }
  int projective_module_dimension(int vertex) const {
    return static_cast<int>(projective_paths_[static_cast<std::size_t>(vertex)].size());
  }

  bool path_is_nonzero(const Path& p) const;
  int path_index(const Path& p) const;  // -1 when zero / unknown
  std::string path_to_string(const Path& p) const;

  int arrow_index_checked(const std::string& name) const;
  int vertex_index_checked(const std::string& name) const;

 private:
  MonomialAlgebra() = default;

  MonomialPresentation presentation_;
  std::vector<std::pair<int, int>> forbidden_;
  std::vector<std::vector<bool>> forbidden_table_;      // [first][second]
  std::vector<std::vector<int>> left_annihilators_;     // per arrow, sorted
  std::vector<std::vector<bool>> neighbor_table_;       // [a][a'] for non-projective a
  std::vector<Path> paths_;                             // by length, then by arrow names
  std::vector<int> counts_by_length_;
  std::vector<std::vector<int>> arrow_module_paths_;    // path ids, per first arrow
  std::vector<std::vector<int>> projective_paths_;      // path ids, per start vertex
};

}  // namespace qmono
