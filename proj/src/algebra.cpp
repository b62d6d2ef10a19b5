#include "qmono/algebra.hpp"

#include <algorithm>
#include <map>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

// Extension graph on arrows: a -> b when a path ...a may continue by b,
// i.e. s(b) = t(a) and "a then b" is not forbidden. The algebra is finite
// dimensional iff this graph is acyclic; walks are the nonzero paths.
std::vector<std::vector<int>> extension_graph(const Quiver& q,
                                              const std::vector<std::vector<bool>>& forbidden) {
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(q.arrow_count()));
  for (int a = 0; a < q.arrow_count(); ++a) {
    for (int b : q.out_arrows(q.target_of(a))) {
      if (!forbidden[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        succ[static_cast<std::size_t>(a)].push_back(b);
    }
  }
  return succ;
}

// Returns a cycle (as arrow ids, first repeated at the end) if one exists.
std::vector<int> find_cycle(const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);

  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] != 0) continue;
    // Iterative DFS keeping an explicit path for cycle reconstruction.
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    color[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < succ[static_cast<std::size_t>(v)].size()) {
        const int w = succ[static_cast<std::size_t>(v)][next++];
        if (color[static_cast<std::size_t>(w)] == 1) {
          std::vector<int> cycle{w};
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            cycle.push_back(it->first);
            if (it->first == w) break;
          }
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        if (color[static_cast<std::size_t>(w)] == 0) {
          color[static_cast<std::size_t>(w)] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

AlgebraPtr MonomialAlgebra::validate(const MonomialPresentation& presentation) {
  auto algebra = std::shared_ptr<MonomialAlgebra>(new MonomialAlgebra());
  algebra->presentation_ = presentation;
  const Quiver& q = algebra->presentation_.quiver;
  const int na = q.arrow_count();
  const int nv = q.vertex_count();

  algebra->forbidden_table_.assign(static_cast<std::size_t>(na),
                                   std::vector<bool>(static_cast<std::size_t>(na), false));
  for (const LengthTwoPath& rel : presentation.forbidden) {
    const int first = q.arrow_index(rel.first);
    const int second = q.arrow_index(rel.second);
    if (first < 0) throw Error(ErrorCode::unknown_arrow, "relation names unknown arrow '" + rel.first + "'");
    if (second < 0) throw Error(ErrorCode::unknown_arrow, "relation names unknown arrow '" + rel.second + "'");
    if (q.target_of(first) != q.source_of(second)) {
      throw Error(ErrorCode::non_composable_relation,
                  "relation " + rel.second + "." + rel.first + " is not composable: target of '" + rel.first +
                      "' is '" + q.vertex(q.target_of(first)) + "' but source of '" + rel.second + "' is '" +
                      q.vertex(q.source_of(second)) + "'");
    }
    algebra->forbidden_table_[static_cast<std::size_t>(first)][static_cast<std::size_t>(second)] = true;
  }

  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < na; ++b) {
      if (algebra->forbidden_table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
        algebra->forbidden_.emplace_back(a, b);
    }
  }
  std::sort(algebra->forbidden_.begin(), algebra->forbidden_.end(),
            [&](const auto& lhs, const auto& rhs) {
              const auto key = [&](const std::pair<int, int>& p) {
                return std::make_pair(q.arrow(p.first).name, q.arrow(p.second).name);
              };
              return key(lhs) < key(rhs);
            });

  algebra->left_annihilators_.assign(static_cast<std::size_t>(na), {});
  for (int a = 0; a < na; ++a) {
    std::vector<int>& ann = algebra->left_annihilators_[static_cast<std::size_t>(a)];
    for (int b = 0; b < na; ++b) {
      if (algebra->forbidden_table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) ann.push_back(b);
    }
  }

  const auto succ = extension_graph(q, algebra->forbidden_table_);
  const auto cycle = find_cycle(succ);
  if (!cycle.empty()) {
    std::string names;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) names += " -> ";
      names += q.arrow(cycle[i]).name;
    }
    throw Error(ErrorCode::infinite_dimensional,
                "nonzero paths extend along the cycle " + names + "; the ideal is not admissible");
  }

  // N(a) = { a' : t(a') = t(a), left annihilators of a all annihilate a' }.
  algebra->neighbor_table_.assign(static_cast<std::size_t>(na),
                                  std::vector<bool>(static_cast<std::size_t>(na), false));
  for (int a = 0; a < na; ++a) {
    const auto& ann = algebra->left_annihilators_[static_cast<std::size_t>(a)];
    if (ann.empty()) continue;
    for (int b = 0; b < na; ++b) {
      if (q.target_of(b) != q.target_of(a)) continue;
      bool all = true;
      for (int killer : ann) {
        if (!algebra->forbidden_table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(killer)]) {
          all = false;
          break;
        }
      }
      algebra->neighbor_table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = all;
    }
  }

  // Breadth-first basis enumeration: trivial paths by vertex name, then each
  // length level ordered by the tuple of arrow names.
  std::vector<int> vertex_order(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) vertex_order[static_cast<std::size_t>(v)] = v;
  std::sort(vertex_order.begin(), vertex_order.end(),
            [&](int lhs, int rhs) { return q.vertex(lhs) < q.vertex(rhs); });
  for (int v : vertex_order) algebra->paths_.push_back(Path{v, {}});
  algebra->counts_by_length_.push_back(nv);

  const auto name_tuple = [&](const Path& p) {
    std::vector<std::string> names;
    names.reserve(p.arrows.size());
    for (int a : p.arrows) names.push_back(q.arrow(a).name);
    return names;
  };

  std::vector<Path> level;
  for (int a = 0; a < na; ++a) level.push_back(Path{q.source_of(a), {a}});
  while (!level.empty()) {
    std::sort(level.begin(), level.end(),
              [&](const Path& lhs, const Path& rhs) { return name_tuple(lhs) < name_tuple(rhs); });
    algebra->counts_by_length_.push_back(static_cast<int>(level.size()));
    std::vector<Path> next;
    for (const Path& p : level) {
      algebra->paths_.push_back(p);
      for (int b : succ[static_cast<std::size_t>(p.arrows.back())]) {
        Path extended = p;
        extended.arrows.push_back(b);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
  }

  algebra->arrow_module_paths_.assign(static_cast<std::size_t>(na), {});
  algebra->projective_paths_.assign(static_cast<std::size_t>(nv), {});
  for (std::size_t i = 0; i < algebra->paths_.size(); ++i) {
    const Path& p = algebra->paths_[i];
    algebra->projective_paths_[static_cast<std::size_t>(p.source)].push_back(static_cast<int>(i));
    if (!p.trivial())
      algebra->arrow_module_paths_[static_cast<std::size_t>(p.arrows.front())].push_back(static_cast<int>(i));
  }

  return algebra;
}

bool MonomialAlgebra::is_forbidden(int first_arrow, int second_arrow) const {
  return forbidden_table_[static_cast<std::size_t>(first_arrow)][static_cast<std::size_t>(second_arrow)];
}

bool MonomialAlgebra::is_projective_arrow_module(const std::string& arrow_name) const {
  return is_projective_arrow_module(arrow_index_checked(arrow_name));
}

std::vector<int> MonomialAlgebra::neighbor_set(int arrow) const {
  if (is_projective_arrow_module(arrow)) {
    throw Error(ErrorCode::projective_arrow_module,
                "N(" + quiver().arrow(arrow).name + ") is undefined: the arrow module is projective");
  }
  std::vector<int> result;
  for (int b = 0; b < quiver().arrow_count(); ++b) {
    if (neighbor_table_[static_cast<std::size_t>(arrow)][static_cast<std::size_t>(b)]) result.push_back(b);
  }
  return result;
}

std::vector<std::string> MonomialAlgebra::neighbor_set(const std::string& arrow_name) const {
  std::vector<std::string> names;
  for (int b : neighbor_set(arrow_index_checked(arrow_name))) names.push_back(quiver().arrow(b).name);
  std::sort(names.begin(), names.end());
  return names;
}

bool MonomialAlgebra::in_neighbor_set(int arrow, int candidate) const {
  return neighbor_table_[static_cast<std::size_t>(arrow)][static_cast<std::size_t>(candidate)];
}

std::vector<Path> MonomialAlgebra::arrow_module_basis(int arrow) const {
  std::vector<Path> basis;
  for (int id : arrow_module_paths_[static_cast<std::size_t>(arrow)]) basis.push_back(paths_[static_cast<std::size_t>(id)]);
  return basis;
}

std::vector<Path> MonomialAlgebra::arrow_module_basis(const std::string& arrow_name) const {
  return arrow_module_basis(arrow_index_checked(arrow_name));
}

std::vector<Path> MonomialAlgebra::projective_module_basis(int vertex) const {
  std::vector<Path> basis;
  for (int id : projective_paths_[static_cast<std::size_t>(vertex)]) basis.push_back(paths_[static_cast<std::size_t>(id)]);
  return basis;
}

std::vector<Path> MonomialAlgebra::right_ideal_basis(int arrow) const {
  const std::vector<int> neighbors = neighbor_set(arrow);
  std::vector<bool> in_n(static_cast<std::size_t>(quiver().arrow_count()), false);
  for (int b : neighbors) in_n[static_cast<std::size_t>(b)] = true;
  std::vector<Path> basis;
  for (const Path& p : paths_) {
    if (!p.trivial() && in_n[static_cast<std::size_t>(p.arrows.back())]) basis.push_back(p);
  }
  return basis;
}

std::vector<Path> MonomialAlgebra::right_ideal_basis(const std::string& arrow_name) const {
  return right_ideal_basis(arrow_index_checked(arrow_name));
}

bool MonomialAlgebra::path_is_nonzero(const Path& p) const {
  if (p.trivial()) return p.source >= 0 && p.source < quiver().vertex_count();
  if (quiver().source_of(p.arrows.front()) != p.source) return false;
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i) {
    if (quiver().target_of(p.arrows[i]) != quiver().source_of(p.arrows[i + 1])) return false;
    if (is_forbidden(p.arrows[i], p.arrows[i + 1])) return false;
  }
  return true;
}

int MonomialAlgebra::path_index(const Path& p) const {
  if (!path_is_nonzero(p)) return -1;
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    if (paths_[i] == p) return static_cast<int>(i);
  }
  return -1;
}

std::string MonomialAlgebra::path_to_string(const Path& p) const {
  if (p.trivial()) return "e(" + quiver().vertex(p.source) + ")";
  // Composition order: last-applied arrow leftmost, matching the DSL's
  // `relation b.a` notation.
  std::string text;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!text.empty()) text += ".";
    text += quiver().arrow(*it).name;
  }
  return text;
}

int MonomialAlgebra::arrow_index_checked(const std::string& name) const {
  const int a = quiver().arrow_index(name);
  if (a < 0) throw Error(ErrorCode::unknown_arrow, "no arrow '" + name + "'");
  return a;
}

int MonomialAlgebra::vertex_index_checked(const std::string& name) const {
  const int v = quiver().vertex_index(name);
  if (v < 0) throw Error(ErrorCode::unknown_vertex, "no vertex '" + name + "'");
  return v;
}

}  // namespace qmono
