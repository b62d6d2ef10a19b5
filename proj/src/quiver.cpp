#include "qmono/quiver.hpp"

#include <algorithm>

#include "qmono/errors.hpp"

namespace qmono {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    auto [it, inserted] = vertex_index_.emplace(vertices_[i], static_cast<int>(i));
    if (!inserted) throw Error(ErrorCode::invalid_quiver, "duplicate vertex '" + vertices_[i] + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    auto [it, inserted] = arrow_index_.emplace(a.name, static_cast<int>(i));
    if (!inserted) throw Error(ErrorCode::invalid_quiver, "duplicate arrow '" + a.name + "'");
    const int s = vertex_index(a.source);
    const int t = vertex_index(a.target);
    if (s < 0)
      throw Error(ErrorCode::invalid_quiver, "arrow '" + a.name + "' has unknown source '" + a.source + "'");
    if (t < 0)
      throw Error(ErrorCode::invalid_quiver, "arrow '" + a.name + "' has unknown target '" + a.target + "'");
    arrow_sources_.push_back(s);
    arrow_targets_.push_back(t);
    out_[static_cast<std::size_t>(s)].push_back(static_cast<int>(i));
    in_[static_cast<std::size_t>(t)].push_back(static_cast<int>(i));
  }
}

bool Quiver::has_vertex(const std::string& name) const { return vertex_index_.count(name) > 0; }
bool Quiver::has_arrow(const std::string& name) const { return arrow_index_.count(name) > 0; }

int Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_index_.find(name);
  return it == arrow_index_.end() ? -1 : it->second;
}

bool Quiver::arrow_names_equal(const Quiver& other) const {
  if (arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name != other.arrows_[i].name || arrows_[i].source != other.arrows_[i].source ||
        arrows_[i].target != other.arrows_[i].target)
      return false;
  }
  return true;
}

Quiver subquiver_on(const Quiver& q, const std::vector<std::string>& vertices) {
  std::vector<bool> keep(static_cast<std::size_t>(q.vertex_count()), false);
  for (const auto& name : vertices) {
    const int v = q.vertex_index(name);
    if (v < 0) throw Error(ErrorCode::unknown_vertex, "no vertex '" + name + "'");
    keep[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::string> kept_vertices;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (keep[static_cast<std::size_t>(v)]) kept_vertices.push_back(q.vertex(v));
  }
  std::vector<Arrow> kept_arrows;
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (keep[static_cast<std::size_t>(q.source_of(a))] && keep[static_cast<std::size_t>(q.target_of(a))])
      kept_arrows.push_back(q.arrow(a));
  }
  return Quiver(std::move(kept_vertices), std::move(kept_arrows));
}

std::vector<Quiver> connected_components(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (component[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    component[static_cast<std::size_t>(start)] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      auto visit = [&](int w) {
        if (component[static_cast<std::size_t>(w)] < 0) {
          component[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
      };
      for (int a : q.out_arrows(v)) visit(q.target_of(a));
      for (int a : q.in_arrows(v)) visit(q.source_of(a));
    }
    ++count;
  }

  std::vector<std::vector<std::string>> classes(static_cast<std::size_t>(count));
  for (int v = 0; v < n; ++v) classes[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])].push_back(q.vertex(v));

  std::vector<std::string> smallest(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c)
    smallest[static_cast<std::size_t>(c)] = *std::min_element(classes[static_cast<std::size_t>(c)].begin(),
                                                              classes[static_cast<std::size_t>(c)].end());
  std::vector<int> order(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) order[static_cast<std::size_t>(c)] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return smallest[static_cast<std::size_t>(a)] < smallest[static_cast<std::size_t>(b)]; });

  std::vector<Quiver> result;
  result.reserve(static_cast<std::size_t>(count));
  for (int c : order) result.push_back(subquiver_on(q, classes[static_cast<std::size_t>(c)]));
  return result;
}

bool is_basic_cycle(const Quiver& q) {
  if (q.empty()) return false;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.out_degree(v) != 1 || q.in_degree(v) != 1) return false;
  }
  return connected_components(q).size() == 1;
}

std::vector<int> basic_cycle_order(const Quiver& q) {
  if (!is_basic_cycle(q)) throw Error(ErrorCode::invalid_argument, "quiver is not a basic cycle");
  int start = 0;
  for (int v = 1; v < q.vertex_count(); ++v) {
    if (q.vertex(v) < q.vertex(start)) start = v;
  }
  std::vector<int> order;
  int v = start;
  do {
    order.push_back(v);
    v = q.target_of(q.out_arrows(v)[0]);
  } while (v != start);
  return order;
}

namespace {

bool dfs_finds_cycle(const Quiver& q, int v, std::vector<int>& color) {
  color[static_cast<std::size_t>(v)] = 1;
  for (int a : q.out_arrows(v)) {
    const int w = q.target_of(a);
    if (color[static_cast<std::size_t>(w)] == 1) return true;
    if (color[static_cast<std::size_t>(w)] == 0 && dfs_finds_cycle(q, w, color)) return true;
  }
  color[static_cast<std::size_t>(v)] = 2;
  return false;
}

}  // namespace

bool has_oriented_cycle(const Quiver& q) {
  std::vector<int> color(static_cast<std::size_t>(q.vertex_count()), 0);
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (color[static_cast<std::size_t>(v)] == 0 && dfs_finds_cycle(q, v, color)) return true;
  }
  return false;
}

namespace {

Quiver eliminate_by(const Quiver& q, bool remove_sources) {
  std::vector<bool> removed(static_cast<std::size_t>(q.vertex_count()), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < q.vertex_count(); ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      int degree = 0;
      const auto& incident = remove_sources ? q.in_arrows(v) : q.out_arrows(v);
      for (int a : incident) {
        const int other = remove_sources ? q.source_of(a) : q.target_of(a);
        if (!removed[static_cast<std::size_t>(other)]) ++degree;
      }
      if (degree == 0) {
        removed[static_cast<std::size_t>(v)] = true;
        changed = true;
      }
    }
  }
  std::vector<std::string> kept;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (!removed[static_cast<std::size_t>(v)]) kept.push_back(q.vertex(v));
  }
  return subquiver_on(q, kept);
}

}  // namespace

Quiver eliminate_sources(const Quiver& q) { return eliminate_by(q, true); }
Quiver eliminate_sinks(const Quiver& q) { return eliminate_by(q, false); }

}  // namespace qmono
