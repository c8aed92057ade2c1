#include "gentle/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gentle {

namespace {

struct Indexed {
  std::map<std::string, int> vertex;
  std::map<std::string, int> arrow;
  bool ok = true;
};

Indexed index_names(const QuiverSpec& spec, ValidationReport* report) {
  Indexed idx;
  for (size_t i = 0; i < spec.vertices.size(); ++i) {
    if (!idx.vertex.emplace(spec.vertices[i], int(i)).second) {
      report->add("duplicate-vertex", "vertex declared twice", spec.vertices[i]);
      idx.ok = false;
    }
  }
  for (size_t i = 0; i < spec.arrows.size(); ++i) {
    const auto& a = spec.arrows[i];
    if (!idx.arrow.emplace(a.label, int(i)).second) {
      report->add("duplicate-arrow", "arrow label declared twice", a.label);
      idx.ok = false;
    }
    if (!idx.vertex.count(a.source)) {
      report->add("unknown-vertex", "arrow source is not a declared vertex",
                  a.label + ": " + a.source);
      idx.ok = false;
    }
    if (!idx.vertex.count(a.target)) {
      report->add("unknown-vertex", "arrow target is not a declared vertex",
                  a.label + ": " + a.target);
      idx.ok = false;
    }
  }
  return idx;
}

}  // namespace

ValidationReport GentleQuiver::validate_gentle(const QuiverSpec& spec) {
  ValidationReport report;
  if (spec.vertices.empty()) {
    report.add("empty-quiver", "a quiver needs at least one vertex", spec.name);
    return report;
  }
  Indexed idx = index_names(spec, &report);
  if (!idx.ok) return report;

  int n = int(spec.vertices.size());
  int m = int(spec.arrows.size());
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const auto& a : spec.arrows) {
    outdeg[idx.vertex[a.source]]++;
    indeg[idx.vertex[a.target]]++;
  }
  for (int v = 0; v < n; ++v) {
    if (indeg[v] > 2)
      report.add("in-degree", "in-degree > 2 at vertex " + spec.vertices[v], spec.vertices[v]);
    if (outdeg[v] > 2)
      report.add("out-degree", "out-degree > 2 at vertex " + spec.vertices[v], spec.vertices[v]);
  }

  std::set<std::pair<int, int>> ideal;
  for (const auto& [first, second] : spec.relations) {
    auto it1 = idx.arrow.find(first), it2 = idx.arrow.find(second);
    if (it1 == idx.arrow.end() || it2 == idx.arrow.end()) {
      report.add("unknown-arrow", "relation names an undeclared arrow", first + " " + second);
      continue;
    }
    int u = it1->second, v = it2->second;
    const auto& au = spec.arrows[size_t(u)];
    const auto& av = spec.arrows[size_t(v)];
    if (au.target != av.source) {
      report.add("non-composable-relation",
                 "relation pair does not compose: target(" + first + ") != source(" + second + ")",
                 first + " " + second);
      continue;
    }
    if (!ideal.insert({u, v}).second)
      report.add("duplicate-relation", "relation pair listed twice", first + " " + second);
  }

  // Unique-continuation conditions, per arrow.
  for (int a = 0; a < m; ++a) {
    const auto& aa = spec.arrows[size_t(a)];
    int cont_in_ideal = 0, cont_plain = 0, pred_in_ideal = 0, pred_plain = 0;
    for (int b = 0; b < m; ++b) {
      const auto& ab = spec.arrows[size_t(b)];
      if (aa.target == ab.source) (ideal.count({a, b}) ? cont_in_ideal : cont_plain)++;
      if (ab.target == aa.source) (ideal.count({b, a}) ? pred_in_ideal : pred_plain)++;
    }
    if (cont_in_ideal > 1)
      report.add("continuation-in-ideal", "arrow " + aa.label + " has two relation continuations",
                 aa.label);
    if (cont_plain > 1)
      report.add("continuation-plain",
                 "arrow " + aa.label + " has two relation-free continuations", aa.label);
    if (pred_in_ideal > 1)
      report.add("predecessor-in-ideal", "arrow " + aa.label + " has two relation predecessors",
                 aa.label);
    if (pred_plain > 1)
      report.add("predecessor-plain",
                 "arrow " + aa.label + " has two relation-free predecessors", aa.label);
  }

  // Connectivity of the underlying graph.
  if (n > 1) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : spec.arrows) {
      int s = idx.vertex[a.source], t = idx.vertex[a.target];
      adj[size_t(s)].push_back(t);
      adj[size_t(t)].push_back(s);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[size_t(v)])
        if (!seen[size_t(w)]) {
          seen[size_t(w)] = true;
          stack.push_back(w);
        }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[size_t(v)]) {
        report.add("disconnected", "vertex " + spec.vertices[size_t(v)] +
                                       " is not connected to " + spec.vertices[0],
                   spec.vertices[size_t(v)]);
        break;
      }
  }
  return report;
}

GentleQuiver GentleQuiver::from_spec(const QuiverSpec& spec) {
  ValidationReport report = validate_gentle(spec);
  if (!report.ok) {
    std::string what = "not a gentle quiver:";
    for (const auto& v : report.violations) what += " [" + v.rule + "] " + v.detail + ";";
    fail(Err::Semantic, what);
  }
  GentleQuiver q;
  q.name_ = spec.name;
  q.vertex_names_ = spec.vertices;
  for (size_t i = 0; i < spec.vertices.size(); ++i)
    q.vertex_by_name_[spec.vertices[i]] = int(i);
  for (const auto& a : spec.arrows) {
    Arrow arr;
    arr.label = a.label;
    arr.source = q.vertex_by_name_[a.source];
    arr.target = q.vertex_by_name_[a.target];
    q.arrow_by_label_[a.label] = int(q.arrows_.size());
    q.arrows_.push_back(arr);
  }
  for (const auto& [first, second] : spec.relations)
    q.relations_.push_back({q.arrow_by_label_[first], q.arrow_by_label_[second]});
  std::sort(q.relations_.begin(), q.relations_.end());

  q.out_.assign(q.vertex_names_.size(), {});
  q.in_.assign(q.vertex_names_.size(), {});
  for (size_t a = 0; a < q.arrows_.size(); ++a) {
    q.out_[size_t(q.arrows_[a].source)].push_back(int(a));
    q.in_[size_t(q.arrows_[a].target)].push_back(int(a));
  }

  q.label_rank_.resize(q.arrows_.size());
  std::vector<int> order(q.arrows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return q.arrows_[size_t(a)].label < q.arrows_[size_t(b)].label;
  });
  for (size_t r = 0; r < order.size(); ++r) q.label_rank_[size_t(order[r])] = int(r);

  q.vertex_rank_.resize(q.vertex_names_.size());
  std::vector<int> vorder(q.vertex_names_.size());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) {
    return q.vertex_names_[size_t(a)] < q.vertex_names_[size_t(b)];
  });
  for (size_t r = 0; r < vorder.size(); ++r) q.vertex_rank_[size_t(vorder[r])] = int(r);
  return q;
}

std::optional<int> GentleQuiver::vertex_index(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> GentleQuiver::arrow_index(const std::string& label) const {
  auto it = arrow_by_label_.find(label);
  if (it == arrow_by_label_.end()) return std::nullopt;
  return it->second;
}

bool GentleQuiver::in_ideal(int u, int v) const {
  return std::binary_search(relations_.begin(), relations_.end(), std::make_pair(u, v));
}

QuiverSpec GentleQuiver::to_spec() const {
  QuiverSpec spec;
  spec.name = name_;
  spec.vertices = vertex_names_;
  for (const auto& a : arrows_)
    spec.arrows.push_back({a.label, vertex_names_[size_t(a.source)], vertex_names_[size_t(a.target)]});
  for (const auto& [u, v] : relations_)
    spec.relations.push_back({arrows_[size_t(u)].label, arrows_[size_t(v)].label});
  return spec;
}

ValidationReport check_admissible(const GentleQuiver& q) {
  ValidationReport report;
  int m = q.arrow_count();
  // Arrow graph: a -> b when traversing a then b stays out of I.
  auto next = std::vector<std::vector<int>>(size_t(m));
  for (int a = 0; a < m; ++a)
    for (int b : q.arrows_out(q.arrow(a).target))
      if (!q.in_ideal(a, b)) next[size_t(a)].push_back(b);

  // DFS cycle detection with an explicit stack to recover the cycle.
  std::vector<int> state(size_t(m), 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(size_t(m), -1);
  for (int start = 0; start < m; ++start) {
    if (state[size_t(start)] != 0) continue;
    std::vector<std::pair<int, size_t>> stack = {{start, 0}};
    state[size_t(start)] = 1;
    while (!stack.empty()) {
      auto& [a, i] = stack.back();
      if (i < next[size_t(a)].size()) {
        int b = next[size_t(a)][i++];
        if (state[size_t(b)] == 0) {
          state[size_t(b)] = 1;
          parent[size_t(b)] = a;
          stack.push_back({b, 0});
        } else if (state[size_t(b)] == 1) {
          std::vector<int> cycle = {b};
          for (int c = a; c != b; c = parent[size_t(c)]) cycle.push_back(c);
          std::reverse(cycle.begin() + 1, cycle.end());
          std::string witness;
          for (int c : cycle) witness += (witness.empty() ? "" : " ") + q.arrow(c).label;
          report.add("relation-free-cycle",
                     "oriented cycle avoiding I gives arbitrarily long paths: " + witness, witness);
          return report;
        }
      } else {
        state[size_t(a)] = 2;
        stack.pop_back();
      }
    }
  }
  return report;
}

std::string path_display(const GentleQuiver& q, const AlgebraPath& p) {
  if (p.arrows.empty()) return "e_" + q.vertex_name(p.base);
  bool single_char = true;
  for (const auto& a : q.arrows())
    if (a.label.size() != 1) single_char = false;
  std::string s;
  // Function-composition order: last traversed arrow first.
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty() && !single_char) s += "*";
    s += q.arrow(*it).label;
  }
  return s;
}

std::vector<AlgebraPath> algebra_basis(const GentleQuiver& q) {
  std::vector<AlgebraPath> result;
  for (int v = 0; v < q.vertex_count(); ++v) result.push_back({v, {}});
  std::vector<AlgebraPath> frontier = result;
  while (!frontier.empty()) {
    std::vector<AlgebraPath> longer;
    for (const auto& p : frontier) {
      int tail_vertex = p.arrows.empty() ? p.base : q.arrow(p.arrows.back()).target;
      for (int b : q.arrows_out(tail_vertex)) {
        if (!p.arrows.empty() && q.in_ideal(p.arrows.back(), b)) continue;
        AlgebraPath ext = p;
        ext.arrows.push_back(b);
        longer.push_back(std::move(ext));
      }
    }
    for (const auto& p : longer) result.push_back(p);
    frontier = std::move(longer);
    if (result.size() > 100000) fail(Err::Internal, "path explosion; quiver not admissible?");
  }
  std::sort(result.begin(), result.end(), [&](const AlgebraPath& a, const AlgebraPath& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    return path_display(q, a) < path_display(q, b);
  });
  return result;
}

}  // namespace gentle
