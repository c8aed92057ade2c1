#ifndef GENTLE_QUIVER_HPP
#define GENTLE_QUIVER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/error.hpp"

namespace gentle {

// Raw, unvalidated quiver data as it comes out of the parser or a builder.
struct QuiverSpec {
  std::string name;
  std::vector<std::string> vertices;
  struct ArrowSpec {
    std::string label, source, target;
  };
  std::vector<ArrowSpec> arrows;
  // (first, second): the path traversing `first` then `second` lies in I.
  std::vector<std::pair<std::string, std::string>> relations;
};

struct Violation {
  std::string rule;     // stable identifier, e.g. "out-degree"
  std::string detail;   // human-readable
  std::string subject;  // offending vertex/arrow/pair
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string rule, std::string detail, std::string subject) {
    ok = false;
    violations.push_back({std::move(rule), std::move(detail), std::move(subject)});
  }
};

struct Arrow {
  std::string label;
  int source = -1;
  int target = -1;
};

// A validated gentle quiver. Immutable after construction; all query methods
// are const and safe to share across threads.
class GentleQuiver {
 public:
  // Validation of the gentleness axioms on raw data. Never throws on
  // well-formed input; all problems are reported as violations.
  static ValidationReport validate_gentle(const QuiverSpec& spec);

  // Requires validate_gentle to pass. Throws GentleError(Semantic) otherwise.
  static GentleQuiver from_spec(const QuiverSpec& spec);

  const std::string& name() const { return name_; }
  int vertex_count() const { return int(vertex_names_.size()); }
  int arrow_count() const { return int(arrows_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_[size_t(a)]; }
  const std::string& vertex_name(int v) const { return vertex_names_[size_t(v)]; }

  std::optional<int> vertex_index(const std::string& name) const;
  std::optional<int> arrow_index(const std::string& label) const;

  // (u, v) in I  <=>  traversing u then v is a forbidden path.
  bool in_ideal(int u, int v) const;
  const std::vector<std::pair<int, int>>& relations() const { return relations_; }

  const std::vector<int>& arrows_out(int v) const { return out_[size_t(v)]; }
  const std::vector<int>& arrows_in(int v) const { return in_[size_t(v)]; }

  // Rank of an arrow in the label ordering; used for canonical forms.
  int label_rank(int a) const { return label_rank_[size_t(a)]; }
  int vertex_rank(int v) const { return vertex_rank_[size_t(v)]; }

  QuiverSpec to_spec() const;

 private:
  std::string name_;
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::vector<std::pair<int, int>> relations_;  // sorted pairs of arrow indices
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> label_rank_, vertex_rank_;
  std::map<std::string, int> vertex_by_name_, arrow_by_label_;
};

// Finite-dimensionality of the quotient algebra: no oriented cycle all of
// whose consecutive arrow pairs avoid I. The violation carries such a cycle.
ValidationReport check_admissible(const GentleQuiver& q);

// A path of the algebra basis: a lazy path at `base` or a chain of arrows in
// traversal order.
struct AlgebraPath {
  int base = -1;            // start vertex
  std::vector<int> arrows;  // traversal order
};

// All paths avoiding I (including lazy ones), ordered by length then by the
// displayed name. Requires a valid, admissible quiver.
std::vector<AlgebraPath> algebra_basis(const GentleQuiver& q);
std::string path_display(const GentleQuiver& q, const AlgebraPath& p);

}  // namespace gentle

#endif
