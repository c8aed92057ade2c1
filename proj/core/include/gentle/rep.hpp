#ifndef GENTLE_REP_HPP
#define GENTLE_REP_HPP

#include <optional>
#include <string>
#include <vector>

#include "gentle/matrix.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// Identifies a basis vector of a representation: which summand it came from,
// the position inside the defining string/band word, and the band layer.
struct BasisLabel {
  int summand = 0;
  int position = 0;
  int layer = -1;  // -1 for string summands, 1..d for band summands
  bool operator==(const BasisLabel&) const = default;
};

struct LedgerEntry {
  bool band = false;
  StringWord word;          // canonical representative
  Fq::Elem lambda = 0;      // bands only, adjusted to the canonical word
  int d = 1;                // bands only
  bool operator==(const LedgerEntry&) const = default;
};

// A finite-dimensional representation over F_p: a space at each vertex and a
// matrix at each arrow, with X_v X_u = 0 for every (u, v) in I.
struct Representation {
  const GentleQuiver* quiver = nullptr;
  Fq field;
  std::vector<int> dims;                        // per vertex
  std::vector<FqMat> maps;                      // per arrow, dim(t) x dim(s)
  std::vector<std::vector<BasisLabel>> labels;  // per vertex
  std::optional<std::vector<LedgerEntry>> ledger;

  int dim(int v) const { return dims[size_t(v)]; }
  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
};

Representation string_module(const GentleQuiver& q, Fq field, const StringWord& rho);
// Band representation M(omega, lambda, d). The input band is canonicalized
// first; lambda is replaced by lambda^-1 when reaching the canonical word
// takes an inversion.
Representation band_module(const GentleQuiver& q, Fq field, const StringWord& omega,
                           Fq::Elem lambda, int d);
Representation zero_representation(const GentleQuiver& q, Fq field);
Representation direct_sum(const std::vector<Representation>& reps);
bool check_relations(const Representation& x);

std::vector<int> dim_vector(const Representation& x);

// Module expression grammar: sum of `M(<string literal>)[^k]` and
// `B(<string literal>; <lambda>; <d>)[^k]` terms, e.g. `M(a) + M(e_2)^2`.
Representation parse_module_expr(const GentleQuiver& q, Fq field, const std::string& text);
std::string module_expr(const Representation& x);
std::string ledger_entry_expr(const GentleQuiver& q, const LedgerEntry& e);

}  // namespace gentle

#endif
