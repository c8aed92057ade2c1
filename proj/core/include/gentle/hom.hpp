#ifndef GENTLE_HOM_HPP
#define GENTLE_HOM_HPP

#include <string>
#include <vector>

#include "gentle/rep.hpp"

namespace gentle {

// A morphism of representations: one matrix per vertex, commuting with all
// arrow maps.
struct Morphism {
  std::vector<FqMat> comp;  // comp[v]: X_v -> Y_v
};

bool is_morphism(const Representation& x, const Representation& y, const Morphism& phi);

// Graph-map count: pairs of a substring occurrence on the top of rho and one
// at the bottom of rho_prime carrying the same word up to inversion.
int hom_dim_combinatorial(const GentleQuiver& q, const StringWord& rho,
                          const StringWord& rho_prime);

// Exact kernel of the commutation system Y_a phi_s = phi_t X_a.
std::vector<Morphism> hom_space(const Representation& x, const Representation& y);

// The same system solved over the rationals on the canonical integer lifts of
// the matrices; used as an independent cross-check of dimensions.
size_t hom_dim_rational(const Representation& x, const Representation& y);

enum class IsoVerdict { Iso, NotIso, Unknown };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Unknown;
  std::string detail;
};

// Isomorphism test. With two ledgers this is the classification rule on
// multisets of canonical string/band names. Without, it falls back to
// isomorphism invariants and, when the support admits no band, to solving the
// graph-map counting system for the summand multiplicities.
IsoResult decompose_ledgered(const Representation& x, const Representation& y);

}  // namespace gentle

#endif
