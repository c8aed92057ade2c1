#ifndef GENTLE_JORDAN_HPP
#define GENTLE_JORDAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gentle/hom.hpp"
#include "gentle/partition.hpp"
#include "gentle/rep.hpp"

namespace gentle {

// An endomorphism-shaped tuple of square matrices, one per vertex.
struct Endo {
  std::vector<FqMat> comp;
};

std::vector<Endo> end_space(const Representation& x);
bool commutes_with_arrows(const Representation& x, const Endo& n);
bool is_nilpotent_endo(const Representation& x, const Endo& n);
JordanFormData jf_of_endo(const Representation& x, const Endo& n);

struct OracleOptions {
  uint64_t budget = uint64_t(1) << 20;  // max points for exhaustive mode
  uint64_t samples = 20000;             // draws in sampled mode
  uint64_t seed = 12345;
  int threads = 1;
  bool force_exhaustive = false;  // BudgetExceeded instead of sampling
};

struct OracleOutcome {
  bool exhaustive = false;
  // Dominance-maximal Jordan data seen, each with a witness endomorphism and
  // the first enumeration index attaining it.
  struct MaxEntry {
    JordanFormData jf;
    Endo witness;
    uint64_t first_index = 0;
  };
  std::vector<MaxEntry> maxima;
  uint64_t tried = 0;
  uint64_t nilpotent_found = 0;

  bool unique_max() const { return maxima.size() == 1; }
  const JordanFormData& jf() const { return maxima.front().jf; }
};

// Enumerates (or samples) the coefficient space of End(X) over F_p, filters
// nilpotent points and keeps the dominance-maximal Jordan data with
// witnesses. Any reported value is attained, hence a dominance lower bound
// for the generic Jordan form.
OracleOutcome genjf_oracle(const Representation& x, const OracleOptions& opts = {});

// Under (i*) and (ii)(a) at m, the generic Jordan form of a module built from
// strings through m is a single block of size dim X_q at every vertex.
JordanFormData genjf_structural(const Representation& x, int m);

// The explicit shift endomorphism through the total order on strings from m;
// nilpotent, commutes with all arrows, and attains genjf_structural.
Endo construct_shift_endo(const Representation& x, int m);

enum class GenjfEngine { Structural, OracleExhaustive, OracleSampled };
enum class Exactness { ProvenExact, ExhaustiveOverFp, SampledLowerBound };

struct GenjfResult {
  JordanFormData jf;
  GenjfEngine engine = GenjfEngine::OracleExhaustive;
  Exactness exactness = Exactness::ExhaustiveOverFp;
  std::optional<Endo> certificate;
};

std::string engine_name(GenjfEngine e);
std::string exactness_name(Exactness e);

// Dispatcher: structural + certificate when the vertex hint's preconditions
// verify, otherwise the oracle. Throws NoUniqueMaximum-style AmbiguityBug
// when the attained set has no dominance maximum (escalate the prime).
GenjfResult genjf(const Representation& x, std::optional<int> hint_vertex = std::nullopt,
                  const OracleOptions& opts = {});

// True when m satisfies (i*) and (ii)(a) and x is a ledgered sum of string
// modules all passing through m.
bool structural_applicable(const Representation& x, int m);

}  // namespace gentle

#endif
