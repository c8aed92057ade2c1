#ifndef GENTLE_RECOVERABILITY_HPP
#define GENTLE_RECOVERABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "gentle/jordan.hpp"

namespace gentle {

// Conditions on a vertex m. The chain i => istar => o => minuscule always
// holds; when o fails, i and istar are reported false through the chain and
// iib is reported false as not applicable.
struct ConditionFlags {
  bool minuscule = false, o = false, i = false, istar = false, iia = false, iib = false;
  std::string minuscule_detail, o_detail, i_detail, istar_detail, iia_detail, iib_detail;
};

struct AnSubquiver {
  std::vector<int> vertices;
  std::vector<int> arrows;
};

struct AnalysisReport {
  int m = -1;
  ConditionFlags flags;
  bool jr = false, cjr = false;
  std::optional<AnSubquiver> an_reduction;  // support of the unique maximal string
  bool sigma_complete = false;
  std::vector<StringWord> sigma;  // strings through m, canonical (complete case)
};

ConditionFlags condition_flags(const GentleQuiver& q, int m);
AnalysisReport decide(const GentleQuiver& q, int m);

// Counterexample certificate. JrPair: two non-isomorphic modules in the
// subcategory at m with equal generic Jordan data. CjrRep: a module X with
// zero map on the offending arrow plus a representation W compatible with
// GenJF(X) whose offending map is nonzero.
struct Witness {
  enum class Kind { JrPair, CjrRep };
  Kind kind = Kind::JrPair;
  int m = -1;
  Representation x;
  Representation y;  // second module, or W in the CjrRep case
  std::optional<Endo> w_endo;
  int offending_arrow = -1;
  std::string construction;
};

Witness find_witness(const GentleQuiver& q, int m, const AnalysisReport& report, Fq field,
                     const OracleOptions& opts = {});

struct TranscriptLine {
  std::string check;
  bool ok = false;
  std::string detail;
};

struct Transcript {
  bool ok = true;
  std::vector<TranscriptLine> lines;
  std::string shared_jf;
  std::string engine_x, engine_y;

  void add(const std::string& check, bool passed, const std::string& detail = "") {
    lines.push_back({check, passed, detail});
    if (!passed) ok = false;
  }
};

Transcript verify_witness(const GentleQuiver& q, const Witness& w, const OracleOptions& opts = {});

struct RecoverOutcome {
  enum class Status { Ok, NoSolution, NotJordanRecoverable, AmbiguityBug };
  Status status = Status::NoSolution;
  std::optional<Representation> rep;
  std::string detail;
};

// Reconstruction of the unique module in the subcategory at m with the given
// generic Jordan data, wherever the subcategory is Jordan recoverable.
RecoverOutcome recover(const GentleQuiver& q, int m, const JordanFormData& target, Fq field,
                       const OracleOptions& opts = {});

struct RandomQuiverOptions {
  int max_vertices = 6;
  int max_arrows = 8;
  bool allow_loops = false;
};

// Seeded random gentle quiver (validated and admissible).
GentleQuiver random_gentle_quiver(uint64_t seed, const RandomQuiverOptions& opts = {});

}  // namespace gentle

#endif
