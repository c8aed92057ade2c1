#ifndef GENTLE_PARTITION_HPP
#define GENTLE_PARTITION_HPP

#include <string>
#include <vector>

#include "gentle/matrix.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

// Integer partition: weakly decreasing positive parts. The empty partition
// stands for the Jordan data of a zero space.
struct Partition {
  std::vector<int> parts;

  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  bool empty() const { return parts.empty(); }
  static Partition single(int n) {
    Partition p;
    if (n > 0) p.parts = {n};
    return p;
  }
  auto operator<=>(const Partition&) const = default;
};

Partition normalized_partition(std::vector<int> parts);
Partition conjugate(const Partition& p);

// Dominance: prefix sums compare, zero-padded. Sizes must agree.
bool dominance_leq(const Partition& a, const Partition& b);

// One partition per vertex; |at[q]| equals the dimension at q.
struct JordanFormData {
  std::vector<Partition> at;
  auto operator<=>(const JordanFormData&) const = default;
};

bool dominance_leq(const JordanFormData& a, const JordanFormData& b);

// Textual form: `<vertex>:[p1,p2,...]` segments joined by `;`; an empty
// partition prints as [0].
std::string jf_to_string(const GentleQuiver& q, const JordanFormData& jf);
JordanFormData jf_parse(const GentleQuiver& q, const std::string& text);

// Jordan block sizes of a nilpotent matrix, via the rank sequence of powers.
Partition jordan_type(const FqMat& n);

}  // namespace gentle

#endif
