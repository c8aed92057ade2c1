#include "gentle/fixtures.hpp"

#include <map>

#include "gentle/quiver_io.hpp"

namespace gentle {

namespace {

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = {
      {"a2",
       "quiver a2\n"
       "vertex 1 2\n"
       "arrow a: 1 -> 2\n"},
      {"firstgentle",
       "quiver firstgentle\n"
       "vertex 1 2 3\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 3\n"
       "rel a b\n"},
      {"gentle8",
       "quiver gentle8\n"
       "vertex 1 2 3 4 5 6 7 8\n"
       "arrow a: 7 -> 1\n"
       "arrow b: 2 -> 7\n"
       "arrow c: 8 -> 3\n"
       "arrow d: 4 -> 8\n"
       "arrow e: 8 -> 5\n"
       "arrow f: 6 -> 7\n"
       "arrow g: 7 -> 8\n"
       "rel f a\n"
       "rel b g\n"
       "rel g c\n"
       "rel d e\n"},
      {"stringex10",
       "quiver stringex10\n"
       "vertex 1 2 3 4 5 6 7 8 9 10\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 3\n"
       "arrow c: 4 -> 2\n"
       "arrow d: 5 -> 4\n"
       "arrow e: 6 -> 4\n"
       "arrow f: 6 -> 7\n"
       "arrow g: 8 -> 6\n"
       "arrow h: 9 -> 6\n"
       "arrow i: 7 -> 5\n"
       "arrow j: 7 -> 10\n"
       "rel a b\n"
       "rel d c\n"
       "rel i d\n"
       "rel f j\n"
       "rel g e\n"
       "rel h f\n"},
      {"stringrepex",
       "quiver stringrepex\n"
       "vertex 1 2 3\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 1 -> 2\n"
       "arrow c: 2 -> 3\n"
       "arrow d: 2 -> 3\n"
       "rel a c\n"
       "rel b d\n"},
      {"bandex",
       "quiver bandex\n"
       "vertex 1 2 3\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 1 -> 2\n"
       "arrow c: 2 -> 3\n"
       "arrow d: 2 -> 3\n"
       "rel a c\n"
       "rel b d\n"},
      {"morphex",
       "quiver morphex\n"
       "vertex 1 2 3 4\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 3\n"
       "arrow c: 4 -> 3\n"
       "rel a b\n"},
      {"jrex1",
       "quiver jrex1\n"
       "vertex 1 2 3 4\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 4\n"
       "arrow c: 3 -> 2\n"
       "rel c b\n"},
      {"kronecker",
       "quiver kronecker\n"
       "vertex 1 2\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 1 -> 2\n"},
      {"cjrneed1",
       "quiver cjrneed1\n"
       "vertex 1 2 3\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 3\n"
       "arrow c: 3 -> 1\n"
       "rel a b\n"
       "rel b c\n"
       "rel c a\n"},
      {"minnot1",
       "quiver minnot1\n"
       "vertex 1 2 3\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 1 -> 3\n"
       "arrow c: 2 -> 3\n"
       "rel a c\n"},
      {"minnot2",
       "quiver minnot2\n"
       "vertex 1 2 3\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 3\n"
       "arrow c: 2 -> 3\n"
       "rel a b\n"},
      {"lambda3",
       "quiver lambda3\n"
       "vertex 1 2 3\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 3 -> 2\n"},
  };
  return t;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : table()) names.push_back(name);
  return names;
}

const std::string& fixture_text(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) fail(Err::Semantic, "unknown fixture '" + name + "'");
  return it->second;
}

GentleQuiver fixture_quiver(const std::string& name) {
  return parse_quiver(fixture_text(name));
}

}  // namespace gentle
