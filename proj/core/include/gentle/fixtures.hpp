#ifndef GENTLE_FIXTURES_HPP
#define GENTLE_FIXTURES_HPP

#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

// Bundled quivers used by the self-test suite; the same texts ship as
// fixtures/*.quiver files.
std::vector<std::string> fixture_names();
const std::string& fixture_text(const std::string& name);
GentleQuiver fixture_quiver(const std::string& name);

}  // namespace gentle

#endif
