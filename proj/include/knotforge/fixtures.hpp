#pragma once

#include <string>
#include <vector>

namespace knotforge {

struct Fixture {
  std::string name;
  bool prime = false;
  int genus = -1;  // knot genus, -1 when not recorded
  std::string gauss;
};

// Tab-separated: name, prime (yes/no), genus, Gauss code; '#' starts a comment.
std::vector<Fixture> load_fixtures(const std::string& path);
// KNOTFORGE_FIXTURES (a file, or a directory holding knots.tsv) if set,
// otherwise the corpus shipped with the sources.
std::string default_fixture_path();

}  // namespace knotforge
