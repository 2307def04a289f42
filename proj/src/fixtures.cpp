#include "knotforge/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef KNOTFORGE_DEFAULT_FIXTURES
#define KNOTFORGE_DEFAULT_FIXTURES "fixtures/knots.tsv"
#endif

namespace knotforge {

std::vector<Fixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  std::vector<Fixture> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Fixture f;
    std::string prime, genus;
    if (!std::getline(fields, f.name, '\t') || !std::getline(fields, prime, '\t') ||
        !std::getline(fields, genus, '\t') || !std::getline(fields, f.gauss)) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected four tab-separated fields");
    }
    f.prime = prime == "yes";
    f.genus = genus.empty() ? -1 : std::stoi(genus);
    out.push_back(std::move(f));
  }
  return out;
}

std::string default_fixture_path() {
  if (const char* env = std::getenv("KNOTFORGE_FIXTURES"); env && *env) {
    std::filesystem::path p(env);
    if (std::filesystem::is_directory(p)) p /= "knots.tsv";
    return p.string();
  }
  return KNOTFORGE_DEFAULT_FIXTURES;
}

}  // namespace knotforge
