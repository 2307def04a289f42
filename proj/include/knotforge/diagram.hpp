#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotforge/gauss_code.hpp"
#include "knotforge/graph.hpp"

namespace knotforge {

class NonRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ports of a crossing as edge-end ids of the diagram map.
struct Ports {
  int over_in = 0;
  int over_out = 0;
  int under_in = 0;
  int under_out = 0;
};

// The 4-valent plane map of a knot diagram. Position p = 0..2n-1 is the p-th
// passage along the knot; arc k runs from position k to position k+1 (mod 2n)
// and is edge k of the map, with end a (2k) leaving the crossing at position k
// and end b (2k+1) entering the crossing at position k+1.
//
// Rotation at a crossing, counter-clockwise:
//   positive: under-in, over-in, under-out, over-out
//   negative: over-in, under-in, over-out, under-out
// Corner j of a crossing lies between rotation slots j and j+1, so corner 0 is
// between the two in-ports and corner 2 between the two out-ports.
class KnotDiagram {
 public:
  const SignedGaussCode& code() const { return code_; }
  int crossing_count() const { return static_cast<int>(sign_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  const PlaneGraph& map() const { return map_; }
  const FaceSet& faces() const { return faces_; }

  Sign sign(int c) const { return sign_[c]; }
  const Ports& ports(int c) const { return ports_[c]; }
  int crossing_at(int position) const { return crossing_at_[position]; }
  Strand strand_at(int position) const { return strand_at_[position]; }
  // The other passage through the same crossing.
  int partner(int position) const { return partner_[position]; }
  // End id in rotation slot j (0..3) of crossing c.
  int slot(int c, int j) const { return map_.rotation()[c][j]; }
  // Face holding corner j of crossing c.
  int corner_face(int c, int j) const { return faces_.face_of_dart[slot(c, j)]; }

  friend KnotDiagram from_gauss(const SignedGaussCode& code);

 private:
  SignedGaussCode code_;
  PlaneGraph map_;
  FaceSet faces_;
  std::vector<Sign> sign_;
  std::vector<Ports> ports_;
  std::vector<int> crossing_at_;
  std::vector<Strand> strand_at_;
  std::vector<int> partner_;
};

// Crossing ids are canonical labels minus one. Throws NonRealizable when face
// tracing does not give n + 2 faces.
KnotDiagram from_gauss(const SignedGaussCode& code);
KnotDiagram from_gauss(std::string_view text);

bool is_alternating(const KnotDiagram& d);
// No isolated chord in the Gauss diagram.
bool is_reduced(const KnotDiagram& d);

}  // namespace knotforge
