#pragma once

// Built-in groups: S4 on 4 points, D8 x A4 on 8 + 12 points, and a catalog of
// small (G, P, p) instances.

#include <string>
#include <vector>

#include "scott_brauer/field.hpp"
#include "scott_brauer/permgroup.hpp"

namespace sb::fixtures {

Group symmetric_group(std::size_t n);
Group alternating_group(std::size_t n);
Group cyclic_group(std::size_t n);
Group dihedral_group(std::size_t n);  ///< order 2n, on n points

/// S4 on {0,1,2,3} with generators (0 1), (0 1 2 3).
struct S4Data {
  Group g;
  Group p;   ///< O_2(S4)
  Group a4;  ///< the stabilizer of the Scott module Ind_{A4}^{S4} k
};
S4Data s4();

/// D8 = <a,y,z | a^2=y^2=z^2=1, [a,z]=[y,z]=1, [a,y]=z> acting regularly on
/// points 0..7 and A4 = <t,b,c | t^3=b^2=c^2=1, [b,c]=1, b^t=c, c^t=bc> acting
/// regularly on points 8..19. The relations are checked on construction.
struct D8xA4 {
  Group g;  ///< generators a, y, z, t, b, c in that order
  Perm a, y, z, t, b, c;
  Group d8, a4;
};
D8xA4 d8_x_a4();

/// x = ab, R = <y,z>, P = <y,z,x>, Q = <x,z>.
struct Example34 {
  D8xA4 base;
  Perm x;
  Group r, p, q;
};
Example34 example_3_4();

/// D = <a,y,z>, P = D x <b>, R = D.
struct Example35 {
  D8xA4 base;
  Group d, p, r;
};
Example35 example_3_5();

struct CatalogEntry {
  std::string name;
  Group g;
  Group p;
  unsigned prime;
};
/// (G, P, p) instances with |G| <= 200 and |P| <= 16 for p = 2 and p = 3.
std::vector<CatalogEntry> bi_catalog();

}  // namespace sb::fixtures
