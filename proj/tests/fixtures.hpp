#pragma once

#include <array>
#include <vector>
#include <string>

// Reference fixtures shared by the unit and acceptance suites.

namespace fixtures {

// Normalized commutators [O_a, O_b] over the ordered basis O_2..O_16,
// row-major; cells match q2lab::CommutatorCell::str().
inline const char* const kCommutatorRows[15] = {
    "0,0,0,i*O6,-i*O5,i*O8,-i*O7,0,0,0,0,i*O16,-i*O15,i*O14,-i*O13",
    "0,0,0,0,0,0,0,i*O10,-i*O9,i*O12,-i*O11,i*O15,-i*O16,-i*O13,i*O14",
    "0,0,0,i*O8,-i*O7,i/4*O6,-i/4*O5,i*O12,-i*O11,i/4*O10,-i/4*O9,0,0,0,0",
    "-i*O6,0,-i*O8,0,i*O2,0,i*O4,0,0,-i*O16,-i*O14,0,i*O12,0,i*O11",
    "i*O5,0,i*O7,-i*O2,0,-i*O4,0,0,0,i*O13,i*O15,-i*O11,0,-i*O12,0",
    "-i*O8,0,-i/4*O6,0,i*O4,0,i/4*O2,i*O15,-i*O13,0,0,i/4*O10,0,-i/4*O9,0",
    "i*O7,0,i/4*O5,-i*O4,0,-i/4*O2,0,i*O14,-i*O16,0,0,0,-i/4*O9,0,i/4*O10",
    "0,-i*O10,-i*O12,0,0,-i*O15,-i*O14,0,i*O3,0,i*O4,0,i*O8,i*O7,0",
    "0,i*O9,i*O11,0,0,i*O13,i*O16,-i*O3,0,-i*O4,0,-i*O7,0,0,-i*O8",
    "0,-i*O12,-i/4*O10,i*O16,-i*O13,0,0,0,i*O4,0,i/4*O3,i/4*O6,0,0,-i/4*O5",
    "0,i*O11,i/4*O9,i*O14,-i*O15,0,0,-i*O4,0,-i/4*O3,0,0,-i/4*O5,i/4*O6,0",
    "-i*O16,-i*O15,0,0,i*O11,-i/4*O10,0,0,i*O7,-i/4*O6,0,0,0,i/4*O3,i/4*O2",
    "i*O15,i*O16,0,-i*O12,0,0,i/4*O9,-i*O8,0,0,i/4*O5,0,0,-i/4*O2,-i/4*O3",
    "-i*O14,i*O13,0,0,i*O12,i/4*O9,0,-i*O7,0,0,-i/4*O6,-i/4*O3,i/4*O2,0,0",
    "i*O13,-i*O14,0,-i*O11,0,0,-i/4*O10,0,i*O8,i/4*O5,0,-i/4*O2,i/4*O3,0,0"};

// Quaternion group Q_8, elements ±(1, k, i, j) in the tabulated order.
inline const std::vector<std::string> kQ8Rows = {
    "1 k -1 -k i j -i -j",
    "k -1 -k 1 j -i -j i",
    "-1 -k 1 k -i -j i j",
    "-k 1 k -1 -j i j -i",
    "i -j -i j -1 k 1 -k",
    "j i -j -i -k -1 k 1",
    "-i j i -j 1 -k -1 k",
    "-j -i j i k 1 -k -1",
};

// Co-quaternion (dihedral) group, a = k, b = Ki, b² = 1, ab = -ba = Kj.
inline const std::vector<std::string> kCoquaternionRows = {
    "1 k -1 -k Ki Kj -Ki -Kj",
    "k -1 -k 1 Kj -Ki -Kj Ki",
    "-1 -k 1 k -Ki -Kj Ki Kj",
    "-k 1 k -1 -Kj Ki Kj -Ki",
    "Ki -Kj -Ki Kj 1 -k -1 k",
    "Kj Ki -Kj -Ki k 1 -k -1",
    "-Ki Kj Ki -Kj -1 k 1 -k",
    "-Kj -Ki Kj Ki -k -1 k 1",
};

// Complex quaternions ±(1, i, j, k, K, Ki, Kj, Kk), order 16.
inline const std::vector<std::string> kComplexQuaternionRows = {
    "1 k -1 -k K -K Kk -Kk i j -i -j Ki -Ki Kj -Kj",
    "k -1 -k 1 Kk -Kk -K K j -i -j i Kj -Kj -Ki Ki",
    "-1 -k 1 k -K K -Kk Kk -i -j i j -Ki Ki -Kj Kj",
    "-k 1 k -1 -Kk Kk K -K -j i j -i -Kj Kj Ki -Ki",
    "K Kk -K -Kk -1 1 -k k Ki Kj -Ki -Kj -i i -j j",
    "-K -Kk K Kk 1 -1 k -k -Ki -Kj Ki Kj i -i j -j",
    "Kk -K -Kk K -k k 1 -1 Kj -Ki -Kj Ki -j j i -i",
    "-Kk K Kk -K k -k -1 1 -Kj Ki Kj -Ki j -j -i i",
    "i -j -i j Ki -Ki -Kj Kj -1 k 1 -k -K K Kk -Kk",
    "j i -j -i Kj -Kj Ki -Ki -k -1 k 1 -Kk Kk -K K",
    "-i j i -j -Ki Ki Kj -Kj 1 -k -1 k K -K -Kk Kk",
    "-j -i j i -Kj Kj -Ki Ki k 1 -k -1 Kk -Kk K -K",
    "Ki -Kj -Ki Kj -i i j -j -K Kk K -Kk 1 -1 -k k",
    "-Ki Kj Ki -Kj i -i -j j K -Kk -K Kk -1 1 k -k",
    "Kj Ki -Kj -Ki -j j -i i -Kk -K Kk K k -k 1 -1",
    "-Kj -Ki Kj Ki j -j i -i Kk K -Kk -K -k k -1 1",
};

// Tabulated (2q, v, b, r) triple-system rows; 2q = 6 prints b = 641 while
// the counting formula yields 651.
struct DesignRow {
  int two_q;
  long long v, b, r;
};
inline const std::array<DesignRow, 7> kDesignRows = {{
    {1, 1, 0, 0},
    {2, 3, 1, 1},
    {3, 7, 7, 3},
    {4, 15, 35, 7},
    {5, 31, 155, 15},
    {6, 63, 641, 31},
    {7, 127, 2667, 63},
}};

}  // namespace fixtures
