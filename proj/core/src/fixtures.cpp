#include "knothodge/fixtures.hpp"

#include <array>
#include <stdexcept>

namespace knothodge {

namespace {

constexpr int rows = 23;
constexpr int cols = 23;
using Grid = std::array<std::array<int, cols>, rows>;

// Row j - 1, column i - 1; blank cells are 0.
constexpr Grid homotopy_odd = {{
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 2, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 2, -3, 2, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 3, -4, 4, -3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 4, -6, 7, -6, 4, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 5, -10, 12, -11, 9, -5, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 5, -14, 20, -22, 19, -12, 6, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 7, -17, 30, -39, 38, -29, 16, -6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 5, -22, 45, -66, 72, -60, 40, -20, 7, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 4, -25, 60, -104, 133, -125, 91, -52, 24, -9, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 2, -22, 79, -155, 221, -244, 203, -130, 68, -30, 11, -3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 3, -17, 81, -217, 368, -445, 413, -308, 186, -91, 37, -12, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-4, 3, -12, 83, -275, 549, -769, 823, -685, 455, -255, 121, -45, 13, -3, 1, 0, 0, 0, 0, 0, 0, 0},
    {-18, 19, -12, 79, -307, 751, -1258, 1528, -1422, 1071, -672, 351, -152, 53, -14, 3, 0, 0, 0, 0, 0, 0, 0},
    {-20, 59, -83, 65, -257, 964, -1943, 2651, -2781, 2369, -1666, 969, -465, 186, -62, 16, -3, 1, 0, 0, 0, 0, 0},
    {-13, 124, -188, 59, -298, 1234, -2646, 4224, -5203, 4983, -3850, 2486, -1353, 613, -228, 70, -18, 4, 0, 0, 0, 0, 0},
    {12, 115, -225, 442, -807, 1202, -3068, 6527, -9208, 9707, -8379, 6075, -3672, 1847, -781, 278, -82, 20, -4, 1, 0, 0, 0},
    {158, -281, -607, 1998, -1171, 378, -4068, 9921, -14656, 17558, -17437, 14053, -9307, 5204, -2483, 999, -336, 95, -22, 4, 0, 0, 0},
    {638, -457, -2294, 2080, 613, 3026, -8531, 11888, -20247, 30923, -34589, 30247, -22186, 13900, -7367, 3287, -1248, 406, -110, 24, -4, 1, 0},
    {480, 1706, 967, -7614, -6392, 20835, -8447, 5974, -31163, 54026, -61977, 60522, -50681, 35146, -20337, 10068, -4302, 1570, -484, 124, -25, 4, 0},
}};

constexpr Grid homology_odd = {{
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, -3, 3, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 3, -4, 3, -3, 3, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 3, -8, 8, -8, 6, -3, 3, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 6, -11, 13, -17, 13, -8, 6, -3, 3, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 7, -16, 25, -30, 25, -25, 18, -8, 6, -3, 3, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-2, 10, -25, 41, -55, 57, -51, 34, -25, 18, -8, 6, -3, 3, -1, 1, 0, 1, 0, 0, 0, 0, 0},
    {-1, 11, -36, 67, -95, 108, -107, 86, -65, 41, -25, 18, -8, 6, -3, 3, -1, 1, 0, 1, 0, 0, 0},
    {-2, 15, -45, 101, -166, 207, -217, 188, -150, 102, -65, 41, -25, 18, -8, 6, -3, 3, -1, 1, 0, 1, 0},
    {0, 14, -61, 153, -267, 367, -422, 405, -340, 244, -173, 113, -65, 41, -25, 18, -8, 6, -3, 3, -1, 1, 0},
    {0, 15, -74, 210, -421, 648, -795, 820, -743, 584, -422, 271, -173, 113, -65, 41, -25, 18, -8, 6, -3, 3, -1},
    {-1, 12, -83, 290, -633, 1063, -1449, 1629, -1557, 1307, -1003, 692, -460, 286, -173, 113, -65, 41, -25, 18, -8, 6, -3},
    {-1, 13, -88, 355, -919, 1730, -2529, 3065, -3190, 2882, -2308, 1673, -1152, 736, -460, 286, -173, 113, -65, 41, -25, 18, -8},
    {-4, 14, -97, 435, -1256, 2628, -4264, 5662, -6288, 6027, -5164, 3991, -2826, 1862, -1211, 758, -460, 286, -173, 113, -65, 41, -25},
    {-18, 29, -105, 510, -1646, 3858, -6917, 9960, -11959, 12375, -11226, 9101, -6791, 4701, -3082, 1930, -1211, 758, -460, 286, -173, 113, -65},
    {-20, 72, -205, 600, -2016, 5418, -10793, 16931, -21970, 24380, -23612, 20356, -15886, 11412, -7761, 5026, -3172, 1960, -1211, 758, -460, 286, -173},
    {-13, 155, -348, 726, -2645, 7467, -15913, 27513, -39089, 46618, -48051, 43930, -36222, 27330, -19176, 12706, -8187, 5131, -3172, 1960, -1211, 758, -460},
    {12, 164, -461, 1415, -3897, 9561, -22616, 43567, -66750, 85597, -94842, 92332, -80218, 63394, -46401, 31900, -20912, 13236, -8322, 5173, -3172, 1960, -1211},
    {158, -217, -956, 3381, -5196, 11975, -32592, 66403, -109135, 152157, -181121, 187515, -172652, 143782, -109800, 78122, -52716, 34181, -21600, 13392, -8322, 5173, -3172},
    {638, -391, -2652, 3573, -5265, 20670, -48875, 94966, -171890, 262183, -334105, 368926, -360657, 316730, -253621, 187909, -130721, 86694, -55715, 35034, -21798, 13448, -8322},
    {480, 1619, 1446, -5648, -17669, 45575, -61584, 130666, -271978, 436507, -591664, 702289, -731813, 678875, -570539, 441262, -318509, 217419, -142337, 90568, -56797, 35263, -21798},
}};

constexpr Grid homotopy_even = {{
    {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 1, -2, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 2, -1, 0, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 0, 3, -2, 0, 3, -4, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, -3, 1, 3, -6, 5, -1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 0, 4, -6, 4, 2, -6, 5, -3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {3, -2, -3, 12, -10, -6, 15, -13, 5, 1, -2, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 3, -13, 8, 10, -20, 19, -8, -4, 10, -8, 4, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 5, -15, 5, 23, -36, 23, 11, -32, 25, -11, 1, 3, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-7, 18, -9, -30, 59, -38, -21, 68, -59, 17, 11, -16, 11, -5, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-14, 19, 23, -82, 64, 34, -100, 96, -43, -21, 56, -49, 21, -2, -3, 2, -1, 0, 0, 0, 0, 0, 0},
    {-16, -1, 52, -120, 78, 152, -268, 122, 85, -168, 126, -45, -12, 26, -16, 6, -1, 0, 0, 0, 0, 0, 0},
    {-12, -88, 176, -8, -186, 290, -265, -30, 346, -339, 100, 76, -108, 75, -33, 5, 3, -2, 0, 0, 0, 0, 0},
    {7, -167, 393, 145, -937, 558, 327, -611, 531, -312, -98, 363, -294, 101, 17, -40, 23, -7, 1, 0, 0, 0, 0},
    {168, -37, 13, -108, -1151, 1472, 1007, -2404, 871, 718, -984, 667, -238, -105, 206, -132, 45, -6, -3, 2, -1, 0, 0},
    {638, -241, -2676, 1806, 2506, -1378, -349, -2171, 1510, 2159, -2672, 707, 580, -748, 492, -187, -6, 53, -31, 9, -1, 0, 0},
    {468, -2644, -2607, 12686, 1016, -18755, 5351, 8867, -4274, 1079, -2353, 228, 2389, -2042, 537, 261, -351, 201, -66, 8, 3, -2, 0},
}};

constexpr Grid homology_even = {{
    {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, -1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, -1, 2, -2, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, -1, 1, -2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -3, 2, 1, -2, 2, -2, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 1, 0, -3, 5, -5, 3, -2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 3, -2, 4, -7, 4, 1, -3, 2, -2, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 2, 3, -10, 6, 3, -10, 11, -7, 4, -2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, -3, 3, 1, -8, 14, -12, 12, -11, 4, 1, -3, 2, -2, 0, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, -2, 3, 1, -11, 21, -23, 6, 11, -18, 15, -7, 4, -2, 2, 0, 0, 1, 0, 0, 0, 0, 0},
    {3, -6, 3, 20, -33, 14, 15, -36, 41, -28, 19, -13, 3, 1, -3, 2, -2, 0, -1, 0, 0, 0, 0},
    {0, 4, -16, 15, -5, -16, 45, -59, 51, -30, 0, 19, -22, 17, -7, 4, -2, 2, 0, 0, 1, 0, 0},
    {0, 2, -20, 33, 3, -60, 105, -83, 2, 65, -88, 72, -38, 20, -14, 3, 1, -3, 2, -2, 0, -1, 0},
    {-7, 25, -27, -11, 88, -139, 67, 60, -147, 165, -127, 75, -30, -9, 25, -22, 17, -7, 4, -2, 2, 0, 0},
    {-14, 22, 10, -86, 126, -74, -33, 190, -295, 257, -91, -79, 148, -135, 90, -42, 19, -14, 3, 1, -3, 2, -2},
    {-16, 20, 31, -188, 266, 29, -425, 526, -326, -42, 332, -413, 330, -188, 80, -22, -13, 27, -22, 17, -7, 4, -2},
    {-12, -84, 216, -136, -38, 368, -761, 556, 184, -721, 814, -622, 318, -4, -193, 219, -161, 94, -43, 19, -14, 3, 1},
    {7, -165, 519, -77, -991, 1031, -444, -27, 951, -1739, 1332, -232, -616, 871, -725, 452, -210, 73, -16, -13, 27, -22, 17},
    {168, -74, 245, -495, -1705, 3209, 117, -3475, 3050, -1416, -96, 1624, -2223, 1691, -832, 214, 141, -285, 255, -169, 93, -43, 19},
    {638, -425, -2710, 2145, 2011, 404, -1311, -5578, 6395, 632, -4769, 4616, -3318, 1372, 602, -1566, 1455, -944, 498, -209, 69, -13, -13},
    {468, -3290, -2544, 16300, -1620, -21938, 8761, 5388, 1424, 1676, -11716, 9157, -435, -4214, 4986, -3974, 2252, -794, 35, 259, -329, 263, -171},
}};

constexpr std::array<int, rows> homotopy_odd_totals = {1, 2, 2, 4, 6, 10, 18, 32, 56, 102, 186, 340, 630, 1170, 2182, 4096, 7710, 14560, 27594, 52452, 100736, 194066, 382844};
constexpr std::array<int, rows> homotopy_even_totals = {1, 1, 2, 0, 4, 2, 4, 8, 6, 16, 24, 32, 74, 108, 192, 370, 630, 1294, 2142, 4932, 10338, 20920, 66188};

// Columns i = 2, 4, ..., 12.
constexpr std::array<std::array<int, 6>, 12> chord_primitives = {{
    {1, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0},
    {2, 1, 0, 0, 0, 0},
    {2, 2, 1, 0, 0, 0},
    {3, 3, 2, 0, 0, 0},
    {4, 4, 3, 1, 0, 0},
    {5, 6, 5, 2, 0, 0},
    {6, 8, 8, 4, 1, 0},
    {8, 10, 11, 8, 2, 0},
    {9, 13, 15, 12, 5, 1},
}};
constexpr std::array<int, 12> chord_primitive_totals = {1, 1, 1, 2, 3, 5, 8, 12, 18, 27, 39, 55};

EulerTable from_grid(const Grid& grid, TableKind kind, Parity parity) {
  EulerTable table(kind, parity, rows);
  for (int j = 1; j <= rows; ++j) {
    for (int i = 1; i <= cols; ++i) table.set(i, j, grid[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]);
  }
  return table;
}

std::vector<Integer> to_integers(const std::array<int, rows>& values) {
  return {values.begin(), values.end()};
}

}  // namespace

EulerTable fixture_homotopy(Parity parity) {
  return from_grid(parity == Parity::odd ? homotopy_odd : homotopy_even, TableKind::homotopy, parity);
}

EulerTable fixture_homology(Parity parity) {
  return from_grid(parity == Parity::odd ? homology_odd : homology_even, TableKind::homology, parity);
}

std::vector<Integer> fixture_homotopy_abs_totals(Parity parity) {
  return to_integers(parity == Parity::odd ? homotopy_odd_totals : homotopy_even_totals);
}

EulerTable fixture_chord_primitives() {
  EulerTable table(TableKind::homotopy, Parity::odd, static_cast<int>(chord_primitives.size()));
  for (std::size_t r = 0; r < chord_primitives.size(); ++r) {
    for (std::size_t c = 0; c < chord_primitives[r].size(); ++c) {
      table.set(static_cast<int>(2 * c + 2), static_cast<int>(r + 1), chord_primitives[r][c]);
    }
  }
  return table;
}

std::vector<Integer> fixture_chord_primitive_totals() {
  return {chord_primitive_totals.begin(), chord_primitive_totals.end()};
}

std::vector<XPoly> fixture_expansion(Parity parity) {
  if (parity == Parity::odd) {
    return {XPoly(1), XPoly{0, 0, 1}, XPoly{0, -1, 1, 0, 1}, XPoly{0, -1, 1, -1, 1, 0, 1},
            XPoly{0, -1, 1, -3, 3, -1, 1, 0, 1}};
  }
  return {XPoly(1), XPoly{0, -1}, XPoly{0, 0, 0, 1}, XPoly{0, 1, -1, 0, -1}, XPoly{0, 0, -1, 1, 0, 0, 1}};
}

std::vector<SymmetryFixture> fixture_symmetry_graphs() {
  return {
      {HalfEdgeGraph::parse("i=2 v=4 | 0>2 2>3 2>3 3>4 4>5 4>5 5>1"), 8},
      {HalfEdgeGraph::parse("i=2 v=4 | 0>2 1>3 2>4 2>5 3>4 3>5 4>5"), 4},
      {HalfEdgeGraph::parse("i=2 v=4 | 0>2 1>3 2>3 2>4 3>5 4>5 4>5"), 4},
  };
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  for (Parity p : {Parity::odd, Parity::even}) {
    const std::string tag(to_string(p));
    out.push_back({"homotopy-" + tag, "homotopy Euler characteristics, " + tag + " d, j <= 23, i <= 23",
                   fixture_homotopy(p)});
    out.push_back({"homology-" + tag, "homology Euler characteristics, " + tag + " d, j <= 23, i <= 23",
                   fixture_homology(p)});
    out.push_back({"homotopy-totals-" + tag, "row totals sum_i |chi^pi_ij| over i <= 23, " + tag + " d",
                   fixture_homotopy_abs_totals(p)});
    out.push_back({"expansion-" + tag, "F(x,u) through u^4, " + tag + " d", fixture_expansion(p)});
  }
  out.push_back({"chord-primitives", "ranks of chord-diagram primitives, j <= 12, i even <= 12",
                 fixture_chord_primitives()});
  out.push_back({"chord-primitive-totals", "row totals of the chord-diagram primitive ranks",
                 fixture_chord_primitive_totals()});
  return out;
}

const Fixture& fixture(std::string_view id) {
  static const std::vector<Fixture> catalog = all_fixtures();
  for (const auto& f : catalog) {
    if (f.id == id) return f;
  }
  throw std::out_of_range("unknown fixture '" + std::string(id) + "'");
}

}  // namespace knothodge
