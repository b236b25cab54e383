#pragma once

// The symbolic parity table of C(2,2,5) frozen verbatim as the golden reference.
// A term {row, col} is s_{row,col}: bit `row` of information column `col`,
// where row 4 is the implicit parity-check bit s_{0,col}+...+s_{3,col}.

#include <array>
#include <utility>
#include <vector>

namespace cauchymds::testing {

using Term = std::pair<int, int>;
using ParityCell = std::vector<Term>;

// [parity column][row], rows 0..3 (row 4 is all zero and not stored).
inline const std::array<std::array<ParityCell, 4>, 2> kSymbolicParityTable{{
    {{
        {{2, 0}, {4, 0}, {1, 1}, {3, 1}, {4, 1}},
        {{1, 0}, {4, 1}},
        {{4, 0}, {2, 1}},
        {{0, 0}, {2, 0}, {4, 0}, {1, 1}, {4, 1}},
    }},
    {{
        {{0, 0}, {1, 0}, {3, 0}, {0, 1}, {3, 1}},
        {{1, 0}, {2, 1}},
        {{4, 0}, {0, 1}},
        {{1, 0}, {3, 0}, {0, 1}, {1, 1}, {3, 1}},
    }},
}};

// Expands a cell into the set of stored information bits it sums, as a mask
// over generator rows (row u = column u/4, bit u%4).
inline std::array<bool, 8> expand_cell(const ParityCell& cell) {
  std::array<bool, 8> mask{};
  for (auto [row, col] : cell) {
    if (row == 4) {
      for (int b = 0; b < 4; ++b) mask[col * 4 + b] = !mask[col * 4 + b];
    } else {
      mask[col * 4 + row] = !mask[col * 4 + row];
    }
  }
  return mask;
}

}  // namespace cauchymds::testing
