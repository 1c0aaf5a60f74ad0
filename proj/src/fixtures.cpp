#include "hyperlap/formats.hpp"

namespace hyperlap {

// Keep in sync with fixtures/fig1.hg and fixtures/fig2.cw.

const char* const fig1_text = R"(# fig1: four vertices, six segments and three shaded triangles.
vertices 4
edge e1 1 2
edge e2 1 3
edge e3 2 3
edge e4 1 4
edge e5 2 4
edge e6 3 4
edge e7 1 3 4
edge e8 1 2 4
edge e9 2 3 4
)";

// 1-cells run from the lower to the higher vertex index; each 1-cell has
// sign -1 at its tail and +1 at its head. The level-1 signs are the output
// of tools/fig2_sign_search.
const char* const fig2_text = R"(# fig2: four 0-cells, six oriented 1-cells, three 2-cells.
cells 0 4
cells 1 6
cells 2 3
inc 0 1 1 -1
inc 0 2 1 +1
inc 0 1 2 -1
inc 0 3 2 +1
inc 0 2 3 -1
inc 0 3 3 +1
inc 0 1 4 -1
inc 0 4 4 +1
inc 0 2 5 -1
inc 0 4 5 +1
inc 0 3 6 -1
inc 0 4 6 +1
inc 1 2 1 -1
inc 1 4 1 +1
inc 1 6 1 -1
inc 1 1 2 +1
inc 1 4 2 -1
inc 1 5 2 +1
inc 1 3 3 -1
inc 1 5 3 +1
inc 1 6 3 -1
skel 1 1 1 2
skel 1 2 1 3
skel 1 3 2 3
skel 1 4 1 4
skel 1 5 2 4
skel 1 6 3 4
skel 2 1 1 3 4
skel 2 2 1 2 4
skel 2 3 2 3 4
)";

} // namespace hyperlap
