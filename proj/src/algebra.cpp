#include "hqm/algebra.hpp"

namespace hqm {

// Runtime re-derivation of the multiplication table from the seed triples,
// cross-checked entry-for-entry against the compile-time table, plus a full
// antisymmetry sweep of the structure constants.  Returns the number of
// disagreements (0 on success).
int table_self_check() {
    int bad = 0;
    std::array<std::array<int, 8>, 8> idx{};
    std::array<std::array<int, 8>, 8> sgn{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (i == 0) { idx[i][j] = j; sgn[i][j] = 1; }
            else if (j == 0) { idx[i][j] = i; sgn[i][j] = 1; }
            else if (i == j) { idx[i][j] = 0; sgn[i][j] = -1; }
            else { idx[i][j] = -1; sgn[i][j] = 0; }
        }
    for (const auto& s : kSeedTriples) {
        const int cyc[3][3] = {{s[0], s[1], s[2]}, {s[1], s[2], s[0]}, {s[2], s[0], s[1]}};
        for (const auto& c : cyc) {
            idx[c[0]][c[1]] = c[2]; sgn[c[0]][c[1]] = 1;
            idx[c[1]][c[0]] = c[2]; sgn[c[1]][c[0]] = -1;
        }
    }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (idx[i][j] < 0) ++bad;  // seed triples must cover every pair
            if (idx[i][j] != kTable.idx[i][j] || sgn[i][j] != kTable.sgn[i][j]) ++bad;
        }
    for (int a = 1; a < 8; ++a)
        for (int b = 1; b < 8; ++b)
            for (int c = 1; c < 8; ++c) {
                const double f = structure_constant(a, b, c);
                if (structure_constant(b, a, c) != -f) ++bad;
                if (structure_constant(a, c, b) != -f) ++bad;
            }
    return bad;
}

}  // namespace hqm
