#pragma once

#include <cstdint>
#include <vector>

#include "enrcurve/severi.hpp"

namespace enrcurve {

/// One step of the construction: a rational curve of class (1, m-1) on Q,
/// tangent to B with alpha = [2, 2m-1], giving C_Y with p_a = k.
struct LadderRow {
    std::int64_t m;
    std::int64_t k;          // p_a of (2m-2)e + 2f, from the lattice
    AlphaSeq alpha;
    std::int64_t dimension;  // expected dimension of V_{0,alpha}
    std::int64_t side;       // -K.L - sum (i-1) alpha_i
};

/// Rows m = 1..m_max; throws std::invalid_argument for m_max < 1.
std::vector<LadderRow> genus_ladder(std::int64_t m_max);

/// The k column is exactly {k <= 4 m_max - 3 : k = 1 mod 4}, each once.
bool ladder_covers_residue_class(const std::vector<LadderRow>& rows);

}  // namespace enrcurve
