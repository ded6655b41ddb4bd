#include "enrcurve/ladder.hpp"

#include <algorithm>
#include <stdexcept>

#include "enrcurve/lattice.hpp"

namespace enrcurve {

std::vector<LadderRow> genus_ladder(std::int64_t m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    std::vector<LadderRow> rows;
    rows.reserve(static_cast<std::size_t>(m_max));
    for (std::int64_t m = 1; m <= m_max; ++m) {
        const SeveriSpec spec = rational_family_spec(m);
        rows.push_back({m, genus_and_congruence(cy_class(m)).pa, spec.alpha, dedieu_dim(spec), dedieu_side_condition(spec)});
    }
    return rows;
}

bool ladder_covers_residue_class(const std::vector<LadderRow>& rows) {
    if (rows.empty()) return false;
    std::vector<std::int64_t> ks;
    for (const LadderRow& r : rows) ks.push_back(r.k);
    std::sort(ks.begin(), ks.end());
    const std::int64_t top = 4 * rows.back().m - 3;
    std::vector<std::int64_t> expected;
    for (std::int64_t k = 1; k <= top; ++k) {
        if (k % 4 == 1) expected.push_back(k);
    }
    return ks == expected;
}

}  // namespace enrcurve
