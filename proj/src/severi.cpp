#include "enrcurve/severi.hpp"

#include <algorithm>
#include <stdexcept>

namespace enrcurve {

AlphaSeq::AlphaSeq(std::vector<int> alpha) : alpha_(std::move(alpha)) {
    for (int a : alpha_) {
        if (a < 0) throw std::invalid_argument("alpha entries must be nonnegative");
    }
    while (!alpha_.empty() && alpha_.back() == 0) alpha_.pop_back();
}

std::int64_t AlphaSeq::size() const {
    std::int64_t s = 0;
    for (int a : alpha_) s += a;
    return s;
}

std::int64_t AlphaSeq::weight() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < alpha_.size(); ++i) s += static_cast<std::int64_t>(i + 1) * alpha_[i];
    return s;
}

std::int64_t AlphaSeq::tangency_degree() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < alpha_.size(); ++i) s += static_cast<std::int64_t>(i) * alpha_[i];
    return s;
}

SeveriSpec rational_family_spec(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    SeveriSpec s;
    s.L_class = {1, m - 1};
    s.alpha = AlphaSeq({2, static_cast<int>(2 * m - 1)});
    return s;
}

std::int64_t dedieu_dim(const SeveriSpec& s) {
    if (!s.compatible()) throw std::invalid_argument("alpha is incompatible: I alpha != L.T");
    return -intersect(s.canonical_class + s.T_class, s.L_class) + s.gamma - 1 + s.alpha.size();
}

std::int64_t dedieu_side_condition(const SeveriSpec& s) {
    return -intersect(s.canonical_class, s.L_class) - s.alpha.tangency_degree();
}

namespace {

// Partitions of `remaining` into exactly `parts` parts, each <= max_part.
void partitions(int remaining, int parts, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    if (remaining < parts) return;
    const int hi = std::min(max_part, remaining - (parts - 1));
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long>(p) * parts < remaining) break;
        current.push_back(p);
        partitions(remaining - p, parts - 1, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<AlphaSeq> enumerate_alphas(DivisorClass L, DivisorClass T, std::int64_t gamma, std::int64_t target_dim) {
    const std::int64_t total = intersect(L, T);
    if (total < 0) throw std::invalid_argument("enumerate_alphas needs L.T >= 0");
    // dim = -(K+T).L + gamma - 1 + |alpha|  =>  |alpha| is fixed.
    const std::int64_t parts = target_dim + intersect(kCanonicalQ + T, L) - gamma + 1;
    std::vector<AlphaSeq> out;
    if (parts < 0 || parts > total) return out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<std::vector<int>> parts_list;
    std::vector<int> current;
    partitions(static_cast<int>(total), static_cast<int>(parts), static_cast<int>(total), current, parts_list);
    for (const auto& p : parts_list) out.push_back(AlphaSeq::from_profile(MultiplicityProfile(p)));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void require_membership_spec(const SeveriSpec& s, DivisorClass curve_class) {
    if (s.gamma != 0) throw std::invalid_argument("membership_verify supports gamma = 0 only");
    if (!s.compatible()) throw std::invalid_argument("alpha is incompatible: I alpha != L.T");
    if (!(s.L_class == curve_class)) throw std::invalid_argument("curve class differs from L");
}

}  // namespace

bool membership_verify(const BiForm& b, const GraphCurve& c, const SeveriSpec& s) {
    require_membership_spec(s, c.divisor_class());
    if (!(b.divisor_class() == s.T_class)) throw std::invalid_argument("branch curve class differs from T");
    if (!is_irreducible(c)) return false;
    return AlphaSeq::from_profile(multiplicity_profile(restrict(b, c))) == s.alpha;
}

bool membership_verify(const BiForm& b, const ComplexGraphCurve& c, const SeveriSpec& s, const ClusterOptions& options) {
    require_membership_spec(s, c.divisor_class());
    if (!(b.divisor_class() == s.T_class)) throw std::invalid_argument("branch curve class differs from T");
    if (!is_irreducible(c, options.tolerance)) return false;
    const ComplexForm r = restrict(b, c);
    if (r.is_zero()) return false;
    try {
        return AlphaSeq::from_profile(multiplicity_profile(r, options)) == s.alpha;
    } catch (const AmbiguousClustering&) {
        return false;
    }
}

}  // namespace enrcurve
