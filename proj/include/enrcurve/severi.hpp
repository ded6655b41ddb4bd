#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "enrcurve/cover.hpp"

namespace enrcurve {

/// [alpha_1, alpha_2, ...]: alpha_i contact points of order i. Trailing zeros
/// are dropped on construction.
class AlphaSeq {
public:
    AlphaSeq() = default;
    explicit AlphaSeq(std::vector<int> alpha);
    static AlphaSeq from_profile(const MultiplicityProfile& p) { return AlphaSeq(p.alpha()); }

    std::span<const int> values() const { return alpha_; }
    /// |alpha| = sum alpha_i
    std::int64_t size() const;
    /// I alpha = sum i * alpha_i
    std::int64_t weight() const;
    /// sum (i - 1) alpha_i, the degree of the tangency divisor D.
    std::int64_t tangency_degree() const;
    MultiplicityProfile profile() const { return MultiplicityProfile::from_alpha(alpha_); }

    friend bool operator==(const AlphaSeq&, const AlphaSeq&) = default;
    friend auto operator<=>(const AlphaSeq&, const AlphaSeq&) = default;

private:
    std::vector<int> alpha_;
};

struct AlphaStats {
    std::int64_t size;
    std::int64_t weight;
};

inline AlphaStats alpha_stats(const AlphaSeq& a) { return {a.size(), a.weight()}; }

/// Data of V_{gamma,alpha}(S, T, L) on S = P^1 x P^1.
struct SeveriSpec {
    DivisorClass canonical_class = kCanonicalQ;
    DivisorClass T_class = kBranchClass;
    DivisorClass L_class;
    std::int64_t gamma = 0;
    AlphaSeq alpha;

    /// I alpha == L.T
    bool compatible() const { return alpha.weight() == intersect(L_class, T_class); }
};

/// The rational family: L = (1, m-1), T = (4,4), gamma = 0, alpha = [2, 2m-1].
SeveriSpec rational_family_spec(std::int64_t m);

/// Expected dimension -(K + T).L + gamma - 1 + |alpha|. Negative values are
/// returned as is. Throws std::invalid_argument when I alpha != L.T.
std::int64_t dedieu_dim(const SeveriSpec& s);

/// -K.L - sum (i-1) alpha_i; the dimension count holds when this is >= 1.
std::int64_t dedieu_side_condition(const SeveriSpec& s);

/// All alpha with I alpha = L.T and dedieu_dim == target_dim (K = K_Q), in
/// lexicographic order of the sequences.
std::vector<AlphaSeq> enumerate_alphas(DivisorClass L, DivisorClass T, std::int64_t gamma, std::int64_t target_dim);

/// C irreducible of class L, contact profile against B equal to alpha. Only
/// gamma == 0 is accepted: curves of class (1, n) are smooth rational.
bool membership_verify(const BiForm& b, const GraphCurve& c, const SeveriSpec& s);
bool membership_verify(const BiForm& b, const ComplexGraphCurve& c, const SeveriSpec& s, const ClusterOptions& options);

}  // namespace enrcurve
