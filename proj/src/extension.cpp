#include <algorithm>
#include <cstdint>
#include <vector>

#include "torusband/gentle.hpp"
#include "torusband/sequences.hpp"

namespace tb {

namespace {

/// Preimage candidates of a canonical band scalar: the canonical traversal may
/// invert or negate the holonomy relative to the construction scalar.
std::vector<std::int64_t> scalar_candidates(std::int64_t s) {
    const std::int64_t inv = field::inv(s);
    std::vector<std::int64_t> out{s, inv, field::neg(s), field::neg(inv)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

extension_cone_result extension_cone(const loop_matrix& m, std::int64_t lambda) {
    const peel_result peel = extension_peel(m);
    extension_cone_result res;
    res.line_degree = peel.line_degree;
    res.reduced = peel.reduced;

    loop_matrix line;
    line.n = m.n;
    line.r = 1;
    line.entries = peel.line_degree;

    const projective_complex L = build_band_complex(line, lambda);
    const projective_complex E = build_band_complex(m, lambda);
    const projective_complex target = build_band_complex(peel.reduced, lambda);

    auto matches = [&](const projective_complex& C) -> bool {
        if (!is_iso_up_to_scalar(C, target)) return false;
        if (auto s = band_scalar(C)) {
            for (std::int64_t cand : scalar_candidates(*s))
                if (is_iso(C, build_band_complex(peel.reduced, cand))) {
                    res.matched_lambda = cand;
                    res.cone_complex = C;
                    return true;
                }
            return false;
        }
        // Non-band canonical form unavailable; accept the scalar-free match.
        res.matched_lambda = lambda;
        res.cone_complex = C;
        return true;
    };

    const auto basis = hom_basis(L, E, 0);
    for (const chain_map& f : basis)
        if (matches(cone(f))) return res;

    // Deterministic pseudo-random combinations of the basis maps.
    std::uint64_t state = 0xd1b54a32d192ed03ULL;
    auto rnd = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 60; ++trial) {
        chain_map f;
        f.X = L;
        f.Y = E;
        f.shift = 0;
        for (const chain_map& g : basis) {
            const std::int64_t coeff = field::norm(static_cast<std::int64_t>(rnd() % 1000) + 1);
            for (const auto& [k, l] : g.comps) f.comps[k] = lin_add(f.comps[k], lin_scale(l, coeff));
        }
        if (matches(cone(f))) return res;
    }
    throw not_chain_map("no extension morphism with the expected cone was found");
}

} // namespace tb
