#pragma once

#include <map>

#include "yangian/series.hpp"

namespace yangian {

// Block factors of T(u) = F(u) D(u) E(u) for a composition mu: block-diagonal
// D with D_a(0) = I, block-unitriangular E (upper) and F (lower). Dprime holds
// the inverses of the diagonal blocks.
struct GaussFactors {
    Composition mu;
    int order = 0;
    std::vector<SeriesMatrix> D;        // index a-1: mu_a x mu_a
    std::vector<SeriesMatrix> Dprime;   // inverse of D[a-1]
    std::map<std::pair<int, int>, SeriesMatrix> E;  // (a,b), a<b: mu_a x mu_b
    std::map<std::pair<int, int>, SeriesMatrix> F;  // (b,a), a<b: mu_b x mu_a

    // Reassembles the full block matrices at the given size n.
    SeriesMatrix assemble_e(const AlgebraContext& ctx) const;
    SeriesMatrix assemble_f(const AlgebraContext& ctx) const;
    SeriesMatrix assemble_d(const AlgebraContext& ctx) const;
};

// Block LDU elimination by iterated two-block Schur complements, left to
// right over mu. Requires T to be square with constant term the identity.
GaussFactors gauss_decompose(const SeriesMatrix& T, const Composition& mu);

enum class QuasiVariant { D, E, F };

// The quasideterminant route to the same blocks: the Schur complement of the
// leading (a-1)-block corner against the boxed block, with D'_a applied on the
// left (E variant) or right (F variant). Independent of gauss_decompose;
// kept as an oracle.
SeriesMatrix quasideterminant(const SeriesMatrix& T, const Composition& mu,
                              int a, QuasiVariant variant, int b = 0);

}  // namespace yangian
