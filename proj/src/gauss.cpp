#include "yangian/gauss.hpp"

#include <stdexcept>

namespace yangian {

SeriesMatrix GaussFactors::assemble_d(const AlgebraContext& ctx) const {
    const int n = mu.total();
    SeriesMatrix out(ctx, n, n, order);
    for (int a = 1; a <= mu.length(); ++a) {
        const int off = mu.partial_sum(a);
        for (int i = 1; i <= mu.parts[a - 1]; ++i)
            for (int j = 1; j <= mu.parts[a - 1]; ++j)
                out.at(off + i, off + j) = D[a - 1].at(i, j);
    }
    return out;
}

SeriesMatrix GaussFactors::assemble_e(const AlgebraContext& ctx) const {
    const int n = mu.total();
    SeriesMatrix out = SeriesMatrix::identity(ctx, n, order);
    for (const auto& [ab, blk] : E) {
        const int ra = mu.partial_sum(ab.first);
        const int cb = mu.partial_sum(ab.second);
        for (int i = 1; i <= blk.rows(); ++i)
            for (int j = 1; j <= blk.cols(); ++j)
                out.at(ra + i, cb + j) = blk.at(i, j);
    }
    return out;
}

SeriesMatrix GaussFactors::assemble_f(const AlgebraContext& ctx) const {
    const int n = mu.total();
    SeriesMatrix out = SeriesMatrix::identity(ctx, n, order);
    for (const auto& [ba, blk] : F) {
        const int rb = mu.partial_sum(ba.first);
        const int ca = mu.partial_sum(ba.second);
        for (int i = 1; i <= blk.rows(); ++i)
            for (int j = 1; j <= blk.cols(); ++j)
                out.at(rb + i, ca + j) = blk.at(i, j);
    }
    return out;
}

GaussFactors gauss_decompose(const SeriesMatrix& T, const Composition& mu) {
    if (T.rows() != T.cols() || T.rows() != mu.total())
        throw std::invalid_argument("gauss_decompose: shape does not match mu");
    const int m = mu.length();
    const int N = T.order();

    GaussFactors gf;
    gf.mu = mu;
    gf.order = N;

    // S holds the Schur complement of the blocks eliminated so far, as a map
    // (b, c) -> block for b, c > a.
    std::map<std::pair<int, int>, SeriesMatrix> S;
    for (int b = 1; b <= m; ++b)
        for (int c = 1; c <= m; ++c) {
            const int rb = mu.partial_sum(b), cb = mu.partial_sum(c);
            S[{b, c}] = T.submatrix(rb + 1, rb + mu.parts[b - 1], cb + 1,
                                    cb + mu.parts[c - 1]);
        }

    for (int a = 1; a <= m; ++a) {
        SeriesMatrix Da = S.at({a, a});
        SeriesMatrix Dp = Da.inverse();
        for (int b = a + 1; b <= m; ++b) {
            gf.E[{a, b}] = Dp * S.at({a, b});
            gf.F[{b, a}] = S.at({b, a}) * Dp;
        }
        for (int b = a + 1; b <= m; ++b)
            for (int c = a + 1; c <= m; ++c)
                S.at({b, c}) =
                    S.at({b, c}) - S.at({b, a}) * (Dp * S.at({a, c}));
        gf.D.push_back(std::move(Da));
        gf.Dprime.push_back(std::move(Dp));
    }
    return gf;
}

SeriesMatrix quasideterminant(const SeriesMatrix& T, const Composition& mu,
                              int a, QuasiVariant variant, int b) {
    const int m = mu.length();
    if (a < 1 || a > m)
        throw std::out_of_range("quasideterminant: bad block index");
    if (variant != QuasiVariant::D && (b <= a || b > m))
        throw std::out_of_range("quasideterminant: bad second block index");

    const int q = mu.partial_sum(a);  // size of the eliminated corner
    // row block: a for D and E, b for F; column block: a for D and F, b for E
    const int rblk = variant == QuasiVariant::F ? b : a;
    const int cblk = variant == QuasiVariant::E ? b : a;
    const int r0 = mu.partial_sum(rblk), nr = mu.parts[rblk - 1];
    const int c0 = mu.partial_sum(cblk), nc = mu.parts[cblk - 1];

    SeriesMatrix box = T.submatrix(r0 + 1, r0 + nr, c0 + 1, c0 + nc);
    if (q > 0) {
        SeriesMatrix corner = T.submatrix(1, q, 1, q);
        SeriesMatrix rowside = T.submatrix(r0 + 1, r0 + nr, 1, q);
        SeriesMatrix colside = T.submatrix(1, q, c0 + 1, c0 + nc);
        box = box - rowside * (corner.inverse() * colside);
    }
    if (variant == QuasiVariant::D)
        return box;

    SeriesMatrix Dp = quasideterminant(T, mu, a, QuasiVariant::D).inverse();
    return variant == QuasiVariant::E ? Dp * box : box * Dp;
}

}  // namespace yangian
