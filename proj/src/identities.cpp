#include "yangian/identities.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace yangian {

namespace {

std::string inst_params(const Composition& mu,
                        std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream os;
    os << "mu=" << mu.str();
    for (const auto& [k, v] : kv)
        os << " " << k << "=" << v;
    return os.str();
}

// Ordered tuples of length cnt with entries in [lo, hi] and the given total.
void for_each_tuple(int cnt, int lo, int hi, int total,
                    const std::function<void(const std::vector<int>&)>& fn) {
    if (cnt == 0) {
        if (total == 0) {
            static const std::vector<int> empty;
            fn(empty);
        }
        return;
    }
    std::vector<int> pick(cnt);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == cnt - 1) {
            if (rest >= lo && rest <= hi) {
                pick[pos] = rest;
                fn(pick);
            }
            return;
        }
        for (int v = lo; v <= std::min(hi, rest); ++v) {
            pick[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, total);
}

struct IdCtx {
    const ParabolicContext& pc;
    int K;  // bivariate comparison order
    int L;  // ell budget
    std::vector<CheckReport> out;

    const Composition& mu() const { return pc.mu(); }
    int m() const { return pc.mu().length(); }
    int parts(int a) const { return pc.mu().parts[a - 1]; }
    int M() const { return K + 1; }  // inner order before (u - v)

    TruncatedSeries D(int a, int i, int j) const {
        return pc.series(Family::D, a, 0, i, j);
    }
    TruncatedSeries Dp(int a, int i, int j) const {
        return pc.series(Family::Dprime, a, 0, i, j);
    }
    TruncatedSeries E(int a, int i, int j) const {
        return pc.series(Family::E, a, a + 1, i, j);
    }
    TruncatedSeries F(int a, int i, int j) const {
        return pc.series(Family::F, a + 1, a, i, j);
    }

    BivariateSeries U(const TruncatedSeries& f, int order) const {
        return BivariateSeries::in_u(f, order);
    }
    BivariateSeries V(const TruncatedSeries& f, int order) const {
        return BivariateSeries::in_v(f, order);
    }
    // f(v) - f(u)
    BivariateSeries delta(const TruncatedSeries& f, int order) const {
        return V(f, order) - U(f, order);
    }

    void emit(const char* id,
              std::initializer_list<std::pair<const char*, int>> kv,
              const BivariateSeries& lhs, const BivariateSeries& rhs) {
        BivariateSeries diff = lhs - rhs;
        Element acc = Element::zero(pc.context());
        for (int r = 0; r <= diff.order() && acc.is_zero(); ++r)
            for (int s = 0; r + s <= diff.order(); ++s)
                if (!diff.at(r, s).is_zero()) {
                    acc = diff.at(r, s);
                    break;
                }
        out.push_back(CheckReport::from_difference(id, inst_params(mu(), kv),
                                                   std::move(acc)));
    }
    void emit(const char* id,
              std::initializer_list<std::pair<const char*, int>> kv,
              const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
        TruncatedSeries diff = lhs - rhs;
        Element acc = Element::zero(pc.context());
        for (int r = 0; r <= diff.order(); ++r)
            if (!diff.at(r).is_zero()) {
                acc = diff.at(r);
                break;
            }
        out.push_back(CheckReport::from_difference(id, inst_params(mu(), kv),
                                                   std::move(acc)));
    }
    void emit(const char* id,
              std::initializer_list<std::pair<const char*, int>> kv,
              Element diff) {
        out.push_back(CheckReport::from_difference(id, inst_params(mu(), kv),
                                                   std::move(diff)));
    }
};

// ---- the seven first-lemma identities, plus the DD series form -----------

void run_first_lemma(IdCtx& c, const std::string& which) {
    const int K = c.K, M = c.M();
    for (int a = 1; a < c.m(); ++a) {
        const int ra = c.parts(a), rb = c.parts(a + 1);
        if (which == "ee" || which == "ee2") {
            for (int i = 1; i <= ra; ++i)
                for (int k = 1; k <= ra; ++k)
                    for (int j = 1; j <= rb; ++j)
                        for (int l = 1; l <= rb; ++l) {
                            BivariateSeries lhs =
                                bicommutator(c.U(c.E(a, i, j), M), c.V(c.E(a, k, l), M))
                                    .mul_u_minus_v();
                            BivariateSeries rhs =
                                which == "ee"
                                    ? c.delta(c.E(a, i, l), K) * c.delta(c.E(a, k, j), K)
                                    : c.delta(c.E(a, k, j), K).scaled(c.pc.context().p - 1) *
                                          c.delta(c.E(a, i, l), K).scaled(c.pc.context().p - 1);
                            c.emit(which.c_str(),
                                   {{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                   lhs, rhs);
                        }
        } else if (which == "ef") {
            for (int i = 1; i <= ra; ++i)
                for (int j = 1; j <= rb; ++j)
                    for (int k = 1; k <= rb; ++k)
                        for (int l = 1; l <= ra; ++l) {
                            BivariateSeries lhs =
                                bicommutator(c.U(c.E(a, i, j), M), c.V(c.F(a, k, l), M))
                                    .mul_u_minus_v();
                            TruncatedSeries prod_u = c.Dp(a, i, l) * c.D(a + 1, k, j);
                            BivariateSeries rhs = c.U(prod_u, K) - c.V(prod_u, K);
                            c.emit("ef", {{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                   lhs, rhs);
                        }
        } else if (which == "ed1") {
            for (int i = 1; i <= ra; ++i)
                for (int j = 1; j <= rb; ++j)
                    for (int k = 1; k <= ra; ++k)
                        for (int l = 1; l <= ra; ++l) {
                            BivariateSeries lhs =
                                bicommutator(c.U(c.E(a, i, j), M), c.V(c.D(a, k, l), M))
                                    .mul_u_minus_v();
                            BivariateSeries rhs(c.pc.context(), K);
                            if (i == l)
                                for (int al = 1; al <= ra; ++al)
                                    rhs = rhs + c.V(c.D(a, k, al), K) *
                                                    (c.U(c.E(a, al, j), K) -
                                                     c.V(c.E(a, al, j), K));
                            c.emit("ed1", {{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                   lhs, rhs);
                        }
        } else if (which == "ed2-prime") {
            for (int i = 1; i <= ra; ++i)
                for (int j = 1; j <= rb; ++j)
                    for (int k = 1; k <= rb; ++k)
                        for (int l = 1; l <= rb; ++l) {
                            BivariateSeries lhs =
                                bicommutator(c.U(c.E(a, i, j), M), c.V(c.Dp(a + 1, k, l), M))
                                    .mul_u_minus_v();
                            BivariateSeries rhs(c.pc.context(), K);
                            if (k == j)
                                for (int be = 1; be <= rb; ++be)
                                    rhs = rhs + (c.U(c.E(a, i, be), K) -
                                                 c.V(c.E(a, i, be), K)) *
                                                    c.V(c.Dp(a + 1, be, l), K);
                            c.emit("ed2-prime",
                                   {{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}}, lhs,
                                   rhs);
                        }
        } else if (which == "ed2") {
            for (int i = 1; i <= ra; ++i)
                for (int j = 1; j <= rb; ++j)
                    for (int k = 1; k <= rb; ++k)
                        for (int l = 1; l <= rb; ++l) {
                            BivariateSeries lhs =
                                bicommutator(c.U(c.E(a, i, j), M), c.V(c.D(a + 1, k, l), M))
                                    .mul_u_minus_v();
                            BivariateSeries rhs =
                                c.V(c.D(a + 1, k, j), K) *
                                (c.V(c.E(a, i, l), K) - c.U(c.E(a, i, l), K));
                            c.emit("ed2", {{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                   lhs, rhs);
                        }
        } else if (which == "ed1-prime") {
            for (int i = 1; i <= ra; ++i)
                for (int j = 1; j <= rb; ++j)
                    for (int k = 1; k <= ra; ++k)
                        for (int l = 1; l <= ra; ++l) {
                            BivariateSeries lhs =
                                bicommutator(c.U(c.E(a, i, j), M), c.V(c.Dp(a, k, l), M))
                                    .mul_u_minus_v();
                            BivariateSeries rhs =
                                (c.V(c.E(a, k, j), K) - c.U(c.E(a, k, j), K)) *
                                c.V(c.Dp(a, i, l), K);
                            c.emit("ed1-prime",
                                   {{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}}, lhs,
                                   rhs);
                        }
        }
    }
    if (which == "dd") {
        for (int a = 1; a <= c.m(); ++a) {
            const int ra = c.parts(a);
            for (int i = 1; i <= ra; ++i)
                for (int j = 1; j <= ra; ++j)
                    for (int k = 1; k <= ra; ++k)
                        for (int l = 1; l <= ra; ++l) {
                            BivariateSeries lhs =
                                bicommutator(c.U(c.D(a, i, j), M), c.V(c.D(a, k, l), M))
                                    .mul_u_minus_v();
                            BivariateSeries rhs =
                                c.U(c.D(a, k, j), K) * c.V(c.D(a, i, l), K) -
                                c.V(c.D(a, k, j), K) * c.U(c.D(a, i, l), K);
                            c.emit("dd", {{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                   lhs, rhs);
                        }
        }
    }
}

// ---- the EDE-lemma identities with a power parameter ----------------------

BivariateSeries bipow(const BivariateSeries& x, int e) {
    BivariateSeries acc(x.context(), x.order());
    acc.at(0, 0) = Element::unit(x.context());
    for (int t = 0; t < e; ++t)
        acc = acc * x;
    return acc;
}

void run_ede_lemma(IdCtx& c, const std::string& which) {
    const int K = c.K, M = c.M();
    const Scalar p = c.pc.context().p;
    for (int a = 1; a < c.m(); ++a) {
        const int ra = c.parts(a), rb = c.parts(a + 1);
        for (int ell = 0; ell <= c.L; ++ell) {
            if (which == "eee") {
                for (int i = 1; i <= ra; ++i)
                    for (int k = 1; k <= ra; ++k)
                        for (int j = 1; j <= rb; ++j)
                            for (int l = 1; l <= rb; ++l) {
                                BivariateSeries inner =
                                    c.delta(c.E(a, i, l), M) *
                                    bipow(c.delta(c.E(a, i, j), M), ell) *
                                    c.delta(c.E(a, k, j), M);
                                BivariateSeries lhs =
                                    bicommutator(c.U(c.E(a, i, j), M), inner)
                                        .mul_u_minus_v();
                                BivariateSeries rhs =
                                    (c.delta(c.E(a, i, l), K) *
                                     bipow(c.delta(c.E(a, i, j), K), ell + 1) *
                                     c.delta(c.E(a, k, j), K))
                                        .scaled(reduce_mod(ell + 2, p));
                                c.emit("eee",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"ell", ell}},
                                       lhs, rhs);
                            }
            } else if (which == "ede") {
                for (int i = 1; i <= ra; ++i)
                    for (int k = 1; k <= ra; ++k)
                        for (int j = 1; j <= rb; ++j) {
                            auto de_sum = [&](int order) {
                                BivariateSeries acc(c.pc.context(), order);
                                for (int al = 1; al <= ra; ++al)
                                    acc = acc + c.V(c.D(a, k, al), order) *
                                                    c.delta(c.E(a, al, j), order);
                                return acc;
                            };
                            BivariateSeries inner =
                                de_sum(M) * bipow(c.delta(c.E(a, i, j), M), ell);
                            BivariateSeries lhs =
                                bicommutator(c.U(c.E(a, i, j), M), inner)
                                    .mul_u_minus_v();
                            BivariateSeries rhs =
                                (de_sum(K) * bipow(c.delta(c.E(a, i, j), K), ell + 1))
                                    .scaled(reduce_mod(ell, p));
                            c.emit("ede",
                                   {{"a", a}, {"i", i}, {"j", j}, {"k", k}, {"ell", ell}},
                                   lhs, rhs);
                        }
            } else if (which == "ed2e") {
                for (int i = 1; i <= ra; ++i)
                    for (int j = 1; j <= rb; ++j)
                        for (int k = 1; k <= rb; ++k)
                            for (int l = 1; l <= rb; ++l) {
                                BivariateSeries inner =
                                    c.V(c.D(a + 1, k, j), M) *
                                    bipow(c.delta(c.E(a, i, j), M), ell) *
                                    c.delta(c.E(a, i, l), M);
                                BivariateSeries lhs =
                                    bicommutator(c.U(c.E(a, i, j), M), inner)
                                        .mul_u_minus_v();
                                BivariateSeries rhs =
                                    (c.V(c.D(a + 1, k, j), K) *
                                     bipow(c.delta(c.E(a, i, j), K), ell + 1) *
                                     c.delta(c.E(a, i, l), K))
                                        .scaled(reduce_mod(ell + 2, p));
                                c.emit("ed2e",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"ell", ell}},
                                       lhs, rhs);
                            }
            } else if (which == "ed2ed-prime") {
                for (int i = 1; i <= ra; ++i)
                    for (int j = 1; j <= rb; ++j)
                        for (int k = 1; k <= rb; ++k)
                            for (int l = 1; l <= ra; ++l) {
                                BivariateSeries inner =
                                    c.V(c.D(a + 1, k, j), M) *
                                    bipow(c.delta(c.E(a, i, j), M), ell) *
                                    c.V(c.Dp(a, i, l), M);
                                BivariateSeries lhs =
                                    bicommutator(c.U(c.E(a, i, j), M), inner)
                                        .mul_u_minus_v();
                                BivariateSeries rhs =
                                    (c.V(c.D(a + 1, k, j), K) *
                                     bipow(c.delta(c.E(a, i, j), K), ell + 1) *
                                     c.V(c.Dp(a, i, l), K))
                                        .scaled(reduce_mod(ell + 2, p));
                                c.emit("ed2ed-prime",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"ell", ell}},
                                       lhs, rhs);
                            }
            }
        }
    }
}

// ---- the coefficient families ---------------------------------------------

void run_coeff_family(IdCtx& c, int family) {
    const Scalar p = c.pc.context().p;
    const char* ids[] = {"coeff-1111", "coeff-2222", "coeff-3333",
                         "coeff-4444", "coeff-5555"};
    const char* id = ids[family - 1];
    for (int a = 1; a < c.m(); ++a) {
        const int ra = c.parts(a), rb = c.parts(a + 1);
        for (int ell = 0; ell <= c.L; ++ell)
            for (int r = 1; r + 1 <= c.K; ++r)
                for (int s = 1; r + s <= c.K; ++s) {
                    // index tuples per family
                    auto run_instance = [&](int i, int j, int k, int l) {
                        try {
                            Element lhs_sum = Element::zero(c.pc.context());
                            Element rhs_sum = Element::zero(c.pc.context());
                            const int hi = c.pc.order();
                            if (family == 1 || family == 2) {
                                const int lo = family == 1 ? r : 1;
                                const int up = family == 1 ? hi : r - 1;
                                for_each_tuple(
                                    ell + 2, lo, up, (ell + 1) * (r - 1) + s,
                                    [&](const std::vector<int>& ix) {
                                        Element prod = c.pc.e(a, i, l, ix.front());
                                        for (int q = 1; q <= ell; ++q)
                                            prod = prod * c.pc.e(a, i, j, ix[q]);
                                        prod = prod * c.pc.e(a, k, j, ix.back());
                                        lhs_sum += prod;
                                    });
                                for_each_tuple(
                                    ell + 3, lo, up, (ell + 2) * (r - 1) + s,
                                    [&](const std::vector<int>& ix) {
                                        Element prod = c.pc.e(a, i, l, ix.front());
                                        for (int q = 1; q <= ell + 1; ++q)
                                            prod = prod * c.pc.e(a, i, j, ix[q]);
                                        prod = prod * c.pc.e(a, k, j, ix.back());
                                        rhs_sum += prod;
                                    });
                                const Scalar coef =
                                    family == 1 ? reduce_mod(ell + 2, p)
                                                : reduce_mod(-(ell + 2), p);
                                Element diff =
                                    commutator(c.pc.e(a, i, j, r), lhs_sum) -
                                    rhs_sum.scaled(coef);
                                c.emit(id,
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"ell", ell}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            } else if (family == 3) {
                                // sum over t >= 0 and (s1, t_1..t_ell) >= r:
                                // D_{a;k,alpha}^{(t)} E_{a;alpha,j}^{(s1)} E(i,j)^{t_q}
                                auto build = [&](int nt, int total) {
                                    Element acc = Element::zero(c.pc.context());
                                    for (int t = 0; t <= total; ++t)
                                        for_each_tuple(
                                            nt + 1, r, hi, total - t,
                                            [&](const std::vector<int>& ix) {
                                                for (int al = 1; al <= ra; ++al) {
                                                    Element prod =
                                                        c.pc.d(a, k, al, t) *
                                                        c.pc.e(a, al, j, ix.front());
                                                    for (int q = 1; q <= nt; ++q)
                                                        prod = prod *
                                                               c.pc.e(a, i, j, ix[q]);
                                                    acc += prod;
                                                }
                                            });
                                    return acc;
                                };
                                Element lhs = build(ell, (ell + 1) * (r - 1) + s);
                                Element rhs = build(ell + 1, (ell + 2) * (r - 1) + s);
                                Element diff = commutator(c.pc.e(a, i, j, r), lhs) -
                                               rhs.scaled(reduce_mod(ell, p));
                                c.emit(id,
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"ell", ell}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            } else if (family == 4) {
                                auto build = [&](int nt, int total) {
                                    Element acc = Element::zero(c.pc.context());
                                    for (int t = 0; t <= total; ++t)
                                        for_each_tuple(
                                            nt + 1, r, hi, total - t,
                                            [&](const std::vector<int>& ix) {
                                                Element prod = c.pc.d(a + 1, k, j, t);
                                                for (int q = 0; q < nt; ++q)
                                                    prod = prod * c.pc.e(a, i, j, ix[q]);
                                                prod = prod *
                                                       c.pc.e(a, i, l, ix.back());
                                                acc += prod;
                                            });
                                    return acc;
                                };
                                Element lhs = build(ell, (ell + 1) * (r - 1) + s);
                                Element rhs = build(ell + 1, (ell + 2) * (r - 1) + s);
                                Element diff = commutator(c.pc.e(a, i, j, r), lhs) -
                                               rhs.scaled(reduce_mod(ell + 2, p));
                                c.emit(id,
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"ell", ell}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            } else {
                                // family 5: D_{a+1;k,j}^{(t)} E^{t_1..t_ell} D'^{(w)}_{a;i,l}
                                auto build = [&](int nt, int total) {
                                    Element acc = Element::zero(c.pc.context());
                                    for (int t = 0; t <= total; ++t)
                                        for (int w = 0; w + t <= total; ++w)
                                            for_each_tuple(
                                                nt, r, hi, total - t - w,
                                                [&](const std::vector<int>& ix) {
                                                    Element prod =
                                                        c.pc.d(a + 1, k, j, t);
                                                    for (int q = 0; q < nt; ++q)
                                                        prod = prod *
                                                               c.pc.e(a, i, j, ix[q]);
                                                    prod = prod *
                                                           c.pc.dprime(a, i, l, w);
                                                    acc += prod;
                                                });
                                    return acc;
                                };
                                Element lhs = build(ell, ell * (r - 1) + s);
                                Element rhs = build(ell + 1, (ell + 1) * (r - 1) + s);
                                Element diff = commutator(c.pc.e(a, i, j, r), lhs) -
                                               rhs.scaled(reduce_mod(ell + 2, p));
                                c.emit(id,
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"ell", ell}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            }
                        } catch (const std::out_of_range&) {
                            c.out.push_back(CheckReport::skipped(
                                id,
                                inst_params(c.mu(), {{"a", a}, {"i", i}, {"j", j},
                                                     {"k", k}, {"l", l}, {"ell", ell},
                                                     {"r", r}, {"s", s}}),
                                "coefficient beyond truncation budget"));
                        }
                    };
                    if (family == 1 || family == 2) {
                        for (int i = 1; i <= ra; ++i)
                            for (int k = 1; k <= ra; ++k)
                                for (int j = 1; j <= rb; ++j)
                                    for (int l = 1; l <= rb; ++l)
                                        run_instance(i, j, k, l);
                    } else if (family == 3) {
                        for (int i = 1; i <= ra; ++i)
                            for (int k = 1; k <= ra; ++k)
                                for (int j = 1; j <= rb; ++j)
                                    run_instance(i, j, k, 0);
                    } else if (family == 4) {
                        for (int i = 1; i <= ra; ++i)
                            for (int j = 1; j <= rb; ++j)
                                for (int k = 1; k <= rb; ++k)
                                    for (int l = 1; l <= rb; ++l)
                                        run_instance(i, j, k, l);
                    } else {
                        for (int i = 1; i <= ra; ++i)
                            for (int j = 1; j <= rb; ++j)
                                for (int k = 1; k <= rb; ++k)
                                    for (int l = 1; l <= ra; ++l)
                                        run_instance(i, j, k, l);
                    }
                }
    }
}

// ---- shift corollaries, up/down, DD lemma ---------------------------------

TruncatedSeries down_product(const IdCtx& c, int a, int i, int j, int ell) {
    TruncatedSeries acc = TruncatedSeries::unit(c.pc.context(), c.pc.order());
    for (int q = 0; q < ell; ++q)
        acc = acc * c.D(a, i, j).shift_argument(-q);
    return acc;
}

TruncatedSeries up_product(const IdCtx& c, int a, int i, int j, int ell) {
    TruncatedSeries acc = TruncatedSeries::unit(c.pc.context(), c.pc.order());
    for (int q = 0; q < ell; ++q)
        acc = acc * c.D(a, i, j).shift_argument(q);
    return acc;
}

void run_shift_identities(IdCtx& c, const std::string& which) {
    const int K = c.K, M = c.M();
    const Scalar p = c.pc.context().p;
    if (which == "de-up") {
        for (int a = 2; a <= c.m(); ++a)
            for (int i = 1; i <= c.parts(a); ++i)
                for (int j = 1; j <= c.parts(a); ++j)
                    for (int k = 1; k <= c.parts(a - 1); ++k) {
                        TruncatedSeries lhs = c.D(a, i, j) * c.E(a - 1, k, j);
                        TruncatedSeries rhs =
                            c.E(a - 1, k, j).shift_argument(1) * c.D(a, i, j);
                        c.emit("de-up", {{"a", a}, {"i", i}, {"j", j}, {"k", k}},
                               lhs, rhs);
                    }
    } else if (which == "de-down") {
        for (int a = 1; a < c.m(); ++a)
            for (int i = 1; i <= c.parts(a); ++i)
                for (int j = 1; j <= c.parts(a); ++j)
                    for (int l = 1; l <= c.parts(a + 1); ++l) {
                        TruncatedSeries lhs =
                            c.D(a, i, j) * c.E(a, j, l) -
                            c.E(a, j, l).shift_argument(-1) * c.D(a, i, j);
                        TruncatedSeries rhs(c.pc.context(), c.pc.order());
                        for (int al = 1; al <= c.parts(a); ++al) {
                            if (al == j)
                                continue;
                            rhs = rhs + c.D(a, i, al) *
                                            (c.E(a, al, l).shift_argument(-1) -
                                             c.E(a, al, l));
                        }
                        c.emit("de-down", {{"a", a}, {"i", i}, {"j", j}, {"l", l}},
                               lhs, rhs);
                    }
    } else if (which == "down") {
        for (int a = 1; a < c.m(); ++a)
            for (int ell = 1; ell <= c.L; ++ell)
                for (int i = 1; i <= c.parts(a); ++i)
                    for (int j = 1; j <= c.parts(a); ++j)
                        for (int k = 1; k <= c.parts(a); ++k)
                            for (int l = 1; l <= c.parts(a + 1); ++l) {
                                BivariateSeries lhs =
                                    bicommutator(
                                        c.U(down_product(c, a, i, j, ell), M),
                                        c.V(c.E(a, k, l), M))
                                        .mul_u_minus_v();
                                BivariateSeries rhs(c.pc.context(), K);
                                if (j == k) {
                                    BivariateSeries sum(c.pc.context(), K);
                                    for (int al = 1; al <= c.parts(a); ++al)
                                        sum = sum +
                                              c.U(c.D(a, i, al), K) *
                                                  c.delta(c.E(a, al, l), K);
                                    rhs = c.U(down_product(c, a, i, j, ell - 1)
                                                  .shift_argument(-1),
                                              K) *
                                          sum;
                                    rhs = rhs.scaled(reduce_mod(ell, p));
                                }
                                c.emit("down",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"ell", ell}},
                                       lhs, rhs);
                            }
    } else if (which == "up") {
        for (int a = 2; a <= c.m(); ++a)
            for (int ell = 1; ell <= c.L; ++ell)
                for (int i = 1; i <= c.parts(a); ++i)
                    for (int j = 1; j <= c.parts(a); ++j)
                        for (int k = 1; k <= c.parts(a - 1); ++k)
                            for (int l = 1; l <= c.parts(a); ++l) {
                                BivariateSeries lhs =
                                    bicommutator(c.U(up_product(c, a, i, j, ell), M),
                                                 c.V(c.E(a - 1, k, l), M))
                                        .mul_u_minus_v();
                                BivariateSeries rhs =
                                    (c.U(c.D(a, i, l), K) *
                                     c.U(up_product(c, a, i, j, ell - 1)
                                             .shift_argument(1),
                                         K) *
                                     (c.U(c.E(a - 1, k, j), K) -
                                      c.V(c.E(a - 1, k, j), K)))
                                        .scaled(reduce_mod(ell, p));
                                c.emit("up",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"ell", ell}},
                                       lhs, rhs);
                            }
    } else if (which == "dd-shift") {
        for (int a = 1; a <= c.m(); ++a)
            for (int i = 1; i <= c.parts(a); ++i)
                for (int j = 1; j <= c.parts(a); ++j)
                    for (int l = 1; l <= c.parts(a); ++l) {
                        TruncatedSeries lhs =
                            c.D(a, i, j).shift_argument(-1) * c.D(a, i, l);
                        TruncatedSeries rhs =
                            c.D(a, i, l).shift_argument(-1) * c.D(a, i, j);
                        c.emit("dd-shift", {{"a", a}, {"i", i}, {"j", j}, {"l", l}},
                               lhs, rhs);
                    }
    } else if (which == "dd-induct") {
        for (int a = 1; a <= c.m(); ++a)
            for (int ell = 0; ell <= c.L; ++ell)
                for (int i = 1; i <= c.parts(a); ++i)
                    for (int j = 1; j <= c.parts(a); ++j)
                        for (int l = 1; l <= c.parts(a); ++l) {
                            TruncatedSeries lhs =
                                (c.D(a, i, l) * c.D(a, i, j).shift_argument(ell))
                                    .scaled(reduce_mod(ell + 1, p));
                            TruncatedSeries rhs =
                                (c.D(a, i, j).shift_argument(ell) * c.D(a, i, l))
                                    .scaled(reduce_mod(ell, p)) +
                                c.D(a, i, l).shift_argument(ell) * c.D(a, i, j);
                            c.emit("dd-induct",
                                   {{"a", a}, {"i", i}, {"j", j}, {"l", l},
                                    {"ell", ell}},
                                   lhs, rhs);
                        }
    }
}

// ---- the difference-quotient expansion and its coefficient corollary ------

void run_diff_quotient(IdCtx& c) {
    const int K = c.K, M = c.M();
    auto test_series = [&](const char* fam, int a, int i, int j,
                           const TruncatedSeries& f) {
        BivariateSeries expansion(c.pc.context(), M);
        for (int r = 1; r <= M; ++r)
            for (int s = 1; r + s <= M; ++s)
                expansion.at(r, s) = f.at(r + s - 1);
        BivariateSeries lhs = expansion.mul_u_minus_v();
        BivariateSeries rhs = c.V(f, K) - c.U(f, K);
        c.emit("series-diff-quotient",
               {{"family", fam[0] == 'D' ? 0 : fam[0] == 'E' ? 1 : 2},
                {"a", a}, {"i", i}, {"j", j}},
               lhs, rhs);
    };
    for (int a = 1; a <= c.m(); ++a)
        for (int i = 1; i <= c.parts(a); ++i)
            for (int j = 1; j <= c.parts(a); ++j)
                test_series("D", a, i, j, c.D(a, i, j));
    for (int a = 1; a < c.m(); ++a)
        for (int i = 1; i <= c.parts(a); ++i)
            for (int j = 1; j <= c.parts(a + 1); ++j) {
                test_series("E", a, i, j, c.E(a, i, j));
                test_series("F", a, j, i, c.F(a, j, i));
            }
}

void run_ed1_prime_coeff(IdCtx& c) {
    for (int a = 1; a < c.m(); ++a)
        for (int i = 1; i <= c.parts(a); ++i)
            for (int j = 1; j <= c.parts(a + 1); ++j)
                for (int k = 1; k <= c.parts(a); ++k)
                    for (int l = 1; l <= c.parts(a); ++l)
                        for (int r = 1; r + 1 <= c.K; ++r)
                            for (int s = 1; r + s <= c.K; ++s) {
                                Element diff = commutator(c.pc.e(a, i, j, r),
                                                          c.pc.dprime(a, k, l, s));
                                for (int t = 0; t < s; ++t)
                                    diff -= c.pc.e(a, k, j, r + s - 1 - t) *
                                            c.pc.dprime(a, i, l, t);
                                c.emit("ed1-prime-coeff",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            }
}

void run_dd_coeff_comm(IdCtx& c) {
    for (int a = 1; a <= c.m(); ++a)
        for (int i = 1; i <= c.parts(a); ++i)
            for (int j = 1; j <= c.parts(a); ++j)
                for (int r = 1; r <= c.K; ++r)
                    for (int s = 1; s <= c.K; ++s)
                        c.emit("dd-coeff-comm",
                               {{"a", a}, {"i", i}, {"j", j}, {"r", r}, {"s", s}},
                               commutator(c.pc.d(a, i, j, r), c.pc.d(a, i, j, s)));
}

}  // namespace

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = {
        "ee", "ee2", "ef", "ed1", "ed2-prime", "ed2", "ed1-prime", "dd",
        "eee", "ede", "ed2e", "ed2ed-prime",
        "coeff-1111", "coeff-2222", "coeff-3333", "coeff-4444", "coeff-5555",
        "de-up", "de-down", "down", "up", "dd-shift", "dd-induct",
        "series-diff-quotient", "ed1-prime-coeff", "dd-coeff-comm"};
    return ids;
}

int identity_order_for(int order) { return order + 1; }

std::vector<CheckReport> verify_series_identity(const std::string& id,
                                                const ParabolicContext& pc,
                                                int order, int ell_budget) {
    if (pc.order() < identity_order_for(order))
        throw std::out_of_range("verify_series_identity: context order too small");
    IdCtx c{pc, order, ell_budget, {}};
    if (id == "ee" || id == "ee2" || id == "ef" || id == "ed1" ||
        id == "ed2-prime" || id == "ed2" || id == "ed1-prime" || id == "dd")
        run_first_lemma(c, id);
    else if (id == "eee" || id == "ede" || id == "ed2e" || id == "ed2ed-prime")
        run_ede_lemma(c, id);
    else if (id == "coeff-1111")
        run_coeff_family(c, 1);
    else if (id == "coeff-2222")
        run_coeff_family(c, 2);
    else if (id == "coeff-3333")
        run_coeff_family(c, 3);
    else if (id == "coeff-4444")
        run_coeff_family(c, 4);
    else if (id == "coeff-5555")
        run_coeff_family(c, 5);
    else if (id == "de-up" || id == "de-down" || id == "down" || id == "up" ||
             id == "dd-shift" || id == "dd-induct")
        run_shift_identities(c, id);
    else if (id == "series-diff-quotient")
        run_diff_quotient(c);
    else if (id == "ed1-prime-coeff")
        run_ed1_prime_coeff(c);
    else if (id == "dd-coeff-comm")
        run_dd_coeff_comm(c);
    else
        throw std::invalid_argument("verify_series_identity: unknown id " + id);
    return c.out;
}

}  // namespace yangian
