#include "yangian/parabolic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace yangian {

std::string ParabolicIndex::str() const {
    std::ostringstream os;
    switch (family) {
        case Family::D: os << "D"; break;
        case Family::Dprime: os << "D'"; break;
        case Family::E: os << "E"; break;
        case Family::F: os << "F"; break;
    }
    os << "[" << a;
    if (b > 0)
        os << "," << b;
    os << ";" << i << "," << j << "]^(" << r << ")";
    return os.str();
}

ParabolicContext::ParabolicContext(AlgebraContext ctx, Composition mu,
                                   int order)
    : ctx_(ctx), mu_(std::move(mu)), order_(order) {
    if (mu_.total() != ctx.n)
        throw std::invalid_argument("ParabolicContext: mu does not sum to n");
    gf_ = gauss_decompose(SeriesMatrix::generic_t(ctx, order), mu_);
}

const Element& ParabolicContext::coeff(const ParabolicIndex& idx) const {
    switch (idx.family) {
        case Family::D: return d(idx.a, idx.i, idx.j, idx.r);
        case Family::Dprime: return dprime(idx.a, idx.i, idx.j, idx.r);
        case Family::E:
            return e_root(idx.a, idx.b > 0 ? idx.b : idx.a + 1, idx.i, idx.j,
                          idx.r);
        case Family::F:
            return f_root(idx.a, idx.b > 0 ? idx.b : idx.a - 1, idx.i, idx.j,
                          idx.r);
    }
    throw std::logic_error("ParabolicContext: bad family");
}

const Element& ParabolicContext::d(int a, int i, int j, int r) const {
    return gf_.D.at(a - 1).at(i, j).at(r);
}

const Element& ParabolicContext::dprime(int a, int i, int j, int r) const {
    return gf_.Dprime.at(a - 1).at(i, j).at(r);
}

const Element& ParabolicContext::e_root(int a, int b, int i, int j,
                                        int r) const {
    return gf_.E.at({a, b}).at(i, j).at(r);
}

const Element& ParabolicContext::f_root(int b, int a, int i, int j,
                                        int r) const {
    return gf_.F.at({b, a}).at(i, j).at(r);
}

const Element& ParabolicContext::e(int a, int i, int j, int r) const {
    return e_root(a, a + 1, i, j, r);
}

const Element& ParabolicContext::f(int a, int i, int j, int r) const {
    return f_root(a + 1, a, i, j, r);
}

TruncatedSeries ParabolicContext::series(Family fam, int a, int b, int i,
                                         int j) const {
    TruncatedSeries out(ctx_, order_);
    for (int r = 0; r <= order_; ++r) {
        ParabolicIndex idx{fam, a, b, i, j, r};
        out.at(r) = coeff(idx);
    }
    return out;
}

ParabolicPtr parabolic_context(AlgebraContext ctx, const Composition& mu,
                               int order) {
    using KeyT = std::tuple<int, int, Scalar, std::vector<int>, int>;
    static std::map<KeyT, ParabolicPtr> cache;
    static std::mutex lock;
    KeyT key{static_cast<int>(ctx.kind), ctx.n, ctx.p, mu.parts, order};
    {
        std::scoped_lock guard(lock);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    auto built = std::make_shared<const ParabolicContext>(ctx, mu, order);
    std::scoped_lock guard(lock);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(built));
    (void)inserted;
    return it->second;
}

Element sigma_e(const ParabolicContext& pc, const ShiftData& data, int a,
                int b, int i, int j, int r, int witness) {
    if (!(1 <= a && a < b && b <= data.m()))
        throw std::out_of_range("sigma_e: bad block pair");
    if (r <= data.s(a, b))
        throw std::out_of_range("sigma_e: superscript below the shift bound");
    if (b == a + 1)
        return pc.e(a, i, j, r);
    const int step = data.s(b - 1, b);
    const int k = witness > 0 ? witness : 1;
    if (k < 1 || k > data.mu.parts[b - 2])
        throw std::out_of_range("sigma_e: witness out of range");
    Element left = sigma_e(pc, data, a, b - 1, i, k, r - step, witness);
    const Element& right = pc.e(b - 1, k, j, step + 1);
    return commutator(left, right);
}

Element sigma_f(const ParabolicContext& pc, const ShiftData& data, int b,
                int a, int j, int i, int r, int witness) {
    if (!(1 <= a && a < b && b <= data.m()))
        throw std::out_of_range("sigma_f: bad block pair");
    if (r <= data.s(b, a))
        throw std::out_of_range("sigma_f: superscript below the shift bound");
    if (b == a + 1)
        return pc.f(a, j, i, r);
    const int step = data.s(b, b - 1);
    const int k = witness > 0 ? witness : 1;
    if (k < 1 || k > data.mu.parts[b - 2])
        throw std::out_of_range("sigma_f: witness out of range");
    const Element& left = pc.f(b - 1, j, k, step + 1);
    Element right = sigma_f(pc, data, b - 1, a, k, i, r - step, witness);
    return commutator(left, right);
}

std::vector<ParabolicIndex> shifted_generator_set(const ShiftData& data,
                                                  int budget) {
    std::vector<ParabolicIndex> out;
    const int m = data.m();
    for (int a = 1; a <= m; ++a)
        for (int i = 1; i <= data.mu.parts[a - 1]; ++i)
            for (int j = 1; j <= data.mu.parts[a - 1]; ++j)
                for (int r = 1; r <= budget; ++r)
                    out.push_back({Family::D, a, 0, i, j, r});
    for (int a = 1; a < m; ++a) {
        for (int i = 1; i <= data.mu.parts[a - 1]; ++i)
            for (int j = 1; j <= data.mu.parts[a]; ++j) {
                for (int r = data.s(a, a + 1) + 1; r <= budget; ++r)
                    out.push_back({Family::E, a, a + 1, i, j, r});
                for (int s = data.s(a + 1, a) + 1; s <= budget; ++s)
                    out.push_back({Family::F, a + 1, a, j, i, s});
            }
    }
    return out;
}

}  // namespace yangian
