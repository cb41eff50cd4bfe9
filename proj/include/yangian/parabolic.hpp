#pragma once

#include <memory>

#include "yangian/gauss.hpp"
#include "yangian/shift.hpp"

namespace yangian {

enum class Family : std::uint8_t { D, Dprime, E, F };

// Address of one parabolic generator coefficient. (a, b) are the block row
// and block column of the entry: D/Dprime sit at (a, a), E_{a,b} has a < b,
// F_{b,a} is addressed with a = b (row) and b = a (column), i.e. row > col.
// b = 0 selects the adjacent family: column a+1 for E, column a-1 for F.
struct ParabolicIndex {
    Family family = Family::D;
    int a = 1;
    int b = 0;
    int i = 1;
    int j = 1;
    int r = 0;

    std::string str() const;
};

// Gauss factors of the generic matrix T(u) for one (n, p, mu, N), with exact
// coefficient extraction. Building one is the expensive step, so instances
// are cached behind shared_ptr and safe to share between workers.
class ParabolicContext {
  public:
    ParabolicContext(AlgebraContext ctx, Composition mu, int order);

    const AlgebraContext& context() const { return ctx_; }
    const Composition& mu() const { return mu_; }
    int order() const { return order_; }
    const GaussFactors& factors() const { return gf_; }

    // D^{(r)}_{a;i,j}, D'^{(r)}_{a;i,j}, E^{(r)}_{a,b;i,j}, F^{(r)}_{b,a;i,j}.
    // Throws std::out_of_range when r exceeds the truncation order (a budget
    // error, not a verification failure).
    const Element& coeff(const ParabolicIndex& idx) const;
    const Element& d(int a, int i, int j, int r) const;
    const Element& dprime(int a, int i, int j, int r) const;
    const Element& e(int a, int i, int j, int r) const;  // block pair (a, a+1)
    const Element& f(int a, int i, int j, int r) const;  // block pair (a+1, a)
    const Element& e_root(int a, int b, int i, int j, int r) const;
    const Element& f_root(int b, int a, int i, int j, int r) const;

    // Full series for one entry, to the context order.
    TruncatedSeries series(Family fam, int a, int b, int i, int j) const;

  private:
    AlgebraContext ctx_;
    Composition mu_;
    int order_;
    GaussFactors gf_;
};

using ParabolicPtr = std::shared_ptr<const ParabolicContext>;

// Process-wide cache keyed by (kind, n, p, mu, order).
ParabolicPtr parabolic_context(AlgebraContext ctx, const Composition& mu,
                               int order);

// Higher-root generators. With a trivial shift (all block shifts zero) these
// are the E_{a,b}/F_{b,a} coefficients; in general they are the sigma-graded
// commutator recursion seeded at the adjacent family. witness selects the
// inner index k (1-based); 0 picks k = 1. The result is independent of the
// witness.
Element sigma_e(const ParabolicContext& pc, const ShiftData& data, int a,
                int b, int i, int j, int r, int witness = 0);
Element sigma_f(const ParabolicContext& pc, const ShiftData& data, int b,
                int a, int j, int i, int r, int witness = 0);

// The generating family of Y_n(sigma) up to superscript budget: all D^{(r)},
// r <= budget, and the adjacent E/F coefficients above their shift bounds.
std::vector<ParabolicIndex> shifted_generator_set(const ShiftData& data,
                                                  int budget);

}  // namespace yangian
