#pragma once

#include <vector>

#include "yangian/element.hpp"

namespace yangian {

// A composition mu = (mu_1, ..., mu_m) of n with partial sums
// p_a(mu) = mu_1 + ... + mu_{a-1}.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> ps);

    int total() const;
    int length() const { return static_cast<int>(parts.size()); }
    // 1-based block index a -> p_a(mu); a may be length()+1.
    int partial_sum(int a) const;

    bool operator==(const Composition&) const = default;
    std::string str() const;
};

// All compositions of n, in a fixed deterministic order.
std::vector<Composition> all_compositions(int n);

// Truncated series sum_{r=0}^{N} c_r u^{-r} with Element coefficients.
// Every retained coefficient is exact; arithmetic never consults coefficients
// beyond the truncation order.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    TruncatedSeries(AlgebraContext ctx, int order);

    static TruncatedSeries unit(AlgebraContext ctx, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const AlgebraContext& context() const { return ctx_; }
    const Element& at(int r) const;
    Element& at(int r);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(Scalar c) const;
    bool operator==(const TruncatedSeries& o) const = default;
    bool is_zero() const;

    // f(u + c) for an integer shift c, via the binomial expansion of
    // (u + c)^{-r}; binomials are taken mod p by Lucas.
    TruncatedSeries shift_argument(long long c) const;

    // Multiplicative inverse; requires the constant term to be the unit.
    TruncatedSeries inverse() const;

    // Drops to a smaller truncation order.
    TruncatedSeries truncated(int order) const;

  private:
    AlgebraContext ctx_;
    std::vector<Element> coeffs_;
};

// A rows x cols matrix of series at one truncation order.
class SeriesMatrix {
  public:
    SeriesMatrix() = default;
    SeriesMatrix(AlgebraContext ctx, int rows, int cols, int order);

    static SeriesMatrix identity(AlgebraContext ctx, int size, int order);
    // The matrix T(u) of generating series t_{i,j}(u) truncated at order.
    static SeriesMatrix generic_t(AlgebraContext ctx, int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const;
    const AlgebraContext& context() const { return ctx_; }

    const TruncatedSeries& at(int i, int j) const;  // 1-based
    TruncatedSeries& at(int i, int j);

    SeriesMatrix operator+(const SeriesMatrix& o) const;
    SeriesMatrix operator-(const SeriesMatrix& o) const;
    SeriesMatrix operator*(const SeriesMatrix& o) const;
    bool operator==(const SeriesMatrix& o) const = default;
    bool is_zero() const;

    SeriesMatrix shift_argument(long long c) const;
    // Inverse of a square matrix whose constant term is the identity.
    SeriesMatrix inverse() const;

    // 1-based inclusive row/column ranges.
    SeriesMatrix submatrix(int r0, int r1, int c0, int c1) const;

  private:
    AlgebraContext ctx_;
    int rows_ = 0, cols_ = 0;
    std::vector<TruncatedSeries> cells_;
};

}  // namespace yangian
