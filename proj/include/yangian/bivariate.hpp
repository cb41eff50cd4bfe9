#pragma once

#include "yangian/series.hpp"

namespace yangian {

// A series in u^{-1}, v^{-1} truncated to total degree r + s <= order.
// Products are exact on the retained triangle.
class BivariateSeries {
  public:
    BivariateSeries() = default;
    BivariateSeries(AlgebraContext ctx, int order);

    // Embeddings of a univariate series as a series in u only / v only.
    // The source must carry coefficients at least to the requested order.
    static BivariateSeries in_u(const TruncatedSeries& f, int order);
    static BivariateSeries in_v(const TruncatedSeries& f, int order);

    int order() const { return order_; }
    const AlgebraContext& context() const { return ctx_; }

    const Element& at(int r, int s) const;
    Element& at(int r, int s);

    BivariateSeries operator+(const BivariateSeries& o) const;
    BivariateSeries operator-(const BivariateSeries& o) const;
    BivariateSeries operator*(const BivariateSeries& o) const;
    BivariateSeries scaled(Scalar c) const;
    bool operator==(const BivariateSeries& o) const = default;
    bool is_zero() const;

    // (u - v) * this, exact to order() - 1.
    BivariateSeries mul_u_minus_v() const;

  private:
    AlgebraContext ctx_;
    int order_ = 0;
    std::vector<Element> cells_;  // triangular, offset(r, s)

    std::size_t offset(int r, int s) const;
};

inline BivariateSeries bicommutator(const BivariateSeries& x,
                                    const BivariateSeries& y) {
    return x * y - y * x;
}

}  // namespace yangian
