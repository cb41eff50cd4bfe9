#include "yangian/bivariate.hpp"

#include <stdexcept>

namespace yangian {

BivariateSeries::BivariateSeries(AlgebraContext ctx, int order)
    : ctx_(ctx), order_(order) {
    if (order < 0)
        throw std::invalid_argument("BivariateSeries: negative order");
    cells_.assign(static_cast<std::size_t>(order + 1) * (order + 2) / 2,
                  Element::zero(ctx));
}

std::size_t BivariateSeries::offset(int r, int s) const {
    if (r < 0 || s < 0 || r + s > order_)
        throw std::out_of_range("BivariateSeries: cell outside triangle");
    // cells grouped by total degree d = r + s, then by r
    const int d = r + s;
    return static_cast<std::size_t>(d) * (d + 1) / 2 + r;
}

BivariateSeries BivariateSeries::in_u(const TruncatedSeries& f, int order) {
    if (f.order() < order)
        throw std::invalid_argument("BivariateSeries: source series too short");
    BivariateSeries out(f.context(), order);
    for (int r = 0; r <= order; ++r)
        out.at(r, 0) = f.at(r);
    return out;
}

BivariateSeries BivariateSeries::in_v(const TruncatedSeries& f, int order) {
    if (f.order() < order)
        throw std::invalid_argument("BivariateSeries: source series too short");
    BivariateSeries out(f.context(), order);
    for (int s = 0; s <= order; ++s)
        out.at(0, s) = f.at(s);
    return out;
}

const Element& BivariateSeries::at(int r, int s) const {
    return cells_[offset(r, s)];
}

Element& BivariateSeries::at(int r, int s) { return cells_[offset(r, s)]; }

BivariateSeries BivariateSeries::operator+(const BivariateSeries& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("BivariateSeries: order mismatch");
    BivariateSeries out(ctx_, order_);
    for (std::size_t k = 0; k < cells_.size(); ++k)
        out.cells_[k] = cells_[k] + o.cells_[k];
    return out;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("BivariateSeries: order mismatch");
    BivariateSeries out(ctx_, order_);
    for (std::size_t k = 0; k < cells_.size(); ++k)
        out.cells_[k] = cells_[k] - o.cells_[k];
    return out;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("BivariateSeries: order mismatch");
    BivariateSeries out(ctx_, order_);
    for (int r1 = 0; r1 <= order_; ++r1)
        for (int s1 = 0; r1 + s1 <= order_; ++s1) {
            const Element& a = at(r1, s1);
            if (a.is_zero())
                continue;
            for (int r2 = 0; r1 + s1 + r2 <= order_; ++r2)
                for (int s2 = 0; r1 + s1 + r2 + s2 <= order_; ++s2) {
                    const Element& b = o.at(r2, s2);
                    if (b.is_zero())
                        continue;
                    out.at(r1 + r2, s1 + s2) += a * b;
                }
        }
    return out;
}

BivariateSeries BivariateSeries::scaled(Scalar c) const {
    BivariateSeries out(ctx_, order_);
    for (std::size_t k = 0; k < cells_.size(); ++k)
        out.cells_[k] = cells_[k].scaled(c);
    return out;
}

bool BivariateSeries::is_zero() const {
    for (const auto& e : cells_)
        if (!e.is_zero())
            return false;
    return true;
}

BivariateSeries BivariateSeries::mul_u_minus_v() const {
    if (order_ < 1)
        throw std::invalid_argument("BivariateSeries: order too small");
    BivariateSeries out(ctx_, order_ - 1);
    for (int r = 0; r < order_; ++r)
        for (int s = 0; r + s < order_; ++s)
            out.at(r, s) = at(r + 1, s) - at(r, s + 1);
    return out;
}

}  // namespace yangian
