#include "yangian/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace yangian {

Composition::Composition(std::vector<int> ps) : parts(std::move(ps)) {
    for (int part : parts)
        if (part < 1)
            throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Composition::partial_sum(int a) const {
    if (a < 1 || a > length() + 1)
        throw std::out_of_range("Composition: block index out of range");
    int s = 0;
    for (int b = 0; b + 1 < a; ++b)
        s += parts[b];
    return s;
}

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k)
            os << ",";
        os << parts[k];
    }
    os << ")";
    return os.str();
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            self(self, rest - part);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

TruncatedSeries::TruncatedSeries(AlgebraContext ctx, int order) : ctx_(ctx) {
    if (order < 0)
        throw std::invalid_argument("TruncatedSeries: negative order");
    coeffs_.assign(order + 1, Element::zero(ctx));
}

TruncatedSeries TruncatedSeries::unit(AlgebraContext ctx, int order) {
    TruncatedSeries f(ctx, order);
    f.coeffs_[0] = Element::unit(ctx);
    return f;
}

const Element& TruncatedSeries::at(int r) const {
    if (r < 0 || r > order())
        throw std::out_of_range("TruncatedSeries: coefficient beyond truncation");
    return coeffs_[r];
}

Element& TruncatedSeries::at(int r) {
    if (r < 0 || r > order())
        throw std::out_of_range("TruncatedSeries: coefficient beyond truncation");
    return coeffs_[r];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (order() != o.order())
        throw std::invalid_argument("TruncatedSeries: order mismatch");
    TruncatedSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k)
        r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (order() != o.order())
        throw std::invalid_argument("TruncatedSeries: order mismatch");
    TruncatedSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k)
        r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (order() != o.order())
        throw std::invalid_argument("TruncatedSeries: order mismatch");
    TruncatedSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k) {
        Element acc = Element::zero(ctx_);
        for (int s = 0; s <= k; ++s) {
            if (coeffs_[s].is_zero() || o.coeffs_[k - s].is_zero())
                continue;
            acc += coeffs_[s] * o.coeffs_[k - s];
        }
        r.coeffs_[k] = std::move(acc);
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(Scalar c) const {
    TruncatedSeries r(ctx_, order());
    for (int k = 0; k <= order(); ++k)
        r.coeffs_[k] = coeffs_[k].scaled(c);
    return r;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

TruncatedSeries TruncatedSeries::shift_argument(long long c) const {
    // f(u+c): coefficient m picks up sum_{r=1..m} f_r binom(m-1, m-r) (-c)^{m-r},
    // plus f_0 at m = 0.
    const Scalar p = ctx_.p;
    const Scalar mc = reduce_mod(-c, p);
    TruncatedSeries out(ctx_, order());
    out.coeffs_[0] = coeffs_[0];
    for (int m = 1; m <= order(); ++m) {
        Element acc = Element::zero(ctx_);
        Scalar power = 1;  // (-c)^{m-r} built from r = m downwards
        for (int r = m; r >= 1; --r) {
            const Scalar b = binomial_mod(m - 1, m - r, p);
            const Scalar factor = mul_mod(b, power, p);
            if (factor != 0 && !coeffs_[r].is_zero())
                acc += coeffs_[r].scaled(factor);
            power = mul_mod(power, mc, p);
        }
        out.coeffs_[m] = std::move(acc);
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (!(coeffs_[0] == Element::unit(ctx_)))
        throw std::domain_error("TruncatedSeries: constant term is not 1");
    TruncatedSeries g(ctx_, order());
    g.coeffs_[0] = Element::unit(ctx_);
    for (int r = 1; r <= order(); ++r) {
        Element acc = Element::zero(ctx_);
        for (int s = 1; s <= r; ++s)
            if (!coeffs_[s].is_zero())
                acc += coeffs_[s] * g.coeffs_[r - s];
        g.coeffs_[r] = -acc;
    }
    return g;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order > this->order())
        throw std::invalid_argument("TruncatedSeries: cannot extend truncation");
    TruncatedSeries out(ctx_, order);
    for (int r = 0; r <= order; ++r)
        out.coeffs_[r] = coeffs_[r];
    return out;
}

SeriesMatrix::SeriesMatrix(AlgebraContext ctx, int rows, int cols, int order)
    : ctx_(ctx), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("SeriesMatrix: empty shape");
    cells_.assign(static_cast<std::size_t>(rows) * cols,
                  TruncatedSeries(ctx, order));
}

SeriesMatrix SeriesMatrix::identity(AlgebraContext ctx, int size, int order) {
    SeriesMatrix m(ctx, size, size, order);
    for (int i = 1; i <= size; ++i)
        m.at(i, i) = TruncatedSeries::unit(ctx, order);
    return m;
}

SeriesMatrix SeriesMatrix::generic_t(AlgebraContext ctx, int order) {
    SeriesMatrix m(ctx, ctx.n, ctx.n, order);
    for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.n; ++j) {
            TruncatedSeries s(ctx, order);
            if (i == j)
                s.at(0) = Element::unit(ctx);
            for (int r = 1; r <= order; ++r)
                s.at(r) = Element::generator(ctx, i, j, r);
            m.at(i, j) = std::move(s);
        }
    return m;
}

int SeriesMatrix::order() const { return cells_.at(0).order(); }

const TruncatedSeries& SeriesMatrix::at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("SeriesMatrix: index out of range");
    return cells_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
}

TruncatedSeries& SeriesMatrix::at(int i, int j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("SeriesMatrix: index out of range");
    return cells_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix r(ctx_, rows_, cols_, order());
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix r(ctx_, rows_, cols_, order());
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix r(ctx_, rows_, o.cols_, order());
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= o.cols_; ++j) {
            TruncatedSeries acc(ctx_, order());
            for (int k = 1; k <= cols_; ++k)
                acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

bool SeriesMatrix::is_zero() const {
    for (const auto& ts : cells_)
        if (!ts.is_zero())
            return false;
    return true;
}

SeriesMatrix SeriesMatrix::shift_argument(long long c) const {
    SeriesMatrix r(ctx_, rows_, cols_, order());
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            r.at(i, j) = at(i, j).shift_argument(c);
    return r;
}

SeriesMatrix SeriesMatrix::inverse() const {
    if (rows_ != cols_)
        throw std::invalid_argument("SeriesMatrix: inverse of non-square matrix");
    const int N = order();
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) {
            const Element& c0 = at(i, j).at(0);
            const bool ok = (i == j) ? c0 == Element::unit(ctx_) : c0.is_zero();
            if (!ok)
                throw std::domain_error(
                    "SeriesMatrix: constant term is not the identity");
        }
    // G_0 = I, G_r = -sum_{s=1..r} F_s G_{r-s}
    SeriesMatrix g = identity(ctx_, rows_, N);
    for (int r = 1; r <= N; ++r) {
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j) {
                Element acc = Element::zero(ctx_);
                for (int s = 1; s <= r; ++s)
                    for (int k = 1; k <= cols_; ++k) {
                        const Element& fs = at(i, k).at(s);
                        const Element& gr = g.at(k, j).at(r - s);
                        if (!fs.is_zero() && !gr.is_zero())
                            acc += fs * gr;
                    }
                g.at(i, j).at(r) = -acc;
            }
    }
    return g;
}

SeriesMatrix SeriesMatrix::submatrix(int r0, int r1, int c0, int c1) const {
    if (r0 < 1 || r1 > rows_ || c0 < 1 || c1 > cols_ || r0 > r1 || c0 > c1)
        throw std::out_of_range("SeriesMatrix: bad submatrix range");
    SeriesMatrix out(ctx_, r1 - r0 + 1, c1 - c0 + 1, order());
    for (int i = r0; i <= r1; ++i)
        for (int j = c0; j <= c1; ++j)
            out.at(i - r0 + 1, j - c0 + 1) = at(i, j);
    return out;
}

}  // namespace yangian
