#include "yangian/element.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace yangian {

namespace {

// Termination weight of a word. Straightening corrections strictly decrease
// it: an Rtt pair (r, s) rewrites into letters of total superscript r + s - 1;
// a Current pair rewrites into a single letter.
int word_weight(AlgebraKind kind, const Word& w) {
    if (kind == AlgebraKind::Current)
        return static_cast<int>(w.size());
    int t = 0;
    for (Gen g : w)
        t += gen_r(g);
    return t;
}

int word_inversions(const Word& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b])
                ++inv;
    return inv;
}

std::uint64_t pair_key(const AlgebraContext& ctx, Gen hi, Gen lo) {
    // kind/n/p participate so caches can be shared across contexts safely
    std::uint64_t k = (static_cast<std::uint64_t>(ctx.kind == AlgebraKind::Rtt ? 0 : 1) << 62) ^
                      (static_cast<std::uint64_t>(ctx.n) << 56) ^
                      (static_cast<std::uint64_t>(ctx.p) << 48);
    return k ^ (static_cast<std::uint64_t>(hi) << 24) ^ lo;
}

// Normal form of the commutator [hi, lo] of two generators, hi > lo in the
// PBW order. Memoized per worker thread; entries are pure values.
const Element& pair_commutator(const AlgebraContext& ctx, Gen hi, Gen lo) {
    static thread_local std::unordered_map<std::uint64_t, Element> memo;
    const std::uint64_t key = pair_key(ctx, hi, lo);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;

    const int i = gen_i(hi), j = gen_j(hi), r = gen_r(hi);
    const int k = gen_i(lo), l = gen_j(lo), s = gen_r(lo);
    std::map<Word, Scalar> bag;
    auto accumulate = [&](const Word& w, Scalar c) {
        if (c == 0)
            return;
        auto [pos, inserted] = bag.emplace(w, c);
        if (!inserted) {
            pos->second = add_mod(pos->second, c, ctx.p);
            if (pos->second == 0)
                bag.erase(pos);
        }
    };

    if (ctx.kind == AlgebraKind::Current) {
        // [e_{i,j}t^r, e_{k,l}t^s] = d_{k,j} e_{i,l}t^{r+s} - d_{l,i} e_{k,j}t^{r+s}
        if (k == j)
            accumulate({pack_gen(r + s, i, l)}, 1);
        if (l == i)
            accumulate({pack_gen(r + s, k, j)}, neg_mod(1, ctx.p));
    } else {
        // RTT: [t_{i,j}^{(r)}, t_{k,l}^{(s)}] =
        //   sum_{t=0}^{min(r,s)-1} ( t_{k,j}^{(t)} t_{i,l}^{(r+s-1-t)}
        //                          - t_{k,j}^{(r+s-1-t)} t_{i,l}^{(t)} )
        // with t^{(0)} = delta.
        const int tmax = std::min(r, s) - 1;
        for (int t = 0; t <= tmax; ++t) {
            const int t2 = r + s - 1 - t;
            if (t == 0) {
                if (k == j)
                    accumulate({pack_gen(t2, i, l)}, 1);
                if (i == l)
                    accumulate({pack_gen(t2, k, j)}, neg_mod(1, ctx.p));
            } else {
                accumulate({pack_gen(t, k, j), pack_gen(t2, i, l)}, 1);
                accumulate({pack_gen(t2, k, j), pack_gen(t, i, l)}, neg_mod(1, ctx.p));
            }
        }
    }
    // The raw two-letter words above can themselves be out of order; both have
    // strictly smaller weight than hi*lo, so the recursion is grounded.
    Element value = normalize_words(ctx, std::move(bag));
    auto [pos, ignored] = memo.emplace(key, std::move(value));
    (void)ignored;
    return pos->second;
}

}  // namespace

Element normalize_words(const AlgebraContext& ctx,
                        std::map<Word, Scalar>&& initial) {
    // Worklist keyed by (weight, inversions, word), processed greatest-first.
    // Every rewrite inserts strictly smaller keys (a swap keeps the weight and
    // removes an inversion; a commutator correction lowers the weight), so
    // each distinct word is processed at most once.
    using Key = std::tuple<int, int, Word>;
    std::map<Key, Scalar> pending;
    std::map<Word, Scalar> result;

    auto push = [&](Word&& w, Scalar c) {
        if (c == 0)
            return;
        if (word_sorted(w)) {
            auto [pos, inserted] = result.emplace(std::move(w), c);
            if (!inserted) {
                pos->second = add_mod(pos->second, c, ctx.p);
                if (pos->second == 0)
                    result.erase(pos);
            }
            return;
        }
        Key key{word_weight(ctx.kind, w), word_inversions(w), std::move(w)};
        auto [pos, inserted] = pending.emplace(std::move(key), c);
        if (!inserted) {
            pos->second = add_mod(pos->second, c, ctx.p);
            if (pos->second == 0)
                pending.erase(pos);
        }
    };

    for (auto& [w, c] : initial)
        push(Word(w), c);
    initial.clear();

    while (!pending.empty()) {
        auto top = std::prev(pending.end());
        const Word w = std::get<2>(top->first);
        const Scalar c = top->second;
        pending.erase(top);
        if (c == 0)
            continue;

        std::size_t k = 0;
        while (k + 1 < w.size() && w[k] <= w[k + 1])
            ++k;
        // w[k] > w[k+1]: rewrite g h -> h g + [g, h]
        Word swapped(w);
        std::swap(swapped[k], swapped[k + 1]);
        push(std::move(swapped), c);

        const Element& corr = pair_commutator(ctx, w[k], w[k + 1]);
        for (const auto& [mword, mc] : corr.terms()) {
            Word spliced;
            spliced.reserve(w.size() - 2 + mword.size());
            spliced.insert(spliced.end(), w.begin(), w.begin() + k);
            spliced.insert(spliced.end(), mword.begin(), mword.end());
            spliced.insert(spliced.end(), w.begin() + k + 2, w.end());
            push(std::move(spliced), mul_mod(c, mc, ctx.p));
        }
    }

    Element out(ctx);
    out.terms_.reserve(result.size());
    for (auto& [w, c] : result)
        out.terms_.emplace_back(w, c);
    return out;
}

Element Element::unit(AlgebraContext ctx, Scalar c) {
    Element e(ctx);
    c %= ctx.p;
    if (c != 0)
        e.terms_.emplace_back(Word{}, c);
    return e;
}

Element Element::generator(AlgebraContext ctx, int i, int j, int r) {
    if (i < 1 || i > ctx.n || j < 1 || j > ctx.n)
        throw std::invalid_argument("generator: index out of range");
    const int rmin = ctx.kind == AlgebraKind::Rtt ? 1 : 0;
    if (r < rmin)
        throw std::invalid_argument("generator: superscript out of range");
    Element e(ctx);
    e.terms_.emplace_back(Word{pack_gen(r, i, j)}, 1);
    return e;
}

Element Element::from_map(AlgebraContext ctx, std::map<Word, Scalar>&& m) {
    Element e(ctx);
    e.terms_.reserve(m.size());
    for (auto& [w, c] : m) {
        Scalar cc = c % ctx.p;
        if (cc != 0)
            e.terms_.emplace_back(w, cc);
    }
    return e;
}

Element& Element::operator+=(const Element& o) {
    if (terms_.empty() && o.terms_.empty())
        return *this;
    if (terms_.empty()) {
        *this = o;
        return *this;
    }
    if (o.terms_.empty())
        return *this;
    if (!(ctx_ == o.ctx_))
        throw std::invalid_argument("Element: context mismatch");
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < terms_.size() && b < o.terms_.size()) {
        if (terms_[a].first < o.terms_[b].first) {
            merged.push_back(std::move(terms_[a++]));
        } else if (o.terms_[b].first < terms_[a].first) {
            merged.push_back(o.terms_[b++]);
        } else {
            Scalar c = add_mod(terms_[a].second, o.terms_[b].second, ctx_.p);
            if (c != 0)
                merged.emplace_back(terms_[a].first, c);
            ++a, ++b;
        }
    }
    for (; a < terms_.size(); ++a)
        merged.push_back(std::move(terms_[a]));
    for (; b < o.terms_.size(); ++b)
        merged.push_back(o.terms_[b]);
    terms_ = std::move(merged);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    return *this += o.scaled(o.terms_.empty() ? 0 : neg_mod(1, o.ctx_.p));
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
}

Element Element::operator-() const { return scaled(neg_mod(1, ctx_.p)); }

Element Element::scaled(Scalar c) const {
    Element r(ctx_);
    c %= ctx_.p;
    if (c == 0 || terms_.empty())
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [w, cc] : terms_)
        r.terms_.emplace_back(w, mul_mod(cc, c, ctx_.p));
    return r;
}

Element Element::operator*(const Element& o) const {
    if (!(ctx_ == o.ctx_))
        throw std::invalid_argument("Element: context mismatch");
    std::map<Word, Scalar> bag;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            Scalar c = mul_mod(ca, cb, ctx_.p);
            auto [pos, inserted] = bag.emplace(std::move(w), c);
            if (!inserted) {
                pos->second = add_mod(pos->second, c, ctx_.p);
                if (pos->second == 0)
                    bag.erase(pos);
            }
        }
    }
    return normalize_words(ctx_, std::move(bag));
}

Element Element::pow(unsigned k) const {
    Element acc = Element::unit(ctx_);
    for (unsigned t = 0; t < k; ++t)
        acc = acc * *this;
    return acc;
}

Element Element::component(int d) const {
    Element r(ctx_);
    for (const auto& t : terms_)
        if (word_degree(ctx_.kind, t.first) == d)
            r.terms_.push_back(t);
    return r;
}

int Element::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, word_degree(ctx_.kind, t.first));
    return d;
}

Scalar Element::coefficient(const Word& w) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), w,
        [](const Term& t, const Word& key) { return t.first < key; });
    if (it != terms_.end() && it->first == w)
        return it->second;
    return 0;
}

Element normalize(const AlgebraContext& ctx,
                  const std::vector<std::array<int, 3>>& letters_ijr,
                  Scalar coeff) {
    Word w;
    w.reserve(letters_ijr.size());
    for (const auto& [i, j, r] : letters_ijr) {
        if (i < 1 || i > ctx.n || j < 1 || j > ctx.n)
            throw std::invalid_argument("normalize: index out of range");
        if (r < 0)
            throw std::invalid_argument("normalize: superscript out of range");
        if (ctx.kind == AlgebraKind::Rtt && r == 0) {
            // t^{(0)}_{i,j} = delta_{i,j}: drop the letter or kill the term
            if (i != j)
                return Element::zero(ctx);
            continue;
        }
        w.push_back(pack_gen(r, i, j));
    }
    std::map<Word, Scalar> bag;
    coeff %= ctx.p;
    if (coeff != 0)
        bag.emplace(std::move(w), coeff);
    return normalize_words(ctx, std::move(bag));
}

Element GeneratorMap::apply(const Element& x) const {
    if (!(x.context() == source))
        throw std::invalid_argument("GeneratorMap: element not in source context");
    Element out = Element::zero(target);
    for (const auto& [w, c] : x.terms()) {
        Element prod = Element::unit(target, c);
        if (!antihomomorphism) {
            for (Gen g : w) {
                auto it = images.find(g);
                if (it == images.end())
                    throw std::out_of_range("GeneratorMap: missing image for " +
                                            gen_str(source.kind, g));
                prod = prod * it->second;
            }
        } else {
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                auto im = images.find(*it);
                if (im == images.end())
                    throw std::out_of_range("GeneratorMap: missing image for " +
                                            gen_str(source.kind, *it));
                prod = prod * im->second;
            }
        }
        out += prod;
    }
    return out;
}

GeneratorMap GeneratorMap::then(const GeneratorMap& g) const {
    if (!(target == g.source))
        throw std::invalid_argument("GeneratorMap: contexts do not chain");
    GeneratorMap out;
    out.source = source;
    out.target = g.target;
    out.antihomomorphism = antihomomorphism != g.antihomomorphism;
    for (const auto& [gen, img] : images)
        out.images.emplace(gen, g.apply(img));
    return out;
}

std::string gen_str(AlgebraKind kind, Gen g) {
    std::ostringstream os;
    if (kind == AlgebraKind::Rtt)
        os << "t[" << gen_i(g) << "," << gen_j(g) << "]^(" << gen_r(g) << ")";
    else
        os << "e[" << gen_i(g) << "," << gen_j(g) << "]t^" << gen_r(g);
    return os.str();
}

std::string word_str(AlgebraKind kind, const Word& w) {
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k)
            s += " ";
        s += gen_str(kind, w[k]);
    }
    return s;
}

std::string Element::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1 || w.empty())
            os << c;
        if (!w.empty()) {
            if (c != 1)
                os << "*";
            os << word_str(ctx_.kind, w);
        }
    }
    return os.str();
}

}  // namespace yangian
