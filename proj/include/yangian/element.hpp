#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yangian/context.hpp"

namespace yangian {

// A generator symbol packed into 32 bits as (r << 16) | (i << 8) | j.
// For the Rtt kind, r >= 1 is the superscript of t_{i,j}^{(r)} (r = 0 is the
// scalar delta and is never stored in a word). For the Current kind the high
// field holds the power of t in e_{i,j}t^r, r >= 0.
// Numeric order on the packed value equals lexicographic order on (r, i, j),
// which is the fixed PBW order throughout.
using Gen = std::uint32_t;

inline constexpr Gen pack_gen(int r, int i, int j) {
    return (static_cast<Gen>(r) << 16) | (static_cast<Gen>(i) << 8) |
           static_cast<Gen>(j);
}
inline constexpr int gen_r(Gen g) { return static_cast<int>(g >> 16); }
inline constexpr int gen_i(Gen g) { return static_cast<int>((g >> 8) & 0xff); }
inline constexpr int gen_j(Gen g) { return static_cast<int>(g & 0xff); }

// A PBW word: generator codes in non-decreasing order.
using Word = std::vector<Gen>;

inline bool word_sorted(const Word& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k - 1] > w[k])
            return false;
    return true;
}

// Filtration degree of a single letter: loop degree r - 1 for t^{(r)},
// t-degree r for e t^r.
inline int gen_degree(AlgebraKind kind, Gen g) {
    return kind == AlgebraKind::Rtt ? gen_r(g) - 1 : gen_r(g);
}

inline int word_degree(AlgebraKind kind, const Word& w) {
    int d = 0;
    for (Gen g : w)
        d += gen_degree(kind, g);
    return d;
}

// An exact linear combination of PBW words over F_p. Terms are kept sorted by
// word (vector lexicographic order) with nonzero coefficients, so equality is
// structural.
class Element {
  public:
    using Term = std::pair<Word, Scalar>;

    Element() = default;
    explicit Element(AlgebraContext ctx) : ctx_(ctx) {}

    static Element zero(AlgebraContext ctx) { return Element(ctx); }
    static Element unit(AlgebraContext ctx, Scalar c = 1);
    // Single generator as an element; validates index ranges.
    static Element generator(AlgebraContext ctx, int i, int j, int r);
    // Takes ownership of an accumulated word->coeff map.
    static Element from_map(AlgebraContext ctx, std::map<Word, Scalar>&& m);

    const AlgebraContext& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const Element& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;  // PBW-normalized product
    Element scaled(Scalar c) const;

    // x^k by repeated multiplication, k >= 0.
    Element pow(unsigned k) const;

    // Sum of the terms of filtration degree exactly d.
    Element component(int d) const;
    // Largest degree with a nonzero component; -1 for the zero element.
    int degree() const;

    // Coefficient of a given (sorted) word, 0 if absent.
    Scalar coefficient(const Word& w) const;

    std::string str() const;

  private:
    AlgebraContext ctx_;
    std::vector<Term> terms_;

    friend Element normalize_words(const AlgebraContext& ctx,
                                   std::map<Word, Scalar>&& pending);
};

inline Element commutator(const Element& x, const Element& y) {
    return x * y - y * x;
}

// PBW normal form of an arbitrary input word with coefficient coeff.
// Letters may carry r = 0 (Rtt kind): t^{(0)}_{i,j} is the scalar delta_{i,j}
// and is folded away. Indices are validated against the context.
Element normalize(const AlgebraContext& ctx,
                  const std::vector<std::array<int, 3>>& letters_ijr,
                  Scalar coeff);

// Internal engine entry: normalizes an accumulated bag of raw words.
Element normalize_words(const AlgebraContext& ctx,
                        std::map<Word, Scalar>&& pending);

// A finite generator-image table realizing an (anti)homomorphism on the
// window of generators it covers. Application fails loudly on a generator
// without an image.
struct GeneratorMap {
    AlgebraContext source;
    AlgebraContext target;
    bool antihomomorphism = false;
    std::map<Gen, Element> images;

    Element apply(const Element& x) const;
    // Table of this map followed by g (images composed inside g's target).
    GeneratorMap then(const GeneratorMap& g) const;
};

std::string gen_str(AlgebraKind kind, Gen g);
std::string word_str(AlgebraKind kind, const Word& w);

}  // namespace yangian
