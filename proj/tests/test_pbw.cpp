#include "doctest.h"

#include <map>
#include <random>

#include "yangian/element.hpp"

using namespace yangian;

namespace {

using Letters = std::vector<std::array<int, 3>>;

// Independent straightening oracle: recursive, no memoization, no worklist.
// Applies the defining commutation rule to the first out-of-order pair.
void naive_normalize(const AlgebraContext& ctx, const Word& w, Scalar c,
                     std::map<Word, Scalar>& acc) {
    if (c == 0)
        return;
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1])
        ++k;
    if (w.size() < 2 || k + 1 == w.size()) {
        acc[w] = add_mod(acc[w], c, ctx.p);
        if (acc[w] == 0)
            acc.erase(w);
        return;
    }
    Word swapped(w);
    std::swap(swapped[k], swapped[k + 1]);
    naive_normalize(ctx, swapped, c, acc);

    const Gen g = w[k], h = w[k + 1];
    const int i = gen_i(g), j = gen_j(g), r = gen_r(g);
    const int ki = gen_i(h), l = gen_j(h), s = gen_r(h);
    auto splice = [&](const Word& mid, Scalar cc) {
        Word nw(w.begin(), w.begin() + k);
        nw.insert(nw.end(), mid.begin(), mid.end());
        nw.insert(nw.end(), w.begin() + k + 2, w.end());
        naive_normalize(ctx, nw, cc, acc);
    };
    for (int t = 0; t <= std::min(r, s) - 1; ++t) {
        const int t2 = r + s - 1 - t;
        if (t == 0) {
            if (ki == j)
                splice({pack_gen(t2, i, l)}, c);
            if (i == l)
                splice({pack_gen(t2, ki, j)}, mul_mod(c, ctx.p - 1, ctx.p));
        } else {
            splice({pack_gen(t, ki, j), pack_gen(t2, i, l)}, c);
            splice({pack_gen(t2, ki, j), pack_gen(t, i, l)},
                   mul_mod(c, ctx.p - 1, ctx.p));
        }
    }
}

Element naive_element(const AlgebraContext& ctx, const Word& w, Scalar c) {
    std::map<Word, Scalar> acc;
    naive_normalize(ctx, w, c, acc);
    return Element::from_map(ctx, std::move(acc));
}

Element random_element(const AlgebraContext& ctx, std::mt19937_64& rng,
                       int max_len, int max_weight) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> idx(1, ctx.n);
    std::uniform_int_distribution<int> coeff(1, static_cast<int>(ctx.p) - 1);
    Letters letters;
    int weight = 0;
    const int len = len_dist(rng);
    for (int t = 0; t < len; ++t) {
        std::uniform_int_distribution<int> rsup(1, std::max(1, max_weight - weight));
        int r = rsup(rng);
        if (weight + r > max_weight)
            break;
        weight += r;
        letters.push_back({idx(rng), idx(rng), r});
    }
    return normalize(ctx, letters, static_cast<Scalar>(coeff(rng)));
}

}  // namespace

TEST_CASE("normalize: ordered, straightened and unit cases") {
    auto ctx = rtt_context(2, 3);

    Element a = normalize(ctx, {{1, 1, 1}}, 1);
    CHECK(a == Element::generator(ctx, 1, 1, 1));

    // one application of the defining commutation rule, r = s = 1
    Element b = normalize(ctx, {{2, 1, 1}, {1, 2, 1}}, 1);
    Element expect =
        Element::generator(ctx, 1, 2, 1) * Element::generator(ctx, 2, 1, 1) -
        Element::generator(ctx, 1, 1, 1) + Element::generator(ctx, 2, 2, 1);
    CHECK(b == expect);
    CHECK(b == naive_element(ctx, {pack_gen(1, 2, 1), pack_gen(1, 1, 2)}, 1));

    CHECK(normalize(ctx, {}, 1) == Element::unit(ctx));

    // r = 0 letters fold into deltas
    CHECK(normalize(ctx, {{1, 1, 0}, {1, 2, 1}}, 1) ==
          Element::generator(ctx, 1, 2, 1));
    CHECK(normalize(ctx, {{1, 2, 0}}, 1).is_zero());

    CHECK_THROWS_AS(normalize(ctx, {{3, 1, 1}}, 1), std::invalid_argument);
}

TEST_CASE("normalize is idempotent on its own output") {
    auto ctx = rtt_context(2, 5);
    std::mt19937_64 rng(20240811);
    for (int t = 0; t < 50; ++t) {
        Element x = random_element(ctx, rng, 3, 6);
        for (const auto& [w, c] : x.terms()) {
            std::map<Word, Scalar> one;
            one[w] = c;
            Element again = normalize_words(ctx, std::move(one));
            REQUIRE(again.terms().size() == 1);
            CHECK(again.terms()[0].first == w);
            CHECK(again.terms()[0].second == c);
        }
    }
}

TEST_CASE("multiply: unit, ordered pair, commuting straightening") {
    auto ctx = rtt_context(2, 3);
    Element x = normalize(ctx, {{1, 2, 1}, {2, 1, 2}}, 2);
    CHECK(Element::unit(ctx) * x == x);
    CHECK(x * Element::unit(ctx) == x);

    Element t11_1 = Element::generator(ctx, 1, 1, 1);
    Element t11_2 = Element::generator(ctx, 1, 1, 2);
    Element prod = t11_1 * t11_2;
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms()[0].first == Word{pack_gen(1, 1, 1), pack_gen(2, 1, 1)});

    Element t21 = Element::generator(ctx, 2, 1, 1);
    Element t12 = Element::generator(ctx, 1, 2, 1);
    CHECK(t21 * t12 == normalize(ctx, {{2, 1, 1}, {1, 2, 1}}, 1));
}

TEST_CASE("commutator examples") {
    auto ctx = rtt_context(2, 3);
    Element t11_1 = Element::generator(ctx, 1, 1, 1);
    Element t11_2 = Element::generator(ctx, 1, 1, 2);
    CHECK(commutator(t11_1, t11_2).is_zero());

    Element t12 = Element::generator(ctx, 1, 2, 1);
    Element t21 = Element::generator(ctx, 2, 1, 1);
    CHECK(commutator(t12, t21) ==
          Element::generator(ctx, 1, 1, 1) - Element::generator(ctx, 2, 2, 1));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        Element x = random_element(ctx, rng, 3, 6);
        CHECK(commutator(x, x).is_zero());
    }
}

TEST_CASE("powers: unit, single generator, sum with naive oracle") {
    auto ctx = rtt_context(2, 3);
    CHECK(Element::unit(ctx).pow(3) == Element::unit(ctx));

    Element t12 = Element::generator(ctx, 1, 2, 1);
    Element cube = t12.pow(3);
    REQUIRE(cube.terms().size() == 1);
    CHECK(cube.terms()[0].first ==
          Word{pack_gen(1, 1, 2), pack_gen(1, 1, 2), pack_gen(1, 1, 2)});

    // (t11 + t22)^3 expanded by the naive non-memoized expander
    Element sum = Element::generator(ctx, 1, 1, 1) +
                  Element::generator(ctx, 2, 2, 1);
    Element engine = sum.pow(3);
    Element oracle = Element::zero(ctx);
    const Gen letters[2] = {pack_gen(1, 1, 1), pack_gen(1, 2, 2)};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                oracle += naive_element(ctx, {letters[a], letters[b], letters[c]}, 1);
    CHECK(engine == oracle);
}

TEST_CASE("associativity fuzz against exact triple products") {
    for (Scalar p : {3u, 5u}) {
        auto ctx = rtt_context(2, p);
        std::mt19937_64 rng(1000 + p);
        for (int t = 0; t < 150; ++t) {
            Element x = random_element(ctx, rng, 2, 6);
            Element y = random_element(ctx, rng, 2, 6);
            Element z = random_element(ctx, rng, 2, 6);
            CHECK((x * y) * z == x * (y * z));
        }
    }
}

TEST_CASE("loop degree: components and subadditivity") {
    auto ctx = rtt_context(2, 3);
    Element x = Element::generator(ctx, 1, 1, 2) * Element::generator(ctx, 1, 1, 1) +
                Element::generator(ctx, 1, 2, 1);
    CHECK(x.component(1) ==
          Element::generator(ctx, 1, 1, 2) * Element::generator(ctx, 1, 1, 1));
    CHECK(x.component(5).is_zero());
    CHECK(x.degree() == 1);

    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        Element x1 = random_element(ctx, rng, 3, 6);
        Element y1 = random_element(ctx, rng, 3, 6);
        Element prod = x1 * y1;
        if (!x1.is_zero() && !y1.is_zero() && !prod.is_zero())
            CHECK(prod.degree() <= x1.degree() + y1.degree());
    }

    // commutator of two generators drops the superscript weight (the
    // straightening termination metric) by at least one, and never exceeds
    // the loop degree of the product
    auto weight = [](const Word& w) {
        int t = 0;
        for (Gen g : w)
            t += gen_r(g);
        return t;
    };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    for (int r = 1; r <= 3; ++r)
                        for (int s = 1; s <= 3; ++s) {
                            Element c = commutator(Element::generator(ctx, i, j, r),
                                                   Element::generator(ctx, k, l, s));
                            if (c.is_zero())
                                continue;
                            CHECK(c.degree() <= (r - 1) + (s - 1));
                            for (const auto& [w, cc] : c.terms())
                                CHECK(weight(w) <= r + s - 1);
                        }
}

TEST_CASE("PBW monomials of bounded degree match commutative counts") {
    // For n = 2: words in t^{(r)}_{i,j} of length <= 3 and loop degree d match
    // multisets of symbols e_{i,j}t^s of the same length and degree, and every
    // sorted word is already a normal form.
    auto ctx = rtt_context(2, 3);
    const int max_len = 3;
    for (int d = 0; d <= 4; ++d) {
        // commutative count: multisets of (i,j,s) with sum of s equal to d
        std::vector<Gen> alphabet;
        for (int s = 0; s <= d; ++s)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    alphabet.push_back(pack_gen(s, i, j));
        std::size_t commutative = 0;
        std::size_t pbw = 0;
        // enumerate non-decreasing index sequences (multisets) of length 1..max_len
        for (int len = 1; len <= max_len; ++len) {
            std::vector<std::size_t> pick(len, 0);
            while (true) {
                int deg = 0;
                for (auto v : pick)
                    deg += gen_r(alphabet[v]);
                if (deg == d) {
                    ++commutative;
                    Word w;
                    for (auto v : pick) {
                        Gen g = alphabet[v];
                        w.push_back(pack_gen(gen_r(g) + 1, gen_i(g), gen_j(g)));
                    }
                    std::sort(w.begin(), w.end());
                    std::map<Word, Scalar> one;
                    one[w] = 1;
                    Element nf = normalize_words(ctx, std::move(one));
                    REQUIRE(nf.terms().size() == 1);
                    REQUIRE(nf.terms()[0].first == w);
                    ++pbw;
                }
                int pos = len - 1;
                while (pos >= 0 && pick[pos] == alphabet.size() - 1)
                    --pos;
                if (pos < 0)
                    break;
                ++pick[pos];
                for (int q = pos + 1; q < len; ++q)
                    pick[q] = pick[pos];
            }
        }
        CHECK(pbw == commutative);
        CHECK(pbw > 0);
    }
}

TEST_CASE("generator maps: identity, transposition, permutation") {
    auto ctx = rtt_context(3, 3);

    GeneratorMap ident{ctx, ctx, false, {}};
    GeneratorMap tau{ctx, ctx, true, {}};
    GeneratorMap swap12{ctx, ctx, false, {}};
    for (int r = 1; r <= 4; ++r)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                Gen g = pack_gen(r, i, j);
                ident.images.emplace(g, Element::generator(ctx, i, j, r));
                tau.images.emplace(g, Element::generator(ctx, j, i, r));
                auto w = [](int v) { return v == 1 ? 2 : v == 2 ? 1 : v; };
                swap12.images.emplace(g, Element::generator(ctx, w(i), w(j), r));
            }

    Element x = normalize(ctx, {{1, 2, 1}, {2, 3, 2}}, 1) +
                Element::generator(ctx, 3, 3, 4);
    CHECK(ident.apply(x) == x);

    // anti-map reverses words: tau(t_{1,2}^{(1)} t_{2,3}^{(2)}) normalizes
    // t_{3,2}^{(2)} t_{2,1}^{(1)}
    Element lhs = tau.apply(normalize(ctx, {{1, 2, 1}, {2, 3, 2}}, 1));
    Element rhs = normalize(ctx, {{3, 2, 2}, {2, 1, 1}}, 1);
    CHECK(lhs == rhs);

    CHECK(swap12.apply(Element::generator(ctx, 1, 1, 2)) ==
          Element::generator(ctx, 2, 2, 2));

    // tau is an involution and is anti-multiplicative
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        Element a = random_element(ctx, rng, 2, 4);
        Element b = random_element(ctx, rng, 2, 4);
        CHECK(tau.apply(tau.apply(a)) == a);
        CHECK(tau.apply(a * b) == tau.apply(b) * tau.apply(a));
    }

    GeneratorMap missing{ctx, ctx, false, {}};
    CHECK_THROWS_AS(missing.apply(x), std::out_of_range);
}
