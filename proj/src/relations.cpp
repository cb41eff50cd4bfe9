#include "yangian/relations.hpp"

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

struct Ctx {
    const ParabolicContext& pc;
    const ShiftData& data;
    int S;
    std::vector<CheckReport> out;

    const Composition& mu() const { return data.mu; }
    int m() const { return data.m(); }
    int parts(int a) const { return data.mu.parts[a - 1]; }
    int be(int a) const { return data.s(a, a + 1); }
    int bf(int a) const { return data.s(a + 1, a); }

    Element d(int a, int i, int j, int r) const { return pc.d(a, i, j, r); }
    Element dp(int a, int i, int j, int r) const { return pc.dprime(a, i, j, r); }
    Element e(int a, int i, int j, int r) const { return pc.e(a, i, j, r); }
    Element f(int a, int i, int j, int r) const { return pc.f(a, i, j, r); }

    void emit(const char* id,
              std::initializer_list<std::pair<const char*, int>> kv,
              Element diff) {
        out.push_back(CheckReport::from_difference(id, inst_params(mu(), kv),
                                                   std::move(diff)));
    }
    void skip(const char* id,
              std::initializer_list<std::pair<const char*, int>> kv,
              const char* why) {
        out.push_back(CheckReport::skipped(id, inst_params(mu(), kv), why));
    }
};

void run_pr1(Ctx& c) {
    const auto ctx = c.pc.context();
    for (int a = 1; a <= c.m(); ++a)
        for (int i = 1; i <= c.parts(a); ++i)
            for (int j = 1; j <= c.parts(a); ++j) {
                Element diff = c.d(a, i, j, 0);
                if (i == j)
                    diff -= Element::unit(ctx);
                c.emit("pr1", {{"a", a}, {"i", i}, {"j", j}}, std::move(diff));
            }
}

void run_pr2(Ctx& c) {
    const auto ctx = c.pc.context();
    for (int a = 1; a <= c.m(); ++a)
        for (int i = 1; i <= c.parts(a); ++i)
            for (int j = 1; j <= c.parts(a); ++j)
                for (int r = 0; r <= c.S; ++r) {
                    Element lhs = Element::zero(ctx);
                    for (int t = 0; t <= r; ++t)
                        for (int al = 1; al <= c.parts(a); ++al)
                            lhs += c.d(a, i, al, t) * c.dp(a, al, j, r - t);
                    if (r == 0 && i == j)
                        lhs -= Element::unit(ctx);
                    c.emit("pr2", {{"a", a}, {"i", i}, {"j", j}, {"r", r}},
                           std::move(lhs));
                }
}

void run_pr3(Ctx& c) {
    for (int a = 1; a <= c.m(); ++a)
        for (int b = 1; b <= c.m(); ++b)
            for (int i = 1; i <= c.parts(a); ++i)
                for (int j = 1; j <= c.parts(a); ++j)
                    for (int k = 1; k <= c.parts(b); ++k)
                        for (int l = 1; l <= c.parts(b); ++l)
                            for (int r = 1; r <= c.S; ++r)
                                for (int s = 1; s <= c.S; ++s) {
                                    Element diff = commutator(c.d(a, i, j, r),
                                                              c.d(b, k, l, s));
                                    if (a == b)
                                        for (int t = 0; t < std::min(r, s); ++t) {
                                            diff -= c.d(a, i, l, r + s - 1 - t) *
                                                    c.d(a, k, j, t);
                                            diff += c.d(a, i, l, t) *
                                                    c.d(a, k, j, r + s - 1 - t);
                                        }
                                    c.emit("pr3",
                                           {{"a", a}, {"b", b}, {"i", i}, {"j", j},
                                            {"k", k}, {"l", l}, {"r", r}, {"s", s}},
                                           std::move(diff));
                                }
}

void run_pr4(Ctx& c) {
    for (int a = 1; a < c.m(); ++a)
        for (int b = 1; b < c.m(); ++b)
            for (int i = 1; i <= c.parts(a); ++i)
                for (int j = 1; j <= c.parts(a + 1); ++j)
                    for (int k = 1; k <= c.parts(b + 1); ++k)
                        for (int l = 1; l <= c.parts(b); ++l)
                            for (int r = c.be(a) + 1; r <= c.S; ++r)
                                for (int s = c.bf(b) + 1; s <= c.S; ++s) {
                                    Element diff = commutator(c.e(a, i, j, r),
                                                              c.f(b, k, l, s));
                                    if (a == b)
                                        for (int t = 0; t <= r + s - 1; ++t)
                                            diff += c.dp(a, i, l, t) *
                                                    c.d(a + 1, k, j, r + s - 1 - t);
                                    c.emit("pr4",
                                           {{"a", a}, {"b", b}, {"i", i}, {"j", j},
                                            {"k", k}, {"l", l}, {"r", r}, {"s", s}},
                                           std::move(diff));
                                }
}

void run_pr5(Ctx& c) {
    for (int a = 1; a <= c.m(); ++a)
        for (int b = 1; b < c.m(); ++b)
            for (int i = 1; i <= c.parts(a); ++i)
                for (int j = 1; j <= c.parts(a); ++j)
                    for (int k = 1; k <= c.parts(b); ++k)
                        for (int l = 1; l <= c.parts(b + 1); ++l)
                            for (int r = 1; r <= c.S; ++r)
                                for (int s = c.be(b) + 1; s <= c.S; ++s) {
                                    Element diff = commutator(c.d(a, i, j, r),
                                                              c.e(b, k, l, s));
                                    if (a == b && k == j)
                                        for (int t = 0; t < r; ++t)
                                            for (int al = 1; al <= c.parts(a); ++al)
                                                diff -= c.d(a, i, al, t) *
                                                        c.e(a, al, l, r + s - 1 - t);
                                    if (a == b + 1)
                                        for (int t = 0; t < r; ++t)
                                            diff += c.d(b + 1, i, l, t) *
                                                    c.e(b, k, j, r + s - 1 - t);
                                    c.emit("pr5",
                                           {{"a", a}, {"b", b}, {"i", i}, {"j", j},
                                            {"k", k}, {"l", l}, {"r", r}, {"s", s}},
                                           std::move(diff));
                                }
}

void run_pr6(Ctx& c) {
    for (int a = 1; a <= c.m(); ++a)
        for (int b = 1; b < c.m(); ++b)
            for (int i = 1; i <= c.parts(a); ++i)
                for (int j = 1; j <= c.parts(a); ++j)
                    for (int k = 1; k <= c.parts(b + 1); ++k)
                        for (int l = 1; l <= c.parts(b); ++l)
                            for (int r = 1; r <= c.S; ++r)
                                for (int s = c.bf(b) + 1; s <= c.S; ++s) {
                                    Element diff = commutator(c.d(a, i, j, r),
                                                              c.f(b, k, l, s));
                                    if (a == b + 1)
                                        for (int t = 0; t < r; ++t)
                                            diff -= c.f(b, i, l, r + s - 1 - t) *
                                                    c.d(b + 1, k, j, t);
                                    if (a == b && i == l)
                                        for (int t = 0; t < r; ++t)
                                            for (int al = 1; al <= c.parts(a); ++al)
                                                diff += c.f(a, k, al, r + s - 1 - t) *
                                                        c.d(a, al, j, t);
                                    c.emit("pr6",
                                           {{"a", a}, {"b", b}, {"i", i}, {"j", j},
                                            {"k", k}, {"l", l}, {"r", r}, {"s", s}},
                                           std::move(diff));
                                }
}

void run_pr7(Ctx& c) {
    for (int a = 1; a < c.m(); ++a)
        for (int i = 1; i <= c.parts(a); ++i)
            for (int k = 1; k <= c.parts(a); ++k)
                for (int j = 1; j <= c.parts(a + 1); ++j)
                    for (int l = 1; l <= c.parts(a + 1); ++l)
                        for (int r = c.be(a) + 1; r <= c.S; ++r)
                            for (int s = c.be(a) + 1; s <= c.S; ++s) {
                                const bool sums_nonempty = r >= 2 || s >= 2;
                                if (c.be(a) >= 1 && sums_nonempty) {
                                    c.skip("pr7",
                                           {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                            {"l", l}, {"r", r}, {"s", s}},
                                           "displayed sum dips below shift bound");
                                    continue;
                                }
                                Element diff = commutator(c.e(a, i, j, r),
                                                          c.e(a, k, l, s));
                                for (int t = 1; t < s; ++t)
                                    diff -= c.e(a, i, l, t) * c.e(a, k, j, r + s - 1 - t);
                                for (int t = 1; t < r; ++t)
                                    diff += c.e(a, i, l, t) * c.e(a, k, j, r + s - 1 - t);
                                c.emit("pr7",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            }
}

void run_pr8(Ctx& c) {
    for (int a = 1; a < c.m(); ++a)
        for (int i = 1; i <= c.parts(a + 1); ++i)
            for (int k = 1; k <= c.parts(a + 1); ++k)
                for (int j = 1; j <= c.parts(a); ++j)
                    for (int l = 1; l <= c.parts(a); ++l)
                        for (int r = c.bf(a) + 1; r <= c.S; ++r)
                            for (int s = c.bf(a) + 1; s <= c.S; ++s) {
                                const bool sums_nonempty = r >= 2 || s >= 2;
                                if (c.bf(a) >= 1 && sums_nonempty) {
                                    c.skip("pr8",
                                           {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                            {"l", l}, {"r", r}, {"s", s}},
                                           "displayed sum dips below shift bound");
                                    continue;
                                }
                                Element diff = commutator(c.f(a, i, j, r),
                                                          c.f(a, k, l, s));
                                for (int t = 1; t < r; ++t)
                                    diff -= c.f(a, i, l, r + s - 1 - t) * c.f(a, k, j, t);
                                for (int t = 1; t < s; ++t)
                                    diff += c.f(a, i, l, r + s - 1 - t) * c.f(a, k, j, t);
                                c.emit("pr8",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            }
}

void run_pr9(Ctx& c) {
    for (int a = 1; a + 1 < c.m(); ++a)
        for (int i = 1; i <= c.parts(a); ++i)
            for (int j = 1; j <= c.parts(a + 1); ++j)
                for (int k = 1; k <= c.parts(a + 1); ++k)
                    for (int l = 1; l <= c.parts(a + 2); ++l)
                        for (int r = c.be(a) + 1; r + 1 <= c.S; ++r)
                            for (int s = c.be(a + 1) + 1; s + 1 <= c.S; ++s) {
                                Element diff =
                                    commutator(c.e(a, i, j, r + 1), c.e(a + 1, k, l, s)) -
                                    commutator(c.e(a, i, j, r), c.e(a + 1, k, l, s + 1));
                                if (k == j)
                                    for (int beta = 1; beta <= c.parts(a + 1); ++beta)
                                        diff -= c.e(a, i, beta, r) * c.e(a + 1, beta, l, s);
                                c.emit("pr9",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            }
}

void run_pr10(Ctx& c) {
    for (int a = 1; a + 1 < c.m(); ++a)
        for (int i = 1; i <= c.parts(a + 1); ++i)
            for (int j = 1; j <= c.parts(a); ++j)
                for (int k = 1; k <= c.parts(a + 2); ++k)
                    for (int l = 1; l <= c.parts(a + 1); ++l)
                        for (int r = c.bf(a) + 1; r + 1 <= c.S; ++r)
                            for (int s = c.bf(a + 1) + 1; s + 1 <= c.S; ++s) {
                                Element diff =
                                    commutator(c.f(a, i, j, r), c.f(a + 1, k, l, s + 1)) -
                                    commutator(c.f(a, i, j, r + 1), c.f(a + 1, k, l, s));
                                if (i == l)
                                    for (int beta = 1; beta <= c.parts(a + 1); ++beta)
                                        diff -= c.f(a + 1, k, beta, s) * c.f(a, beta, j, r);
                                c.emit("pr10",
                                       {{"a", a}, {"i", i}, {"j", j}, {"k", k},
                                        {"l", l}, {"r", r}, {"s", s}},
                                       std::move(diff));
                            }
}

void run_pr11(Ctx& c) {
    for (int a = 1; a < c.m(); ++a)
        for (int b = a + 1; b < c.m(); ++b)
            for (int i = 1; i <= c.parts(a); ++i)
                for (int j = 1; j <= c.parts(a + 1); ++j)
                    for (int k = 1; k <= c.parts(b); ++k)
                        for (int l = 1; l <= c.parts(b + 1); ++l) {
                            if (b == a + 1 && k == j)
                                continue;  // not an instance of this relation
                            for (int r = c.be(a) + 1; r <= c.S; ++r)
                                for (int s = c.be(b) + 1; s <= c.S; ++s)
                                    c.emit("pr11",
                                           {{"a", a}, {"b", b}, {"i", i}, {"j", j},
                                            {"k", k}, {"l", l}, {"r", r}, {"s", s}},
                                           commutator(c.e(a, i, j, r), c.e(b, k, l, s)));
                        }
}

void run_pr12(Ctx& c) {
    for (int a = 1; a < c.m(); ++a)
        for (int b = a + 1; b < c.m(); ++b)
            for (int i = 1; i <= c.parts(a + 1); ++i)
                for (int j = 1; j <= c.parts(a); ++j)
                    for (int k = 1; k <= c.parts(b + 1); ++k)
                        for (int l = 1; l <= c.parts(b); ++l) {
                            if (b == a + 1 && i == l)
                                continue;
                            for (int r = c.bf(a) + 1; r <= c.S; ++r)
                                for (int s = c.bf(b) + 1; s <= c.S; ++s)
                                    c.emit("pr12",
                                           {{"a", a}, {"b", b}, {"i", i}, {"j", j},
                                            {"k", k}, {"l", l}, {"r", r}, {"s", s}},
                                           commutator(c.f(a, i, j, r), c.f(b, k, l, s)));
                        }
}

void run_serre(Ctx& c, bool eside) {
    const char* id = eside ? "pr13" : "pr14";
    for (int a = 1; a < c.m(); ++a)
        for (int db : {-1, 1}) {
            const int b = a + db;
            if (b < 1 || b >= c.m())
                continue;
            const int bound_a = eside ? c.be(a) : c.bf(a);
            const int bound_b = eside ? c.be(b) : c.bf(b);
            const int ra = eside ? c.parts(a) : c.parts(a + 1);
            const int ca = eside ? c.parts(a + 1) : c.parts(a);
            const int rb = eside ? c.parts(b) : c.parts(b + 1);
            const int cb = eside ? c.parts(b + 1) : c.parts(b);
            auto gen = [&](int blk, int x, int y, int r) {
                return eside ? c.e(blk, x, y, r) : c.f(blk, x, y, r);
            };
            for (int i = 1; i <= ra; ++i)
                for (int j = 1; j <= ca; ++j)
                    for (int k = 1; k <= ra; ++k)
                        for (int l = 1; l <= ca; ++l)
                            for (int fidx = 1; fidx <= rb; ++fidx)
                                for (int g = 1; g <= cb; ++g)
                                    for (int r = bound_a + 1; r <= c.S; ++r)
                                        for (int s = bound_a + 1; s <= c.S; ++s)
                                            for (int t = bound_b + 1; t <= c.S; ++t) {
                                                Element x = gen(a, i, j, r);
                                                Element y = gen(a, k, l, s);
                                                Element z = gen(b, fidx, g, t);
                                                Element diff =
                                                    commutator(x, commutator(y, z)) +
                                                    commutator(y, commutator(x, z));
                                                c.emit(id,
                                                       {{"a", a}, {"b", b}, {"i", i},
                                                        {"j", j}, {"k", k}, {"l", l},
                                                        {"f", fidx}, {"g", g}, {"r", r},
                                                        {"s", s}, {"t", t}},
                                                       std::move(diff));
                                            }
        }
}

}  // namespace

const std::vector<std::string>& relation_ids() {
    static const std::vector<std::string> ids = {
        "pr1", "pr2", "pr3", "pr4", "pr5", "pr6", "pr7",
        "pr8", "pr9", "pr10", "pr11", "pr12", "pr13", "pr14"};
    return ids;
}

int relation_order_for_budget(int budget) {
    // pr4's right side reaches superscript r + s - 1 <= 2*budget - 1
    return std::max(2 * budget - 1, budget + 1);
}

std::vector<CheckReport> verify_relation(const std::string& rel_id,
                                         const ParabolicContext& pc,
                                         const ShiftData& data, int budget) {
    if (!(pc.mu() == data.mu))
        throw std::invalid_argument("verify_relation: shape mismatch");
    if (pc.order() < relation_order_for_budget(budget))
        throw std::out_of_range("verify_relation: context order too small");
    Ctx c{pc, data, budget, {}};
    if (rel_id == "pr1") run_pr1(c);
    else if (rel_id == "pr2") run_pr2(c);
    else if (rel_id == "pr3") run_pr3(c);
    else if (rel_id == "pr4") run_pr4(c);
    else if (rel_id == "pr5") run_pr5(c);
    else if (rel_id == "pr6") run_pr6(c);
    else if (rel_id == "pr7") run_pr7(c);
    else if (rel_id == "pr8") run_pr8(c);
    else if (rel_id == "pr9") run_pr9(c);
    else if (rel_id == "pr10") run_pr10(c);
    else if (rel_id == "pr11") run_pr11(c);
    else if (rel_id == "pr12") run_pr12(c);
    else if (rel_id == "pr13") run_serre(c, true);
    else if (rel_id == "pr14") run_serre(c, false);
    else
        throw std::invalid_argument("verify_relation: unknown relation " + rel_id);
    return c.out;
}

}  // namespace yangian
