// Temporary experiment driver: full catalog shakedown at one desk scale.
#include <chrono>
#include <iostream>

#include "yangian/identities.hpp"
#include "yangian/relations.hpp"

using namespace yangian;

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 2;
    const Scalar p = argc > 2 ? std::atoi(argv[2]) : 3;
    const int S = 3;   // relation superscript budget
    const int K = 4;   // bivariate order for identities
    const int L = 2;

    for (const auto& mu : all_compositions(n)) {
        auto ctx = rtt_context(n, p);
        auto data = make_shift_data(ShiftMatrix::zero(n), mu);
        const int order = std::max(relation_order_for_budget(S),
                                   identity_order_for(K));
        auto t0 = std::chrono::steady_clock::now();
        auto pc = parabolic_context(ctx, mu, order);
        auto t1 = std::chrono::steady_clock::now();
        std::cout << "mu=" << mu.str() << " pc built in "
                  << std::chrono::duration<double>(t1 - t0).count() << "s\n";

        int pass = 0, fail = 0, skip = 0;
        for (const auto& rel : relation_ids()) {
            auto reports = verify_relation(rel, *pc, data, S);
            int f0 = 0;
            for (const auto& r : reports) {
                if (r.status == CheckStatus::Pass) ++pass;
                else if (r.status == CheckStatus::Fail) { ++fail; ++f0; }
                else ++skip;
                if (r.status == CheckStatus::Fail && f0 <= 2)
                    std::cout << "  FAIL " << r.id << " " << r.params << "\n";
            }
        }
        auto t2 = std::chrono::steady_clock::now();
        std::cout << "  relations: " << pass << " pass, " << fail << " fail, "
                  << skip << " skip ("
                  << std::chrono::duration<double>(t2 - t1).count() << "s)\n";

        pass = fail = skip = 0;
        for (const auto& id : identity_ids()) {
            auto t3 = std::chrono::steady_clock::now();
            auto reports = verify_series_identity(id, *pc, K, L);
            auto t4 = std::chrono::steady_clock::now();
            int f0 = 0;
            for (const auto& r : reports) {
                if (r.status == CheckStatus::Pass) ++pass;
                else if (r.status == CheckStatus::Fail) { ++fail; ++f0; }
                else ++skip;
                if (r.status == CheckStatus::Fail && f0 <= 2)
                    std::cout << "  FAIL " << r.id << " " << r.params << "\n";
            }
            double dt = std::chrono::duration<double>(t4 - t3).count();
            if (dt > 1.0)
                std::cout << "    [" << id << " took " << dt << "s, "
                          << reports.size() << " instances]\n";
        }
        auto t5 = std::chrono::steady_clock::now();
        std::cout << "  identities: " << pass << " pass, " << fail << " fail, "
                  << skip << " skip ("
                  << std::chrono::duration<double>(t5 - t2).count() << "s)\n";
    }
    return 0;
}
