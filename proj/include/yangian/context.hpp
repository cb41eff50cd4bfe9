#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "yangian/modp.hpp"

namespace yangian {

// Which rewriting system an element lives in. Rtt is the Yangian presented by
// the RTT generators t_{i,j}^{(r)}; Current is the enveloping algebra of the
// current Lie algebra on basis symbols e_{i,j}t^r.
enum class AlgebraKind : std::uint8_t { Rtt, Current };

struct AlgebraContext {
    AlgebraKind kind = AlgebraKind::Rtt;
    int n = 1;       // matrix size
    Scalar p = 3;    // characteristic, odd prime > 2

    bool operator==(const AlgebraContext&) const = default;
};

inline AlgebraContext rtt_context(int n, Scalar p) {
    if (n < 1)
        throw std::invalid_argument("rtt_context: n must be >= 1");
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("rtt_context: p must be an odd prime > 2");
    return AlgebraContext{AlgebraKind::Rtt, n, p};
}

inline AlgebraContext current_context(int n, Scalar p) {
    AlgebraContext c = rtt_context(n, p);
    c.kind = AlgebraKind::Current;
    return c;
}

inline std::string kind_name(AlgebraKind k) {
    return k == AlgebraKind::Rtt ? "rtt" : "current";
}

}  // namespace yangian
