#pragma once

#include "yangian/parabolic.hpp"
#include "yangian/report.hpp"

namespace yangian {

// The defining relations of the parabolic presentation, addressed by the
// stable ids "pr1".."pr14".
const std::vector<std::string>& relation_ids();

// Truncation order a ParabolicContext must carry so that every coefficient
// named by any relation instance within the superscript budget is extractable.
int relation_order_for_budget(int budget);

// Verifies every admissible instance of one relation over the shape in data,
// all superscripts bounded by budget. In the shifted case instances whose
// displayed terms would dip below a shift bound are reported as skipped
// rather than evaluated. pc must be built at relation_order_for_budget() or
// deeper, on the same (n, p, mu).
std::vector<CheckReport> verify_relation(const std::string& rel_id,
                                         const ParabolicContext& pc,
                                         const ShiftData& data, int budget);

}  // namespace yangian
