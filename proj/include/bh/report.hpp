#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bh/json_io.hpp"

namespace bh {

// Full analysis of one cover: properties, total-space data, fibers, verdict.
// The verdict block is recomputable from the rest of the report.
json build_report(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                  std::size_t limit, const std::string& input_digest, int threads = 1);

} // namespace bh
