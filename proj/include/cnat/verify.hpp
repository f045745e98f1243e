#pragma once

#include <string>
#include <vector>

#include "cnat/cache.hpp"
#include "cnat/enumeration.hpp"

namespace cnat {

/// count_by_det(n) served from the cache when it holds A_n and B_n for the
/// current code version; otherwise computed and, with a cache, stored.
CountByDet cached_count_by_det(int n, int jobs, CountsCache* cache);

struct VerifyOptions {
    int max_n = 7;
    /// Adds the n = 5 oracle comparison and n = 8 enumeration counts.
    bool slow = false;
    int jobs = 1;
    CountsCache* cache = nullptr;
};

struct CheckResult {
    std::string line;  ///< ends with PASS or FAIL
    bool passed = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string to_text() const;
};

/// Cross-checks independent routes to the same numbers. Every comparison
/// pairs values from two different sources:
///   - oracle vs constructive enumeration (n <= 4, 5 when slow),
///   - enumeration counts vs recurrences vs closed form (n <= 7, 8 when slow),
///   - d_rec vs d_closed for n <= max(40, max_n),
///   - subset-parity closed form vs DP for odd m <= 25,
///   - A + B = T and A - B = D from the recurrences for n <= max(20, max_n),
///   - det_int vs perm_sign over every CNAT with n <= 6.
/// All ranges are additionally capped by max_n except the pure-recurrence ones.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace cnat
