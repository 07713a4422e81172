#pragma once

#include <cstdint>
#include <vector>

#include "symk/report.hpp"

namespace symk::suites {

/// One function per acceptance criterion; each returns a Report whose
/// records must all pass. Seeds drive the randomized property sets.
Report criterion_identity_suite();                  // 1
Report criterion_transposition_laws();              // 2
Report criterion_cross_ratio_mobius();              // 3
Report criterion_lie(std::uint64_t seed);           // 4
Report criterion_divdiff(int max_n = 4);            // 5
Report criterion_elliptic(std::uint64_t seed);      // 6
Report criterion_twist_oracle();                    // 7
Report criterion_wp();                              // 8
Report criterion_alpha();                           // 9
Report criterion_kernel(std::uint64_t seed);        // 10

/// Suite names accepted by run_suite: all, kernel, invariant-fields, lie,
/// divdiff, ec, wp, alpha (and alg-sub-kpsi for the identity suite alone).
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
Report run_suite(const std::string& name, std::uint64_t seed);

}  // namespace symk::suites
