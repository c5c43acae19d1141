// Copyright 2026 prismbishop contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismbishop/board.hpp"

namespace prismbishop {

// Batch verification: build every board in a range, check all structural
// properties, and compare the exact solver against the closed forms and
// the placement procedures.

struct SweepOptions {
    int n_min = 3;
    int n_max = 6;
    int m_max = 30;      // per row, m runs from n to m_max
    int jobs = 1;        // worker threads; report order is fixed regardless
    int oracle_cap = 60; // brute-force cross-check up to this square count
};

struct SweepRow {
    BoardSpec spec;
    int squares = 0;
    int traced_total = 0;
    int traced_open = 0;
    int formula_total = 0;
    int theorem = 0;
    int lemma3 = 0;
    int solver = 0;
    std::optional<int> oracle;
    int construction_size = 0;
    std::string construction_origin;
    bool oracle_fallback = false;
    bool small_n = false;

    std::vector<std::string> failures; // empty when every check passed
    bool passed() const { return failures.empty(); }
    bool report_only() const { return spec.n == 2; }
};

struct SweepReport {
    SweepOptions options;
    std::vector<SweepRow> rows;

    int failed_rows() const;
    /// True when every non-report-only row passed.
    bool ok() const { return failed_rows() == 0; }
};

/// Runs every check on every (n, m) with n_min <= n <= n_max and
/// n <= m <= m_max.  Row failures are recorded, never fatal.
SweepReport run_verification_sweep(const SweepOptions& options);

/// Fixed-width text report; byte-identical across runs and job counts.
std::string format_report(const SweepReport& report);

} // namespace prismbishop
