// Copyright 2026 The hdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Proposition-level check batteries and their reports.

#ifndef HDLAB_VERIFY_H
#define HDLAB_VERIFY_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hdlab/group.h"
#include "hdlab/hypercube.h"

namespace hdlab {

/// Exclusion checks need at least this much residual on their witness.
inline constexpr double kExclusionThreshold = 1e-3;

// Single checks.

/// q . u == q.
Residual check_quotient(const DHMap &u, const DHMap &q, double tol = kDefaultTol);
/// e . e == e.
Residual check_idempotent(const DHMap &e, double tol = kDefaultTol);
Residual check_causal(const DHMap &f, double tol = kDefaultTol);
/// discard . (f + g) == discard.
Residual check_subnormalised(const DHMap &f, const DHMap &witness, double tol = kDefaultTol);

enum class CheckKind {
    /// value <= threshold.
    Bound,
    /// value >= threshold, on an explicit witness.
    Exclusion,
};

struct CheckResult {
    std::string name;
    CheckKind kind = CheckKind::Bound;
    double value = 0;
    double threshold = 0;
    bool pass = false;

    bool operator==(const CheckResult &other) const = default;
};

struct VerificationReport {
    std::string id;
    std::string theory;
    std::vector<std::string> groups;
    std::vector<size_t> dims;
    int trials = 0;
    uint64_t seed = 0;
    double tolerance = 0;
    /// Largest bound-check value, or exclusion shortfall below its threshold.
    double max_violation = 0;
    std::vector<std::pair<std::string, double>> fitted_scalars;
    std::vector<std::pair<std::string, double>> statistics;
    std::vector<CheckResult> checks;
    bool pass = false;
    double elapsed_ms = 0;

    bool operator==(const VerificationReport &other) const = default;
};

struct RunConfig {
    std::vector<FiniteAbelianGroup> groups;
    std::vector<size_t> dims;
    int trials = 200;
    uint64_t seed = 42;
    double tol = kDefaultTol;
    /// True when the caller named the groups or dims; qubit-only batteries
    /// then reject other sizes instead of falling back to Z2.
    bool explicit_sizes = false;

    static RunConfig defaults();
};

/// Thrown when a battery cannot run at the requested sizes.
class InfeasibleConfig : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> &proposition_ids();
bool is_proposition_id(const std::string &id);

/// Throws std::invalid_argument for unknown ids or bad configs and
/// InfeasibleConfig for sizes a battery cannot use.
VerificationReport run_proposition(const std::string &id, const RunConfig &config);
/// Every id in proposition_ids() order.
std::vector<VerificationReport> run_all(const RunConfig &config);

VerificationReport karoubi_quantum_sector_check(size_t dim, int trials, uint64_t seed);

}  // namespace hdlab

#endif
