#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "coxarr/numeric.h"

namespace coxarr::cli {

struct HuntOptions {
    std::size_t dim = 3;
    std::size_t n = 6;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t top = 10;
    std::size_t threads = 0;  // 0: hardware concurrency; never affects the output
};

/// Checks the documented preconditions; throws PreconditionError.
void validate(const HuntOptions& opts);

/// Outcome of one trial. The dissimilarity score is a heuristic (see
/// score_trial): 0 means every region looks alike, larger is less alike.
struct HuntTrial {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    bool degenerate = false;  // normals too close to dependent; skipped
    bool coxeter = false;
    bool isometric = false;   // dim 3 only: every face congruent
    double score = 0.0;
    std::size_t regions = 0;
    std::vector<VecD> normals;
};

/// One trial, reproducible from (dim, n, trial seed) alone.
///
/// Score in dim 3: if all faces have as many sides as face 0, the largest
/// congruence-signature distance from face 0 (radians); otherwise pi plus
/// the relative spread (max - min) / mean of face areas.
///
/// Score in dim >= 4: regions come from sign-vector enumeration. Each
/// region's solid angle is estimated from 4096 seeded uniform directions;
/// the score is the relative spread of those estimates plus the spread of
/// facet counts divided by dim. This is a proxy, not an isometry test.
HuntTrial score_trial(std::size_t dim, std::size_t n, std::size_t trial, std::uint64_t trial_seed);

struct HuntReport {
    HuntOptions options;
    std::size_t degenerate = 0;
    std::size_t coxeter = 0;
    std::vector<HuntTrial> violations;  // dim 3: isometric but not Coxeter
    std::vector<HuntTrial> candidates;  // best non-Coxeter trials, by score then trial
};

HuntReport run_hunt(const HuntOptions& opts);

void print_hunt(std::ostream& out, const HuntReport& r);

/// Validates, runs, prints; exit 2 on a dimension-3 violation.
int cmd_hunt(const HuntOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace coxarr::cli
