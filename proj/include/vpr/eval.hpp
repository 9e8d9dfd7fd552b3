#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vpr/features.hpp"
#include "vpr/pipeline.hpp"

namespace vpr {

/// query image id -> matching reference image ids. Loaded from CSV
/// (query_id, semicolon-separated reference ids).
struct GroundTruth {
    std::map<std::string, std::set<std::string>> entries;
};

GroundTruth load_ground_truth(const std::string& path);
void save_ground_truth(const GroundTruth& gt, const std::string& path);

struct PRPoint {
    double threshold = 0.0;  // similarity threshold
    double precision = 0.0;
    double recall = 0.0;
};

struct PRCurve {
    std::vector<PRPoint> points;  // ascending threshold; recall non-increasing
    double auc = 0.0;
};

/// Single-best-match protocol: each query contributes its rank-1 candidate
/// and similarity; thresholds sweep the observed similarities. A prediction
/// is correct iff the rank-1 id is in the query's ground-truth set.
/// Degenerate queries count as no-prediction at every threshold. AUC is the
/// trapezoidal area over recall-sorted points, anchored at recall 0.
PRCurve compute_pr(const std::vector<LocalizationResult>& results, const GroundTruth& gt);

struct TimingStats {
    double mean = 0.0;
    double median = 0.0;  // even counts take the lower central value
    double p95 = 0.0;     // nearest-rank
};

struct TimingSummary {
    TimingStats t_descriptor;
    TimingStats t_search;
    TimingStats t_total;
    std::size_t count = 0;
};

TimingSummary aggregate_timing(const std::vector<LocalizationResult>& results);

struct CorrelationResult {
    double value = 0.0;
    std::uint64_t pairs_used = 0;
    std::uint64_t pairs_skipped = 0;  // component-constant vectors (Pearson undefined)
    std::uint64_t seed = 0;
};

/// Mean Pearson correlation between the component vectors of sample_n
/// descriptor pairs, one descriptor drawn from each side (seeded, uniform).
/// Pair draws are symmetrized so swapping the sides reproduces the value
/// exactly. Binary descriptors are lifted to {0,1}.
CorrelationResult correlation_coefficient(const std::vector<FeatureSet>& a,
                                          const std::vector<FeatureSet>& b,
                                          std::uint64_t sample_n, std::uint64_t seed);

}  // namespace vpr
