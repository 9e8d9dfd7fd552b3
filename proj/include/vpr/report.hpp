#pragma once

#include <string>
#include <vector>

#include "vpr/eval.hpp"
#include "vpr/pipeline.hpp"

namespace vpr {

/// RFC-4180 field quoting (only when the field needs it).
std::string csv_field(const std::string& value);
std::vector<std::vector<std::string>> read_csv(const std::string& path);

/// Metadata embedded next to every artifact: config text, seeds and input
/// fingerprints. CSV artifacts get a "<file>.meta.json" sidecar; JSON and SVG
/// artifacts embed it directly.
struct ArtifactMeta {
    std::string config_text;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> fingerprints;  // name -> hash
};

std::string artifact_meta_json(const ArtifactMeta& meta);
void write_meta_sidecar(const std::string& artifact_path, const ArtifactMeta& meta);

// --- localization results CSV -------------------------------------------------
// Columns: query_id,rank,ref_id,distance,similarity,t_descriptor,t_search,t_total
// Degenerate queries emit a single rank-0 row with empty ref_id.

void write_results_csv(const std::vector<LocalizationResult>& results, const std::string& path,
                       const ArtifactMeta& meta);
std::vector<LocalizationResult> read_results_csv(const std::string& path);

// --- PR artifacts ---------------------------------------------------------------

void write_pr_csv(const PRCurve& curve, const std::string& path, const ArtifactMeta& meta);

struct CurveSeries {
    std::string label;
    PRCurve curve;
};

/// SVG 1.1 line plot of one or more PR curves (recall on x, precision on y),
/// with the artifact metadata embedded in an SVG <metadata> element.
void write_pr_svg(const std::vector<CurveSeries>& curves, const std::string& path,
                  const ArtifactMeta& meta);

// --- timing artifacts -------------------------------------------------------------

void write_timing_csv(const std::vector<LocalizationResult>& results, const std::string& path,
                      const ArtifactMeta& meta);
std::string timing_summary_json(const TimingSummary& summary, const ArtifactMeta& meta);

}  // namespace vpr
