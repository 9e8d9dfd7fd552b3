#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpr/dataset.hpp"
#include "vpr/synth.hpp"

namespace vpr::cli {

// Exit codes: 0 success, 1 validation error, 2 runtime failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

struct CommonOptions {
    std::string config_path;  // empty = defaults
    std::uint64_t seed = 0;
    bool seed_set = false;
};

RunConfig resolve_config(const CommonOptions& common);

/// train-dict: extract features from a training manifest, run k-means, write
/// the dictionary file and its JSON sidecar.
int cmd_train_dict(const CommonOptions& common, const std::string& manifest_path,
                   const std::string& out_path);

/// build-map: extract + VLAD + ball tree over a reference manifest; writes
/// the map directory (dictionary copy, VLAD store, provenance).
int cmd_build_map(const CommonOptions& common, const std::string& manifest_path,
                  const std::string& dict_path, const std::string& out_dir);

/// localize: per-query ranking + timing CSV. Timing runs on a single worker
/// unless parallel throughput mode is requested (reported separately).
int cmd_localize(const CommonOptions& common, const std::string& manifest_path,
                 const std::string& map_dir, const std::string& out_path,
                 bool parallel_throughput = false);

/// evaluate: PR CSV + SVG + AUC for one or more results files against a
/// ground-truth CSV.
int cmd_evaluate(const std::vector<std::string>& results_paths, const std::string& gt_path,
                 const std::string& out_dir);

/// correlate: cross-dataset feature correlation JSON.
int cmd_correlate(const CommonOptions& common, const std::string& manifest_a,
                  const std::string& manifest_b, const std::string& out_path);

/// bench: train -> map -> localize -> evaluate for each configured extractor
/// preset; combined report (AUC, timing, PR overlay SVG, timing CSV).
struct BenchPreset {
    std::string label;
    ExtractorKind kind;
    std::uint32_t dict_k;
};

/// Paper-preset dictionary sizes: float-high 2048, binary-high 1024,
/// binary-low 256.
std::vector<BenchPreset> default_bench_presets();
BenchPreset bench_preset_from_name(const std::string& name);

int cmd_bench(const CommonOptions& common, const std::string& bundle_dir,
              const std::string& out_dir, const std::vector<std::string>& preset_names,
              std::uint32_t timing_repeats = 3);

/// gen-dataset: write the synthetic bundle (images, manifests, ground truth).
int cmd_gen_dataset(const SynthConfig& config, const std::string& out_dir);

/// make-identity-gt: identity ground truth for same-loop self tests.
int cmd_make_identity_gt(const std::string& manifest_path, const std::string& out_path);

}  // namespace vpr::cli
