#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vpr/features.hpp"
#include "vpr/pipeline.hpp"
#include "vpr/vlad.hpp"

namespace vpr {

enum class DatasetRole : std::uint8_t { Training = 0, Reference = 1, Query = 2 };

const char* role_name(DatasetRole role);
DatasetRole role_from_name(const std::string& name);

struct ImageEntry {
    std::string id;
    std::string file;  // relative to the manifest's root
};

/// JSON manifest describing one dataset: name, image directory, ordered image
/// list and (for query sets) an optional ground-truth file.
struct DatasetManifest {
    std::string name;
    std::string root;
    DatasetRole role = DatasetRole::Reference;
    std::vector<ImageEntry> images;
    std::string ground_truth;  // optional path, relative to the manifest file

    std::string image_path(std::size_t i) const;
};

DatasetManifest load_manifest(const std::string& path);
void save_manifest(const DatasetManifest& manifest, const std::string& path);

/// Content fingerprint over the manifest's ordered ids and image files.
std::string manifest_fingerprint(const DatasetManifest& manifest);

/// Extracts features from every listed image (parallel over images).
std::vector<FeatureSet> extract_dataset(const DatasetManifest& manifest,
                                        const ExtractorConfig& config, unsigned threads);

std::vector<ImageRef> manifest_image_refs(const DatasetManifest& manifest);

// --- run configuration -------------------------------------------------------

/// Runtime configuration, parsed from "key = value" text. Unknown keys are
/// rejected. Every artifact embeds the serialized form.
struct RunConfig {
    ExtractorConfig extractor;
    std::uint32_t dict_k = 256;
    std::uint32_t dict_max_iters = 100;
    double dict_tol = 1e-4;
    std::uint32_t dict_max_descriptors = 0;
    VladConfig vlad;
    std::uint32_t leaf_size = 16;
    std::uint32_t localize_n = 20;
    std::uint64_t correlation_pairs = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 0;

    std::vector<std::string> set_keys;  // keys explicitly present in the file

    bool was_set(const std::string& key) const;
    std::string serialized() const;  // canonical key = value text
};

RunConfig parse_config_text(const std::string& text, const std::string& context);
RunConfig load_config(const std::string& path);

}  // namespace vpr
