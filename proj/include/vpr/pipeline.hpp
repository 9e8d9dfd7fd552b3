#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpr/balltree.hpp"
#include "vpr/vlad.hpp"

namespace vpr {

/// One reference image to map: id plus either a decoded image or a path to
/// load lazily.
struct ImageRef {
    std::string id;
    std::string path;          // empty when image is supplied in memory
    const GrayImage* image = nullptr;
};

struct MapProvenance {
    std::string dataset_name;
    std::string dataset_fingerprint;
    std::uint64_t image_count = 0;
    std::vector<std::string> degenerate_ids;
    std::string dictionary_fingerprint;
    std::string extractor_summary;
    std::string vlad_summary;
    std::uint32_t leaf_size = 16;
};

/// Mapping output: the dictionary, one VLAD per reference image and the ball
/// tree over the non-degenerate ones. A map is only queryable with the same
/// extractor configuration and dictionary it was built with.
struct EnvironmentMap {
    VisualDictionary dictionary;
    VladStore vlads;
    BallTree tree;
    ExtractorConfig extractor;
    VladConfig vlad_config;
    MapProvenance provenance;
};

struct BuildMapParams {
    std::uint32_t leaf_size = 16;
    unsigned threads = 0;  // 0 = hardware default; extraction is per-image parallel
    std::string dataset_name;
};

EnvironmentMap build_map(const std::vector<ImageRef>& ref_images, const VisualDictionary& dict,
                         const ExtractorConfig& extractor, const VladConfig& vlad_config = {},
                         const BuildMapParams& params = {});

struct TimingRecord {
    double t_descriptor = 0.0;  // feature extraction + VLAD of the query
    double t_search = 0.0;      // tree query
    double t_total = 0.0;
};

struct RankedMatch {
    std::string ref_id;
    double distance = 0.0;
    double similarity = 0.0;
};

struct LocalizationResult {
    std::string query_id;
    std::vector<RankedMatch> ranking;  // similarity non-increasing
    bool degenerate = false;           // query produced a zero VLAD; ranking empty
    TimingRecord timing;
};

/// Extract + VLAD (timed as t_descriptor) then tree query (t_search).
/// Degenerate query VLADs yield an empty, flagged ranking.
LocalizationResult localize(const GrayImage& query, const EnvironmentMap& map, std::size_t n,
                            const std::string& query_id = "");

// --- map directory (dictionary + VLAD store + provenance JSON) --------------

void save_map(const EnvironmentMap& map, const std::string& dir);
EnvironmentMap load_map(const std::string& dir);

}  // namespace vpr
