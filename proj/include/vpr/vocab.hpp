#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpr/features.hpp"

namespace vpr {

/// k centroids quantizing descriptor space. Binary descriptors are clustered
/// in lifted {0,1}^256 real space, so centroids are real-valued for both
/// kinds.
struct VisualDictionary {
    DescriptorKind kind = DescriptorKind::Binary;
    std::uint32_t k = 0;
    std::uint32_t dim = 0;
    std::vector<float> centroids;  // k * dim, row-major
    std::string training_fingerprint;

    const float* centroid(std::uint32_t j) const { return centroids.data() + static_cast<std::size_t>(j) * dim; }
};

struct TrainParams {
    std::uint32_t k = 256;
    std::uint64_t seed = 0;
    std::uint32_t max_iters = 100;
    double tol = 1e-4;
    /// Cap on training descriptors; 0 keeps everything. Sampling is seeded.
    std::uint32_t max_descriptors = 0;
    unsigned threads = 0;  // 0 = hardware default
};

/// Per-iteration Lloyd statistics (distortion must be non-increasing).
struct TrainLog {
    std::vector<double> distortion;  // mean squared distance per iteration
    std::uint32_t iterations = 0;
    std::uint32_t reseeded_clusters = 0;
    std::uint64_t descriptor_count = 0;
};

/// k-means++ seeded initialization followed by Lloyd iterations until the
/// largest centroid shift drops below tol or max_iters is reached. Empty
/// clusters are re-seeded to the point farthest from its assigned centroid.
/// Deterministic for fixed inputs and seed.
VisualDictionary train_dictionary(const std::vector<FeatureSet>& features,
                                  const TrainParams& params, TrainLog* log = nullptr);

/// Index of the Euclidean-nearest centroid (ties to the lowest index).
std::uint32_t assign(const float* lifted_descriptor, const VisualDictionary& dict);
std::uint32_t assign(const FeatureSet& fs, std::size_t i, const VisualDictionary& dict);

// --- dictionary file ("VPRD") + JSON sidecar --------------------------------

void save_dictionary(const VisualDictionary& dict, const std::string& path,
                     const TrainParams& params, const TrainLog& log);
VisualDictionary load_dictionary(const std::string& path);

}  // namespace vpr
