#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpr/dataset.hpp"
#include "vpr/eval.hpp"
#include "vpr/image.hpp"

namespace vpr {

/// Synthetic dataset generator: one distinctive procedural texture per place,
/// rendered through a plane-tilt homography per loop. Loop 00 is the
/// fronto-parallel reference; tilted loops are the queries. A separate pool
/// of textures provides unrelated training imagery.
struct SynthConfig {
    std::uint32_t places = 200;
    std::vector<int> tilts_deg = {0, 15, 30, 45};  // loop per tilt; 0 is the reference
    std::uint32_t training_images = 539;
    std::uint32_t width = 192;
    std::uint32_t height = 192;
    std::uint64_t seed = 7;
    std::string name = "synth";
};

/// Renders the texture of the given place seen under a camera tilted by
/// tilt_deg about the horizontal axis.
GrayImage render_place(const SynthConfig& config, std::uint32_t place, int tilt_deg);

/// Renders one training image (texture pool disjoint from the places).
GrayImage render_training_image(const SynthConfig& config, std::uint32_t index);

struct SynthDataset {
    DatasetManifest training;
    DatasetManifest reference;                 // the 0-degree loop
    std::vector<DatasetManifest> query_loops;  // one per nonzero tilt
    GroundTruth ground_truth;                  // query frame -> same-place reference frame
};

/// Writes PGM images, JSON manifests and the ground-truth CSV under dir:
/// training.json, reference.json, query_<tilt>.json, ground_truth.csv.
SynthDataset generate_dataset(const SynthConfig& config, const std::string& dir);

/// Identity ground truth for same-loop self tests: every image matches itself.
GroundTruth identity_ground_truth(const DatasetManifest& manifest);

}  // namespace vpr
