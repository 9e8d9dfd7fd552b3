#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vpr/image.hpp"

namespace vpr {

/// A detected image location. x/y are sub-pixel coordinates in the keypoint's
/// pyramid level; orientation is radians in [0, 2*pi), measured from +x
/// toward +y (image rows grow downward).
struct Keypoint {
    float x = 0.0f;
    float y = 0.0f;
    std::int32_t level = 0;
    float orientation = 0.0f;
    float response = 0.0f;
};

struct BinaryDescriptor {
    std::array<std::uint8_t, 32> bits{};  // 256 bits

    bool get(std::size_t i) const { return (bits[i >> 3] >> (i & 7)) & 1u; }
    void set(std::size_t i) { bits[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7)); }
};

int hamming_distance(const BinaryDescriptor& a, const BinaryDescriptor& b);

struct FloatDescriptor {
    std::array<float, 128> values{};
};

enum class DescriptorKind : std::uint8_t { Binary = 0, Float = 1 };

inline const char* kind_name(DescriptorKind k) {
    return k == DescriptorKind::Binary ? "binary" : "float";
}
DescriptorKind kind_from_name(const std::string& name);

/// Descriptor dimensionality once lifted to real space: binary bits become
/// {0,1} components.
inline std::uint32_t lifted_dim(DescriptorKind k) {
    return k == DescriptorKind::Binary ? 256u : 128u;
}

/// Per-image feature extraction output. Exactly one of `binary`/`floats` is
/// populated, matching `kind`; `keypoints` runs parallel to it.
struct FeatureSet {
    std::string image_id;
    DescriptorKind kind = DescriptorKind::Binary;
    std::vector<Keypoint> keypoints;
    std::vector<BinaryDescriptor> binary;
    std::vector<FloatDescriptor> floats;

    std::size_t size() const {
        return kind == DescriptorKind::Binary ? binary.size() : floats.size();
    }
    /// Writes descriptor i as lifted_dim(kind) reals into out.
    void lift(std::size_t i, float* out) const;
};

// --- binary family: segment-test corners + steered pairwise tests ---------

/// Segment-test corner detector on the 16-pixel Bresenham circle of radius 3.
/// A pixel is a corner when >= 9 contiguous circle pixels are all brighter
/// than p + threshold or all darker than p - threshold. Response is the
/// largest sum of |I(q) - I(p)| over a qualifying arc. With nms, a corner
/// survives only if no 3x3 neighbour has a higher response (ties go to the
/// earlier pixel in row-major order). Images smaller than 7x7 yield nothing.
std::vector<Keypoint> detect_fast(const GrayImage& img, int threshold, bool nms);

/// Intensity-centroid orientation over the circular patch of the given
/// radius: atan2(m01, m10) normalized to [0, 2*pi). Uniform patches return 0.
/// The patch must fit inside the image.
float compute_orientation(const GrayImage& img, const Keypoint& kp, int radius);

/// 256 pairwise intensity tests on a fixed pseudo-random pattern, rotated by
/// kp.orientation before sampling. Samples come from a 5x5 box-smoothed
/// patch; bit i is set iff smoothed(p_i) < smoothed(q_i). The 31x31 patch
/// around the keypoint must fit inside the image.
BinaryDescriptor describe_binary(const GrayImage& img, const Keypoint& kp);

/// The fixed sampling pattern behind describe_binary: 256 point pairs with
/// integer coordinates inside the radius-13 disc, generated once from a
/// fixed seed.
struct TestPair {
    std::int8_t px, py, qx, qy;
};
const std::array<TestPair, 256>& binary_test_pattern();

// --- float family: scale-space blobs + gradient-histogram descriptor ------

struct DogParams {
    double contrast_threshold = 0.03;  // on the [0,1] intensity scale
    double edge_ratio = 10.0;
};

/// Difference-of-Gaussians blob detector. Each pyramid level is treated as
/// one octave base; a Gaussian stack with 3 intervals per octave is built
/// internally. Local 3x3x3 extrema are kept after the contrast test, the
/// edge test (trace^2/det of the 2x2 Hessian against
/// (edge_ratio+1)^2/edge_ratio) and one quadratic sub-pixel refinement step.
std::vector<Keypoint> detect_dog(const Pyramid& pyr, const DogParams& params);

/// Dominant gradient orientation around the keypoint: peak of a 36-bin
/// magnitude-weighted histogram over the circular neighbourhood (radius 8),
/// refined by parabolic interpolation. Returns nullopt for gradient-free
/// neighbourhoods.
std::optional<float> dominant_gradient_orientation(const GrayImage& img, const Keypoint& kp);

/// Captures the descriptor before its final renormalization, for tests that
/// check the clamp rule.
struct FloatDescriptorStages {
    std::array<float, 128> pre_renorm{};
};

/// 4x4 spatial grid x 8 orientation bins of gradient magnitudes, sampled from
/// the 16x16 patch rotated to kp.orientation, with trilinear interpolation.
/// L2-normalize, clamp components at 0.2, renormalize. Returns nullopt when
/// the patch has no gradient at all (callers drop the keypoint).
std::optional<FloatDescriptor> describe_float(const GrayImage& img, const Keypoint& kp,
                                              FloatDescriptorStages* stages = nullptr);

// --- extraction front-end --------------------------------------------------

enum class ExtractorKind : std::uint8_t { Binary = 0, Float = 1, Passthrough = 2 };

const char* extractor_kind_name(ExtractorKind k);
ExtractorKind extractor_kind_from_name(const std::string& name);

struct ExtractorConfig {
    ExtractorKind kind = ExtractorKind::Binary;
    std::uint32_t max_features = 1000;

    // binary family
    int fast_threshold = 20;
    bool fast_nms = true;
    std::uint32_t binary_levels = 4;
    double binary_scale_factor = 1.2;

    // float family
    std::uint32_t float_octaves = 4;
    DogParams dog;

    // passthrough: directory of precomputed .vprf files, one per image id
    std::string passthrough_dir;
    DescriptorKind passthrough_kind = DescriptorKind::Binary;

    DescriptorKind descriptor_kind() const;
    std::string summary() const;  // canonical one-line form, used in provenance
};

/// Detector + descriptor composed; keypoints capped at max_features by
/// descending response. Deterministic for a fixed image and config.
FeatureSet extract(const GrayImage& img, const ExtractorConfig& config,
                   const std::string& image_id = "");

// --- passthrough file format ("VPRF") --------------------------------------

void write_feature_file(const FeatureSet& fs, const std::string& path);
FeatureSet read_feature_file(const std::string& path, const std::string& image_id);

}  // namespace vpr
