#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpr/vocab.hpp"

namespace vpr {

/// Per-image global descriptor: concatenated per-word residual sums after the
/// normalization chain. Zero-norm outputs are kept but flagged degenerate;
/// they are excluded from indexing and always ranked last.
struct VladDescriptor {
    std::vector<float> values;  // k * dim
    std::uint32_t k = 0;
    std::uint32_t dim = 0;
    bool degenerate = false;
};

/// Normalization chain switches. Defaults follow the intra-norm -> signed
/// square root -> global L2 chain; both stages can be disabled for ablation.
struct VladConfig {
    bool intra_norm = true;
    bool signed_sqrt = true;

    std::string summary() const;
};

struct VladStages {
    std::vector<float> raw;         // residual sums
    std::vector<float> post_intra;  // after per-word L2
    std::vector<float> post_ssr;    // after signed square root
};

/// Residuals d - c_assign(d) accumulated per word (words processed in
/// ascending index order), then intra-normalization, signed square root and
/// global L2. Empty feature sets produce the flagged zero vector.
VladDescriptor compute_vlad(const FeatureSet& fs, const VisualDictionary& dict,
                            const VladConfig& config = {}, VladStages* stages = nullptr);

/// Euclidean distance between equal-shape VLADs.
double vlad_distance(const VladDescriptor& a, const VladDescriptor& b);

/// Reporting similarity: 1 / (1 + distance).
inline double similarity_from_distance(double d) { return 1.0 / (1.0 + d); }

// --- VLAD store file ("VPRV") -----------------------------------------------

struct VladStore {
    std::uint32_t k = 0;
    std::uint32_t dim = 0;
    std::vector<std::string> ids;
    std::vector<VladDescriptor> vlads;

    std::size_t size() const { return ids.size(); }
};

void save_vlad_store(const VladStore& store, const std::string& path);
VladStore load_vlad_store(const std::string& path);

}  // namespace vpr
