#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vpr {

/// Exact nearest-neighbour structure over fixed-dimension float vectors.
/// Internal nodes carry the centroid of their subtree's points and the exact
/// maximum distance (radius) to it; leaves hold up to leaf_size points.
/// Construction is deterministic: split dimension is the max-spread
/// coordinate, split at the median with ties going to the left partition.
class BallTree {
public:
    struct Neighbor {
        std::string id;
        double distance;
    };

    struct QueryStats {
        std::size_t nodes_visited = 0;
        std::size_t nodes_pruned = 0;
        std::size_t points_scanned = 0;
    };

    BallTree() = default;

    /// points[i] is a dim-length vector; ids runs parallel. leaf_size >= 1.
    static BallTree build(std::vector<std::vector<float>> points, std::vector<std::string> ids,
                          std::uint32_t leaf_size = 16);

    /// Exact n nearest by Euclidean distance (all points if n exceeds the
    /// tree size), ascending distance with ties broken by id. Identical to
    /// brute_force_knn by construction.
    std::vector<Neighbor> query_knn(const std::vector<float>& query, std::size_t n,
                                    QueryStats* stats = nullptr) const;

    std::size_t size() const { return ids_.size(); }
    std::size_t node_count() const { return nodes_.size(); }
    std::uint32_t dim() const { return dim_; }
    bool empty() const { return ids_.empty(); }

    /// Invariant sweep used by tests: every point of every subtree lies
    /// within its node's radius, and leaf occupancy respects leaf_size.
    bool check_invariants(std::uint32_t leaf_size) const;

private:
    struct Node {
        std::vector<float> center;
        double radius = 0.0;
        std::int32_t left = -1;    // child node indices, -1 for leaves
        std::int32_t right = -1;
        std::uint32_t begin = 0;   // range into order_ (leaves only)
        std::uint32_t end = 0;
    };

    std::int32_t build_node(std::uint32_t begin, std::uint32_t end, std::uint32_t leaf_size);
    void collect_subtree(std::int32_t node, std::vector<std::uint32_t>& out) const;

    std::uint32_t dim_ = 0;
    std::vector<std::vector<float>> points_;
    std::vector<std::string> ids_;
    std::vector<std::uint32_t> order_;  // permutation of point indices; leaves reference ranges
    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
};

/// Exhaustive-scan oracle with the same ordering and tie rules as
/// BallTree::query_knn.
std::vector<BallTree::Neighbor> brute_force_knn(const std::vector<std::vector<float>>& points,
                                                const std::vector<std::string>& ids,
                                                const std::vector<float>& query, std::size_t n);

double euclidean_distance(const float* a, const float* b, std::size_t dim);

}  // namespace vpr
