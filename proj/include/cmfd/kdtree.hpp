#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace cmfd {

/// Exact k-nearest-neighbor search over fixed-dimension points. Full
/// backtracking, no approximation; ties on distance break toward the lower
/// point index so results are comparable with a brute-force scan.
class KdTree {
public:
    struct Hit {
        int index = -1;
        double dist2 = std::numeric_limits<double>::infinity();
    };

    KdTree() = default;
    /// points: n * dim values, row-major. The data is copied.
    KdTree(const float* points, std::size_t n, int dim);

    std::size_t size() const { return count_; }

    /// Up to k nearest points q for which accept(index) is true, best first.
    template <typename Accept>
    std::vector<Hit> knn(const float* query, int k, Accept&& accept) const {
        std::vector<Hit> best;
        if (k <= 0 || count_ == 0) return best;
        best.reserve(static_cast<std::size_t>(k) + 1);
        if (root_ >= 0) search(root_, query, k, accept, best);
        return best;
    }

private:
    struct Node {
        int split_dim = -1;   // -1 marks a leaf
        float split_val = 0;
        int left = -1, right = -1;
        int begin = 0, end = 0;  // leaf: range into order_
    };

    int build(int begin, int end);

    template <typename Accept>
    void search(int node_id, const float* query, int k, Accept&& accept,
                std::vector<Hit>& best) const {
        const Node& node = nodes_[node_id];
        if (node.split_dim < 0) {
            for (int i = node.begin; i < node.end; ++i) {
                const int idx = order_[i];
                if (!accept(idx)) continue;
                const double d2 = dist2(query, idx);
                offer(best, k, Hit{idx, d2});
            }
            return;
        }
        const double diff = static_cast<double>(query[node.split_dim]) - node.split_val;
        const int near = diff <= 0 ? node.left : node.right;
        const int far = diff <= 0 ? node.right : node.left;
        search(near, query, k, accept, best);
        // Visit the far side on equality too: an equally distant point with a
        // lower index may still displace the current worst.
        if (static_cast<int>(best.size()) < k || diff * diff <= best.back().dist2)
            search(far, query, k, accept, best);
    }

    static void offer(std::vector<Hit>& best, int k, Hit h);
    double dist2(const float* query, int index) const;

    std::vector<float> data_;
    std::vector<int> order_;
    std::vector<Node> nodes_;
    std::size_t count_ = 0;
    int dim_ = 0;
    int root_ = -1;
};

}  // namespace cmfd
