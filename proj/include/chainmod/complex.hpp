#ifndef CHAINMOD_COMPLEX_HPP
#define CHAINMOD_COMPLEX_HPP

#include "chainmod/rational.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace chainmod {

using Point = std::vector<Rational>;

// Embedded 1-complex: vertices with exact rational coordinates, oriented
// edges (tail, head) with precomputed lengths. Immutable after construction
// and safe to share across threads.
class GeometricComplex {
public:
    GeometricComplex(int ambient_dim,
                     std::vector<Point> vertices,
                     std::vector<std::pair<int, int>> edges);

    int ambient_dim() const { return ambient_dim_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Point& vertex(int v) const { return vertices_.at(v); }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::pair<int, int>& edge(int e) const { return edges_.at(e); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int tail(int e) const { return edges_.at(e).first; }
    int head(int e) const { return edges_.at(e).second; }

    // Exact squared Euclidean length.
    const Rational& edge_sq_length(int e) const { return sq_lengths_.at(e); }
    // Floating approximation whose square matches the exact squared length
    // to within 1 ulp of the double representation.
    double edge_length(int e) const { return lengths_.at(e); }
    // Set exactly when the squared length is a rational square.
    const std::optional<Rational>& edge_rational_length(int e) const {
        return rational_lengths_.at(e);
    }
    bool all_lengths_rational() const { return all_rational_; }

    bool same_geometry(const GeometricComplex& other) const;

private:
    int ambient_dim_;
    std::vector<Point> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Rational> sq_lengths_;
    std::vector<double> lengths_;
    std::vector<std::optional<Rational>> rational_lengths_;
    bool all_rational_ = true;
};

using ComplexPtr = std::shared_ptr<const GeometricComplex>;

// Validates indices, rejects zero-length segments and mixed point arities.
// Edge ordering equals input ordering.
ComplexPtr build_complex(const std::vector<Point>& points,
                         const std::vector<std::pair<int, int>>& segments);

// Signed decomposition of one input segment into output edges, in order
// along the input orientation.
using SegmentRemap = std::vector<std::pair<int, int>>; // (edge index, ±1)

struct RefineResult {
    ComplexPtr complex;
    std::vector<SegmentRemap> remap; // one entry per input segment
    std::vector<int> vertex_map;     // input point index -> output vertex index
};

// Rebuilds arbitrary rational segment input as a shared complex: duplicate
// points are merged, every segment is split at input endpoints lying in its
// relative interior (covers collinear overlaps), and coincident carriers are
// identified. Transversal interior-interior crossings are not split.
RefineResult refine_overlaps(const std::vector<Point>& points,
                             const std::vector<std::pair<int, int>>& segments);

// Pointer identity or coordinate/edge-list equality.
bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

} // namespace chainmod

#endif
