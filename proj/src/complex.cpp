#include "chainmod/complex.hpp"

#include "chainmod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace chainmod {

namespace {

Rational squared_distance(const Point& a, const Point& b) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

} // namespace

GeometricComplex::GeometricComplex(int ambient_dim,
                                   std::vector<Point> vertices,
                                   std::vector<std::pair<int, int>> edges)
    : ambient_dim_(ambient_dim),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
    if (ambient_dim_ < 1) throw DimensionMismatch("ambient dimension must be positive");
    for (const auto& p : vertices_)
        if (static_cast<int>(p.size()) != ambient_dim_)
            throw DimensionMismatch("point arity differs from ambient dimension");

    sq_lengths_.reserve(edges_.size());
    lengths_.reserve(edges_.size());
    rational_lengths_.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [t, h] = edges_[e];
        if (t < 0 || h < 0 || t >= static_cast<int>(vertices_.size()) ||
            h >= static_cast<int>(vertices_.size()))
            throw ParamOutOfRange("edge endpoint index out of range");
        if (t == h)
            throw DegenerateSegment("edge " + std::to_string(e) + " is a loop");
        Rational sq = squared_distance(vertices_[t], vertices_[h]);
        if (sq == 0)
            throw DegenerateSegment("edge " + std::to_string(e) +
                                    " joins coincident points");
        auto root = rational_sqrt(sq);
        if (root)
            lengths_.push_back(rational_to_double(*root));
        else {
            all_rational_ = false;
            lengths_.push_back(std::sqrt(rational_to_double(sq)));
        }
        rational_lengths_.push_back(std::move(root));
        sq_lengths_.push_back(std::move(sq));
    }
}

bool GeometricComplex::same_geometry(const GeometricComplex& other) const {
    return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_ &&
           edges_ == other.edges_;
}

ComplexPtr build_complex(const std::vector<Point>& points,
                         const std::vector<std::pair<int, int>>& segments) {
    return std::make_shared<const GeometricComplex>(
        points.empty() ? 1 : static_cast<int>(points.front().size()), points, segments);
}

namespace {

// b - a
Point diff(const Point& a, const Point& b) {
    Point d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
    return d;
}

bool parallel(const Point& u, const Point& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

// Parameter of x on the segment a..b assuming collinearity, nullopt if x is
// off the supporting line or outside the open interval (0, 1).
std::optional<Rational> interior_parameter(const Point& a, const Point& b,
                                           const Point& x) {
    Point ab = diff(a, b);
    Point ax = diff(a, x);
    if (!parallel(ab, ax)) return std::nullopt;
    for (std::size_t i = 0; i < ab.size(); ++i) {
        if (ab[i] != 0) {
            Rational t = ax[i] / ab[i];
            if (t > 0 && t < 1) return t;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace

RefineResult refine_overlaps(const std::vector<Point>& points,
                             const std::vector<std::pair<int, int>>& segments) {
    if (!points.empty()) {
        std::size_t arity = points.front().size();
        for (const auto& p : points)
            if (p.size() != arity)
                throw DimensionMismatch("point arity varies across input");
    }

    // Merge coincident points, keeping first-occurrence order.
    std::map<Point, int> canon;
    std::vector<Point> merged;
    std::vector<int> point_to_canon(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto it = canon.find(points[i]);
        if (it == canon.end()) {
            int id = static_cast<int>(merged.size());
            canon.emplace(points[i], id);
            merged.push_back(points[i]);
            point_to_canon[i] = id;
        } else {
            point_to_canon[i] = it->second;
        }
    }

    std::vector<std::pair<int, int>> segs;
    segs.reserve(segments.size());
    for (std::size_t s = 0; s < segments.size(); ++s) {
        auto [a, b] = segments[s];
        if (a < 0 || b < 0 || a >= static_cast<int>(points.size()) ||
            b >= static_cast<int>(points.size()))
            throw ParamOutOfRange("segment endpoint index out of range");
        int ca = point_to_canon[a];
        int cb = point_to_canon[b];
        if (ca == cb)
            throw DegenerateSegment("segment " + std::to_string(s) +
                                    " has coincident endpoints");
        segs.emplace_back(ca, cb);
    }

    // Output edges keyed by unordered endpoint pair; orientation of first
    // appearance is kept.
    std::map<std::pair<int, int>, int> edge_ids;
    std::vector<std::pair<int, int>> out_edges;
    std::vector<SegmentRemap> remap(segs.size());

    auto emit = [&](int u, int v) -> std::pair<int, int> {
        std::pair<int, int> key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        auto it = edge_ids.find(key);
        if (it == edge_ids.end()) {
            int id = static_cast<int>(out_edges.size());
            edge_ids.emplace(key, id);
            out_edges.emplace_back(u, v);
            return {id, +1};
        }
        int id = it->second;
        return {id, out_edges[id].first == u ? +1 : -1};
    };

    for (std::size_t s = 0; s < segs.size(); ++s) {
        auto [a, b] = segs[s];
        // Breakpoints: merged vertices strictly inside this segment.
        std::vector<std::pair<Rational, int>> cuts;
        for (int v = 0; v < static_cast<int>(merged.size()); ++v) {
            if (v == a || v == b) continue;
            auto t = interior_parameter(merged[a], merged[b], merged[v]);
            if (t) cuts.emplace_back(*t, v);
        }
        std::sort(cuts.begin(), cuts.end());
        int prev = a;
        for (const auto& [t, v] : cuts) {
            remap[s].push_back(emit(prev, v));
            prev = v;
        }
        remap[s].push_back(emit(prev, b));
    }

    RefineResult result;
    result.complex = std::make_shared<const GeometricComplex>(
        merged.empty() ? 1 : static_cast<int>(merged.front().size()),
        std::move(merged), std::move(out_edges));
    result.remap = std::move(remap);
    result.vertex_map = std::move(point_to_canon);
    return result;
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_geometry(*b);
}

} // namespace chainmod
