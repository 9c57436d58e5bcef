#include "chainmod/gen.hpp"

#include "chainmod/rng.hpp"

#include <set>

namespace chainmod {

ChainFixture gen_parallel_bundle(int k) {
    if (k < 1) throw ParamOutOfRange("parallel-bundle needs k ≥ 1");
    std::vector<Point> points = {{Rational(0)}, {Rational(1)}};
    std::vector<std::pair<int, int>> segments(k, {0, 1});
    ChainFixture fixture;
    fixture.complex = build_complex(points, segments);
    fixture.chain = IntegerChain(fixture.complex, 1);
    for (int e = 0; e < k; ++e) fixture.chain.set(e, 1);
    return fixture;
}

ChainFixture gen_path_graph(int k) {
    if (k < 1) throw ParamOutOfRange("path-graph needs k ≥ 1");
    std::vector<Point> points;
    for (int i = 0; i <= k; ++i) points.push_back({Rational(i)});
    std::vector<std::pair<int, int>> segments;
    for (int i = 0; i < k; ++i) segments.emplace_back(i, i + 1);
    ChainFixture fixture;
    fixture.complex = build_complex(points, segments);
    fixture.chain = IntegerChain(fixture.complex, 1);
    for (int e = 0; e < k; ++e) fixture.chain.set(e, 1);
    return fixture;
}

ChainFixture gen_random_1chain(const RandomChainParams& params, std::uint64_t seed) {
    if (params.vertices < 2 || params.vertices > 64)
        throw ParamOutOfRange("random-1chain vertex count must be in [2, 64]");
    if (params.edges < 1 || params.edges > 256)
        throw ParamOutOfRange("random-1chain edge count must be in [1, 256]");
    if (params.coeff_lo > params.coeff_hi)
        throw ParamOutOfRange("empty coefficient range");

    SplitMix64 rng(seed);
    std::vector<Point> points;
    if (params.rational_lengths) {
        // Distinct rationals on a line: x_i = i + r/16 with r < 8 keeps all
        // lengths rational and bounded below by 9/16.
        for (int i = 0; i < params.vertices; ++i) {
            Rational x = Rational(i) + Rational(rng.below(8), 16);
            points.push_back({x});
        }
    } else {
        // Distinct 2D integer points (x coordinates already distinct).
        for (int i = 0; i < params.vertices; ++i)
            points.push_back({Rational(i), Rational(rng.range(0, 3 * params.vertices))});
    }

    std::vector<std::pair<int, int>> segments;
    for (int e = 0; e < params.edges; ++e) {
        int a = static_cast<int>(rng.below(params.vertices));
        int b = static_cast<int>(rng.below(params.vertices - 1));
        if (b >= a) ++b; // b ≠ a; parallel edges allowed
        segments.emplace_back(a, b);
    }

    ChainFixture fixture;
    fixture.complex = build_complex(points, segments);
    fixture.chain = IntegerChain(fixture.complex, 1);
    for (int e = 0; e < params.edges; ++e)
        fixture.chain.set(e, rng.range(params.coeff_lo, params.coeff_hi));
    return fixture;
}

GridChain gen_random_grid(const std::vector<int>& dims, Coeff range,
                          std::uint64_t seed) {
    if (range < 0) throw ParamOutOfRange("grid range must be nonnegative");
    GridChain grid;
    grid.dims = dims;
    grid.cell_edge = 1;
    if (dims.empty()) throw ParamOutOfRange("grid needs at least one dimension");
    for (int d : dims)
        if (d < 1) throw ParamOutOfRange("grid dimensions must be positive");
    SplitMix64 rng(seed);
    grid.theta.resize(grid.cell_count());
    for (auto& v : grid.theta) v = rng.range(-range, range);
    grid.validate();
    return grid;
}

} // namespace chainmod
