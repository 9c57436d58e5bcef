#ifndef CHAINMOD_GEN_HPP
#define CHAINMOD_GEN_HPP

#include "chainmod/chain.hpp"
#include "chainmod/grid.hpp"

#include <cstdint>

namespace chainmod {

struct ChainFixture {
    ComplexPtr complex;
    IntegerChain chain; // degree 1, named "T" in serialized fixtures
};

// k parallel unit edges a→b with coefficient 1 each.
ChainFixture gen_parallel_bundle(int k);

// Path a₀→a₁→…→a_k of unit edges with coefficient 1 each.
ChainFixture gen_path_graph(int k);

struct RandomChainParams {
    int vertices = 6;
    int edges = 8;
    Coeff coeff_lo = -50;
    Coeff coeff_hi = 50;
    // Vertices on a rational line (all edge lengths rational) instead of a
    // 2D integer point cloud.
    bool rational_lengths = false;
};

ChainFixture gen_random_1chain(const RandomChainParams& params, std::uint64_t seed);

// θ uniform in [−range, range] on the given shape, unit cells.
GridChain gen_random_grid(const std::vector<int>& dims, Coeff range,
                          std::uint64_t seed);

} // namespace chainmod

#endif
