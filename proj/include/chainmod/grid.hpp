#ifndef CHAINMOD_GRID_HPP
#define CHAINMOD_GRID_HPP

#include "chainmod/modp.hpp"
#include "chainmod/rational.hpp"

#include <vector>

namespace chainmod {

// Integer-valued cell function on an axis-aligned unit-cube grid; the
// top-dimensional chain it represents has multiplicity 0 outside the grid.
struct GridChain {
    std::vector<int> dims;         // grid shape; ambient n = dims.size()
    std::vector<Coeff> theta;      // dense, row-major, size = Π dims
    Rational cell_edge = 1;

    std::size_t cell_count() const;
    void validate() const;         // shape/positivity checks
};

// Cellwise select residue; shape preserved.
GridChain grid_select(const GridChain& t, ModPContext ctx);

// Total variation of θ across interior faces plus |θ| on the outer faces,
// times the exact face area cell_edge^(n−1).
Rational grid_boundary_mass(const GridChain& t);

// Same face sweep with the select residue of each jump: M^p(∂T).
Rational grid_pmass_boundary(const GridChain& t, ModPContext ctx);

struct SelectBoundReport {
    Rational lhs;            // M(∂ select(T))
    Rational pmass_boundary; // M^p(∂T)
    Rational rhs;            // (p−1)·M^p(∂T)
    bool pass = false;       // lhs ≤ rhs, exact
    double ratio = 0.0;      // lhs/rhs (0 when rhs = 0)
    double mass_ratio = 0.0; // lhs/M^p(∂T) (0 when that is 0); ≤ p−1
};

// Exact-rational check of M(∂T') ≤ (p−1)·M^p(∂T) for T' = grid_select(T,p).
SelectBoundReport check_select_bound(const GridChain& t, ModPContext ctx);

} // namespace chainmod

#endif
