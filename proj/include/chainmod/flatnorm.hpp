#ifndef CHAINMOD_FLATNORM_HPP
#define CHAINMOD_FLATNORM_HPP

#include "chainmod/modp.hpp"

#include <optional>

namespace chainmod {

// Witness triple realizing a bounded flat-norm value: T = R + ∂S (+ pQ).
struct FlatNormDecomposition {
    double value = 0.0;                   // mass(R) + mass(S)
    std::optional<Rational> exact_value;  // set when all edge lengths are rational
    IntegerChain r;                       // degree 0
    IntegerChain s;                       // degree 1
    IntegerChain q;                       // degree 0; empty in the classical case
    Coeff bound_used = 0;
    bool bound_saturated = false;         // optimum touches ±B: value is an upper bound only
    Coeff p = 0;                          // 0 for the classical flat norm
};

// 2·max|θ| + p (p := 1 classically).
Coeff default_bound(const IntegerChain& t, Coeff p);

// Exact minimum of mass(R) + mass(S) over integer chains with all
// coefficients in [−B, B] and T = R + ∂S. Canonical witness: among
// minimizers, the lexicographically smallest S in edge-index order.
// Refuses complexes with more than 12 edges or B > 50 unless force is set.
// Degree-1 inputs are the degenerate case without 2-cells: S = 0 is forced
// and the minimum is attained per edge.
FlatNormDecomposition flat_norm(const IntegerChain& t, Coeff bound,
                                bool force = false);

// Same with the absorbed term pQ (Q of the same degree as T, coefficients
// in [−B, B]).
FlatNormDecomposition flat_norm_mod_p(const IntegerChain& t, ModPContext ctx,
                                      Coeff bound, bool force = false);

// True iff the coefficient sum of a degree-0 chain is ≡ 0 (mod p).
bool zero_sum_check(const IntegerChain& r, ModPContext ctx);

struct ConeResult {
    ComplexPtr complex;       // input complex extended by the apex
    IntegerChain cone_chain;  // degree 1: Σ θ_i · ⟦x_i → apex⟧
    int apex_vertex = -1;
};

// Cone with the given apex over a degree-0 chain: one edge x_i → apex per
// support atom, so that ∂C = (Σθ_i)·δ_apex − R coefficient-exactly.
ConeResult cone(const IntegerChain& r, const Point& apex);

// Rewrites a chain onto an extension of its complex (cells keep indices).
IntegerChain lift_chain(const IntegerChain& t, const ComplexPtr& extended);

} // namespace chainmod

#endif
