#ifndef CHAINMOD_LP_HPP
#define CHAINMOD_LP_HPP

#include "chainmod/chain.hpp"

#include <vector>

namespace chainmod {

// Dense exact-rational linear program: min c·x subject to A x = b and
// 0 ≤ x ≤ upper (finite upper bounds).
struct LinearProgram {
    std::vector<std::vector<Rational>> a; // m rows × n columns
    std::vector<Rational> b;              // m
    std::vector<Rational> c;              // n
    std::vector<Rational> upper;          // n
};

struct LpSolution {
    Rational value;
    std::vector<Rational> x;
};

// Two-phase primal simplex with Bland's rule; exact throughout. Throws
// Error on infeasible or unbounded input.
LpSolution solve_lp(const LinearProgram& lp);

struct RelaxationResult {
    Rational value;
    std::vector<Rational> s; // per edge
    std::vector<Rational> r; // per vertex
};

// Continuous relaxation of the bounded classical flat-norm problem for a
// degree-0 chain: min Σ|R_v| + Σ w_e|S_e| over real chains with T = R + ∂S,
// |R_v| ≤ B, |S_e| ≤ B, via the split-variable LP. Requires rational edge
// lengths.
RelaxationResult flat_norm_relaxation(const IntegerChain& t, Coeff bound);

} // namespace chainmod

#endif
