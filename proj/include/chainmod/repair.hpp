#ifndef CHAINMOD_REPAIR_HPP
#define CHAINMOD_REPAIR_HPP

#include "chainmod/modp.hpp"

#include <string>
#include <vector>

namespace chainmod {

struct PathStep {
    int edge;
    int dir; // +1 traverses tail→head, −1 head→tail
    bool operator==(const PathStep&) const = default;
};

// Connected sequence of oriented segments inside the support of a chain:
// each step traverses its edge in the direction of the chain's orientation,
// consecutive steps share a vertex, and no step repeats.
struct SegmentPath {
    std::vector<PathStep> steps;
    int start_vertex = -1;
    int end_vertex = -1;
};

// Greedy walk from z through the support of q (nonzero coefficients, sign =
// traversal direction). If ∂q(z) < 0 the returned path runs z → x with
// ∂q(x) > 0; if ∂q(z) > 0 it runs x → z with ∂q(x) < 0. Ties are broken by
// lowest edge index; loops are excised eagerly at the first repeated vertex,
// so the result is a simple path.
SegmentPath extract_chain(const IntegerChain& q, int z);

// Replaces the coefficient on every path edge by −(p − θ) in traversal
// direction: orientation flips, multiplicity becomes p − θ. Requires each
// traversal coefficient in {1, …, p−1}.
IntegerChain flip_along_path(const IntegerChain& q, const SegmentPath& path,
                             ModPContext ctx);

struct TraceStep {
    int vertex;
    SegmentPath path;
    Coeff boundary_mass_before = 0; // exact integer Σ|∂θ|
    Coeff boundary_mass_after = 0;
};

struct RepairCertificate {
    IntegerChain input;
    IntegerChain output;
    IntegerChain quotient; // output − input = p·quotient
    std::vector<TraceStep> trace;
};

struct RepairResult {
    IntegerChain repaired;
    RepairCertificate certificate;
};

// Boundary-mass descent: starting from the positive representative of p_chain,
// repeatedly extracts a segment path at a vertex whose boundary multiplicity
// has absolute value ≥ p and flips along it. The result P̃ is congruent to the
// input, has edge multiplicities in {1, …, p−1} (up to orientation), boundary
// multiplicities within ±(p−1), and satisfies M(P̃) ≤ (p−1)·M^p(P) and
// M(∂P̃) ≤ (p−1)·M^p(∂P). Each iteration lowers the integer boundary mass by
// at least 2; the iteration cap ⌈mass₀(∂Q⁰)/2⌉ is a hard internal assertion.
RepairResult repair(const IntegerChain& p_chain, ModPContext ctx);

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RepairReport {
    std::vector<CheckItem> checks;
    bool all_pass = false;
};

// Re-derives every repair postcondition from scratch in exact integer
// arithmetic: certificate divisibility, multiplicity range, boundary range,
// the per-edge and per-vertex (p−1)·M^p bounds, and trace descent.
RepairReport verify_repair(const IntegerChain& input, const IntegerChain& output,
                           const RepairCertificate& cert, ModPContext ctx);

} // namespace chainmod

#endif
