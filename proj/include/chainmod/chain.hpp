#ifndef CHAINMOD_CHAIN_HPP
#define CHAINMOD_CHAIN_HPP

#include "chainmod/complex.hpp"
#include "chainmod/errors.hpp"

#include <cstdint>
#include <map>
#include <set>

namespace chainmod {

using Coeff = std::int64_t;

inline Coeff abs_coeff(Coeff v) { return v < 0 ? -v : v; }

// Sparse integer chain over the vertices (degree 0) or oriented edges
// (degree 1) of a complex. Zero coefficients are never stored; a negative
// coefficient on an edge is the same chain as the positive coefficient on
// the reversed edge.
class IntegerChain {
public:
    IntegerChain() = default;
    IntegerChain(ComplexPtr complex, int degree);

    const ComplexPtr& complex() const { return complex_; }
    int degree() const { return degree_; }
    const std::map<int, Coeff>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    Coeff coeff(int cell) const;
    void set(int cell, Coeff value);   // value 0 erases
    void add(int cell, Coeff value);

    IntegerChain& operator+=(const IntegerChain& other);
    IntegerChain& operator-=(const IntegerChain& other);
    IntegerChain& operator*=(Coeff scalar);
    friend IntegerChain operator+(IntegerChain a, const IntegerChain& b) { return a += b; }
    friend IntegerChain operator-(IntegerChain a, const IntegerChain& b) { return a -= b; }
    friend IntegerChain operator*(IntegerChain a, Coeff s) { return a *= s; }
    friend IntegerChain operator-(IntegerChain a) { return a *= -1; }
    bool operator==(const IntegerChain& other) const;

private:
    void check_cell(int cell) const;

    ComplexPtr complex_;
    int degree_ = 0;
    std::map<int, Coeff> coeffs_;
};

// Signed incidence: coefficient at v is sum over edges into v minus sum over
// edges out of v.
IntegerChain boundary(const IntegerChain& t);

// Degree 0: sum of |θ| (an exact integer reported as double). Degree 1:
// sum of |θ_e|·length(e) in double; each edge term carries a relative error
// of at most 4 ulp (length root, product, accumulation). Anything
// theorem-level uses mass0/mass_exact instead.
double mass(const IntegerChain& t);

// Σ|θ| as an exact integer, ignoring lengths. This is the mass for degree-0
// chains and the per-edge multiplicity total for degree 1.
Coeff mass0(const IntegerChain& t);

// Exact mass; requires rational edge lengths for degree-1 chains.
Rational mass_exact(const IntegerChain& t);

std::set<int> support(const IntegerChain& t);

// Transports a chain written on refine_overlaps input indexing (segment
// indices for degree 1, point indices for degree 0) onto the refined complex.
IntegerChain remap_chain(const IntegerChain& t, const RefineResult& refined);

void require_same_complex(const IntegerChain& a, const IntegerChain& b);

} // namespace chainmod

#endif
