#ifndef CHAINMOD_MODP_HPP
#define CHAINMOD_MODP_HPP

#include "chainmod/chain.hpp"

#include <optional>

namespace chainmod {

// Validated modulus. The cap keeps products like (p−1)·|select residue|
// comfortably inside 64-bit arithmetic.
struct ModPContext {
    static constexpr Coeff kMaxModulus = 1'000'000;
    Coeff p;
    ModPContext(Coeff p_) : p(p_) {
        if (p < 2) throw ParamOutOfRange("modulus p must be at least 2");
        if (p > kMaxModulus)
            throw ParamOutOfRange("modulus p must be at most 1000000");
    }
};

// Unique residue of theta in (−p/2, p/2].
Coeff select_residue(Coeff theta, ModPContext ctx);

// Residue in {0, …, p−1}.
Coeff positive_residue(Coeff theta, ModPContext ctx);

// Coefficient-wise select residue; zero residues dropped.
IntegerChain select_representative(const IntegerChain& t, ModPContext ctx);

// Coefficient-wise residue in {1, …, p−1} on the canonical orientation;
// zero residues dropped.
IntegerChain positive_representative(const IntegerChain& t, ModPContext ctx);

// mass(select_representative(T, p)).
double pmass(const IntegerChain& t, ModPContext ctx);

// Σ|select residue| as an exact integer.
Coeff pmass0(const IntegerChain& t, ModPContext ctx);

// Exact p-mass; requires rational edge lengths for degree 1.
Rational pmass_exact(const IntegerChain& t, ModPContext ctx);

struct CongruenceCertificate {
    IntegerChain quotient; // A − B = p·quotient
    bool checked = false;
};

struct EquivResult {
    bool equivalent = false;
    std::optional<CongruenceCertificate> certificate;
};

// True iff p divides every coefficient of A − B; on success the verified
// quotient (A−B)/p is returned. Throws ComplexMismatch for chains on
// different complexes or of different degree.
EquivResult equiv_mod_p(const IntegerChain& a, const IntegerChain& b,
                        ModPContext ctx);

// Independent re-check that a − b = p·q coefficient-exactly.
bool verify_congruence(const IntegerChain& a, const IntegerChain& b,
                       const IntegerChain& q, ModPContext ctx);

} // namespace chainmod

#endif
