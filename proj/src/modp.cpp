#include "chainmod/modp.hpp"

namespace chainmod {

Coeff select_residue(Coeff theta, ModPContext ctx) {
    Coeff r = theta % ctx.p;
    if (r < 0) r += ctx.p;
    if (2 * r > ctx.p) r -= ctx.p;
    return r;
}

Coeff positive_residue(Coeff theta, ModPContext ctx) {
    Coeff r = theta % ctx.p;
    if (r < 0) r += ctx.p;
    return r;
}

IntegerChain select_representative(const IntegerChain& t, ModPContext ctx) {
    IntegerChain out(t.complex(), t.degree());
    for (const auto& [cell, theta] : t.coeffs())
        out.set(cell, select_residue(theta, ctx));
    return out;
}

IntegerChain positive_representative(const IntegerChain& t, ModPContext ctx) {
    IntegerChain out(t.complex(), t.degree());
    for (const auto& [cell, theta] : t.coeffs())
        out.set(cell, positive_residue(theta, ctx));
    return out;
}

double pmass(const IntegerChain& t, ModPContext ctx) {
    return mass(select_representative(t, ctx));
}

Coeff pmass0(const IntegerChain& t, ModPContext ctx) {
    return mass0(select_representative(t, ctx));
}

Rational pmass_exact(const IntegerChain& t, ModPContext ctx) {
    return mass_exact(select_representative(t, ctx));
}

EquivResult equiv_mod_p(const IntegerChain& a, const IntegerChain& b,
                        ModPContext ctx) {
    require_same_complex(a, b);
    IntegerChain diff = a - b;
    IntegerChain quotient(a.complex(), a.degree());
    for (const auto& [cell, theta] : diff.coeffs()) {
        if (theta % ctx.p != 0) return {false, std::nullopt};
        quotient.set(cell, theta / ctx.p);
    }
    CongruenceCertificate cert{quotient, false};
    cert.checked = verify_congruence(a, b, cert.quotient, ctx);
    if (!cert.checked)
        throw InternalError("congruence certificate failed its own re-check");
    return {true, cert};
}

bool verify_congruence(const IntegerChain& a, const IntegerChain& b,
                       const IntegerChain& q, ModPContext ctx) {
    IntegerChain diff = a - b;
    IntegerChain scaled = q;
    scaled *= ctx.p;
    return diff == scaled;
}

} // namespace chainmod
