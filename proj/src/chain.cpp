#include "chainmod/chain.hpp"

#include <cmath>
#include <cstdlib>

namespace chainmod {

IntegerChain::IntegerChain(ComplexPtr complex, int degree)
    : complex_(std::move(complex)), degree_(degree) {
    if (degree_ != 0 && degree_ != 1)
        throw ParamOutOfRange("chain degree must be 0 or 1");
    if (!complex_) throw MalformedChain("chain requires a complex");
}

void IntegerChain::check_cell(int cell) const {
    std::size_t count =
        degree_ == 0 ? complex_->vertex_count() : complex_->edge_count();
    if (cell < 0 || cell >= static_cast<int>(count))
        throw ParamOutOfRange("cell index out of range for degree " +
                              std::to_string(degree_));
}

Coeff IntegerChain::coeff(int cell) const {
    auto it = coeffs_.find(cell);
    return it == coeffs_.end() ? 0 : it->second;
}

void IntegerChain::set(int cell, Coeff value) {
    check_cell(cell);
    if (value == 0)
        coeffs_.erase(cell);
    else
        coeffs_[cell] = value;
}

void IntegerChain::add(int cell, Coeff value) { set(cell, coeff(cell) + value); }

IntegerChain& IntegerChain::operator+=(const IntegerChain& other) {
    require_same_complex(*this, other);
    for (const auto& [cell, v] : other.coeffs_) add(cell, v);
    return *this;
}

IntegerChain& IntegerChain::operator-=(const IntegerChain& other) {
    require_same_complex(*this, other);
    for (const auto& [cell, v] : other.coeffs_) add(cell, -v);
    return *this;
}

IntegerChain& IntegerChain::operator*=(Coeff scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [cell, v] : coeffs_) v *= scalar;
    return *this;
}

bool IntegerChain::operator==(const IntegerChain& other) const {
    return degree_ == other.degree_ && coeffs_ == other.coeffs_ &&
           same_complex(complex_, other.complex_);
}

IntegerChain boundary(const IntegerChain& t) {
    if (t.degree() != 1)
        throw ParamOutOfRange("boundary is defined for degree-1 chains");
    IntegerChain out(t.complex(), 0);
    for (const auto& [e, theta] : t.coeffs()) {
        out.add(t.complex()->head(e), theta);
        out.add(t.complex()->tail(e), -theta);
    }
    return out;
}

double mass(const IntegerChain& t) {
    if (t.degree() == 0) return static_cast<double>(mass0(t));
    double sum = 0.0;
    for (const auto& [e, theta] : t.coeffs())
        sum += std::abs(static_cast<double>(theta)) * t.complex()->edge_length(e);
    return sum;
}

Coeff mass0(const IntegerChain& t) {
    Coeff sum = 0;
    for (const auto& [cell, theta] : t.coeffs()) sum += abs_coeff(theta);
    return sum;
}

Rational mass_exact(const IntegerChain& t) {
    if (t.degree() == 0) return Rational(mass0(t));
    Rational sum = 0;
    for (const auto& [e, theta] : t.coeffs()) {
        const auto& len = t.complex()->edge_rational_length(e);
        if (!len)
            throw ParamOutOfRange("edge " + std::to_string(e) +
                                  " has irrational length; exact mass unavailable");
        sum += Rational(abs_coeff(theta)) * *len;
    }
    return sum;
}

std::set<int> support(const IntegerChain& t) {
    std::set<int> cells;
    for (const auto& [cell, theta] : t.coeffs()) cells.insert(cell);
    return cells;
}

IntegerChain remap_chain(const IntegerChain& t, const RefineResult& refined) {
    IntegerChain out(refined.complex, t.degree());
    if (t.degree() == 0) {
        for (const auto& [v, theta] : t.coeffs()) {
            if (v >= static_cast<int>(refined.vertex_map.size()))
                throw ParamOutOfRange("vertex index outside refine input");
            out.add(refined.vertex_map[v], theta);
        }
        return out;
    }
    for (const auto& [s, theta] : t.coeffs()) {
        if (s >= static_cast<int>(refined.remap.size()))
            throw ParamOutOfRange("segment index outside refine input");
        for (const auto& [e, sign] : refined.remap[s]) out.add(e, sign * theta);
    }
    return out;
}

void require_same_complex(const IntegerChain& a, const IntegerChain& b) {
    if (a.degree() != b.degree())
        throw ComplexMismatch("chains have different degrees");
    if (!same_complex(a.complex(), b.complex()))
        throw ComplexMismatch("chains live on different complexes");
}

} // namespace chainmod
