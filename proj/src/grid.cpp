#include "chainmod/grid.hpp"

#include "chainmod/errors.hpp"

#include <cstdlib>
#include <functional>

namespace chainmod {

std::size_t GridChain::cell_count() const {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return dims.empty() ? 0 : n;
}

void GridChain::validate() const {
    if (dims.empty()) throw ParamOutOfRange("grid needs at least one dimension");
    for (int d : dims)
        if (d < 1) throw ParamOutOfRange("grid dimensions must be positive");
    if (theta.size() != cell_count())
        throw ParamOutOfRange("theta size does not match grid shape");
    if (cell_edge <= 0) throw ParamOutOfRange("cell edge must be positive");
}

GridChain grid_select(const GridChain& t, ModPContext ctx) {
    t.validate();
    GridChain out = t;
    for (auto& v : out.theta) v = select_residue(v, ctx);
    return out;
}

namespace {

// Sweeps every axis-aligned line of cells and feeds the jumps of θ (with 0
// outside the grid) to `accumulate`. Row-major strides.
void sweep_jumps(const GridChain& t, const std::function<void(Coeff)>& accumulate) {
    const int n = static_cast<int>(t.dims.size());
    std::vector<std::size_t> stride(n, 1);
    for (int d = n - 2; d >= 0; --d)
        stride[d] = stride[d + 1] * static_cast<std::size_t>(t.dims[d + 1]);

    for (int axis = 0; axis < n; ++axis) {
        // Iterate lines: all cells with coordinate `axis` equal to 0.
        std::vector<int> coord(n, 0);
        while (true) {
            std::size_t base = 0;
            for (int d = 0; d < n; ++d) base += coord[d] * stride[d];
            Coeff prev = 0;
            for (int i = 0; i < t.dims[axis]; ++i) {
                Coeff cur = t.theta[base + i * stride[axis]];
                accumulate(cur - prev);
                prev = cur;
            }
            accumulate(-prev);

            int d = n - 1;
            for (; d >= 0; --d) {
                if (d == axis) continue;
                if (++coord[d] < t.dims[d]) break;
                coord[d] = 0;
            }
            if (d < 0) break;
        }
    }
}

Rational face_area(const GridChain& t) {
    return rational_pow(t.cell_edge, static_cast<int>(t.dims.size()) - 1);
}

} // namespace

Rational grid_boundary_mass(const GridChain& t) {
    t.validate();
    Coeff jumps = 0;
    sweep_jumps(t, [&](Coeff j) { jumps += abs_coeff(j); });
    return Rational(jumps) * face_area(t);
}

Rational grid_pmass_boundary(const GridChain& t, ModPContext ctx) {
    t.validate();
    Coeff jumps = 0;
    sweep_jumps(t, [&](Coeff j) { jumps += abs_coeff(select_residue(j, ctx)); });
    return Rational(jumps) * face_area(t);
}

SelectBoundReport check_select_bound(const GridChain& t, ModPContext ctx) {
    SelectBoundReport report;
    report.lhs = grid_boundary_mass(grid_select(t, ctx));
    report.pmass_boundary = grid_pmass_boundary(t, ctx);
    report.rhs = Rational(ctx.p - 1) * report.pmass_boundary;
    report.pass = report.lhs <= report.rhs;
    report.ratio = report.rhs == 0 ? 0.0
                                   : rational_to_double(report.lhs / report.rhs);
    report.mass_ratio =
        report.pmass_boundary == 0
            ? 0.0
            : rational_to_double(report.lhs / report.pmass_boundary);
    return report;
}

} // namespace chainmod
