#include "chainmod/repair.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace chainmod {

namespace {

// One admissible step out of `cur`: lowest-index edge whose remaining
// multiplicity points away from cur.
std::optional<PathStep> pick_step(const std::map<int, Coeff>& work,
                                  const ComplexPtr& complex, int cur) {
    for (const auto& [e, theta] : work) {
        if (theta == 0) throw MalformedChain("zero coefficient encountered");
        if (theta > 0 && complex->tail(e) == cur) return PathStep{e, +1};
        if (theta < 0 && complex->head(e) == cur) return PathStep{e, -1};
    }
    return std::nullopt;
}

SegmentPath walk(const IntegerChain& q, int z) {
    const ComplexPtr& complex = q.complex();
    IntegerChain bq = boundary(q);

    std::map<int, Coeff> work = q.coeffs();
    SegmentPath path;
    path.start_vertex = z;

    // visited_at[v] = kept-path length right after the walk first reached v.
    std::map<int, std::size_t> visited_at;
    visited_at[z] = 0;

    int cur = z;
    while (true) {
        auto step = pick_step(work, complex, cur);
        if (!step)
            throw InternalError("walk stalled at vertex " + std::to_string(cur));
        auto& theta = work[step->edge];
        theta -= step->dir;
        if (theta == 0) work.erase(step->edge);
        cur = step->dir > 0 ? complex->head(step->edge) : complex->tail(step->edge);

        if (bq.coeff(cur) > 0) {
            path.steps.push_back(*step);
            path.end_vertex = cur;
            return path;
        }
        auto seen = visited_at.find(cur);
        if (seen != visited_at.end()) {
            // Excise the loop: drop every step after the first arrival and
            // the vertices discovered along it. Consumed multiplicities stay
            // consumed, which is what guarantees termination.
            std::size_t keep = seen->second;
            path.steps.resize(keep);
            for (auto it = visited_at.begin(); it != visited_at.end();)
                it = it->second > keep ? visited_at.erase(it) : std::next(it);
        } else {
            path.steps.push_back(*step);
            visited_at[cur] = path.steps.size();
        }
    }
}

} // namespace

SegmentPath extract_chain(const IntegerChain& q, int z) {
    if (q.degree() != 1)
        throw ParamOutOfRange("extract_chain expects a degree-1 chain");
    Coeff bz = boundary(q).coeff(z);
    if (bz == 0)
        throw NotInBoundarySupport("vertex " + std::to_string(z) +
                                   " has zero boundary multiplicity");
    if (bz < 0) return walk(q, z);

    // Positive multiplicity at z: walk the orientation-reversed chain and
    // read the path backwards, so it ends at z in the original orientation.
    SegmentPath reversed = walk(-q, z);
    SegmentPath path;
    path.start_vertex = reversed.end_vertex;
    path.end_vertex = z;
    path.steps.reserve(reversed.steps.size());
    for (auto it = reversed.steps.rbegin(); it != reversed.steps.rend(); ++it)
        path.steps.push_back(PathStep{it->edge, -it->dir});
    return path;
}

IntegerChain flip_along_path(const IntegerChain& q, const SegmentPath& path,
                             ModPContext ctx) {
    IntegerChain out = q;
    for (const auto& [e, dir] : path.steps) {
        Coeff traversal = dir * out.coeff(e);
        if (traversal < 1 || traversal > ctx.p - 1)
            throw CoefficientOutOfRange(
                "path edge " + std::to_string(e) + " carries multiplicity " +
                std::to_string(traversal) + " outside {1,…,p−1}");
        out.set(e, dir * -(ctx.p - traversal));
    }
    return out;
}

RepairResult repair(const IntegerChain& p_chain, ModPContext ctx) {
    if (p_chain.degree() != 1)
        throw ParamOutOfRange("repair expects a degree-1 chain");

    IntegerChain q = positive_representative(p_chain, ctx);
    const Coeff initial_bm = mass0(boundary(q));
    const Coeff cap = (initial_bm + 1) / 2;

    std::vector<TraceStep> trace;
    Coeff iterations = 0;
    while (true) {
        IntegerChain bq = boundary(q);
        int z = -1;
        for (const auto& [v, theta] : bq.coeffs()) {
            if (abs_coeff(theta) >= ctx.p) {
                z = v;
                break;
            }
        }
        if (z < 0) break;
        if (++iterations > cap)
            throw InternalError("repair exceeded its iteration cap of " +
                                std::to_string(cap));

        SegmentPath path = extract_chain(q, z);
        IntegerChain next = flip_along_path(q, path, ctx);
        Coeff before = mass0(bq);
        Coeff after = mass0(boundary(next));
        if (after > before - 2)
            throw InternalError("boundary mass fell by less than 2 (" +
                                std::to_string(before) + " → " +
                                std::to_string(after) + ")");
        trace.push_back(TraceStep{z, std::move(path), before, after});
        q = std::move(next);
    }

    IntegerChain diff = q - p_chain;
    IntegerChain quotient(p_chain.complex(), 1);
    for (const auto& [e, theta] : diff.coeffs()) {
        if (theta % ctx.p != 0)
            throw InternalError("repair output is not congruent to its input");
        quotient.set(e, theta / ctx.p);
    }

    RepairResult result;
    result.certificate =
        RepairCertificate{p_chain, q, std::move(quotient), std::move(trace)};
    result.repaired = std::move(q);
    return result;
}

namespace {

std::string cell_list(const std::vector<int>& cells) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size() && i < 8; ++i)
        out << (i ? "," : "") << cells[i];
    if (cells.size() > 8) out << ",…";
    return out.str();
}

} // namespace

RepairReport verify_repair(const IntegerChain& input, const IntegerChain& output,
                           const RepairCertificate& cert, ModPContext ctx) {
    const Coeff p = ctx.p;
    RepairReport report;
    auto push = [&](const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back(CheckItem{name, pass, detail});
    };

    require_same_complex(input, output);

    bool divisible = verify_congruence(output, input, cert.quotient, ctx);
    push("divisibility", divisible,
         divisible ? "output − input = p·quotient"
                   : "certificate quotient does not reproduce output − input");

    std::vector<int> bad_edges;
    for (const auto& [e, theta] : output.coeffs())
        if (abs_coeff(theta) < 1 || abs_coeff(theta) > p - 1) bad_edges.push_back(e);
    push("multiplicity_range", bad_edges.empty(),
         bad_edges.empty() ? "all |θ̃| in {1,…,p−1}"
                           : "edges out of range: " + cell_list(bad_edges));

    IntegerChain b_out = boundary(output);
    std::vector<int> bad_vertices;
    for (const auto& [v, theta] : b_out.coeffs())
        if (abs_coeff(theta) > p - 1) bad_vertices.push_back(v);
    push("boundary_range", bad_vertices.empty(),
         bad_vertices.empty() ? "all |∂θ̃| ≤ p−1"
                              : "vertices out of range: " + cell_list(bad_vertices));

    // Per-edge integer form of M(P̃) ≤ (p−1)·M^p(P): |θ̃_e| ≤ (p−1)·|select(θ_e)|.
    std::vector<int> mass_violations;
    for (const auto& [e, theta] : output.coeffs()) {
        Coeff sel = select_residue(input.coeff(e), ctx);
        if (abs_coeff(theta) > (p - 1) * abs_coeff(sel)) mass_violations.push_back(e);
    }
    push("mass_bound", mass_violations.empty(),
         mass_violations.empty()
             ? "per-edge |θ̃| ≤ (p−1)·|select(θ)|"
             : "edges violating the bound: " + cell_list(mass_violations));

    // Per-vertex integer form of M(∂P̃) ≤ (p−1)·M^p(∂P), plus the global sums.
    IntegerChain b_in = boundary(input);
    std::vector<int> bmass_violations;
    for (const auto& [v, theta] : b_out.coeffs()) {
        Coeff sel = select_residue(b_in.coeff(v), ctx);
        if (abs_coeff(theta) > (p - 1) * abs_coeff(sel)) bmass_violations.push_back(v);
    }
    Coeff lhs = mass0(b_out);
    Coeff rhs = (p - 1) * pmass0(b_in, ctx);
    bool bmass_ok = bmass_violations.empty() && lhs <= rhs;
    push("boundary_mass_bound", bmass_ok,
         bmass_ok ? "M(∂P̃) = " + std::to_string(lhs) + " ≤ " + std::to_string(rhs) +
                        " = (p−1)·M^p(∂P)"
                  : "vertices violating the bound: " + cell_list(bmass_violations));

    bool descent = true;
    std::string descent_detail = "boundary mass drops ≥ 2 per iteration";
    Coeff expected_before = mass0(boundary(positive_representative(input, ctx)));
    for (std::size_t i = 0; i < cert.trace.size(); ++i) {
        const TraceStep& step = cert.trace[i];
        if (step.boundary_mass_before != expected_before ||
            step.boundary_mass_after > step.boundary_mass_before - 2) {
            descent = false;
            descent_detail = "trace step " + std::to_string(i) + " inconsistent";
            break;
        }
        expected_before = step.boundary_mass_after;
    }
    if (descent && expected_before != lhs) {
        descent = false;
        descent_detail = "trace terminal boundary mass does not match output";
    }
    push("trace_descent", descent, descent_detail);

    report.all_pass = true;
    for (const auto& item : report.checks) report.all_pass &= item.pass;
    return report;
}

} // namespace chainmod
