#include "chainmod/flatnorm.hpp"

#include <algorithm>
#include <cstdlib>
#include <type_traits>
#include <vector>

namespace chainmod {

Coeff default_bound(const IntegerChain& t, Coeff p) {
    Coeff max_theta = 0;
    for (const auto& [cell, theta] : t.coeffs())
        max_theta = std::max(max_theta, abs_coeff(theta));
    return 2 * max_theta + std::max<Coeff>(p, 1);
}

namespace {

// Bounded branch-and-bound over S assignments. R (and Q in the modular case)
// is derived per vertex as soon as its last incident edge is assigned, so the
// accumulated cost prunes early. Cost type C is Rational when every edge
// length is rational, double otherwise.
template <typename C>
class OracleSearch {
public:
    OracleSearch(const IntegerChain& t, Coeff p, Coeff bound)
        : complex_(t.complex()),
          p_(p),
          bound_(bound),
          vertex_count_(static_cast<int>(complex_->vertex_count())),
          edge_count_(static_cast<int>(complex_->edge_count())) {
        target_.assign(vertex_count_, 0);
        for (const auto& [v, theta] : t.coeffs()) target_[v] = theta;

        weights_.reserve(edge_count_);
        for (int e = 0; e < edge_count_; ++e) weights_.push_back(edge_weight(e));

        order_ = connectivity_order();
        remaining_.assign(vertex_count_, 0);
        for (int e = 0; e < edge_count_; ++e) {
            ++remaining_[complex_->tail(e)];
            ++remaining_[complex_->head(e)];
        }

        flow_.assign(vertex_count_, 0);
        s_.assign(edge_count_, 0);
        r_.assign(vertex_count_, 0);
        q_.assign(vertex_count_, 0);
        cand_r_.assign(vertex_count_, 0);
        cand_q_.assign(vertex_count_, 0);

        lb_.assign(vertex_count_, 0);
        lb_sum_ = 0;
        for (int v = 0; v < vertex_count_; ++v) {
            lb_[v] = vertex_lower_bound(v);
            lb_sum_ += lb_[v];
        }
    }

    void run() {
        C upfront = C(0);
        // Vertices with no incident edges are decided before the search.
        for (int v = 0; v < vertex_count_; ++v) {
            if (remaining_[v] == 0) {
                if (!settle_vertex(v, upfront)) return; // |T_v| beyond bound: infeasible
                cand_r_[v] = r_[v];
                cand_q_[v] = q_[v];
            }
        }
        dfs(0, upfront);
    }

    bool found() const { return found_; }
    const C& best_cost() const { return best_cost_; }
    const std::vector<Coeff>& best_s() const { return best_s_; }
    const std::vector<Coeff>& best_r() const { return best_r_; }
    const std::vector<Coeff>& best_q() const { return best_q_; }

private:
    C edge_weight(int e) const {
        if constexpr (std::is_same_v<C, Rational>)
            return *complex_->edge_rational_length(e);
        else
            return complex_->edge_length(e);
    }

    // Assign edges so that vertices finalize early: repeatedly take the edge
    // with the most endpoints already touched, lowest index on ties.
    std::vector<int> connectivity_order() const {
        std::vector<int> order;
        std::vector<bool> used(edge_count_, false), touched(vertex_count_, false);
        for (int round = 0; round < edge_count_; ++round) {
            int pick = -1, pick_score = -1;
            for (int e = 0; e < edge_count_; ++e) {
                if (used[e]) continue;
                int score = (touched[complex_->tail(e)] ? 1 : 0) +
                            (touched[complex_->head(e)] ? 1 : 0);
                if (score > pick_score) {
                    pick = e;
                    pick_score = score;
                }
            }
            used[pick] = true;
            touched[complex_->tail(pick)] = true;
            touched[complex_->head(pick)] = true;
            order.push_back(pick);
        }
        return order;
    }

    // Admissible lower bound on |R_v| while edges at v are still unassigned:
    // each remaining edge moves the residual by at most B. The modular search
    // gets no mileage here (pQ absorbs any residual).
    Coeff vertex_lower_bound(int v) const {
        if (p_ != 0 || remaining_[v] == 0) return 0;
        Coeff slack = abs_coeff(target_[v] - flow_[v]) - remaining_[v] * bound_;
        return slack > 0 ? slack : 0;
    }

    void refresh_lb(int v) {
        lb_sum_ -= lb_[v];
        lb_[v] = vertex_lower_bound(v);
        lb_sum_ += lb_[v];
    }

    // Derives the cheapest residual representation at a finalized vertex.
    // Classical: R_v = T_v − ∂S(v). Modular: R_v is the select residue, the
    // quotient goes to Q_v, clamped into the box when necessary.
    bool settle_vertex(int v, C& cost) {
        Coeff residual = target_[v] - flow_[v];
        if (p_ == 0) {
            if (abs_coeff(residual) > bound_) return false;
            r_[v] = residual;
            q_[v] = 0;
            cost += C(abs_coeff(residual));
            return true;
        }
        Coeff rem = select_residue(residual, ModPContext(p_));
        Coeff quot = (residual - rem) / p_;
        if (quot > bound_) quot = bound_;
        if (quot < -bound_) quot = -bound_;
        rem = residual - p_ * quot;
        if (abs_coeff(rem) > bound_) return false;
        r_[v] = rem;
        q_[v] = quot;
        cost += C(abs_coeff(rem));
        return true;
    }

    void offer_candidate(const C& cost) {
        if (found_ && cost > best_cost_) return;
        if (found_ && cost == best_cost_ && !(s_ < best_s_)) return;
        found_ = true;
        best_cost_ = cost;
        best_s_ = s_;
        best_r_ = cand_r_;
        best_q_ = cand_q_;
    }

    void dfs(int level, C cost) {
        if (level == edge_count_) {
            offer_candidate(cost);
            return;
        }
        int e = order_[level];
        int tail = complex_->tail(e);
        int head = complex_->head(e);

        for (Coeff magnitude = 0; magnitude <= bound_; ++magnitude) {
            C base = cost + weights_[e] * C(magnitude);
            if (found_ && base > best_cost_) break;
            for (int sign : {+1, -1}) {
                if (magnitude == 0 && sign < 0) continue;
                Coeff value = sign * magnitude;

                s_[e] = value;
                flow_[tail] -= value;
                flow_[head] += value;
                --remaining_[tail];
                --remaining_[head];
                refresh_lb(tail);
                refresh_lb(head);

                C branch = base;
                bool feasible = true;
                for (int v : {tail, head}) {
                    if (remaining_[v] != 0) continue;
                    if (!settle_vertex(v, branch)) {
                        feasible = false;
                        break;
                    }
                    cand_r_[v] = r_[v];
                    cand_q_[v] = q_[v];
                }
                if (feasible && !(found_ && branch + C(lb_sum_) > best_cost_))
                    dfs(level + 1, branch);

                ++remaining_[tail];
                ++remaining_[head];
                flow_[tail] += value;
                flow_[head] -= value;
                refresh_lb(tail);
                refresh_lb(head);
                s_[e] = 0;
            }
        }
    }

    ComplexPtr complex_;
    Coeff p_;
    Coeff bound_;
    int vertex_count_;
    int edge_count_;
    std::vector<Coeff> target_;
    std::vector<C> weights_;
    std::vector<int> order_;
    std::vector<int> remaining_;
    std::vector<Coeff> flow_, s_, r_, q_, cand_r_, cand_q_;
    std::vector<Coeff> lb_;
    Coeff lb_sum_ = 0;

    bool found_ = false;
    C best_cost_ = C(0);
    std::vector<Coeff> best_s_, best_r_, best_q_;
};

template <typename C>
FlatNormDecomposition run_search(const IntegerChain& t, Coeff p, Coeff bound) {
    OracleSearch<C> search(t, p, bound);
    search.run();
    if (!search.found())
        throw InternalError("flat-norm search found no feasible decomposition");

    FlatNormDecomposition out;
    out.p = p;
    out.bound_used = bound;
    out.r = IntegerChain(t.complex(), 0);
    out.s = IntegerChain(t.complex(), 1);
    out.q = IntegerChain(t.complex(), 0);
    for (int v = 0; v < static_cast<int>(t.complex()->vertex_count()); ++v) {
        out.r.set(v, search.best_r()[v]);
        if (p != 0) out.q.set(v, search.best_q()[v]);
        if (abs_coeff(search.best_r()[v]) == bound ||
            abs_coeff(search.best_q()[v]) == bound)
            out.bound_saturated = true;
    }
    for (int e = 0; e < static_cast<int>(t.complex()->edge_count()); ++e) {
        out.s.set(e, search.best_s()[e]);
        if (abs_coeff(search.best_s()[e]) == bound) out.bound_saturated = true;
    }
    if constexpr (std::is_same_v<C, Rational>) {
        out.exact_value = search.best_cost();
        out.value = rational_to_double(search.best_cost());
    } else {
        out.value = search.best_cost();
    }
    return out;
}

// Degree-1 chains on a 1-complex have no 2-cells, so S = 0 is forced and the
// bounded minimum is per-edge: the select residue with its quotient clamped
// into the box.
FlatNormDecomposition run_degree1(const IntegerChain& t, Coeff p, Coeff bound) {
    FlatNormDecomposition out;
    out.p = p;
    out.bound_used = bound;
    out.r = IntegerChain(t.complex(), 1);
    out.s = IntegerChain(t.complex(), 1);
    out.q = IntegerChain(t.complex(), 1);
    for (const auto& [e, theta] : t.coeffs()) {
        Coeff rem = theta, quot = 0;
        if (p != 0) {
            rem = select_residue(theta, ModPContext(p));
            quot = (theta - rem) / p;
            if (quot > bound) quot = bound;
            if (quot < -bound) quot = -bound;
            rem = theta - p * quot;
            if (abs_coeff(rem) > bound)
                throw InternalError("degree-1 residue escaped the box");
        }
        out.r.set(e, rem);
        out.q.set(e, quot);
        if (abs_coeff(rem) == bound || abs_coeff(quot) == bound)
            out.bound_saturated = true;
    }
    if (p == 0) out.q = IntegerChain(t.complex(), 1);
    if (t.complex()->all_lengths_rational()) {
        out.exact_value = mass_exact(out.r);
        out.value = rational_to_double(*out.exact_value);
    } else {
        out.value = mass(out.r);
    }
    return out;
}

FlatNormDecomposition oracle(const IntegerChain& t, Coeff p, Coeff bound,
                             bool force) {
    if (bound < 1) throw ParamOutOfRange("coefficient bound must be positive");
    Coeff max_theta = 0;
    for (const auto& [v, theta] : t.coeffs())
        max_theta = std::max(max_theta, abs_coeff(theta));
    if (bound < max_theta)
        throw ParamOutOfRange("bound " + std::to_string(bound) +
                              " is below max |coefficient| " +
                              std::to_string(max_theta));
    if (!force && (t.complex()->edge_count() > 12 || bound > 50))
        throw ParamOutOfRange(
            "instance exceeds the oracle guardrail (12 edges, bound 50); "
            "pass force to override");

    if (t.degree() == 1) return run_degree1(t, p, bound);
    if (t.complex()->all_lengths_rational())
        return run_search<Rational>(t, p, bound);
    return run_search<double>(t, p, bound);
}

} // namespace

FlatNormDecomposition flat_norm(const IntegerChain& t, Coeff bound, bool force) {
    return oracle(t, 0, bound, force);
}

FlatNormDecomposition flat_norm_mod_p(const IntegerChain& t, ModPContext ctx,
                                      Coeff bound, bool force) {
    return oracle(t, ctx.p, bound, force);
}

bool zero_sum_check(const IntegerChain& r, ModPContext ctx) {
    if (r.degree() != 0)
        throw ParamOutOfRange("zero_sum_check expects a degree-0 chain");
    Coeff sum = 0;
    for (const auto& [v, theta] : r.coeffs()) sum += theta;
    return positive_residue(sum, ctx) == 0;
}

ConeResult cone(const IntegerChain& r, const Point& apex) {
    if (r.degree() != 0)
        throw ParamOutOfRange("cone expects a degree-0 chain");
    const ComplexPtr& base = r.complex();
    if (static_cast<int>(apex.size()) != base->ambient_dim())
        throw DimensionMismatch("apex arity differs from ambient dimension");
    for (const auto& [v, theta] : r.coeffs())
        if (base->vertex(v) == apex)
            throw ApexCollision("apex coincides with support vertex " +
                                std::to_string(v));

    std::vector<Point> vertices = base->vertices();
    std::vector<std::pair<int, int>> edges = base->edges();
    int apex_vertex = static_cast<int>(vertices.size());
    vertices.push_back(apex);

    std::vector<std::pair<int, Coeff>> cone_edges;
    for (const auto& [v, theta] : r.coeffs()) {
        edges.emplace_back(v, apex_vertex);
        cone_edges.emplace_back(static_cast<int>(edges.size()) - 1, theta);
    }

    ConeResult result;
    result.complex = std::make_shared<const GeometricComplex>(
        base->ambient_dim(), std::move(vertices), std::move(edges));
    result.apex_vertex = apex_vertex;
    result.cone_chain = IntegerChain(result.complex, 1);
    for (const auto& [e, theta] : cone_edges) result.cone_chain.set(e, theta);
    return result;
}

IntegerChain lift_chain(const IntegerChain& t, const ComplexPtr& extended) {
    const ComplexPtr& base = t.complex();
    if (extended->ambient_dim() != base->ambient_dim() ||
        extended->vertex_count() < base->vertex_count() ||
        extended->edge_count() < base->edge_count())
        throw ComplexMismatch("target complex does not extend the chain's complex");
    for (std::size_t v = 0; v < base->vertex_count(); ++v)
        if (extended->vertex(static_cast<int>(v)) != base->vertex(static_cast<int>(v)))
            throw ComplexMismatch("vertex mismatch while lifting");
    for (std::size_t e = 0; e < base->edge_count(); ++e)
        if (extended->edge(static_cast<int>(e)) != base->edge(static_cast<int>(e)))
            throw ComplexMismatch("edge mismatch while lifting");
    IntegerChain out(extended, t.degree());
    for (const auto& [cell, theta] : t.coeffs()) out.set(cell, theta);
    return out;
}

} // namespace chainmod
