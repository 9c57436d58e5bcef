#include "chainmod/lp.hpp"

#include "chainmod/errors.hpp"

#include <algorithm>

namespace chainmod {

namespace {

// Tableau layout: one row per constraint plus an objective row kept as
// reduced costs; columns are [structural | bound slacks | artificials | rhs].
class SimplexTableau {
public:
    explicit SimplexTableau(const LinearProgram& lp)
        : n_(static_cast<int>(lp.c.size())),
          m_eq_(static_cast<int>(lp.b.size())),
          rows_(m_eq_ + n_),
          cols_(2 * n_ + m_eq_ + 1),
          tab_(rows_ + 1, std::vector<Rational>(cols_, 0)),
          basic_(rows_, -1) {
        for (int k = 0; k < m_eq_; ++k) {
            Rational sign = lp.b[k] < 0 ? -1 : 1;
            for (int j = 0; j < n_; ++j) tab_[k][j] = sign * lp.a[k][j];
            tab_[k][2 * n_ + k] = 1;
            tab_[k][rhs()] = sign * lp.b[k];
            basic_[k] = 2 * n_ + k;
        }
        for (int i = 0; i < n_; ++i) {
            if (lp.upper[i] < 0) throw Error("negative upper bound in LP");
            int row = m_eq_ + i;
            tab_[row][i] = 1;
            tab_[row][n_ + i] = 1;
            tab_[row][rhs()] = lp.upper[i];
            basic_[row] = n_ + i;
        }
    }

    void phase_one() {
        auto& obj = tab_[rows_];
        std::fill(obj.begin(), obj.end(), Rational(0));
        for (int k = 0; k < m_eq_; ++k) obj[2 * n_ + k] = 1;
        for (int k = 0; k < m_eq_; ++k) subtract_row(k); // zero the basic columns
        iterate(/*allow_artificials=*/true);
        if (tab_[rows_][rhs()] != 0)
            throw Error("LP is infeasible");
        evict_artificials();
    }

    void phase_two(const LinearProgram& lp) {
        auto& obj = tab_[rows_];
        std::fill(obj.begin(), obj.end(), Rational(0));
        for (int j = 0; j < n_; ++j) obj[j] = lp.c[j];
        for (int i = 0; i < rows_; ++i)
            if (basic_[i] < 2 * n_ && obj[basic_[i]] != 0) {
                Rational factor = obj[basic_[i]];
                for (int j = 0; j < cols_; ++j) obj[j] -= factor * tab_[i][j];
            }
        iterate(/*allow_artificials=*/false);
    }

    LpSolution extract(const LinearProgram& lp) const {
        std::vector<Rational> x(n_, 0);
        for (int i = 0; i < rows_; ++i)
            if (basic_[i] < n_) x[basic_[i]] = tab_[i][rhs()];
        Rational value = 0;
        for (int j = 0; j < n_; ++j) value += lp.c[j] * x[j];
        return {value, std::move(x)};
    }

private:
    int rhs() const { return cols_ - 1; }

    void subtract_row(int row) {
        auto& obj = tab_[rows_];
        Rational factor = obj[basic_[row]];
        if (factor == 0) return;
        for (int j = 0; j < cols_; ++j) obj[j] -= factor * tab_[row][j];
    }

    // Bland's rule: lowest eligible column enters, lowest basic index leaves.
    void iterate(bool allow_artificials) {
        const int entering_limit = allow_artificials ? 2 * n_ + m_eq_ : 2 * n_;
        while (true) {
            int enter = -1;
            for (int j = 0; j < entering_limit; ++j)
                if (tab_[rows_][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return;

            int leave = -1;
            Rational best_ratio = 0;
            for (int i = 0; i < rows_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][rhs()] / tab_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basic_[i] < basic_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw Error("LP is unbounded");
            pivot(leave, enter);
        }
    }

    void evict_artificials() {
        for (int i = 0; i < rows_; ++i) {
            if (basic_[i] < 2 * n_) continue;
            int pivot_col = -1;
            for (int j = 0; j < 2 * n_; ++j)
                if (tab_[i][j] != 0) {
                    pivot_col = j;
                    break;
                }
            // An all-zero row is redundant; its artificial stays basic at 0.
            if (pivot_col >= 0) pivot(i, pivot_col);
        }
    }

    void pivot(int row, int col) {
        Rational inv = 1 / tab_[row][col];
        for (int j = 0; j < cols_; ++j) tab_[row][j] *= inv;
        for (int i = 0; i <= rows_; ++i) {
            if (i == row) continue;
            Rational factor = tab_[i][col];
            if (factor == 0) continue;
            for (int j = 0; j < cols_; ++j) tab_[i][j] -= factor * tab_[row][j];
        }
        basic_[row] = col;
    }

    int n_;
    int m_eq_;
    int rows_;
    int cols_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<int> basic_;
};

} // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    if (lp.a.size() != lp.b.size())
        throw Error("LP row count mismatch");
    for (const auto& row : lp.a)
        if (row.size() != lp.c.size()) throw Error("LP column count mismatch");
    if (lp.upper.size() != lp.c.size())
        throw Error("LP bound count mismatch");

    SimplexTableau tableau(lp);
    tableau.phase_one();
    tableau.phase_two(lp);
    return tableau.extract(lp);
}

RelaxationResult flat_norm_relaxation(const IntegerChain& t, Coeff bound) {
    if (t.degree() != 0)
        throw ParamOutOfRange("relaxation expects a degree-0 chain");
    if (!t.complex()->all_lengths_rational())
        throw ParamOutOfRange("relaxation requires rational edge lengths");
    const int v_count = static_cast<int>(t.complex()->vertex_count());
    const int e_count = static_cast<int>(t.complex()->edge_count());
    const int n = 2 * v_count + 2 * e_count;
    const int s_plus = 2 * v_count;
    const int s_minus = 2 * v_count + e_count;

    LinearProgram lp;
    lp.c.assign(n, 1);
    lp.upper.assign(n, Rational(bound));
    for (int e = 0; e < e_count; ++e) {
        const Rational& w = *t.complex()->edge_rational_length(e);
        lp.c[s_plus + e] = w;
        lp.c[s_minus + e] = w;
    }
    lp.a.assign(v_count, std::vector<Rational>(n, 0));
    lp.b.assign(v_count, 0);
    for (int v = 0; v < v_count; ++v) {
        lp.a[v][v] = 1;            // r⁺_v
        lp.a[v][v_count + v] = -1; // r⁻_v
        lp.b[v] = t.coeff(v);
    }
    for (int e = 0; e < e_count; ++e) {
        int head = t.complex()->head(e);
        int tail = t.complex()->tail(e);
        lp.a[head][s_plus + e] += 1;
        lp.a[head][s_minus + e] -= 1;
        lp.a[tail][s_plus + e] -= 1;
        lp.a[tail][s_minus + e] += 1;
    }

    LpSolution solution = solve_lp(lp);
    RelaxationResult result;
    result.value = solution.value;
    result.r.resize(v_count);
    result.s.resize(e_count);
    for (int v = 0; v < v_count; ++v)
        result.r[v] = solution.x[v] - solution.x[v_count + v];
    for (int e = 0; e < e_count; ++e)
        result.s[e] = solution.x[s_plus + e] - solution.x[s_minus + e];
    return result;
}

} // namespace chainmod
