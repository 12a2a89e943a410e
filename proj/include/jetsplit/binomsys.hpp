/*
   Copyright 2026 The jetsplit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JETSPLIT_BINOMSYS_HPP
#define JETSPLIT_BINOMSYS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "jet.hpp"
#include "splitting.hpp"

namespace jetsplit {

/// The linear system A_r x_r = b_r whose solution produces the r-th gluing
/// map O(n-k) -> P^k(O(n)). Row i encodes the condition on c^r_{k-i}:
/// A[i][j] = (-1)^j C(n-j, (k-i)-j), b = (0, ..., 0, 1).
struct BinomialSystem {
    int n, k, r;
    FieldSpec field;
    std::vector<std::vector<Fq>> A;  // (r+1) x (r+1)
    std::vector<Fq> b;               // r+1
};

enum class SolveStatus { unique, none, underdetermined };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::unique: return "unique";
        case SolveStatus::none: return "none";
        default: return "underdetermined";
    }
}

struct SystemSolution {
    SolveStatus status;
    std::vector<Fq> x;  // x_{0,r} ... x_{r,r}; empty unless status == unique
};

/// Gluing scalars c^r_l for 0 <= r, l <= k. Row 0 is C(n, i); solved rows
/// satisfy c^r_k = ... = c^r_{k-r+1} = 0 and c^r_{k-r} = 1.
struct GluingCoefficients {
    int n, k;
    FieldSpec field;
    std::vector<std::vector<Fq>> c;  // (k+1) x (k+1), c[r][l]
};

inline BinomialSystem build_system(int n, int k, int r,
                                   const FieldSpec& field) {
    if (!(1 <= r && r <= k && k <= n))
        throw invalid_params("build_system needs 1 <= r <= k <= n");
    BinomialSystem sys{n, k, r, field, {}, {}};
    sys.A.assign(r + 1, std::vector<Fq>(r + 1, Fq::zero(field)));
    sys.b.assign(r + 1, Fq::zero(field));
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) {
            bigint v = binomial(n - j, (k - i) - j);
            if (j % 2 != 0) v = -v;
            sys.A[i][j] = reduce(v, field);
        }
    sys.b[r] = Fq::one(field);
    return sys;
}

namespace detail {

/// Exact Gaussian elimination with first-nonzero pivoting. Returns the
/// solution when unique; rank deficiency becomes a status, not an error.
inline SystemSolution solve_linear(std::vector<std::vector<Fq>> A,
                                   std::vector<Fq> b) {
    const int nrow = static_cast<int>(A.size());
    const int ncol = nrow == 0 ? 0 : static_cast<int>(A[0].size());
    const FieldSpec spec = b.at(0).spec();
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < ncol && row < nrow; ++col) {
        int piv = -1;
        for (int i = row; i < nrow; ++i)
            if (!A[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(A[piv], A[row]);
        std::swap(b[piv], b[row]);
        const Fq inv = A[row][col].inverse();
        for (int c = col; c < ncol; ++c) A[row][c] *= inv;
        b[row] *= inv;
        for (int i = 0; i < nrow; ++i) {
            if (i == row || A[i][col].is_zero()) continue;
            const Fq f = A[i][col];
            for (int c = col; c < ncol; ++c) A[i][c] -= f * A[row][c];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < nrow; ++i)
        if (!b[i].is_zero()) return {SolveStatus::none, {}};
    if (row < ncol) return {SolveStatus::underdetermined, {}};
    std::vector<Fq> x(ncol, Fq::zero(spec));
    for (int i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
    return {SolveStatus::unique, std::move(x)};
}

} // namespace detail

inline SystemSolution solve_system(const BinomialSystem& sys) {
    return detail::solve_linear(sys.A, sys.b);
}

/// c^r_l = sum_j (-1)^j C(n-j, l-j) x_{j,r}; row 0 is C(n, i) with
/// x_{0,0} = 1. The solved rows are checked against the gluing conditions
/// they encode; a violation is an internal inconsistency.
inline GluingCoefficients gluing_coefficients(
    int n, int k, const std::vector<SystemSolution>& solutions,
    const FieldSpec& field) {
    GluingCoefficients out{n, k, field, {}};
    out.c.assign(k + 1, std::vector<Fq>(k + 1, Fq::zero(field)));
    for (int l = 0; l <= k; ++l) out.c[0][l] = reduce(binomial(n, l), field);
    for (int r = 1; r <= k; ++r) {
        if (r - 1 >= static_cast<int>(solutions.size()) ||
            solutions[r - 1].status != SolveStatus::unique)
            throw invalid_params("gluing_coefficients: row " +
                                 std::to_string(r) + " has no unique solution");
        const auto& x = solutions[r - 1].x;
        for (int l = 0; l <= k; ++l) {
            Fq acc = Fq::zero(field);
            for (int j = 0; j <= r; ++j) {
                bigint v = binomial(n - j, l - j);
                if (j % 2 != 0) v = -v;
                acc += reduce(v, field) * x[j];
            }
            out.c[r][l] = acc;
        }
        for (int l = k - r + 1; l <= k; ++l)
            if (!out.c[r][l].is_zero())
                throw gluing_failed("c^" + std::to_string(r) + "_" +
                                    std::to_string(l) + " != 0");
        if (out.c[r][k - r] != Fq::one(field))
            throw gluing_failed("c^" + std::to_string(r) + "_" +
                                std::to_string(k - r) + " != 1");
    }
    return out;
}

/// The chart-local matrices of the direct-sum map: [phi0] with entry
/// t^{k-r-l} c^r_l at (row l, col r), and the upper triangular [phi1] with
/// entry x_{j,r} t^{j-r} at (row j, col r).
inline std::pair<LaurentMatrix, LaurentMatrix> assemble_phi(
    int n, int k, const GluingCoefficients& coeffs,
    const std::vector<SystemSolution>& solutions) {
    const FieldSpec& field = coeffs.field;
    LaurentMatrix phi0(k + 1, field);
    LaurentMatrix phi1(k + 1, field);
    for (int l = 0; l <= k; ++l)
        phi0.at(l, 0) = LaurentPoly(coeffs.c[0][l], k - l);
    phi1.at(0, 0) = LaurentPoly::one(field);
    for (int r = 1; r <= k; ++r) {
        if (r - 1 >= static_cast<int>(solutions.size()) ||
            solutions[r - 1].status != SolveStatus::unique)
            throw missing_solution("assemble_phi: no solution for r = " +
                                   std::to_string(r));
        const auto& x = solutions[r - 1].x;
        for (int l = 0; l <= k; ++l)
            phi0.at(l, r) = LaurentPoly(coeffs.c[r][l], k - r - l);
        for (int j = 0; j <= r; ++j)
            phi1.at(j, r) = LaurentPoly(x[j], j - r);
    }
    return {phi0, phi1};
}

/// Outcome of the linear-system route in an arbitrary characteristic.
struct SystemSplitOutcome {
    /// All k systems solved uniquely?
    bool all_solvable = false;
    /// When solvable: does the direct-sum map have unit determinant, i.e. is
    /// prod x_{r,r} nonzero? If not, phi exists but is not an isomorphism.
    bool is_isomorphism = false;
    std::vector<SystemSolution> solutions;
};

inline SystemSplitOutcome system_split_outcome(int n, int k,
                                               const FieldSpec& field) {
    SystemSplitOutcome out;
    out.solutions.reserve(k);
    for (int r = 1; r <= k; ++r) {
        out.solutions.push_back(solve_system(build_system(n, k, r, field)));
        if (out.solutions.back().status != SolveStatus::unique) return out;
    }
    out.all_solvable = true;
    out.is_isomorphism = true;
    for (int r = 1; r <= k; ++r)
        if (out.solutions[r - 1].x[r].is_zero()) out.is_isomorphism = false;
    return out;
}

/// Characteristic-zero splitting of P^k(O(n)) via the linear systems:
/// [n-k, ..., n-k] (k+1 copies), cross-checked against the factorization
/// route.
inline SplittingType char0_split(int n, int k) {
    if (!(1 <= k && k <= n)) throw invalid_params("char0_split: 1 <= k <= n");
    const FieldSpec field(0);
    SystemSplitOutcome out = system_split_outcome(n, k, field);
    if (!out.all_solvable)
        throw unexpected_singular("char0_split: singular system over Q at (" +
                                  std::to_string(n) + "," + std::to_string(k) +
                                  ")");
    if (!out.is_isomorphism)
        throw unexpected_singular("char0_split: vanishing x_{r,r} over Q");
    // the gluing conditions are re-derived and checked here
    GluingCoefficients coeffs = gluing_coefficients(n, k, out.solutions, field);
    auto [phi0, phi1] = assemble_phi(n, k, coeffs, out.solutions);
    // phi0 = t^{k-n} * L * phi1 on the overlap
    LaurentMatrix lhs = mat_mul(left_transition(k, n, field), phi1).shift(k - n);
    if (lhs != phi0)
        throw internal_error("char0_split: gluing identity failed");
    SplittingType type;
    type.degrees.assign(k + 1, n - k);
    SplittingType viaf = birkhoff_split(left_transition(k, n, field)).first;
    if (viaf != type)
        throw internal_error("char0_split: factorization route disagrees");
    return type;
}

/// (|A_r| by exact elimination over Q, the closed-form product
/// prod_l C(n-l, k-r) / C(k-l, r-l)); equal up to sign.
inline std::pair<bigrat, bigrat> det_formula_check(int n, int k, int r) {
    if (!(1 <= r && r <= k && k <= n))
        throw invalid_params("det_formula_check needs 1 <= r <= k <= n");
    const FieldSpec field(0);
    BinomialSystem sys = build_system(n, k, r, field);
    // exact elimination determinant
    auto A = sys.A;
    bigrat det = 1;
    const int sz = r + 1;
    for (int col = 0; col < sz; ++col) {
        int piv = -1;
        for (int i = col; i < sz; ++i)
            if (!A[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) { det = 0; break; }
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det *= A[col][col].rational();
        const Fq inv = A[col][col].inverse();
        for (int i = col + 1; i < sz; ++i) {
            if (A[i][col].is_zero()) continue;
            const Fq f = A[i][col] * inv;
            for (int c = col; c < sz; ++c) A[i][c] -= f * A[col][c];
        }
    }
    bigrat product = 1;
    for (int l = 0; l <= r; ++l) {
        bigint denom = binomial(k - l, r - l);
        if (denom == 0)
            throw internal_error("det_formula_check: C(k-l, r-l) = 0");
        product *= bigrat(binomial(n - l, k - r), denom);
    }
    return {det, product};
}

/// The binomial reduction identity behind the determinant formula, checked
/// as exact rationals. The displayed 1-index binomials are the plain
/// integers a-1 and k-b+1.
inline bool binomial_lemma_check(int n, int k, int a, int b) {
    if (n < 0 || k < 0 || a < 0 || b < 0)
        throw invalid_params("binomial_lemma_check: negative input");
    if (k - b + 1 == 0)
        throw invalid_params("binomial_lemma_check: k - b + 1 = 0");
    const bigrat lhs =
        bigrat(binomial(n - a + 1, k - a - b + 2)) -
        bigrat(n - k + b, k - b + 1) * bigrat(binomial(n - a + 1, k - a - b + 1));
    const bigrat rhs =
        bigrat(a - 1, 1) * bigrat(binomial(n - a + 1, k - a - b + 2)) /
        bigrat(k - b + 1);
    return lhs == rhs;
}

} // namespace jetsplit

#endif // JETSPLIT_BINOMSYS_HPP
