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

#ifndef JETSPLIT_SPLITTING_HPP
#define JETSPLIT_SPLITTING_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace jetsplit {

/// The descending twist degrees (a_1 >= ... >= a_r) of a bundle on the
/// projective line. Their sum equals the t-exponent of the determinant of
/// the transition matrix.
struct SplittingType {
    std::vector<int> degrees;

    /// Pairs (degree, multiplicity), degrees descending.
    std::vector<std::pair<int, int>> multiplicities() const {
        std::vector<std::pair<int, int>> out;
        for (int d : degrees) {
            if (!out.empty() && out.back().first == d)
                ++out.back().second;
            else
                out.emplace_back(d, 1);
        }
        return out;
    }

    int degree_sum() const {
        return std::accumulate(degrees.begin(), degrees.end(), 0);
    }

    /// "O(a1)+O(a2)+..." in descending order.
    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < degrees.size(); ++i) {
            if (i) os << "+";
            os << "O(" << degrees[i] << ")";
        }
        return os.str();
    }

    friend bool operator==(const SplittingType& a, const SplittingType& b) {
        return a.degrees == b.degrees;
    }
    friend bool operator!=(const SplittingType& a, const SplittingType& b) {
        return !(a == b);
    }
};

/// Machine-checkable witness of a splitting claim: P * M * Q = D exactly,
/// with P unimodular over F[t], Q unimodular over F[1/t] and D a diagonal of
/// t-monomials.
struct BirkhoffCertificate {
    LaurentMatrix P;
    LaurentMatrix Q;
    LaurentMatrix D;
};

/// True iff all certificate invariants hold by exact computation: sides,
/// constant unit determinants of the factors, diagonal monomial D, and the
/// product identity.
inline bool verify_certificate(const LaurentMatrix& m,
                               const BirkhoffCertificate& cert) {
    const int r = m.rank();
    if (cert.P.rank() != r || cert.Q.rank() != r || cert.D.rank() != r)
        throw shape_mismatch();
    if (!side_check(cert.P, PolySide::plus)) return false;
    if (!side_check(cert.Q, PolySide::minus)) return false;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const LaurentPoly& d = cert.D.at(i, j);
            if (i == j) {
                if (!d.is_unit()) return false;
            } else if (!d.is_zero()) {
                return false;
            }
        }
    LaurentPoly dp = mat_det(cert.P);
    LaurentPoly dq = mat_det(cert.Q);
    if (!dp.is_unit() || dp.low() != 0) return false;
    if (!dq.is_unit() || dq.low() != 0) return false;
    return mat_mul(mat_mul(cert.P, m), cert.Q) == cert.D;
}

namespace detail {

/// Elimination state: W together with the accumulated factors, maintaining
/// P * M * Q = t^sigma * W.
struct SplitState {
    LaurentMatrix W;
    LaurentMatrix P;
    LaurentMatrix Q;
    int sigma = 0;

    explicit SplitState(const LaurentMatrix& m)
        : W(m),
          P(LaurentMatrix::identity(m.rank(), m.spec())),
          Q(LaurentMatrix::identity(m.rank(), m.spec())) {}

    void global_shift() {
        const int mu = W.min_exponent();
        if (mu != 0) {
            W = W.shift(-mu);
            sigma += mu;
        }
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < W.rank(); ++c) {
            std::swap(W.at(i, c), W.at(j, c));
            std::swap(P.at(i, c), P.at(j, c));
        }
    }

    /// row_i -= q * row_j (q over F[t] for a plus-side step)
    void row_op(int i, int j, const LaurentPoly& q) {
        for (int c = 0; c < W.rank(); ++c) {
            if (!W.at(j, c).is_zero()) W.at(i, c) -= q * W.at(j, c);
            if (!P.at(j, c).is_zero()) P.at(i, c) -= q * P.at(j, c);
        }
    }

    /// col_j -= q * col_i (q over F[1/t] for a minus-side step)
    void col_op(int j, int i, const LaurentPoly& q) {
        for (int l = 0; l < W.rank(); ++l) {
            if (!W.at(l, i).is_zero()) W.at(l, j) -= q * W.at(l, i);
            if (!Q.at(l, i).is_zero()) Q.at(l, j) -= q * Q.at(l, i);
        }
    }

    /// Reduce W (over F[t] after a global shift) to upper triangular form by
    /// Euclidean row elimination per column. Since det W is a monomial, the
    /// resulting diagonal entries are monomials.
    void triangularize() {
        const int r = W.rank();
        for (int j = 0; j < r; ++j) {
            for (;;) {
                int piv = -1;
                for (int i = j; i < r; ++i) {
                    if (W.at(i, j).is_zero()) continue;
                    if (piv < 0 || W.at(i, j).high() < W.at(piv, j).high())
                        piv = i;
                }
                if (piv < 0)
                    throw internal_error("triangularize: singular column");
                if (piv != j) swap_rows(piv, j);
                bool reduced_all = true;
                const int dj = W.at(j, j).high();
                const Fq lead = W.at(j, j).coeff(dj);
                for (int i = j + 1; i < r; ++i) {
                    if (W.at(i, j).is_zero()) continue;
                    // single division step; loop again until column is clear
                    const int di = W.at(i, j).high();
                    if (di < dj) { reduced_all = false; continue; }
                    LaurentPoly q(W.at(i, j).coeff(di) / lead, di - dj);
                    row_op(i, j, q);
                    if (!W.at(i, j).is_zero()) reduced_all = false;
                }
                if (reduced_all) break;
            }
        }
    }

    /// With W upper triangular and monomial diagonal c_i t^{e_i}, kill every
    /// off-diagonal term t^m with m >= e_j (plus row steps) or m <= e_i
    /// (minus column steps). Rows are processed bottom-up and columns left to
    /// right so fill-in lands only where it is still to be processed. What
    /// survives are residual terms with e_i < m < e_j.
    void cleanup() {
        const int r = W.rank();
        for (int i = r - 2; i >= 0; --i) {
            for (int j = i + 1; j < r; ++j) {
                const int ei = W.at(i, i).low();
                const int ej = W.at(j, j).low();
                const Fq ci = W.at(i, i).coeff(ei);
                const Fq cj = W.at(j, j).coeff(ej);
                const auto snapshot = W.at(i, j).terms();
                for (const auto& [m, a] : snapshot) {
                    if (m >= ej) {
                        row_op(i, j, LaurentPoly(a / cj, m - ej));
                    } else if (m <= ei) {
                        col_op(j, i, LaurentPoly(a / ci, m - ei));
                    }
                    // else: residual, left for rebalancing
                }
            }
        }
    }

    /// First off-diagonal entry (lexicographic) still nonzero, or (-1, -1).
    std::pair<int, int> first_residual() const {
        const int r = W.rank();
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (!W.at(i, j).is_zero()) return {i, j};
        return {-1, -1};
    }

    /// The 2x2 exponent-rebalancing step: a minus-side column step that draws
    /// the residual t^m into the diagonal; re-triangularization then replaces
    /// the exponent pair (e_i, e_j) by a strictly less spread one.
    void rebalance(int i, int j) {
        const int ei = W.at(i, i).low();
        const Fq ci = W.at(i, i).coeff(ei);
        const int m = W.at(i, j).low();
        const Fq a = W.at(i, j).coeff(m);
        col_op(i, j, LaurentPoly(ci / a, ei - m));
    }
};

} // namespace detail

/// Certified Birkhoff factorization: returns the splitting type of the
/// bundle defined by M together with a certificate P * M * Q = D.
/// Deterministic for fixed input.
inline std::pair<SplittingType, BirkhoffCertificate> birkhoff_split(
    const LaurentMatrix& m) {
    LaurentPoly det = mat_det(m);
    if (!det.is_unit()) throw not_invertible();
    const int r = m.rank();

    detail::SplitState st(m);
    const int max_iter = 1000 + 50 * r * (m.max_abs_exponent() + 1);
    bool done = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        st.global_shift();
        st.triangularize();
        st.cleanup();
        auto [i, j] = st.first_residual();
        if (i < 0) { done = true; break; }
        st.rebalance(i, j);
    }
    if (!done)
        throw internal_error("birkhoff_split: rebalancing failed to settle");

    // Normalize the diagonal coefficients to 1 by constant row scalings.
    for (int i = 0; i < r; ++i) {
        const Fq c = st.W.at(i, i).coeff(st.W.at(i, i).low());
        const Fq inv = c.inverse();
        for (int col = 0; col < r; ++col) {
            st.W.at(i, col) = inv * st.W.at(i, col);
            st.P.at(i, col) = inv * st.P.at(i, col);
        }
    }

    // Sort degrees descending with a permutation, which lives on both sides.
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
        return st.W.at(x, x).low() > st.W.at(y, y).low();
    });

    SplittingType type;
    BirkhoffCertificate cert{LaurentMatrix(r, m.spec()),
                             LaurentMatrix(r, m.spec()),
                             LaurentMatrix(r, m.spec())};
    for (int i = 0; i < r; ++i) {
        const int deg = st.W.at(perm[i], perm[i]).low() + st.sigma;
        type.degrees.push_back(deg);
        cert.D.at(i, i) = LaurentPoly(Fq::one(m.spec()), deg);
        for (int c = 0; c < r; ++c) {
            cert.P.at(i, c) = st.P.at(perm[i], c);
            cert.Q.at(c, i) = st.Q.at(c, perm[i]);
        }
    }

    if (!verify_certificate(m, cert))
        throw internal_error("birkhoff_split: certificate failed to verify");
    return {type, cert};
}

namespace detail {

/// Rank of an exact matrix over F via Gaussian elimination, first-nonzero
/// pivoting. Rows are given sparsely as (column, coefficient) lists.
inline int matrix_rank(std::vector<std::map<int, Fq>> rows) {
    int rank = 0;
    std::map<int, size_t> pivots;  // pivot column -> row index
    for (size_t ri = 0; ri < rows.size(); ++ri) {
        auto& row = rows[ri];
        while (!row.empty()) {
            const int col = row.begin()->first;
            auto it = pivots.find(col);
            if (it == pivots.end()) break;
            const auto& prow = rows[it->second];
            Fq factor = row.begin()->second / prow.begin()->second;
            for (const auto& [c, v] : prow) {
                auto jt = row.find(c);
                Fq nv = (jt == row.end() ? Fq::zero(v.spec()) : jt->second) -
                        factor * v;
                if (nv.is_zero()) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[c] = nv;
                }
            }
        }
        if (!row.empty()) {
            pivots[row.begin()->first] = ri;
            ++rank;
        }
    }
    return rank;
}

/// h0 of the bundle twisted by m, counting pairs (f, g) with f = M t^m g,
/// g over F[1/t] supported in [-window, 0]: the kernel dimension of the map
/// extracting the negative-exponent coefficients of M t^m g.
inline int h0_with_window(const LaurentMatrix& m, int twist, int window) {
    const int r = m.rank();
    const int unknowns = r * (window + 1);
    // constraint per (output row, negative output exponent)
    std::map<std::pair<int, int>, std::map<int, Fq>> constraints;
    for (int row = 0; row < r; ++row) {
        for (int c = 0; c < r; ++c) {
            const LaurentPoly& entry = m.at(row, c);
            for (const auto& [e, coeff] : entry.terms()) {
                for (int ge = -window; ge <= 0; ++ge) {
                    const int out = e + twist + ge;
                    if (out >= 0) continue;
                    const int var = c * (window + 1) + (ge + window);
                    auto& con = constraints[{row, out}];
                    auto it = con.find(var);
                    if (it == con.end()) {
                        con.emplace(var, coeff);
                    } else {
                        it->second += coeff;
                        if (it->second.is_zero()) con.erase(it);
                    }
                }
            }
        }
    }
    std::vector<std::map<int, Fq>> rows;
    rows.reserve(constraints.size());
    for (auto& [key, con] : constraints)
        if (!con.empty()) rows.push_back(std::move(con));
    return unknowns - matrix_rank(std::move(rows));
}

} // namespace detail

/// Dimension of the space of global sections of the bundle defined by M,
/// twisted by m. Exact: the coefficient window is sized from the a priori
/// bound on section denominators.
inline int h0_dimension(const LaurentMatrix& m, int twist) {
    LaurentPoly det = mat_det(m);
    if (!det.is_unit()) throw not_invertible();
    const int r = m.rank();
    const int window = (r - 1) * m.max_abs_exponent() + std::abs(det.low()) +
                       std::max(twist, 0) + 2;
    return detail::h0_with_window(m, twist, window);
}

/// Splitting type recovered purely from first differences of h0 under
/// twisting: h0(E(m)) - h0(E(m-1)) counts the degrees >= -m. Saturation of
/// the scan (slope 0 at the bottom, slope rank at the top) and full profile
/// consistency are verified; on failure the window is doubled and the scan
/// retried.
inline SplittingType oracle_split(const LaurentMatrix& m) {
    LaurentPoly det = mat_det(m);
    if (!det.is_unit()) throw not_invertible();
    const int r = m.rank();
    const int det_exp = det.low();
    const int maxabs = m.max_abs_exponent();
    const int degree_bound = (r - 1) * maxabs + std::abs(det_exp) + 2;

    int base_window = maxabs + 2;
    for (int attempt = 0; attempt < 6; ++attempt, base_window *= 2) {
        std::map<int, int> h0;
        auto eval = [&](int tw) {
            auto it = h0.find(tw);
            if (it != h0.end()) return it->second;
            int v = detail::h0_with_window(m, tw, base_window + std::abs(tw));
            h0.emplace(tw, v);
            return v;
        };

        // walk down to two consecutive zeros, up to slope = rank
        int lo = 0;
        while (lo >= -degree_bound - 2 && (eval(lo) != 0 || eval(lo - 1) != 0))
            --lo;
        int hi = lo + 1;
        while (hi <= degree_bound + 2 && eval(hi) - eval(hi - 1) != r) ++hi;
        if (lo < -degree_bound - 2 || hi > degree_bound + 2) continue;

        SplittingType type;
        bool consistent = true;
        int prev_count = 0;
        for (int tw = lo + 1; tw <= hi; ++tw) {
            const int count = eval(tw) - eval(tw - 1);
            if (count < prev_count || count > r) { consistent = false; break; }
            for (int c = 0; c < count - prev_count; ++c)
                type.degrees.push_back(-tw);
            prev_count = count;
        }
        if (!consistent || static_cast<int>(type.degrees.size()) != r ||
            type.degree_sum() != det_exp)
            continue;
        std::sort(type.degrees.begin(), type.degrees.end(), std::greater<>());
        // the whole scanned profile must match the recovered degrees
        for (const auto& [tw, v] : h0) {
            int expect = 0;
            for (int d : type.degrees) expect += std::max(0, d + tw + 1);
            if (v != expect) { consistent = false; break; }
        }
        if (consistent) return type;
    }
    throw window_too_small();
}

} // namespace jetsplit

#endif // JETSPLIT_SPLITTING_HPP
