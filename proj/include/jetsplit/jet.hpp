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

#ifndef JETSPLIT_JET_HPP
#define JETSPLIT_JET_HPP

#include <utility>

#include "laurent.hpp"

namespace jetsplit {

/// Which of the two O-module structures of the jet bundle is meant. The
/// right structure is only computed for jet order 1.
enum class ModuleSide { left, right };

inline const char* to_string(ModuleSide s) {
    return s == ModuleSide::left ? "left" : "right";
}

/// Parameters of a jet bundle P^k(O(n)) over the chosen field.
struct JetParams {
    int n;
    int k;
    FieldSpec field;
    ModuleSide side = ModuleSide::left;

    JetParams(int n_, int k_, const FieldSpec& field_,
              ModuleSide side_ = ModuleSide::left)
        : n(n_), k(k_), field(field_), side(side_) {
        if (k < 1 || k > n)
            throw invalid_params("jet parameters need 1 <= k <= n");
        if (side == ModuleSide::right && k != 1)
            throw invalid_params(
                "the right module structure is only computed for k = 1");
    }
};

/// Transition matrix of the untwisted jet bundle P^k between the bases
/// {dt^0..dt^k} and {ds^0..ds^k}. Column p holds the dt-coordinates of ds^p:
/// (-1)^(i+p) t^(-(i+2p)) C(i+p-1, p-1) in row i+p. The p = 0 column is the
/// identity column, since ds^0 = dt^0 = 1.
inline LaurentMatrix untwisted_transition(int k, const FieldSpec& field) {
    if (k < 1) throw invalid_params("untwisted_transition needs k >= 1");
    LaurentMatrix m(k + 1, field);
    m.at(0, 0) = LaurentPoly::one(field);
    for (int p = 1; p <= k; ++p) {
        for (int i = 0; i <= k - p; ++i) {
            bigint c = binomial(i + p - 1, p - 1);
            if ((i + p) % 2 != 0) c = -c;
            m.at(i + p, p) += LaurentPoly(reduce(c, field), -(i + 2 * p));
        }
    }
    return m;
}

/// Transition matrix [L] of P^k(O(n)) as left module: column p holds
/// (-1)^p t^(n-i-2p) C(n-p, i) in row i+p, 0 <= i <= k-p. Lower triangular
/// with diagonal (-1)^p t^(n-2p).
inline LaurentMatrix left_transition(const JetParams& params) {
    if (params.side != ModuleSide::left)
        throw invalid_params("left_transition needs side = left");
    const int k = params.k;
    const int n = params.n;
    LaurentMatrix m(k + 1, params.field);
    for (int p = 0; p <= k; ++p) {
        for (int i = 0; i <= k - p; ++i) {
            bigint c = binomial(n - p, i);
            if (p % 2 != 0) c = -c;
            m.at(i + p, p) += LaurentPoly(reduce(c, params.field), n - i - 2 * p);
        }
    }
    return m;
}

inline LaurentMatrix left_transition(int k, int n, const FieldSpec& field) {
    return left_transition(JetParams(n, k, field, ModuleSide::left));
}

/// Transition matrix [R] of P^1(O(n)) as right module: diag(t^n, -t^(n-2))
/// in the shared chart coordinate.
inline LaurentMatrix right_transition(int n, const FieldSpec& field) {
    if (n < 1) throw invalid_params("right_transition needs n >= 1");
    LaurentMatrix m(2, field);
    m.at(0, 0) = LaurentPoly(Fq::one(field), n);
    m.at(1, 1) = LaurentPoly(-Fq::one(field), n - 2);
    return m;
}

/// The pair of base-change matrices that diagonalize the k = 1 left
/// transition matrix: ([I]^C_D, [I]^{D'}_{C'}). Sandwiching left_transition
/// between them yields diag(t^(n-1), t^(n-1)). Requires char(F) not to
/// divide n.
inline std::pair<LaurentMatrix, LaurentMatrix> section4_factors(
    int n, const FieldSpec& field) {
    if (n < 1) throw invalid_params("section4_factors needs n >= 1");
    if (!field.is_rational() && n % field.characteristic() == 0)
        throw characteristic_divides_n();
    const Fq inv_n = Fq(field, n).inverse();
    LaurentMatrix c_to_d(2, field);
    c_to_d.at(0, 0) = LaurentPoly::one(field);
    c_to_d.at(0, 1) = LaurentPoly(-inv_n, 1);
    c_to_d.at(1, 1) = LaurentPoly(inv_n, 0);
    LaurentMatrix dp_to_cp(2, field);
    dp_to_cp.at(0, 0) = LaurentPoly(Fq::one(field), -1);
    dp_to_cp.at(0, 1) = LaurentPoly::one(field);
    dp_to_cp.at(1, 0) = LaurentPoly(Fq(field, n), 0);
    return {c_to_d, dp_to_cp};
}

} // namespace jetsplit

#endif // JETSPLIT_JET_HPP
