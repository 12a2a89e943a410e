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

#ifndef JETSPLIT_VERIFY_HPP
#define JETSPLIT_VERIFY_HPP

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "binomsys.hpp"

namespace jetsplit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary
    long long ms = 0;
};

namespace detail {

template <class F>
CheckResult timed_check(const std::string& name, F&& body) {
    CheckResult res;
    res.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::string detail;
        res.pass = body(detail);
        res.detail = detail;
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    return res;
}

inline SplittingType expected_type(std::vector<int> degrees) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return SplittingType{std::move(degrees)};
}

} // namespace detail

/// Left and right splitting of the first-order jets of O(n), every n <= 30,
/// characteristics {0, 2, 3, 5, 7, 11}: left is [n-1, n-1] unless the
/// characteristic divides n, in which case [n, n-2]; right is always
/// [n, n-2].
inline CheckResult check_left_right_grid() {
    return detail::timed_check(
        "left-right splitting grid (k = 1, n <= 30)", [](std::string& detail) {
            for (std::uint64_t ch : {0, 2, 3, 5, 7, 11}) {
                const FieldSpec field(ch);
                for (int n = 1; n <= 30; ++n) {
                    const bool divides = ch != 0 && n % ch == 0;
                    const SplittingType want_left =
                        divides ? detail::expected_type({n, n - 2})
                                : detail::expected_type({n - 1, n - 1});
                    const SplittingType want_right =
                        detail::expected_type({n, n - 2});
                    auto left =
                        birkhoff_split(left_transition(1, n, field)).first;
                    auto right =
                        birkhoff_split(right_transition(n, field)).first;
                    if (left != want_left || right != want_right) {
                        detail = "mismatch at n=" + std::to_string(n) +
                                 " char=" + std::to_string(ch) + ": left " +
                                 left.str() + ", right " + right.str();
                        return false;
                    }
                }
            }
            detail = "180 cells";
            return true;
        });
}

/// Characteristic zero: the linear-system route and the factorization route
/// both give n-k repeated k+1 times, for all 1 <= k <= n <= 10.
inline CheckResult check_characteristic_zero() {
    return detail::timed_check(
        "characteristic-zero splitting (k <= n <= 10)",
        [](std::string& detail) {
            int cells = 0;
            for (int n = 1; n <= 10; ++n)
                for (int k = 1; k <= n; ++k) {
                    SplittingType got = char0_split(n, k);
                    SplittingType want;
                    want.degrees.assign(k + 1, n - k);
                    if (got != want) {
                        detail = "mismatch at (n,k)=(" + std::to_string(n) +
                                 "," + std::to_string(k) + "): " + got.str();
                        return false;
                    }
                    ++cells;
                }
            detail = std::to_string(cells) + " cells";
            return true;
        });
}

/// det(left_transition) is a unit with exponent (n-k)(k+1) and coefficient
/// +-1, for all 1 <= k <= n <= 12 and characteristics {0, 2, 3, 5}.
inline CheckResult check_transition_determinants() {
    return detail::timed_check(
        "transition determinant unit (k <= n <= 12)", [](std::string& detail) {
            for (std::uint64_t ch : {0, 2, 3, 5}) {
                const FieldSpec field(ch);
                const Fq one = Fq::one(field);
                for (int n = 1; n <= 12; ++n)
                    for (int k = 1; k <= n; ++k) {
                        LaurentPoly d = mat_det(left_transition(k, n, field));
                        if (!d.is_unit() || d.low() != (n - k) * (k + 1)) {
                            detail = "bad determinant at (n,k,char)=(" +
                                     std::to_string(n) + "," +
                                     std::to_string(k) + "," +
                                     std::to_string(ch) + "): " + d.str();
                            return false;
                        }
                        const Fq c = d.coeff(d.low());
                        if (c != one && c != -one) {
                            detail = "coefficient not +-1 at (n,k,char)=(" +
                                     std::to_string(n) + "," +
                                     std::to_string(k) + "," +
                                     std::to_string(ch) + ")";
                            return false;
                        }
                    }
            }
            return true;
        });
}

/// The k = 1 transition matrix is [[t^n, 0], [n t^(n-1), -t^(n-2)]] for
/// n <= 20, and sandwiching it with the base-change pair diagonalizes it to
/// diag(t^(n-1), t^(n-1)) whenever the characteristic does not divide n.
inline CheckResult check_transition_entries() {
    return detail::timed_check(
        "k = 1 transition entries and diagonalization", [](std::string& detail) {
            for (std::uint64_t ch : {0, 2, 3, 5}) {
                const FieldSpec field(ch);
                for (int n = 1; n <= 20; ++n) {
                    LaurentMatrix got = left_transition(1, n, field);
                    LaurentMatrix want(2, field);
                    want.at(0, 0) = LaurentPoly(Fq::one(field), n);
                    want.at(1, 0) = LaurentPoly(Fq(field, n), n - 1);
                    want.at(1, 1) = LaurentPoly(-Fq::one(field), n - 2);
                    if (got != want) {
                        detail = "entry mismatch at n=" + std::to_string(n) +
                                 " char=" + std::to_string(ch);
                        return false;
                    }
                    if (ch != 0 && n % ch == 0) continue;
                    auto [lf, rf] = section4_factors(n, field);
                    LaurentMatrix diag = mat_mul(mat_mul(lf, got), rf);
                    LaurentMatrix want_diag(2, field);
                    want_diag.at(0, 0) = LaurentPoly(Fq::one(field), n - 1);
                    want_diag.at(1, 1) = LaurentPoly(Fq::one(field), n - 1);
                    if (diag != want_diag) {
                        detail = "sandwich not diagonal at n=" +
                                 std::to_string(n) +
                                 " char=" + std::to_string(ch);
                        return false;
                    }
                }
            }
            return true;
        });
}

/// |A_r| equals the closed-form binomial product up to sign for all
/// 1 <= r <= k <= n <= 10, elimination vs exact product.
inline CheckResult check_system_determinants() {
    return detail::timed_check(
        "system determinant formula (r <= k <= n <= 10)",
        [](std::string& detail) {
            for (int n = 1; n <= 10; ++n)
                for (int k = 1; k <= n; ++k)
                    for (int r = 1; r <= k; ++r) {
                        auto [det, prod] = det_formula_check(n, k, r);
                        if (det != prod && det != -prod) {
                            detail = "mismatch at (n,k,r)=(" +
                                     std::to_string(n) + "," +
                                     std::to_string(k) + "," +
                                     std::to_string(r) + ")";
                            return false;
                        }
                        if (prod == 0) {
                            detail = "zero product at (n,k,r)=(" +
                                     std::to_string(n) + "," +
                                     std::to_string(k) + "," +
                                     std::to_string(r) + ")";
                            return false;
                        }
                    }
            return true;
        });
}

/// The binomial reduction identity as exact rationals for all
/// 0 <= a, b <= k <= n <= 12 with k - b + 1 > 0.
inline CheckResult check_binomial_identity() {
    return detail::timed_check(
        "binomial reduction identity (n <= 12)", [](std::string& detail) {
            for (int n = 0; n <= 12; ++n)
                for (int k = 0; k <= n; ++k)
                    for (int a = 0; a <= k; ++a)
                        for (int b = 0; b <= k; ++b) {
                            if (k - b + 1 <= 0) continue;
                            if (!binomial_lemma_check(n, k, a, b)) {
                                detail = "fails at (n,k,a,b)=(" +
                                         std::to_string(n) + "," +
                                         std::to_string(k) + "," +
                                         std::to_string(a) + "," +
                                         std::to_string(b) + ")";
                                return false;
                            }
                        }
            return true;
        });
}

/// Seeded random diagonals sandwiched between unimodular factors:
/// factorization recovers the planted degrees, the certificate verifies, and
/// the sections oracle agrees. 100 trials per characteristic in {0, 2, 5}.
inline CheckResult check_certificate_invariance(std::uint64_t seed = 20260823) {
    return detail::timed_check(
        "certificate soundness and invariance (300 seeded trials)",
        [seed](std::string& detail) {
            std::mt19937_64 rng(seed);
            for (std::uint64_t ch : {0, 2, 5}) {
                const FieldSpec field(ch);
                for (int trial = 0; trial < 100; ++trial) {
                    const int rank = 1 + static_cast<int>(rng() % 4);
                    std::vector<int> planted;
                    LaurentMatrix diag(rank, field);
                    for (int i = 0; i < rank; ++i) {
                        int a = static_cast<int>(rng() % 11) - 5;  // [-5, 5]
                        planted.push_back(a);
                        diag.at(i, i) = LaurentPoly(Fq::one(field), a);
                    }
                    LaurentMatrix u = random_unimodular(field, rank,
                                                        PolySide::plus, 2,
                                                        rng());
                    LaurentMatrix v = random_unimodular(field, rank,
                                                        PolySide::minus, 2,
                                                        rng());
                    LaurentMatrix m = mat_mul(mat_mul(u, diag), v);
                    auto [type, cert] = birkhoff_split(m);
                    if (type != detail::expected_type(planted)) {
                        detail = "wrong degrees, char=" + std::to_string(ch) +
                                 " trial=" + std::to_string(trial) + ": " +
                                 type.str();
                        return false;
                    }
                    if (!verify_certificate(m, cert)) {
                        detail = "certificate rejected, char=" +
                                 std::to_string(ch) +
                                 " trial=" + std::to_string(trial);
                        return false;
                    }
                    if (oracle_split(m) != type) {
                        detail = "oracle disagrees, char=" +
                                 std::to_string(ch) +
                                 " trial=" + std::to_string(trial);
                        return false;
                    }
                }
            }
            return true;
        });
}

/// Factorization and sections oracle agree on the jet transition matrices
/// for 1 <= k <= 4, k <= n <= 8, characteristics {0, 2, 3, 5}. For k >= 2 in
/// positive characteristic no published value exists; agreement of the two
/// independent routes is the standard.
inline CheckResult check_oracle_agreement() {
    return detail::timed_check(
        "oracle agreement on jet matrices (k <= 4, n <= 8)",
        [](std::string& detail) {
            for (std::uint64_t ch : {0, 2, 3, 5}) {
                const FieldSpec field(ch);
                for (int k = 1; k <= 4; ++k)
                    for (int n = k; n <= 8; ++n) {
                        LaurentMatrix m = left_transition(k, n, field);
                        SplittingType a = birkhoff_split(m).first;
                        SplittingType b = oracle_split(m);
                        if (a != b) {
                            detail = "disagreement at (n,k,char)=(" +
                                     std::to_string(n) + "," +
                                     std::to_string(k) + "," +
                                     std::to_string(ch) + "): " + a.str() +
                                     " vs " + b.str();
                            return false;
                        }
                    }
            }
            return true;
        });
}

/// Degree-sum conservation: the sum of split degrees equals the determinant
/// exponent on a representative family of matrices from every other suite.
inline CheckResult check_degree_sum() {
    return detail::timed_check(
        "degree-sum conservation", [](std::string& detail) {
            auto probe = [&detail](const LaurentMatrix& m,
                                   const std::string& what) {
                const int sum = birkhoff_split(m).first.degree_sum();
                const int want = mat_det(m).low();
                if (sum != want) {
                    detail = what + ": sum " + std::to_string(sum) +
                             " != det exponent " + std::to_string(want);
                    return false;
                }
                return true;
            };
            for (std::uint64_t ch : {0, 2, 3, 5}) {
                const FieldSpec field(ch);
                for (int k = 1; k <= 3; ++k)
                    for (int n = k; n <= 7; ++n)
                        if (!probe(left_transition(k, n, field),
                                   "left_transition(" + std::to_string(k) +
                                       "," + std::to_string(n) + ") char " +
                                       std::to_string(ch)))
                            return false;
                for (int n = 1; n <= 7; ++n)
                    if (!probe(right_transition(n, field),
                               "right_transition(" + std::to_string(n) +
                                   ") char " + std::to_string(ch)))
                        return false;
            }
            std::mt19937_64 rng(4242);
            const FieldSpec q(0);
            for (int trial = 0; trial < 25; ++trial) {
                const int rank = 2 + static_cast<int>(rng() % 3);
                LaurentMatrix diag(rank, q);
                for (int i = 0; i < rank; ++i)
                    diag.at(i, i) = LaurentPoly(
                        Fq::one(q), static_cast<int>(rng() % 9) - 4);
                LaurentMatrix m = mat_mul(
                    mat_mul(random_unimodular(q, rank, PolySide::plus, 2,
                                              rng()),
                            diag),
                    random_unimodular(q, rank, PolySide::minus, 2, rng()));
                if (!probe(m, "random sandwich trial " +
                                  std::to_string(trial)))
                    return false;
            }
            return true;
        });
}

/// All nine acceptance checks, in order.
inline std::vector<CheckResult> run_all_checks(std::uint64_t seed = 20260823) {
    return {
        check_left_right_grid(),
        check_characteristic_zero(),
        check_transition_determinants(),
        check_transition_entries(),
        check_system_determinants(),
        check_binomial_identity(),
        check_certificate_invariance(seed),
        check_oracle_agreement(),
        check_degree_sum(),
    };
}

} // namespace jetsplit

#endif // JETSPLIT_VERIFY_HPP
