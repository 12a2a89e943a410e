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

#include <random>

#include <catch_amalgamated.hpp>

#include "jetsplit/laurent.hpp"

using namespace jetsplit;

namespace {

const FieldSpec q(0);

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> terms,
                 const FieldSpec& spec = q) {
    LaurentPoly p(spec);
    for (auto [e, c] : terms) p.add_term(e, Fq(spec, c));
    return p;
}

LaurentMatrix random_matrix(const FieldSpec& spec, int rank, std::mt19937_64& rng) {
    LaurentMatrix m(rank, spec);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int t = 0; t < 2; ++t)
                m.at(i, j).add_term(static_cast<int>(rng() % 7) - 3,
                                    Fq(spec, static_cast<long long>(rng() % 5) - 2));
    return m;
}

} // namespace

TEST_CASE("polynomial arithmetic and normal form") {
    LaurentPoly a = poly({{-2, -1}, {0, 3}, {1, 1}});
    CHECK(a.str() == "-1*t^-2 + 3 + 1*t^1");
    CHECK(a.low() == -2);
    CHECK(a.high() == 1);

    // cancellation removes the term from the support entirely
    LaurentPoly b = poly({{-2, 1}});
    CHECK((a + b).str() == "3 + 1*t^1");
    CHECK((a - a).is_zero());
    CHECK((a - a).str() == "0");

    LaurentPoly t = poly({{1, 1}});
    CHECK(a * t == a.shift(1));
    CHECK((a * poly({{0, 2}})).coeff(0) == Fq(q, 6));
    CHECK((-a).coeff(-2) == Fq(q, 1));
    CHECK_THROWS_AS(LaurentPoly::zero(q).low(), invalid_params);
}

TEST_CASE("multiplication distributes and associates") {
    std::mt19937_64 rng(7);
    const FieldSpec f5(5);
    for (const FieldSpec& spec : {q, f5}) {
        for (int trial = 0; trial < 50; ++trial) {
            auto rnd = [&] {
                LaurentPoly p(spec);
                for (int t = 0; t < 3; ++t)
                    p.add_term(static_cast<int>(rng() % 9) - 4,
                               Fq(spec, static_cast<long long>(rng() % 7) - 3));
                return p;
            };
            LaurentPoly x = rnd(), y = rnd(), z = rnd();
            REQUIRE((x * y) * z == x * (y * z));
            REQUIRE(x * (y + z) == x * y + x * z);
        }
    }
}

TEST_CASE("units are exactly the nonzero monomials") {
    CHECK(poly({{3, 2}}).is_unit());
    CHECK(poly({{-4, 1}}).is_unit());
    CHECK_FALSE(poly({{0, 1}, {1, 1}}).is_unit());
    CHECK_FALSE(LaurentPoly::zero(q).is_unit());
}

TEST_CASE("side checks") {
    CHECK(side_check(poly({{0, 1}, {3, 2}}), PolySide::plus));
    CHECK_FALSE(side_check(poly({{-1, 1}, {3, 2}}), PolySide::plus));
    CHECK(side_check(poly({{-5, 1}, {0, 2}}), PolySide::minus));
    CHECK_FALSE(side_check(poly({{1, 1}}), PolySide::minus));
    CHECK(side_check(LaurentPoly::zero(q), PolySide::plus));
    CHECK(side_check(LaurentPoly::zero(q), PolySide::minus));
}

TEST_CASE("matrix basics") {
    LaurentMatrix m = LaurentMatrix::identity(2, q);
    m.at(0, 1) = poly({{-3, 2}, {4, 1}});
    CHECK(m.max_abs_exponent() == 4);
    CHECK(m.min_exponent() == -3);
    CHECK(m.shift(2).at(0, 1) == poly({{-1, 2}, {6, 1}}));
    CHECK(mat_mul(m, LaurentMatrix::identity(2, q)) == m);
    CHECK_THROWS_AS(LaurentMatrix(0, q), invalid_params);
}

TEST_CASE("determinant on small fixed matrices") {
    LaurentMatrix m(2, q);
    m.at(0, 0) = poly({{2, 1}});
    m.at(1, 0) = poly({{1, 2}});
    m.at(1, 1) = poly({{0, -1}});
    LaurentPoly d = mat_det(m);
    CHECK(d == poly({{2, -1}}));
    CHECK(d.is_unit());
    CHECK(d.low() == 2);

    // singular matrix
    LaurentMatrix s(2, q);
    s.at(0, 0) = poly({{0, 1}});
    s.at(0, 1) = poly({{1, 1}});
    s.at(1, 0) = poly({{2, 3}});
    s.at(1, 1) = poly({{3, 3}});
    CHECK(mat_det(s).is_zero());
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(13);
    const FieldSpec f2(2), f5(5);
    for (const FieldSpec& spec : {q, f2, f5}) {
        for (int trial = 0; trial < 200; ++trial) {
            const int rank = 2 + static_cast<int>(rng() % 2);
            LaurentMatrix a = random_matrix(spec, rank, rng);
            LaurentMatrix b = random_matrix(spec, rank, rng);
            REQUIRE(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
        }
    }
}

TEST_CASE("cofactor and Bareiss routes agree") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentMatrix m = random_matrix(q, 4, rng);
        std::vector<int> rows{0, 1, 2, 3}, cols{0, 1, 2, 3};
        LaurentPoly via_cof = detail::cofactor_det(m, rows, cols);
        const int mu = m.min_exponent();
        LaurentPoly via_bar = detail::bareiss_det(m.shift(-mu)).shift(mu * 4);
        REQUIRE(via_cof == via_bar);
    }
}

TEST_CASE("random unimodular matrices have constant unit determinant") {
    const FieldSpec f3(3);
    for (const FieldSpec& spec : {q, f3}) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            for (PolySide side : {PolySide::plus, PolySide::minus}) {
                LaurentMatrix u = random_unimodular(spec, 3, side, 2, seed);
                CHECK(side_check(u, side));
                LaurentPoly d = mat_det(u);
                REQUIRE(d.is_unit());
                REQUIRE(d.low() == 0);
            }
        }
    }
    // deterministic for a fixed seed
    CHECK(random_unimodular(q, 3, PolySide::plus, 2, 42) ==
          random_unimodular(q, 3, PolySide::plus, 2, 42));
}
