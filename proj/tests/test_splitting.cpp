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

#include "jetsplit/jet.hpp"
#include "jetsplit/splitting.hpp"

using namespace jetsplit;

namespace {
const FieldSpec q(0);
}

TEST_CASE("splitting type rendering and multiplicities") {
    SplittingType t{{3, 3, 1, -2}};
    CHECK(t.str() == "O(3)+O(3)+O(1)+O(-2)");
    CHECK(t.degree_sum() == 5);
    auto mult = t.multiplicities();
    REQUIRE(mult.size() == 3);
    CHECK(mult[0] == std::make_pair(3, 2));
    CHECK(mult[1] == std::make_pair(1, 1));
    CHECK(mult[2] == std::make_pair(-2, 1));
}

TEST_CASE("splitting of jet transition matrices") {
    auto t3 = birkhoff_split(left_transition(1, 3, q)).first;
    CHECK(t3.degrees == std::vector<int>{2, 2});

    const FieldSpec f2(2);
    auto t42 = birkhoff_split(left_transition(1, 4, f2)).first;
    CHECK(t42.degrees == std::vector<int>{4, 2});

    auto r4 = birkhoff_split(right_transition(4, q)).first;
    CHECK(r4.degrees == std::vector<int>{4, 2});
}

TEST_CASE("certificate verification accepts the computed witness") {
    LaurentMatrix m = left_transition(2, 5, q);
    auto [type, cert] = birkhoff_split(m);
    CHECK(type.degrees == std::vector<int>{3, 3, 3});
    CHECK(verify_certificate(m, cert));

    SECTION("tampered product is rejected") {
        BirkhoffCertificate bad = cert;
        bad.D.at(0, 0) = bad.D.at(0, 0).shift(1);
        CHECK_FALSE(verify_certificate(m, bad));
    }
    SECTION("factor on the wrong side is rejected") {
        BirkhoffCertificate bad = cert;
        bad.P.at(0, 0) += LaurentPoly(Fq::one(q), -1);
        CHECK_FALSE(verify_certificate(m, bad));
    }
    SECTION("non-diagonal D is rejected") {
        BirkhoffCertificate bad = cert;
        bad.D.at(0, 1) = LaurentPoly::one(q);
        CHECK_FALSE(verify_certificate(m, bad));
    }
}

TEST_CASE("hand-built base-change pair is a valid certificate") {
    for (int n : {1, 2, 3, 5, 9}) {
        LaurentMatrix m = left_transition(1, n, q);
        auto [lf, rf] = section4_factors(n, q);
        LaurentMatrix d(2, q);
        d.at(0, 0) = LaurentPoly(Fq::one(q), n - 1);
        d.at(1, 1) = LaurentPoly(Fq::one(q), n - 1);
        REQUIRE(verify_certificate(m, BirkhoffCertificate{lf, rf, d}));
    }
}

TEST_CASE("singular matrices are rejected") {
    LaurentMatrix s(2, q);
    s.at(0, 0) = LaurentPoly::one(q);
    s.at(1, 0) = LaurentPoly(Fq::one(q), 2);
    CHECK_THROWS_AS(birkhoff_split(s), not_invertible);
    CHECK_THROWS_AS(h0_dimension(s, 0), not_invertible);
    CHECK_THROWS_AS(oracle_split(s), not_invertible);
}

TEST_CASE("section dimensions of diagonal bundles") {
    // O(2) + O(-1): h0 = 3, after one twist h0 = 5
    LaurentMatrix m(2, q);
    m.at(0, 0) = LaurentPoly(Fq::one(q), 2);
    m.at(1, 1) = LaurentPoly(Fq::one(q), -1);
    CHECK(h0_dimension(m, 0) == 3);
    CHECK(h0_dimension(m, 1) == 5);
    CHECK(h0_dimension(m, -3) == 0);

    const FieldSpec f2(2);
    CHECK(h0_dimension(left_transition(1, 4, f2), -4) == 1);
}

TEST_CASE("sections grow monotonically and saturate at the rank") {
    LaurentMatrix m = left_transition(2, 4, q);
    int prev = h0_dimension(m, -8);
    CHECK(prev == 0);
    for (int tw = -7; tw <= 4; ++tw) {
        int cur = h0_dimension(m, tw);
        REQUIRE(cur >= prev);
        REQUIRE(cur - prev <= m.rank());
        prev = cur;
    }
    // far above the largest degree every twist adds exactly rank sections
    CHECK(h0_dimension(m, 5) - h0_dimension(m, 4) == 3);
}

TEST_CASE("oracle recovers planted diagonals") {
    LaurentMatrix d(2, q);
    d.at(0, 0) = LaurentPoly(Fq::one(q), 3);
    d.at(1, 1) = LaurentPoly(Fq::one(q), 3);
    CHECK(oracle_split(d).degrees == std::vector<int>{3, 3});

    LaurentMatrix e(3, q);
    e.at(0, 0) = LaurentPoly(Fq(q, 2), -2);
    e.at(1, 1) = LaurentPoly(Fq::one(q), 0);
    e.at(2, 2) = LaurentPoly(Fq(q, -1), 5);
    CHECK(oracle_split(e).degrees == std::vector<int>{5, 0, -2});
}

TEST_CASE("splitting is invariant under unimodular factors") {
    std::mt19937_64 rng(321);
    const FieldSpec f5(5);
    for (const FieldSpec& spec : {q, f5}) {
        for (int trial = 0; trial < 20; ++trial) {
            const int rank = 2 + static_cast<int>(rng() % 2);
            std::vector<int> planted;
            LaurentMatrix diag(rank, spec);
            for (int i = 0; i < rank; ++i) {
                int a = static_cast<int>(rng() % 7) - 3;
                planted.push_back(a);
                diag.at(i, i) = LaurentPoly(Fq::one(spec), a);
            }
            std::sort(planted.begin(), planted.end(), std::greater<>());
            LaurentMatrix m = mat_mul(
                mat_mul(random_unimodular(spec, rank, PolySide::plus, 2, rng()),
                        diag),
                random_unimodular(spec, rank, PolySide::minus, 2, rng()));
            auto [type, cert] = birkhoff_split(m);
            REQUIRE(type.degrees == planted);
            REQUIRE(verify_certificate(m, cert));
            REQUIRE(oracle_split(m) == type);
        }
    }
}

TEST_CASE("degree sum equals the determinant exponent") {
    const FieldSpec f3(3);
    for (const FieldSpec& spec : {q, f3}) {
        for (int n = 1; n <= 6; ++n)
            for (int k = 1; k <= n; ++k) {
                LaurentMatrix m = left_transition(k, n, spec);
                REQUIRE(birkhoff_split(m).first.degree_sum() ==
                        mat_det(m).low());
            }
    }
}
