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

#include "jetsplit/field.hpp"

using namespace jetsplit;

TEST_CASE("field spec validates the characteristic") {
    CHECK(FieldSpec(0).is_rational());
    CHECK(FieldSpec(0).name() == "Q");
    CHECK(FieldSpec(7).characteristic() == 7);
    CHECK(FieldSpec(7).name() == "F_7");
    CHECK_THROWS_AS(FieldSpec(1), invalid_params);
    CHECK_THROWS_AS(FieldSpec(4), invalid_params);
    CHECK_THROWS_AS(FieldSpec(91), invalid_params);  // 7 * 13
    CHECK_NOTHROW(FieldSpec(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("rational arithmetic is exact") {
    const FieldSpec q(0);
    const Fq a(q, bigrat(1, 3));
    const Fq b(q, bigrat(1, 6));
    CHECK(a + b == Fq(q, bigrat(1, 2)));
    CHECK(a - b == b);
    CHECK(a * b == Fq(q, bigrat(1, 18)));
    CHECK(a / b == Fq(q, 2));
    CHECK((-a).str() == "-1/3");
    CHECK(Fq(q, bigrat(2, 4)).str() == "1/2");
    CHECK(Fq(q, 5).str() == "5");
    CHECK_THROWS_AS(Fq::zero(q).inverse(), division_by_zero);
}

TEST_CASE("prime field arithmetic is canonical") {
    const FieldSpec f5(5);
    CHECK(Fq(f5, 7) == Fq(f5, 2));
    CHECK(Fq(f5, -1) == Fq(f5, 4));
    CHECK(Fq(f5, 3).inverse() == Fq(f5, 2));
    CHECK(Fq(f5, 3) + Fq(f5, 4) == Fq(f5, 2));
    CHECK(Fq(f5, 3) * Fq(f5, 4) == Fq(f5, 2));
    CHECK(Fq(f5, 2).str() == "2");
    // p-integral rationals reduce through the denominator inverse
    CHECK(Fq(f5, bigrat(1, 2)) == Fq(f5, 3));
    CHECK_THROWS_AS(Fq(f5, bigrat(1, 5)), division_by_zero);
}

TEST_CASE("mixed-field operations are rejected") {
    const FieldSpec q(0), f2(2);
    CHECK_THROWS_AS(Fq(q, 1) + Fq(f2, 1), field_mismatch);
    CHECK_THROWS_AS(Fq(q, 1) == Fq(f2, 1), field_mismatch);
}

TEST_CASE("textual round trip") {
    const FieldSpec q(0), f7(7);
    for (const char* s : {"0", "1", "-3", "22/7", "-5/9"}) {
        CHECK(Fq::parse(q, s).str() == s);
    }
    CHECK(Fq::parse(f7, "12").str() == "5");
}

TEST_CASE("binomial conventions") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == bigint("118264581564861424"));
    CHECK_THROWS_AS(binomial(-1, 0), unsupported);
}

TEST_CASE("Pascal identity up to 40") {
    for (long long a = 1; a <= 40; ++a)
        for (long long b = 0; b <= a; ++b)
            REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("reduce is a ring homomorphism") {
    const FieldSpec f11(11), q(0);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const bigint x = bigint(rng()) - bigint(rng());
        const bigint y = bigint(rng()) - bigint(rng());
        REQUIRE(reduce(bigint(x + y), f11) == reduce(x, f11) + reduce(y, f11));
        REQUIRE(reduce(bigint(x * y), f11) == reduce(x, f11) * reduce(y, f11));
        REQUIRE(reduce(x, q) == Fq(q, x));
    }
}
