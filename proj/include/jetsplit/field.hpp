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

#ifndef JETSPLIT_FIELD_HPP
#define JETSPLIT_FIELD_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace jetsplit {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the witness set below decides primality for
// every integer fitting in 64 bits.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw division_by_zero();
    // extended Euclid on signed 128-bit to dodge overflow for p near 2^63+
    __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    }
    if (r0 != 1) throw internal_error("invmod: modulus not prime?");
    __int128 s = s0 % static_cast<__int128>(p);
    if (s < 0) s += p;
    return static_cast<std::uint64_t>(s);
}

} // namespace detail

/// The coefficient field: characteristic 0 means the rationals, otherwise a
/// prime p and the field is F_p. Primality is checked at construction.
class FieldSpec {
  public:
    FieldSpec() : char_(0) {}
    explicit FieldSpec(std::uint64_t characteristic) : char_(characteristic) {
        if (char_ != 0 && !detail::is_prime_u64(char_))
            throw invalid_params("characteristic must be 0 or a prime, got " +
                                 std::to_string(char_));
    }

    std::uint64_t characteristic() const { return char_; }
    bool is_rational() const { return char_ == 0; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.char_ == b.char_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) {
        return !(a == b);
    }

    std::string name() const {
        return char_ == 0 ? "Q" : "F_" + std::to_string(char_);
    }

  private:
    std::uint64_t char_;
};

/// An exact scalar: an arbitrary-precision rational in characteristic 0, a
/// canonical residue in [0, p) in characteristic p. Immutable in spirit;
/// arithmetic returns fresh values.
class Fq {
  public:
    Fq() : spec_(), rat_(0), res_(0) {}

    Fq(const FieldSpec& spec, const bigrat& value) : spec_(spec), res_(0) {
        if (spec_.is_rational()) {
            rat_ = value;
        } else {
            // value must be p-integral; reduce numerator * denominator^-1
            const std::uint64_t p = spec_.characteristic();
            bigint num = boost::multiprecision::numerator(value);
            bigint den = boost::multiprecision::denominator(value);
            std::uint64_t dn = static_cast<std::uint64_t>(den % p);
            if (dn == 0) throw division_by_zero();
            bigint nm = num % p;
            if (nm < 0) nm += p;
            res_ = detail::mulmod(static_cast<std::uint64_t>(nm),
                                  detail::invmod(dn, p), p);
        }
    }

    Fq(const FieldSpec& spec, const bigint& value) : spec_(spec), res_(0) {
        if (spec_.is_rational()) {
            rat_ = value;
        } else {
            bigint m = value % spec_.characteristic();
            if (m < 0) m += spec_.characteristic();
            res_ = static_cast<std::uint64_t>(m);
        }
    }

    Fq(const FieldSpec& spec, long long value)
        : Fq(spec, bigint(value)) {}

    static Fq zero(const FieldSpec& spec) { return Fq(spec, 0); }
    static Fq one(const FieldSpec& spec) { return Fq(spec, 1); }

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const {
        return spec_.is_rational() ? rat_.is_zero() : res_ == 0;
    }

    /// Rational value; only meaningful in characteristic 0.
    const bigrat& rational() const { return rat_; }
    /// Canonical residue; only meaningful in characteristic p.
    std::uint64_t residue() const { return res_; }

    friend Fq operator+(const Fq& a, const Fq& b) {
        a.match(b);
        if (a.spec_.is_rational()) return Fq(a.spec_, bigrat(a.rat_ + b.rat_));
        const std::uint64_t p = a.spec_.characteristic();
        std::uint64_t s = a.res_ + b.res_;  // p < 2^63 would suffice; be exact
        if (s < a.res_ || s >= p) s -= p;
        return raw(a.spec_, s);
    }

    friend Fq operator-(const Fq& a, const Fq& b) { return a + (-b); }

    Fq operator-() const {
        if (spec_.is_rational()) return Fq(spec_, bigrat(-rat_));
        return raw(spec_, res_ == 0 ? 0 : spec_.characteristic() - res_);
    }

    friend Fq operator*(const Fq& a, const Fq& b) {
        a.match(b);
        if (a.spec_.is_rational()) return Fq(a.spec_, bigrat(a.rat_ * b.rat_));
        return raw(a.spec_, detail::mulmod(a.res_, b.res_,
                                           a.spec_.characteristic()));
    }

    friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inverse(); }

    Fq inverse() const {
        if (is_zero()) throw division_by_zero();
        if (spec_.is_rational()) return Fq(spec_, bigrat(1 / rat_));
        return raw(spec_, detail::invmod(res_, spec_.characteristic()));
    }

    Fq& operator+=(const Fq& b) { return *this = *this + b; }
    Fq& operator-=(const Fq& b) { return *this = *this - b; }
    Fq& operator*=(const Fq& b) { return *this = *this * b; }
    Fq& operator/=(const Fq& b) { return *this = *this / b; }

    friend bool operator==(const Fq& a, const Fq& b) {
        a.match(b);
        return a.spec_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
    }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

    /// Canonical textual form: "num/den" (lowest terms, positive denominator,
    /// "/1" omitted) over Q, the decimal residue over F_p.
    std::string str() const {
        if (spec_.is_rational()) return rat_.str();
        return std::to_string(res_);
    }

    static Fq parse(const FieldSpec& spec, const std::string& text) {
        if (spec.is_rational()) return Fq(spec, bigrat(text));
        return Fq(spec, bigint(text));
    }

  private:
    static Fq raw(const FieldSpec& spec, std::uint64_t residue) {
        Fq x;
        x.spec_ = spec;
        x.res_ = residue;
        return x;
    }

    void match(const Fq& other) const {
        if (spec_ != other.spec_) throw field_mismatch();
    }

    FieldSpec spec_;
    bigrat rat_;
    std::uint64_t res_;
};

/// Binomial coefficient C(a, b) with the convention C(a, b) = 0 for b < 0 or
/// b > a. Negative upper index is rejected: none of the implemented formulas
/// ever needs it.
inline bigint binomial(long long a, long long b) {
    if (a < 0)
        throw unsupported("binomial: negative upper index " +
                          std::to_string(a));
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    bigint r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact at every step
    }
    return r;
}

/// Canonical image of an integer in the field (identity into Q, residue
/// mod p into F_p).
inline Fq reduce(const bigint& z, const FieldSpec& spec) {
    return Fq(spec, z);
}

inline Fq reduce(const bigrat& q, const FieldSpec& spec) {
    return Fq(spec, q);
}

} // namespace jetsplit

#endif // JETSPLIT_FIELD_HPP
