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

#ifndef JETSPLIT_LAURENT_HPP
#define JETSPLIT_LAURENT_HPP

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "field.hpp"

namespace jetsplit {

/// Which Laurent subring a matrix is supposed to live in: plus = F[t]
/// (support >= 0, the U0 chart side), minus = F[1/t] (support <= 0, the U1
/// chart side after the t = 1/s translation).
enum class PolySide { plus, minus };

inline const char* to_string(PolySide s) {
    return s == PolySide::plus ? "plus" : "minus";
}

/// Element of F[t, 1/t] in normal form: a sparse exponent -> coefficient map
/// that never stores a zero coefficient.
class LaurentPoly {
  public:
    explicit LaurentPoly(const FieldSpec& spec) : spec_(spec) {}

    /// c * t^e
    LaurentPoly(const Fq& c, int e) : spec_(c.spec()) {
        if (!c.is_zero()) terms_[e] = c;
    }

    static LaurentPoly zero(const FieldSpec& spec) { return LaurentPoly(spec); }
    static LaurentPoly one(const FieldSpec& spec) {
        return LaurentPoly(Fq::one(spec), 0);
    }
    static LaurentPoly monomial(const FieldSpec& spec, long long c, int e) {
        return LaurentPoly(Fq(spec, c), e);
    }

    const FieldSpec& spec() const { return spec_; }
    const std::map<int, Fq>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Lowest exponent of the support; undefined on the zero polynomial.
    int low() const {
        if (terms_.empty()) throw invalid_params("low() of zero polynomial");
        return terms_.begin()->first;
    }
    int high() const {
        if (terms_.empty()) throw invalid_params("high() of zero polynomial");
        return terms_.rbegin()->first;
    }

    Fq coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Fq::zero(spec_) : it->second;
    }

    void add_term(int e, const Fq& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        a.match(b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        a.match(b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(spec_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.match(b);
        LaurentPoly r(a.spec_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend LaurentPoly operator*(const Fq& c, const LaurentPoly& a) {
        LaurentPoly r(a.spec_);
        for (const auto& [e, ac] : a.terms_) r.add_term(e, c * ac);
        return r;
    }

    /// Multiply by t^m.
    LaurentPoly shift(int m) const {
        LaurentPoly r(spec_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + m, c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        a.match(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    /// Units of F[t, 1/t] are exactly the nonzero monomials c * t^m.
    bool is_unit() const { return terms_.size() == 1; }

    /// Canonical textual form, terms in increasing exponent order:
    /// "-1*t^-2 + 3 + 1*t^1"; the zero polynomial prints "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (e == 0)
                os << c.str();
            else
                os << c.str() << "*t^" << e;
        }
        return os.str();
    }

  private:
    void match(const LaurentPoly& other) const {
        if (spec_ != other.spec_) throw field_mismatch();
    }

    FieldSpec spec_;
    std::map<int, Fq> terms_;
};

/// True iff every term of a lies on the given side (>= 0 for plus, <= 0 for
/// minus). The zero polynomial lies on both sides.
inline bool side_check(const LaurentPoly& a, PolySide side) {
    if (a.is_zero()) return true;
    return side == PolySide::plus ? a.low() >= 0 : a.high() <= 0;
}

/// Square matrix over F[t, 1/t]. All entries share one FieldSpec.
class LaurentMatrix {
  public:
    LaurentMatrix(int rank, const FieldSpec& spec)
        : spec_(spec),
          rank_(rank),
          entries_(rank * rank, LaurentPoly::zero(spec)) {
        if (rank < 1) throw invalid_params("matrix rank must be positive");
    }

    static LaurentMatrix identity(int rank, const FieldSpec& spec) {
        LaurentMatrix m(rank, spec);
        for (int i = 0; i < rank; ++i) m.at(i, i) = LaurentPoly::one(spec);
        return m;
    }

    int rank() const { return rank_; }
    const FieldSpec& spec() const { return spec_; }

    LaurentPoly& at(int i, int j) { return entries_[i * rank_ + j]; }
    const LaurentPoly& at(int i, int j) const {
        return entries_[i * rank_ + j];
    }

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.spec_ != b.spec_) throw field_mismatch();
        return a.rank_ == b.rank_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) {
        return !(a == b);
    }

    /// Multiply every entry by t^m.
    LaurentMatrix shift(int m) const {
        LaurentMatrix r = *this;
        for (auto& e : r.entries_) e = e.shift(m);
        return r;
    }

    /// Largest |exponent| over the support of all entries; 0 for the zero
    /// matrix.
    int max_abs_exponent() const {
        int m = 0;
        for (const auto& e : entries_) {
            if (e.is_zero()) continue;
            m = std::max({m, std::abs(e.low()), std::abs(e.high())});
        }
        return m;
    }

    /// Lowest exponent appearing in any entry; 0 for the zero matrix.
    int min_exponent() const {
        bool seen = false;
        int m = 0;
        for (const auto& e : entries_) {
            if (e.is_zero()) continue;
            if (!seen || e.low() < m) m = e.low();
            seen = true;
        }
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < rank_; ++i) {
            os << "[ ";
            for (int j = 0; j < rank_; ++j) {
                if (j) os << " | ";
                os << at(i, j).str();
            }
            os << " ]\n";
        }
        return os.str();
    }

  private:
    FieldSpec spec_;
    int rank_;
    std::vector<LaurentPoly> entries_;
};

inline LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.spec() != b.spec()) throw field_mismatch();
    if (a.rank() != b.rank()) throw shape_mismatch();
    const int r = a.rank();
    LaurentMatrix c(r, a.spec());
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < r; ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return c;
}

inline bool side_check(const LaurentMatrix& m, PolySide side) {
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.rank(); ++j)
            if (!side_check(m.at(i, j), side)) return false;
    return true;
}

namespace detail {

/// Exact quotient a / b over F[t]; throws if the division has a remainder.
/// Both operands must have support >= 0.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw division_by_zero();
    LaurentPoly rem = a;
    LaurentPoly quot(a.spec());
    const int db = b.high();
    const Fq lead = b.coeff(db);
    while (!rem.is_zero()) {
        const int dr = rem.high();
        if (dr < db) throw internal_error("exact_div: nonzero remainder");
        Fq q = rem.coeff(dr) / lead;
        LaurentPoly qt(q, dr - db);
        quot += qt;
        rem -= qt * b;
    }
    return quot;
}

inline LaurentPoly cofactor_det(const LaurentMatrix& m,
                                std::vector<int>& rows,
                                std::vector<int>& cols) {
    const size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    LaurentPoly acc = LaurentPoly::zero(m.spec());
    const int top = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < n; ++j) {
        const LaurentPoly& e = m.at(top, cols[j]);
        if (e.is_zero()) continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(n - 1);
        for (size_t l = 0; l < n; ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        LaurentPoly minor = cofactor_det(m, sub_rows, sub_cols);
        if (j % 2 == 0)
            acc += e * minor;
        else
            acc -= e * minor;
    }
    return acc;
}

/// Bareiss fraction-free elimination over F[t]; every division is exact.
inline LaurentPoly bareiss_det(LaurentMatrix w) {
    const int n = w.rank();
    LaurentPoly prev = LaurentPoly::one(w.spec());
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) { piv = i; break; }
            if (piv < 0) return LaurentPoly::zero(w.spec());
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num =
                    w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num.is_zero() ? num : exact_div(num, prev);
            }
            w.at(i, k) = LaurentPoly::zero(w.spec());
        }
        prev = w.at(k, k);
    }
    LaurentPoly d = w.at(n - 1, n - 1);
    return sign == 1 ? d : -d;
}

} // namespace detail

/// Exact determinant: cofactor expansion for rank <= 4, Bareiss elimination
/// over F[t] (after a global t-power shift) above that.
inline LaurentPoly mat_det(const LaurentMatrix& m) {
    const int n = m.rank();
    if (n <= 4) {
        std::vector<int> rows(n), cols(n);
        for (int i = 0; i < n; ++i) rows[i] = cols[i] = i;
        return detail::cofactor_det(m, rows, cols);
    }
    const int mu = m.min_exponent();
    LaurentPoly d = detail::bareiss_det(m.shift(-mu));
    return d.shift(mu * n);
}

/// Deterministic-for-seed invertible matrix over the chosen side, built from
/// elementary row operations, permutations and nonzero scalings, so its
/// determinant is a nonzero field constant by construction.
inline LaurentMatrix random_unimodular(const FieldSpec& spec, int rank,
                                       PolySide side, int degree_bound,
                                       std::uint64_t seed) {
    if (rank < 1 || degree_bound < 0)
        throw invalid_params("random_unimodular: bad rank or degree bound");
    std::mt19937_64 rng(seed);
    auto rand_coeff = [&](bool nonzero) {
        if (spec.is_rational()) {
            long long c = static_cast<long long>(rng() % 7) - 3;  // [-3, 3]
            if (nonzero && c == 0) c = 1;
            return Fq(spec, c);
        }
        const std::uint64_t p = spec.characteristic();
        std::uint64_t c = rng() % p;
        if (nonzero && c == 0) c = 1;
        return Fq(spec, bigint(c));
    };
    LaurentMatrix m = LaurentMatrix::identity(rank, spec);
    const int ops = 2 * rank * rank + 2;
    for (int step = 0; step < ops; ++step) {
        switch (rng() % 3) {
            case 0: {  // row swap
                if (rank == 1) break;
                int i = static_cast<int>(rng() % rank);
                int j = static_cast<int>(rng() % rank);
                if (i == j) break;
                for (int c = 0; c < rank; ++c) std::swap(m.at(i, c), m.at(j, c));
                break;
            }
            case 1: {  // scale a row by a nonzero constant
                int i = static_cast<int>(rng() % rank);
                Fq c = rand_coeff(true);
                for (int col = 0; col < rank; ++col)
                    m.at(i, col) = c * m.at(i, col);
                break;
            }
            default: {  // row_i += c * t^e * row_j
                if (rank == 1) break;
                int i = static_cast<int>(rng() % rank);
                int j = static_cast<int>(rng() % rank);
                if (i == j) break;
                int e = static_cast<int>(rng() % (degree_bound + 1));
                if (side == PolySide::minus) e = -e;
                LaurentPoly mult(rand_coeff(false), e);
                for (int c = 0; c < rank; ++c)
                    m.at(i, c) += mult * m.at(j, c);
                break;
            }
        }
    }
    return m;
}

} // namespace jetsplit

#endif // JETSPLIT_LAURENT_HPP
