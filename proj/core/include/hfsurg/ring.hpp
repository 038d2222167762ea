#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "hfsurg/errors.hpp"

namespace hfsurg {

/// Element of F_2[U]/(U^N), stored as a bitset (bit j = coefficient of U^j).
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int trunc) : n_(trunc), w_((trunc + 63) / 64, 0) {
        require(trunc > 0, "truncation order must be positive");
    }
    static TruncatedSeries monomial(int trunc, int j) {
        TruncatedSeries s(trunc);
        if (j < trunc) s.flip(j);
        return s;
    }
    static TruncatedSeries one(int trunc) { return monomial(trunc, 0); }

    int truncation_order() const { return n_; }

    bool get(int j) const {
        return j < n_ && ((w_[static_cast<size_t>(j) >> 6] >> (j & 63)) & 1u);
    }
    void flip(int j) {
        if (j < n_) w_[static_cast<size_t>(j) >> 6] ^= (uint64_t{1} << (j & 63));
    }

    bool is_zero() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool is_unit() const { return get(0); }

    /// Least j with nonzero coefficient; N for the zero element.
    int valuation() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) {
                int v = static_cast<int>(i * 64) + __builtin_ctzll(w_[i]);
                return v < n_ ? v : n_;
            }
        return n_;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require(n_ == o.n_, "truncation order mismatch");
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }

    /// Multiply by U^k (k >= 0), truncating.
    TruncatedSeries shifted(int k) const;
    /// Divide exactly by U^k; requires valuation() >= k.
    TruncatedSeries unshifted(int k) const;

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Multiplicative inverse of a unit, by the power-series recursion.
    TruncatedSeries inverse() const;

    bool operator==(const TruncatedSeries& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

/// Element of F_2[U1,U2] with both exponents < N, stored as a sorted term set.
class BiPolynomial {
public:
    BiPolynomial() = default;
    explicit BiPolynomial(int trunc) : n_(trunc) {
        require(trunc > 0, "truncation order must be positive");
    }
    static BiPolynomial monomial(int trunc, int a, int b) {
        BiPolynomial p(trunc);
        if (a < trunc && b < trunc) p.terms_.push_back(pack(a, b));
        return p;
    }
    static BiPolynomial one(int trunc) { return monomial(trunc, 0, 0); }

    int truncation_order() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Terms as (a, b) exponent pairs, sorted.
    std::vector<std::pair<int, int>> terms() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(terms_.size());
        for (uint32_t t : terms_) out.emplace_back(t >> 16, t & 0xffff);
        return out;
    }

    BiPolynomial& operator+=(const BiPolynomial& o);
    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) {
        a += b;
        return a;
    }
    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);

    /// Multiply by U1^a U2^b, truncating each exponent at N.
    BiPolynomial shifted(int a, int b) const;

    int max_u1_exponent() const;  // -1 for zero
    int max_u2_exponent() const;  // -1 for zero

    /// Position j holds sum of U1^a over terms (a, j); length = truncation order.
    std::vector<TruncatedSeries> expand_u2() const;

    bool operator==(const BiPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const BiPolynomial& o) const { return !(*this == o); }

private:
    static uint32_t pack(int a, int b) {
        return (static_cast<uint32_t>(a) << 16) | static_cast<uint32_t>(b);
    }
    void toggle(uint32_t t);

    int n_ = 0;
    std::vector<uint32_t> terms_;  // sorted, packed (a << 16 | b)
};

/// Integer extended with +inf/-inf, with the arithmetic rules used for
/// Spin^c indices (s + inf = inf, 0*(+inf) = +inf, (+-1)*(+inf) = +-inf).
class ExtendedInt {
public:
    constexpr ExtendedInt() : v_(0), inf_(0) {}
    constexpr ExtendedInt(int64_t v) : v_(v), inf_(0) {}  // NOLINT(google-explicit-constructor)
    static constexpr ExtendedInt pos_inf() { return ExtendedInt(0, +1); }
    static constexpr ExtendedInt neg_inf() { return ExtendedInt(0, -1); }

    bool is_finite() const { return inf_ == 0; }
    bool is_pos_inf() const { return inf_ > 0; }
    bool is_neg_inf() const { return inf_ < 0; }
    int64_t value() const {
        require(is_finite(), "value() on infinite ExtendedInt");
        return v_;
    }

    friend ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
        if (a.inf_ && b.inf_ && a.inf_ != b.inf_)
            throw invariant_error("inf - inf is undefined");
        if (a.inf_) return a;
        if (b.inf_) return b;
        return ExtendedInt(a.v_ + b.v_);
    }
    friend ExtendedInt operator-(ExtendedInt a) {
        return a.inf_ ? ExtendedInt(0, -a.inf_) : ExtendedInt(-a.v_);
    }
    friend ExtendedInt operator-(ExtendedInt a, ExtendedInt b) { return a + (-b); }

    /// k * (+inf) follows the paper's rules: +inf for k in {0, 1}, -inf for k = -1.
    friend ExtendedInt operator*(int64_t k, ExtendedInt a) {
        if (!a.inf_) return ExtendedInt(k * a.v_);
        if (k == -1) return ExtendedInt(0, -a.inf_);
        return a;  // 0 and +1 both keep the sign
    }

    friend bool operator==(ExtendedInt a, ExtendedInt b) {
        return a.inf_ == b.inf_ && (a.inf_ != 0 || a.v_ == b.v_);
    }
    friend bool operator<(ExtendedInt a, ExtendedInt b) {
        if (a.inf_ != b.inf_) return a.inf_ < b.inf_;
        return a.inf_ == 0 && a.v_ < b.v_;
    }
    friend bool operator<=(ExtendedInt a, ExtendedInt b) { return a < b || a == b; }

private:
    constexpr ExtendedInt(int64_t v, int8_t inf) : v_(v), inf_(inf) {}
    int64_t v_;
    int8_t inf_;
};

} // namespace hfsurg
