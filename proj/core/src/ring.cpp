#include "hfsurg/ring.hpp"

#include <algorithm>

namespace hfsurg {

TruncatedSeries TruncatedSeries::shifted(int k) const {
    require(k >= 0, "negative shift");
    TruncatedSeries out(n_);
    if (k >= n_) return out;
    const int nw = static_cast<int>(w_.size());
    const int wordshift = k >> 6, bitshift = k & 63;
    for (int i = nw - 1; i >= wordshift; --i) {
        uint64_t lo = w_[i - wordshift] << bitshift;
        uint64_t hi = (bitshift && i - wordshift - 1 >= 0)
                          ? (w_[i - wordshift - 1] >> (64 - bitshift))
                          : 0;
        out.w_[i] = lo | hi;
    }
    // clear bits at or past N
    const int top = n_ & 63;
    if (top) out.w_.back() &= (uint64_t{1} << top) - 1;
    return out;
}

TruncatedSeries TruncatedSeries::unshifted(int k) const {
    require(k >= 0 && valuation() >= k, "inexact division by U^k");
    TruncatedSeries out(n_);
    for (int j = k; j < n_; ++j)
        if (get(j)) out.flip(j - k);
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require(a.n_ == b.n_, "truncation order mismatch");
    TruncatedSeries acc(a.n_);
    for (int j = 0; j < a.n_; ++j)
        if (a.get(j)) acc += b.shifted(j);
    return acc;
}

TruncatedSeries TruncatedSeries::inverse() const {
    require(is_unit(), "inverse of a non-unit");
    // b_0 = 1, b_k = sum_{j<k} a_{k-j} b_j
    TruncatedSeries b(n_);
    b.flip(0);
    for (int k = 1; k < n_; ++k) {
        bool c = false;
        for (int j = 0; j < k; ++j)
            if (b.get(j) && get(k - j)) c = !c;
        if (c) b.flip(k);
    }
    return b;
}

void BiPolynomial::toggle(uint32_t t) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it != terms_.end() && *it == t)
        terms_.erase(it);
    else
        terms_.insert(it, t);
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
    require(n_ == o.n_, "truncation order mismatch");
    std::vector<uint32_t> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i] < o.terms_[j])
            out.push_back(terms_[i++]);
        else if (o.terms_[j] < terms_[i])
            out.push_back(o.terms_[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), terms_.begin() + i, terms_.end());
    out.insert(out.end(), o.terms_.begin() + j, o.terms_.end());
    terms_ = std::move(out);
    return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
    require(a.n_ == b.n_, "truncation order mismatch");
    BiPolynomial acc(a.n_);
    for (uint32_t s : a.terms_) {
        const int sa = s >> 16, sb = s & 0xffff;
        for (uint32_t t : b.terms_) {
            const int ta = (t >> 16) + sa, tb = (t & 0xffff) + sb;
            if (ta < a.n_ && tb < a.n_) acc.toggle(BiPolynomial::pack(ta, tb));
        }
    }
    return acc;
}

BiPolynomial BiPolynomial::shifted(int a, int b) const {
    require(a >= 0 && b >= 0, "negative shift");
    BiPolynomial out(n_);
    for (uint32_t t : terms_) {
        const int ta = static_cast<int>(t >> 16) + a, tb = static_cast<int>(t & 0xffff) + b;
        if (ta < n_ && tb < n_) out.terms_.push_back(pack(ta, tb));
    }
    // shifting preserves order; truncation may drop terms but keeps sortedness
    return out;
}

int BiPolynomial::max_u1_exponent() const {
    int m = -1;
    for (uint32_t t : terms_) m = std::max(m, static_cast<int>(t >> 16));
    return m;
}

int BiPolynomial::max_u2_exponent() const {
    int m = -1;
    for (uint32_t t : terms_) m = std::max(m, static_cast<int>(t & 0xffff));
    return m;
}

std::vector<TruncatedSeries> BiPolynomial::expand_u2() const {
    std::vector<TruncatedSeries> out(static_cast<size_t>(n_), TruncatedSeries(n_));
    for (uint32_t t : terms_) out[t & 0xffff].flip(static_cast<int>(t >> 16));
    return out;
}

} // namespace hfsurg
