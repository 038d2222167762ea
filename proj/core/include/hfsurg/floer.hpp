#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "hfsurg/chain.hpp"
#include "hfsurg/schubert.hpp"

namespace hfsurg {

/// Spin^c index s = (s1, s2) in the affine lattice (lk/2 + Z)^2, stored in
/// doubled coordinates, with +-infinity allowed.
struct SpinCIndex {
    ExtendedInt s1x2, s2x2;

    static SpinCIndex finite2(int64_t a2, int64_t b2) { return {ExtendedInt(a2), ExtendedInt(b2)}; }
    ExtendedInt at(int comp) const { return comp == 0 ? s1x2 : s2x2; }
    void set(int comp, ExtendedInt v) { (comp == 0 ? s1x2 : s2x2) = v; }
    bool operator==(const SpinCIndex& o) const { return s1x2 == o.s1x2 && s2x2 == o.s2x2; }
    std::string str() const;
};

/// Reduction map psi^M: subtract lk(L_i, M)/2 on surviving coordinates
/// (doubled arithmetic). dir = +-1 is the orientation of the deleted component.
int64_t reduction_shift2(int lk, int dir);

/// All generalized Floer complexes A^-_s of one two-bridge link at a fixed
/// truncation order, with the S^3-normalized Maslov grading.
class LinkFloer {
public:
    LinkFloer(const TwoBridgeLink& link, int trunc);

    const TwoBridgeLink& link() const { return link_; }
    const SchubertDiagram& diagram() const { return diag_; }
    int trunc() const { return trunc_; }
    int lk() const { return diag_.lk; }
    int a_max2(int comp) const { return diag_.a_max2[comp]; }
    int maslov_shift4() const { return diag_.maslov_shift4; }
    const std::vector<int>& area() const { return diag_.area; }
    int area_period() const { return link_.p + 1; }

    /// A_s is literally the clamped-boundary complex once |s_i| >= A_max.
    int clamp2(ExtendedInt s_x2, int comp) const;

    /// Cached complex, shared for all s with the same clamp. Carries the
    /// natural grading mu_s(x) = M(x) - 2 sum_i max(A_i(x) - s_i, 0).
    const GradedComplex& a_complex(const SpinCIndex& s) const;

    /// Uncached build at the literal (finite or infinite) index.
    GradedComplex build_a_complex(const SpinCIndex& s) const;

    /// Inclusion map I_s^M for M given by orientation signs d1, d2 in
    /// {-1, 0, +1} (0 = component not in M); a diagonal U-power chain map.
    ChainMap inclusion(const SpinCIndex& s, int d1, int d2) const;

    /// True when every A_s over the core box (and the infinite slots) has
    /// single-tower homology; computed once and cached.
    bool is_l_space() const;

private:
    TwoBridgeLink link_;
    int trunc_;
    SchubertDiagram diag_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<GradedComplex>> cache_;
    mutable int l_space_state_ = -1;  // -1 unknown, 0 no, 1 yes
};

} // namespace hfsurg
