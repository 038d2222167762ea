#include "hfsurg/floer.hpp"

#include <algorithm>

namespace hfsurg {

std::string SpinCIndex::str() const {
    auto one = [](ExtendedInt v) -> std::string {
        if (v.is_pos_inf()) return "inf";
        if (v.is_neg_inf()) return "-inf";
        int64_t t = v.value();
        if (t % 2 == 0) return std::to_string(t / 2);
        return std::to_string(t) + "/2";
    };
    return "(" + one(s1x2) + "," + one(s2x2) + ")";
}

int64_t reduction_shift2(int lk, int dir) { return -static_cast<int64_t>(dir) * lk; }

LinkFloer::LinkFloer(const TwoBridgeLink& link, int trunc)
    : link_(link), trunc_(trunc), diag_(build_diagram(link)) {
    // S^3 normalization: the top class of H(A_{+inf,+inf}) after U2 := U1
    // must sit in Maslov grading 0
    SpinCIndex inf{ExtendedInt::pos_inf(), ExtendedInt::pos_inf()};
    GradedComplex top = build_a_complex(inf);
    HomologyModule h = homology_bivariate(top);
    require(h.tower_count() == 1, "A(+inf,+inf) must compute CF-(S^3): one tower");
    int shift4 = 0;
    for (auto& s : h.summands)
        if (s.tower) shift4 = -s.grading4;
    diag_.maslov_shift4 = shift4;
    for (auto& m : diag_.gradings.maslov4) m += shift4;
}

int LinkFloer::clamp2(ExtendedInt s_x2, int comp) const {
    const int amax = diag_.a_max2[comp];
    if (s_x2.is_pos_inf()) return amax;
    if (s_x2.is_neg_inf()) return -amax;
    return static_cast<int>(std::clamp<int64_t>(s_x2.value(), -amax, amax));
}

GradedComplex LinkFloer::build_a_complex(const SpinCIndex& s) const {
    const int n = 2 * link_.p;
    GradedComplex c(trunc_);
    for (int i = 0; i < n; ++i) {
        GeneratorInfo gi;
        gi.label = "b" + std::to_string(i);
        gi.alex2 = diag_.gradings.alex2[i];
        gi.has_alex = true;
        // natural grading mu_s = M - 2 sum_k max(A_k - s_k, 0)
        int g4 = diag_.gradings.maslov4[i];
        for (int k = 0; k < 2; ++k) {
            ExtendedInt sk = s.at(k);
            if (sk.is_pos_inf()) continue;
            int64_t a2 = gi.alex2[k];
            int64_t sk2 = sk.is_neg_inf() ? -diag_.a_max2[k] : sk.value();
            g4 -= static_cast<int>(4 * std::max<int64_t>(a2 - sk2, 0));
        }
        gi.grading4 = g4;
        c.add_generator(gi);
    }
    for (const Bigon& bg : diag_.bigons) {
        int e[2];
        for (int k = 0; k < 2; ++k) {
            const bool nw = basepoint_is_w(bg.basepoint) && basepoint_component(bg.basepoint) == k + 1;
            const bool nz = !basepoint_is_w(bg.basepoint) && basepoint_component(bg.basepoint) == k + 1;
            ExtendedInt sk = s.at(k);
            if (sk.is_pos_inf()) {
                e[k] = nw ? 1 : 0;
            } else if (sk.is_neg_inf()) {
                e[k] = nz ? 1 : 0;
            } else {
                int64_t s2 = sk.value();
                int64_t ax = diag_.gradings.alex2[bg.from][k];
                int64_t ay = diag_.gradings.alex2[bg.to][k];
                int64_t d2 = std::max<int64_t>(ax - s2, 0) - std::max<int64_t>(ay - s2, 0);
                require(d2 % 2 == 0, "E-exponent parity");
                e[k] = static_cast<int>(d2 / 2) + (nw ? 1 : 0);
            }
            require(e[k] >= 0, "negative E-exponent: grading bug");
        }
        require(e[0] < trunc_ && e[1] < trunc_, "E-exponent exceeds truncation; raise N");
        c.add_diff(bg.from, bg.to, BiPolynomial::monomial(trunc_, e[0], e[1]));
    }
    return c;
}

const GradedComplex& LinkFloer::a_complex(const SpinCIndex& s) const {
    std::pair<int, int> key{clamp2(s.s1x2, 0), clamp2(s.s2x2, 1)};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto built = std::make_unique<GradedComplex>(
            build_a_complex(SpinCIndex::finite2(key.first, key.second)));
        built->verify_d_squared();
        built->verify_homogeneous();
        it = cache_.emplace(key, std::move(built)).first;
    }
    return *it->second;
}

ChainMap LinkFloer::inclusion(const SpinCIndex& s, int d1, int d2) const {
    const int dirs[2] = {d1, d2};
    SpinCIndex tgt = s;
    int degree4 = 0;
    for (int k = 0; k < 2; ++k) {
        if (dirs[k] == +1) {
            if (s.at(k).is_neg_inf())
                throw usage_error("inclusion +L requires s != -inf");
            tgt.set(k, ExtendedInt::pos_inf());
        } else if (dirs[k] == -1) {
            if (s.at(k).is_pos_inf())
                throw usage_error("inclusion -L requires s != +inf");
            tgt.set(k, ExtendedInt::neg_inf());
            // degree of the diagonal map toward the clamped -inf complex
            int64_t s2 = s.at(k).is_neg_inf() ? -diag_.a_max2[k] : s.at(k).value();
            degree4 -= static_cast<int>(4 * (s2 + diag_.a_max2[k]));
        }
    }
    const GradedComplex& src = a_complex(s);
    const GradedComplex& dst = a_complex(tgt);
    ChainMap f = ChainMap::zero(src, dst, degree4);
    for (int i = 0; i < src.rank(); ++i) {
        int e[2] = {0, 0};
        for (int k = 0; k < 2; ++k) {
            if (dirs[k] == 0) continue;
            if (dirs[k] == +1 && s.at(k).is_pos_inf()) continue;
            if (dirs[k] == -1 && s.at(k).is_neg_inf()) continue;
            int64_t a2 = diag_.gradings.alex2[i][k];
            int64_t s2 = s.at(k).value();
            int64_t e2 = dirs[k] == +1 ? std::max<int64_t>(a2 - s2, 0) : std::max<int64_t>(s2 - a2, 0);
            require(e2 % 2 == 0, "inclusion exponent parity");
            e[k] = static_cast<int>(e2 / 2);
            require(e[k] < trunc_, "inclusion exponent exceeds truncation; raise N");
        }
        f.add_entry(i, i, BiPolynomial::monomial(trunc_, e[0], e[1]));
    }
    f.verify_degree();
    return f;
}

bool LinkFloer::is_l_space() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (l_space_state_ >= 0) return l_space_state_ == 1;
    }
    bool ok = true;
    for (int a2 = -diag_.a_max2[0]; a2 <= diag_.a_max2[0] && ok; a2 += 2)
        for (int b2 = -diag_.a_max2[1]; b2 <= diag_.a_max2[1] && ok; b2 += 2) {
            HomologyModule h = homology_bivariate(a_complex(SpinCIndex::finite2(a2, b2)));
            ok = h.tower_count() == 1 && h.summands.size() == 1;
        }
    std::lock_guard<std::mutex> lock(mu_);
    l_space_state_ = ok ? 1 : 0;
    return ok;
}

} // namespace hfsurg
