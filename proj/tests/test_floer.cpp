#include <numeric>

#include "doctest.h"
#include "hfsurg/floer.hpp"

using namespace hfsurg;

namespace {
const auto INF = ExtendedInt::pos_inf();
const auto MINF = ExtendedInt::neg_inf();
} // namespace

TEST_CASE("A(+inf,+inf) computes CF-(S^3): one tower, top grading 0") {
    for (auto [p, q] : {std::pair{2, 1}, std::pair{4, 1}, std::pair{8, 3}, std::pair{8, 5},
                        std::pair{10, 3}, std::pair{12, 5}, std::pair{6, -1}, std::pair{10, -7}}) {
        LinkFloer lf(validate_link(p, q), 24);
        auto h = homology_bivariate(lf.a_complex({INF, INF}));
        INFO("p=", p, " q=", q);
        REQUIRE(h.summands.size() == 1);
        CHECK(h.summands[0].tower);
        CHECK(h.summands[0].grading4 == 0);
    }
}

TEST_CASE("thinness: A1+A2-M constant across generators") {
    for (auto [p, q] : {std::pair{8, 5}, std::pair{12, 7}, std::pair{6, 1}}) {
        LinkFloer lf(validate_link(p, q), 24);
        const auto& g = lf.diagram().gradings;
        int c4 = 2 * (g.alex2[0][0] + g.alex2[0][1]) - g.maslov4[0];
        for (size_t i = 1; i < g.maslov4.size(); ++i)
            CHECK(2 * (g.alex2[i][0] + g.alex2[i][1]) - g.maslov4[i] == c4);
    }
}

TEST_CASE("E-rule limits: at +inf w-bigons carry U, z-bigons carry 1") {
    LinkFloer lf(validate_link(8, 5), 16);
    const auto& diag = lf.diagram();
    const GradedComplex& c = lf.a_complex({INF, INF});
    for (const Bigon& b : diag.bigons) {
        bool found = false;
        for (auto& [t, poly] : c.diff(b.from))
            if (t == b.to)
                for (auto [a, bb] : poly.terms()) {
                    int wa = basepoint_is_w(b.basepoint) && basepoint_component(b.basepoint) == 1;
                    int wb = basepoint_is_w(b.basepoint) && basepoint_component(b.basepoint) == 2;
                    if (a == wa && bb == wb) found = true;
                }
        CHECK(found);
    }
    // at (-inf,-inf) the roles of w and z swap
    const GradedComplex& cm = lf.a_complex({MINF, MINF});
    for (const Bigon& b : diag.bigons) {
        bool found = false;
        for (auto& [t, poly] : cm.diff(b.from))
            if (t == b.to)
                for (auto [a, bb] : poly.terms()) {
                    int za = !basepoint_is_w(b.basepoint) && basepoint_component(b.basepoint) == 1;
                    int zb = !basepoint_is_w(b.basepoint) && basepoint_component(b.basepoint) == 2;
                    if (a == za && bb == zb) found = true;
                }
        CHECK(found);
    }
}

TEST_CASE("all boundary slots have single-tower homology (forced by unknot components)") {
    for (auto [p, q] : {std::pair{8, 5}, std::pair{8, 3}, std::pair{4, 1}, std::pair{10, 3}}) {
        LinkFloer lf(validate_link(p, q), 24);
        int lk2 = lf.lk();  // doubled s-lattice parity equals lk
        std::vector<ExtendedInt> s1s{INF, MINF};
        for (int v = -lf.a_max2(0); v <= lf.a_max2(0); v += 2) s1s.push_back(ExtendedInt(v));
        for (auto s1 : s1s) {
            for (auto s2 : {INF, MINF}) {
                auto h = homology_bivariate(lf.a_complex({s1, s2}));
                INFO("p=", p, " q=", q);
                CHECK(h.tower_count() == 1);
                CHECK(h.summands.size() == 1);
            }
        }
        for (int v = -lf.a_max2(1); v <= lf.a_max2(1); v += 2) {
            for (auto s1 : {INF, MINF}) {
                auto h = homology_bivariate(lf.a_complex({s1, ExtendedInt(v)}));
                CHECK(h.tower_count() == 1);
                CHECK(h.summands.size() == 1);
            }
        }
        (void)lk2;
    }
}

TEST_CASE("Whitehead link is an L-space link: every A_s is a single tower") {
    LinkFloer lf(validate_link(8, 5), 24);
    CHECK(lf.is_l_space());
    for (int a = -2; a <= 2; a += 2)
        for (int b = -2; b <= 2; b += 2) {
            auto h = homology_bivariate(lf.a_complex(SpinCIndex::finite2(a, b)));
            CHECK(h.tower_count() == 1);
            CHECK(h.summands.size() == 1);
        }
}

TEST_CASE("conjugation symmetry of A_s homology") {
    for (auto [p, q] : {std::pair{8, 3}, std::pair{6, 1}, std::pair{4, 1}}) {
        LinkFloer lf(validate_link(p, q), 24);
        int par = ((lf.lk() % 2) + 2) % 2;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b) {
                if (((a - par) % 2 + 2) % 2 != 0 || ((b - par) % 2 + 2) % 2 != 0) continue;
                auto h1 = homology_bivariate(lf.a_complex(SpinCIndex::finite2(a, b)));
                auto h2 = homology_bivariate(lf.a_complex(SpinCIndex::finite2(-a, -b)));
                INFO("p=", p, " q=", q, " s2=(", a, ",", b, ")");
                CHECK(h1.shape() == h2.shape());
            }
    }
}

TEST_CASE("A_s stabilizes to the boundary complexes") {
    LinkFloer lf(validate_link(8, 5), 16);
    const auto& far = lf.a_complex(SpinCIndex::finite2(20, 2));
    const auto& inf = lf.a_complex({INF, ExtendedInt(2)});
    CHECK(far.entries_equal(inf));
}

TEST_CASE("inclusion maps are chain maps; identity beyond A_max") {
    LinkFloer lf(validate_link(8, 5), 16);
    for (int a = -2; a <= 2; a += 2)
        for (int b = -2; b <= 2; b += 2) {
            SpinCIndex s = SpinCIndex::finite2(a, b);
            for (auto [d1, d2] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1},
                                  std::pair{0, -1}, std::pair{1, 1}, std::pair{-1, 1},
                                  std::pair{1, -1}, std::pair{-1, -1}}) {
                ChainMap f = lf.inclusion(s, d1, d2);
                f.verify_chain_map();
                f.verify_degree();
            }
        }
    ChainMap idp = lf.inclusion(SpinCIndex::finite2(2, 0), 1, 0);  // s1 = A_max
    CHECK(idp.is_identity());
    // Def 4.20 examples: coefficients U^2 at distance 2
    // M = +L1 with A1(x) = 1, s1 = -1 -> U1^2
    const auto& diag = lf.diagram();
    ChainMap f = lf.inclusion(SpinCIndex::finite2(-2, 0), 1, 0);
    for (int i = 0; i < (int)diag.gradings.alex2.size(); ++i) {
        if (diag.gradings.alex2[i][0] == 2) {
            REQUIRE(f.cols[i].size() == 1);
            auto terms = f.cols[i][0].second.terms();
            REQUIRE(terms.size() == 1);
            CHECK(terms[0] == std::pair{2, 0});
        }
    }
}

TEST_CASE("reduction shift") {
    // psi subtracts lk(L_i, M)/2 on the surviving coordinate
    CHECK(reduction_shift2(0, +1) == 0);
    CHECK(reduction_shift2(2, +1) == -2);  // lk=2, M=+L1: s2 -> s2 - 1
    CHECK(reduction_shift2(2, -1) == 2);   // M=-L1: s2 -> s2 + 1
}
