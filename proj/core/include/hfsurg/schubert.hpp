#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hfsurg/errors.hpp"

namespace hfsurg {

/// Two-bridge link b(p,q): p even positive, q odd, gcd(p,q)=1, -p < q < p.
struct TwoBridgeLink {
    int p = 0;
    int q = 0;
};

/// Validates and normalizes q into (-p, p). Throws usage_error.
TwoBridgeLink validate_link(int p, int q);

struct CanonicalForm {
    TwoBridgeLink canonical;          // q reduced into (-p, p)
    int q_inverse;                    // q^{-1} mod 2p, reduced into (-p, p)
    TwoBridgeLink mirror;             // b(p, -q)
    TwoBridgeLink reoriented;         // b(p, q+p), reduced
};
CanonicalForm canonical_form(int p, int q);

int linking_number(const TwoBridgeLink& link);
int signature(const TwoBridgeLink& link);

/// Residue of n modulo m lying in [k, k+m-1].
int64_t mod_from(int64_t n, int64_t m, int64_t k);
/// f_p(n) = |mod_from(n, 2p, -p+1)|.
int64_t f_p(int p, int64_t n);

/// Generator connected to b_i by a beta-arc in D1^alpha (disk=1) or D2^alpha (disk=2).
int beta_arc_partner(const TwoBridgeLink& link, int i, int disk);

/// Region spines of the two beta-disks: ('X' or 'Y', index) sequences.
struct RegionSpines {
    std::vector<std::pair<char, int>> d1_beta;
    std::vector<std::pair<char, int>> d2_beta;
};
RegionSpines region_spines(const TwoBridgeLink& link);

enum class Basepoint : uint8_t { w1, z1, w2, z2 };
inline int basepoint_component(Basepoint b) {
    return (b == Basepoint::w1 || b == Basepoint::z1) ? 1 : 2;
}
inline bool basepoint_is_w(Basepoint b) { return b == Basepoint::w1 || b == Basepoint::w2; }
const char* basepoint_name(Basepoint b);

struct Bigon {
    int from = 0;
    int to = 0;
    Basepoint basepoint = Basepoint::w1;
    int n_alpha = 1;
    int n_beta = 1;
};

struct GeneratorGradings {
    // half-integer Alexander gradings stored doubled: alex2[i] = (2*A1, 2*A2)
    std::vector<std::array<int, 2>> alex2;
    // quarter-integer Maslov gradings stored times 4; provisional until the
    // S^3 normalization shift is applied (see floer module)
    std::vector<int> maslov4;
};

/// Alexander gradings by the difference formula, centrally symmetrized;
/// Maslov provisional M = A1 + A2 (thin).
GeneratorGradings alexander_gradings(const TwoBridgeLink& link);

/// Net bigon census via the closed-form interval conditions; O(p^2).
std::vector<Bigon> enumerate_bigons(const TwoBridgeLink& link);

/// Net bigon census by direct geometric enumeration on the diagram; oracle
/// for enumerate_bigons, intended for p <= ~60.
std::vector<Bigon> enumerate_bigons_bruteforce(const TwoBridgeLink& link);

/// Symmetric Laurent polynomial in x^(1/2), y^(1/2): doubled exponents -> coefficient.
struct AlexanderPolynomial {
    std::map<std::pair<int, int>, int64_t> coeffs;
    bool operator==(const AlexanderPolynomial& o) const { return coeffs == o.coeffs; }
};
/// Up to global sign; normalized so the lexicographically largest term is positive.
AlexanderPolynomial alexander_polynomial(const TwoBridgeLink& link);

/// The assembled combinatorial diagram data.
struct SchubertDiagram {
    TwoBridgeLink link;
    int lk = 0;
    GeneratorGradings gradings;       // maslov4 normalized once floer applies the S^3 shift
    int maslov_shift4 = 0;            // the applied normalization shift (times 4)
    std::vector<Bigon> bigons;        // net census (formula path)
    std::array<int, 2> a_max2{0, 0};  // 2*max|A_i| per component
    std::vector<int> area;            // area filtration value per generator
};

/// Builds the diagram with provisional Maslov gradings (shift applied later).
SchubertDiagram build_diagram(const TwoBridgeLink& link);

} // namespace hfsurg
