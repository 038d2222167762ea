#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hfsurg/rational.hpp"
#include "hfsurg/ring.hpp"

namespace hfsurg {

struct GeneratorInfo {
    std::string label;
    int grading4 = 0;              // 4 * Maslov grading
    std::array<int, 2> alex2{0, 0};  // 2 * (A1, A2), when tagged
    bool has_alex = false;
};

/// Free graded chain complex over F2[U1,U2] (exponents < N); differential is
/// homogeneous of degree -1 with each U_i of degree -2.
class GradedComplex {
public:
    GradedComplex() = default;
    explicit GradedComplex(int trunc) : trunc_(trunc) {}

    int trunc() const { return trunc_; }
    int rank() const { return static_cast<int>(gens_.size()); }

    int add_generator(GeneratorInfo info) {
        gens_.push_back(std::move(info));
        d_.emplace_back();
        return rank() - 1;
    }
    /// XOR the coefficient of `to` in the differential of `from`.
    void add_diff(int from, int to, const BiPolynomial& coeff);

    const std::vector<std::pair<int, BiPolynomial>>& diff(int i) const { return d_[i]; }
    const GeneratorInfo& info(int i) const { return gens_[i]; }
    GeneratorInfo& info(int i) { return gens_[i]; }

    void shift_gradings(int delta4) {
        for (auto& g : gens_) g.grading4 += delta4;
    }

    void verify_d_squared() const;
    void verify_homogeneous() const;
    bool entries_equal(const GradedComplex& other) const;

private:
    int trunc_ = 0;
    std::vector<GeneratorInfo> gens_;
    std::vector<std::vector<std::pair<int, BiPolynomial>>> d_;  // column per generator
};

/// Chain in a complex: sparse BiPolynomial coordinates.
using Chain = std::vector<std::pair<int, BiPolynomial>>;

/// F[[U1,U2]]-linear map between complexes, as a sparse column matrix.
struct ChainMap {
    const GradedComplex* source = nullptr;
    const GradedComplex* target = nullptr;
    int degree4 = 0;
    std::vector<Chain> cols;  // image of each source generator

    static ChainMap zero(const GradedComplex& s, const GradedComplex& t, int degree4);
    static ChainMap identity(const GradedComplex& c);

    void add_entry(int from, int to, const BiPolynomial& coeff);
    bool is_zero() const;
    bool is_identity() const;
    Chain apply(const Chain& v) const;
    /// this + other (same source/target/degree)
    ChainMap plus(const ChainMap& other) const;
    /// g o f where f = *this
    ChainMap then(const ChainMap& g) const;
    /// d_target o f + f o d_source
    ChainMap boundary_commutator() const;
    void verify_chain_map() const;                      // commutator == 0
    void verify_homotopy_for(const ChainMap& rhs) const;  // commutator == rhs
    void verify_degree() const;  // homogeneous of the declared degree
};

using Homotopy = ChainMap;

struct Summand {
    bool tower = false;
    int torsion_order = 0;  // for torsion summands
    int grading4 = 0;       // generator grading (times 4)
    Chain cycle;            // representative in the complex's own basis (towers)
};

struct HomologyModule {
    std::vector<Summand> summands;
    int trunc = 0;
    int margin = 0;

    int tower_count() const {
        int c = 0;
        for (auto& s : summands) c += s.tower;
        return c;
    }
    bool empty() const { return summands.empty(); }
    /// (kind, order, grading4) multiset, sorted; the comparable shape
    std::vector<std::array<int, 3>> shape() const;
};

struct HomologyOptions {
    bool want_cycles = false;
    bool stabilization_check = false;  // re-run at 2N and compare
};

/// Homology of a complex whose entries are U2-free, over F2[U1]/(U1^N).
HomologyModule homology(const GradedComplex& c, const HomologyOptions& opts = {});

/// Expands generators over U2-powers to a free F2[U1]/(U1^N) complex, then
/// reduces; the U2-action agrees with U1 on homology afterwards.
HomologyModule homology_bivariate(const GradedComplex& c, const HomologyOptions& opts = {});

/// Mapping cone [[d_s, 0], [f, d_t]] with source grading shifted.
GradedComplex mapping_cone(const ChainMap& f);
bool cone_is_acyclic(const ChainMap& f);

/// Ungraded module shape by valuation-pivot Smith reduction over F2[U]/(U^N):
/// torsion orders (sorted) plus the free rank. Used for complexes that carry
/// no consistent absolute grading (non-torsion Spin^c classes) and as an
/// independent cross-check of the graded route.
struct ModuleShape {
    std::vector<int> torsion_orders;
    int free_rank = 0;
    bool operator==(const ModuleShape& o) const {
        return torsion_orders == o.torsion_orders && free_rank == o.free_rank;
    }
};
ModuleShape smith_shape(const GradedComplex& c);

/// One linear constraint: XOR of unknown coefficient bits (x, y, a, b) == rhs.
struct SolverConstraint {
    std::vector<std::array<int, 4>> bits;  // (source gen, target gen, u1 exp, u2 exp)
    bool rhs = false;
};

struct ChainMapSolution {
    bool feasible = false;
    ChainMap particular;
    std::vector<ChainMap> kernel;  // basis of the homogeneous solution space
};

/// Solves d f + f d = rhs (rhs may be the zero map) for homogeneous f of the
/// given degree, as a GF(2) linear system in the BiPolynomial coefficient
/// bits; `seed` randomizes the free variables of the particular solution.
ChainMapSolution solve_chain_map(const GradedComplex& source, const GradedComplex& target,
                                 int degree4, const ChainMap* rhs,
                                 const std::vector<SolverConstraint>& constraints,
                                 uint64_t seed);

struct QuasiIsoOptions {
    uint64_t seed = 1;
    uint32_t budget = 1u << 16;
    const std::vector<int>* source_area = nullptr;  // per-generator filtration values
    const std::vector<int>* target_area = nullptr;
    int area_period = 0;  // filtration drop per full U power (p+1)
};

/// A verified quasi-isomorphism between two complexes with single-tower
/// homology; throws stabilization_error on exhaustion.
ChainMap find_quasi_iso(const GradedComplex& source, const GradedComplex& target,
                        const QuasiIsoOptions& opts);

/// Solves dH + Hd = f + g; throws stabilization_error when infeasible.
Homotopy find_homotopy(const ChainMap& f, const ChainMap& g, uint64_t seed);

/// Rectangle of chain complexes of size (rows-1, cols-1) on a 3x3 (or smaller)
/// grid of vertices; unit squares carry diagonals.
struct Rectangle {
    std::array<std::array<const GradedComplex*, 3>, 3> v{};         // v[i][j]
    std::array<std::array<std::optional<ChainMap>, 2>, 3> right{};  // v[i][j] -> v[i][j+1]
    std::array<std::array<std::optional<ChainMap>, 3>, 2> down{};   // down[i][j]: v[i][j] -> v[i+1][j]
    std::array<std::array<std::optional<ChainMap>, 2>, 2> diag{};   // v[i][j] -> v[i+1][j+1]

    void verify() const;  // chain maps + unit-square relations
};

struct CompressedSquare {
    const GradedComplex* a = nullptr;  // (0,0)
    const GradedComplex* b = nullptr;  // (0,1): right target
    const GradedComplex* c = nullptr;  // (1,0): down target
    const GradedComplex* d = nullptr;  // (1,1)
    ChainMap right, down, right_then_down, down_then_right, diag;
    void verify() const;
};

/// Compression, columns first then rows (fixed order).
CompressedSquare compress(const Rectangle& r);

} // namespace hfsurg
