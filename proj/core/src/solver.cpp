#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "hfsurg/chain.hpp"

namespace hfsurg {

namespace {

struct LinearSystem {
    int n_unknowns = 0;
    size_t words() const { return static_cast<size_t>((n_unknowns + 63) / 64); }
    std::vector<std::vector<uint64_t>> rows;
    std::vector<char> rhs;

    void add_row(const std::vector<int>& bits, bool r) {
        std::vector<uint64_t> w(words(), 0);
        for (int b : bits) w[static_cast<size_t>(b) >> 6] ^= (uint64_t{1} << (b & 63));
        rows.push_back(std::move(w));
        rhs.push_back(r);
    }

    // returns false when infeasible; otherwise fills a particular solution
    // (free variables from the seeded generator) and a kernel basis
    bool solve(uint64_t seed, std::vector<char>& solution, std::vector<std::vector<char>>* kernel) {
        const size_t W = words();
        std::vector<int> pivot_col;                 // per stored pivot row
        std::vector<std::vector<uint64_t>> prow;
        std::vector<char> prhs;
        std::vector<int> pivot_of_col(n_unknowns, -1);
        auto lowest = [&](const std::vector<uint64_t>& w) -> int {
            for (size_t i = 0; i < W; ++i)
                if (w[i]) return static_cast<int>(i * 64) + __builtin_ctzll(w[i]);
            return -1;
        };
        for (size_t ri = 0; ri < rows.size(); ++ri) {
            auto w = rows[ri];
            char r = rhs[ri];
            int c;
            while ((c = lowest(w)) >= 0 && pivot_of_col[c] >= 0) {
                int pi = pivot_of_col[c];
                for (size_t k = 0; k < W; ++k) w[k] ^= prow[pi][k];
                r ^= prhs[pi];
            }
            if (c < 0) {
                if (r) return false;
                continue;
            }
            pivot_of_col[c] = static_cast<int>(prow.size());
            pivot_col.push_back(c);
            prow.push_back(std::move(w));
            prhs.push_back(r);
        }
        // assignment: seeded free variables, back-substitution for pivots
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
        solution.assign(n_unknowns, 0);
        std::vector<char> is_pivot(n_unknowns, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        for (int c = 0; c < n_unknowns; ++c)
            if (!is_pivot[c]) solution[c] = static_cast<char>(rng() & 1);
        auto backsub = [&](std::vector<char>& sol, const std::vector<char>& rhs_bits) {
            std::vector<int> order(pivot_col.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return pivot_col[a] > pivot_col[b]; });
            for (int pi : order) {
                int c = pivot_col[pi];
                char v = rhs_bits[pi];
                for (int b = c + 1; b < n_unknowns; ++b)
                    if ((prow[pi][static_cast<size_t>(b) >> 6] >> (b & 63)) & 1)
                        v ^= sol[b];
                sol[c] = v;
            }
        };
        backsub(solution, prhs);
        if (kernel) {
            kernel->clear();
            std::vector<char> zero_rhs(pivot_col.size(), 0);
            for (int f = 0; f < n_unknowns; ++f) {
                if (is_pivot[f]) continue;
                std::vector<char> v(n_unknowns, 0);
                v[f] = 1;
                backsub(v, zero_rhs);
                kernel->push_back(std::move(v));
            }
        }
        return true;
    }
};

struct UnknownTable {
    const GradedComplex* src;
    const GradedComplex* tgt;
    int degree4;
    int N;
    std::vector<std::tuple<int, int, int>> keys;        // (x, y, a); b = cxy - a
    std::map<std::tuple<int, int, int>, int> index;

    UnknownTable(const GradedComplex& s, const GradedComplex& t, int degree4_)
        : src(&s), tgt(&t), degree4(degree4_), N(s.trunc()) {
        for (int x = 0; x < s.rank(); ++x)
            for (int y = 0; y < t.rank(); ++y) {
                int c8 = t.info(y).grading4 - s.info(x).grading4 - degree4;
                if (c8 < 0 || c8 % 8 != 0) continue;
                int c = c8 / 8;
                for (int a = std::max(0, c - (N - 1)); a <= std::min(c, N - 1); ++a) {
                    index[{x, y, a}] = static_cast<int>(keys.size());
                    keys.emplace_back(x, y, a);
                }
            }
    }

    int cxy(int x, int y) const {
        int c8 = tgt->info(y).grading4 - src->info(x).grading4 - degree4;
        return (c8 < 0 || c8 % 8 != 0) ? -1 : c8 / 8;
    }

    int find(int x, int y, int a, int b) const {
        int c = cxy(x, y);
        if (c < 0 || a + b != c) return -1;
        auto it = index.find({x, y, a});
        return it == index.end() ? -1 : it->second;
    }

    ChainMap to_map(const std::vector<char>& bits) const {
        ChainMap f = ChainMap::zero(*src, *tgt, degree4);
        for (size_t u = 0; u < keys.size(); ++u) {
            if (!bits[u]) continue;
            auto [x, y, a] = keys[u];
            int b = cxy(x, y) - a;
            f.add_entry(x, y, BiPolynomial::monomial(N, a, b));
        }
        return f;
    }
};

} // namespace

ChainMapSolution solve_chain_map(const GradedComplex& source, const GradedComplex& target,
                                 int degree4, const ChainMap* rhs,
                                 const std::vector<SolverConstraint>& constraints,
                                 uint64_t seed) {
    UnknownTable tab(source, target, degree4);
    const int N = source.trunc();

    // equation keys (x, z, A, B) over the commutator d f + f d
    std::map<std::tuple<int, int, int, int>, std::vector<int>> eq;
    std::map<std::tuple<int, int, int, int>, char> eq_rhs;
    auto touch = [&](int x, int z, int A, int B) -> std::vector<int>* {
        if (A >= N || B >= N) return nullptr;
        return &eq[{x, z, A, B}];
    };
    // reverse adjacency of the source differential
    std::vector<std::vector<std::pair<int, const BiPolynomial*>>> into(source.rank());
    for (int x = 0; x < source.rank(); ++x)
        for (auto& [w, q] : source.diff(x)) into[w].emplace_back(x, &q);

    for (size_t u = 0; u < tab.keys.size(); ++u) {
        auto [x, y, a] = tab.keys[u];
        int b = tab.cxy(x, y) - a;
        for (auto& [z, poly] : target.diff(y))
            for (auto [al, be] : poly.terms())
                if (auto* row = touch(x, z, a + al, b + be)) row->push_back(static_cast<int>(u));
        for (auto& [x2, qp] : into[x])
            for (auto [al, be] : qp->terms())
                if (auto* row = touch(x2, y, a + al, b + be)) row->push_back(static_cast<int>(u));
    }
    if (rhs) {
        require(rhs->degree4 == degree4 - 4, "rhs degree mismatch in solve_chain_map");
        for (int x = 0; x < source.rank(); ++x)
            for (auto& [z, poly] : rhs->cols[x])
                for (auto [al, be] : poly.terms()) {
                    touch(x, z, al, be);
                    eq_rhs[{x, z, al, be}] ^= 1;
                }
    }

    LinearSystem sys;
    sys.n_unknowns = static_cast<int>(tab.keys.size());
    for (auto& [key, bits] : eq) {
        char r = 0;
        if (auto it = eq_rhs.find(key); it != eq_rhs.end()) r = it->second;
        sys.add_row(bits, r);
    }
    for (auto& con : constraints) {
        std::vector<int> bits;
        for (auto [x, y, a, b] : con.bits) {
            int u = tab.find(x, y, a, b);
            if (u >= 0) bits.push_back(u);
        }
        sys.add_row(bits, con.rhs);
    }

    ChainMapSolution out;
    std::vector<char> sol;
    std::vector<std::vector<char>> kernel;
    if (!sys.solve(seed, sol, &kernel)) {
        out.feasible = false;
        return out;
    }
    out.feasible = true;
    out.particular = tab.to_map(sol);
    for (auto& k : kernel) out.kernel.push_back(tab.to_map(k));
    return out;
}

namespace {

// leading term of a chain under the area filtration (or U-weight order)
std::tuple<int, int, int> leading_term(const Chain& z, const std::vector<int>* area, int period) {
    require(!z.empty(), "leading term of empty chain");
    bool have = false;
    std::tuple<int, int, int> best{};
    long best_val = 0;
    for (auto& [g, poly] : z)
        for (auto [a, b] : poly.terms()) {
            long val = area ? static_cast<long>((*area)[g]) - static_cast<long>(period) * (a + b)
                            : -static_cast<long>(a + b);
            if (!have || val > best_val ||
                (val == best_val && std::tuple{g, a, b} < best)) {
                best = {g, a, b};
                best_val = val;
                have = true;
            }
        }
    return best;
}

ChainMap with_kernel(const ChainMap& base, const std::vector<ChainMap>& kernel, uint64_t mask_lo,
                     const std::vector<int>& subset) {
    ChainMap f = base;
    for (size_t i = 0; i < subset.size(); ++i)
        if ((mask_lo >> i) & 1) f = f.plus(kernel[subset[i]]);
    return f;
}

} // namespace

ChainMap find_quasi_iso(const GradedComplex& source, const GradedComplex& target,
                        const QuasiIsoOptions& opts) {
    if (&source == &target ||
        (source.entries_equal(target) && [&] {
            for (int i = 0; i < source.rank(); ++i)
                if (source.info(i).grading4 != target.info(i).grading4) return false;
            return true;
        }()))
        return ChainMap::identity(source);

    HomologyOptions ho;
    ho.want_cycles = true;
    HomologyModule hs = homology_bivariate(source, ho);
    HomologyModule ht = homology_bivariate(target, ho);
    require(hs.tower_count() == 1 && static_cast<int>(hs.summands.size()) == 1,
            "find_quasi_iso: source homology must be a single tower");
    require(ht.tower_count() == 1 && static_cast<int>(ht.summands.size()) == 1,
            "find_quasi_iso: target homology must be a single tower");
    const Chain& zs = hs.summands[0].cycle;
    const Chain& zt = ht.summands[0].cycle;
    int degree4 = ht.summands[0].grading4 - hs.summands[0].grading4;

    // pin: the coefficient of z_t's leading generator in f(z_s) has constant term 1
    auto [glead, alead, blead] = leading_term(zt, opts.target_area, opts.area_period);
    SolverConstraint pin;
    pin.rhs = true;
    for (auto& [x, poly] : zs)
        for (auto [al, be] : poly.terms())
            if (alead - al >= 0 && blead - be >= 0)
                pin.bits.push_back({x, glead, alead - al, blead - be});

    auto attempt = [&](bool triangular, uint64_t seed) -> std::optional<ChainMap> {
        std::vector<SolverConstraint> cons{pin};
        if (triangular && opts.source_area && opts.target_area) {
            UnknownTable tab(source, target, degree4);
            for (auto& [x, y, a] : tab.keys) {
                int b = tab.cxy(x, y) - a;
                long fy = static_cast<long>((*opts.target_area)[y]) -
                          static_cast<long>(opts.area_period) * (a + b);
                if (fy > (*opts.source_area)[x]) {
                    SolverConstraint zero;
                    zero.bits.push_back({x, y, a, b});
                    zero.rhs = false;
                    cons.push_back(zero);
                }
            }
        }
        ChainMapSolution sol = solve_chain_map(source, target, degree4, nullptr, cons, seed);
        if (!sol.feasible) return std::nullopt;
        if (cone_is_acyclic(sol.particular)) return sol.particular;
        // bounded kernel perturbation search
        std::vector<int> subset;
        for (size_t i = 0; i < sol.kernel.size() && subset.size() < 16; ++i)
            subset.push_back(static_cast<int>(i));
        for (size_t i = 0; i < sol.kernel.size(); ++i) {
            ChainMap f = sol.particular.plus(sol.kernel[i]);
            if (cone_is_acyclic(f)) return f;
        }
        std::mt19937_64 rng(seed ^ 0xabcdef12345ull);
        for (uint32_t it = 0; it < opts.budget && !subset.empty(); ++it) {
            ChainMap f = with_kernel(sol.particular, sol.kernel, rng(), subset);
            if (cone_is_acyclic(f)) return f;
        }
        return std::nullopt;
    };

    if (auto f = attempt(true, opts.seed)) return *f;
    if (auto f = attempt(false, opts.seed)) return *f;
    throw stabilization_error("find_quasi_iso exhausted its search budget; raise N");
}

Homotopy find_homotopy(const ChainMap& f, const ChainMap& g, uint64_t seed) {
    require(f.source == g.source && f.target == g.target && f.degree4 == g.degree4,
            "find_homotopy: map shape mismatch");
    ChainMap rhs = f.plus(g);
    ChainMapSolution sol =
        solve_chain_map(*f.source, *f.target, f.degree4 + 4, &rhs, {}, seed);
    if (!sol.feasible)
        throw stabilization_error("find_homotopy: maps are not homotopic at this truncation; raise N");
    sol.particular.verify_homotopy_for(rhs);
    return sol.particular;
}

} // namespace hfsurg
