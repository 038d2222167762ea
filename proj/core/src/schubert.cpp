#include "hfsurg/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace hfsurg {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int mod2p(int64_t x, int n) {
    int64_t r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

// inverse of q modulo 2p (q odd, gcd(q, 2p) = 1)
int inverse_mod(int q, int m) {
    int64_t t = 0, new_t = 1, r = m, new_r = mod2p(q, m);
    while (new_r != 0) {
        int64_t quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    require(r == 1, "q not invertible mod 2p");
    return mod2p(t, m);
}

} // namespace

const char* basepoint_name(Basepoint b) {
    switch (b) {
        case Basepoint::w1: return "w1";
        case Basepoint::z1: return "z1";
        case Basepoint::w2: return "w2";
        case Basepoint::z2: return "z2";
    }
    return "?";
}

TwoBridgeLink validate_link(int p, int q) {
    if (p <= 0 || p % 2 != 0)
        throw usage_error("b(p,q): p must be a positive even integer (two-component links)");
    int qr = mod2p(q, 2 * p);
    if (qr >= p) qr -= 2 * p;
    if (qr % 2 == 0)
        throw usage_error("b(p,q): q must be odd");
    if (std::gcd(p, qr < 0 ? -qr : qr) != 1)
        throw usage_error("b(p,q): gcd(p,q) must be 1");
    return TwoBridgeLink{p, qr};
}

CanonicalForm canonical_form(int p, int q) {
    TwoBridgeLink link = validate_link(p, q);
    CanonicalForm c;
    c.canonical = link;
    int qi = inverse_mod(link.q, 2 * p);
    if (qi >= p) qi -= 2 * p;
    c.q_inverse = qi;
    c.mirror = validate_link(p, -link.q);
    c.reoriented = validate_link(p, link.q + p);
    return c;
}

int linking_number(const TwoBridgeLink& link) {
    int64_t s = 0;
    for (int i = 1; i <= link.p / 2; ++i)
        s += (floor_div(static_cast<int64_t>(2 * i - 1) * link.q, link.p) % 2 == 0) ? 1 : -1;
    return static_cast<int>(-s);
}

int signature(const TwoBridgeLink& link) {
    int64_t s = 0;
    for (int i = 1; i <= link.p - 1; ++i)
        s += (floor_div(static_cast<int64_t>(i) * link.q, link.p) % 2 == 0) ? 1 : -1;
    return static_cast<int>(s);
}

int64_t mod_from(int64_t n, int64_t m, int64_t k) {
    require(m > 0, "mod_from: m must be positive");
    int64_t r = ((n - k) % m + m) % m;
    return r + k;
}

int64_t f_p(int p, int64_t n) {
    int64_t r = mod_from(n, 2 * p, -p + 1);
    return r < 0 ? -r : r;
}

int beta_arc_partner(const TwoBridgeLink& link, int i, int disk) {
    require(disk == 1 || disk == 2, "disk must be 1 or 2");
    const int n = 2 * link.p;
    return disk == 1 ? mod2p(2 * link.p - 1 - i, n) : mod2p(2 * link.q - 1 - i, n);
}

RegionSpines region_spines(const TwoBridgeLink& link) {
    RegionSpines out;
    const int p = link.p;
    for (int k = 0; k <= p; ++k) {
        int idx = static_cast<int>(f_p(p, static_cast<int64_t>(k) * link.q));
        char even = (k % 2 == 0) ? 'X' : 'Y';
        char odd = (k % 2 == 0) ? 'Y' : 'X';
        out.d1_beta.emplace_back(even, idx);
        out.d2_beta.emplace_back(odd, idx);
    }
    return out;
}

GeneratorGradings alexander_gradings(const TwoBridgeLink& link) {
    const int p = link.p, n = 2 * p;
    const int qinv = inverse_mod(link.q, n);
    GeneratorGradings g;
    g.alex2.assign(n, {0, 0});
    // The elementary arc between b_{i-1} and b_i is the rung of the beta-tube
    // of component 1 when m = i q^{-1} (reduced into (-p, p]) is even, of
    // component 2 when m is odd; the basepoint-side strip through it runs from
    // b_{i-1} for m <= 0 and from b_i for m >= 1, which fixes the sign of the
    // Alexander step. (The difference formula stated with floor(q^{-1} i / p)
    // carries a phase error for some q; this rule is the geometric one.)
    for (int i = 1; i < n; ++i) {
        g.alex2[i] = g.alex2[i - 1];
        int m = mod2p(static_cast<int64_t>(qinv) * i, n);
        if (m > p) m -= n;
        int comp = (m % 2 == 0) ? 0 : 1;
        g.alex2[i][comp] += (m <= 0) ? 2 : -2;
    }
    // shift so the multiset of (A1, A2) is centrally symmetric about the origin
    for (int c = 0; c < 2; ++c) {
        int lo = g.alex2[0][c], hi = g.alex2[0][c];
        for (auto& a : g.alex2) {
            lo = std::min(lo, a[c]);
            hi = std::max(hi, a[c]);
        }
        require((lo + hi) % 2 == 0, "Alexander symmetrization parity");
        int shift = -(lo + hi) / 2;
        for (auto& a : g.alex2) a[c] += shift;
    }
    // verify symmetry and the affine-lattice condition 2*A_i = lk (mod 2)
    {
        std::vector<std::array<int, 2>> m1(g.alex2), m2;
        for (auto& a : g.alex2) m2.push_back({-a[0], -a[1]});
        std::sort(m1.begin(), m1.end());
        std::sort(m2.begin(), m2.end());
        require(m1 == m2, "Alexander multiset not centrally symmetric");
        int lk = linking_number(link);
        for (auto& a : g.alex2)
            require(((a[0] - lk) % 2 == 0) && ((a[1] - lk) % 2 == 0),
                    "Alexander gradings off the affine lattice");
    }
    g.maslov4.resize(n);
    for (int i = 0; i < n; ++i) g.maslov4[i] = 2 * (g.alex2[i][0] + g.alex2[i][1]);
    return g;
}

namespace {

// interval set with joint disjointness and per-interval containment windows
struct IntervalSet {
    std::set<std::pair<int, int>> ivs;
    void reset() { ivs.clear(); }
    bool insert(int a, int b, int window_lo, int window_hi) {
        if (a < window_lo || b > window_hi) return false;
        auto it = ivs.lower_bound({a, b});
        if (it != ivs.end() && it->first <= b) return false;
        if (it != ivs.begin() && std::prev(it)->second >= a) return false;
        ivs.insert({a, b});
        return true;
    }
};

struct PairKey {
    int a, b;  // unordered, a < b
    PairKey(int i, int j) : a(std::min(i, j)), b(std::max(i, j)) {}
    bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
};
struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
        return static_cast<size_t>(k.a) * 1000003u + static_cast<size_t>(k.b);
    }
};

struct RawItem {
    int parity = 0;
    int m = 0, n = 0;
};

using NetMap = std::unordered_map<PairKey, RawItem, PairKeyHash>;

void toggle(NetMap& net, int i, int j, int m, int n) {
    auto [it, fresh] = net.try_emplace(PairKey(i, j));
    it->second.parity ^= 1;
    if (fresh || it->second.parity) {
        it->second.m = m;
        it->second.n = n;
    }
}

// orient a net pair by the Alexander rule and append (plus its z-partner)
void emit_with_partner(std::vector<Bigon>& out, const GeneratorGradings& g, int p, int comp,
                       const PairKey& key, const RawItem& item) {
    const int c = comp - 1, o = 1 - c;
    require(g.alex2[key.a][o] == g.alex2[key.b][o], "bigon endpoints differ in the wrong component");
    int d = g.alex2[key.b][c] - g.alex2[key.a][c];
    require(d == 2 || d == -2, "bigon endpoints must differ by 1 in A");
    int from = d > 0 ? key.a : key.b;
    int to = d > 0 ? key.b : key.a;  // w-bigon: A_c increases from source to target
    Basepoint w = comp == 1 ? Basepoint::w1 : Basepoint::w2;
    Basepoint z = comp == 1 ? Basepoint::z1 : Basepoint::z2;
    out.push_back(Bigon{from, to, w, item.m, item.n});
    int n2 = 2 * p;
    int zf = (from + p) % n2, zt = (to + p) % n2;
    require(g.alex2[zf][c] - g.alex2[zt][c] == 2, "z-partner orientation");
    out.push_back(Bigon{zf, zt, z, item.m, item.n});
}

void sort_census(std::vector<Bigon>& v) {
    std::sort(v.begin(), v.end(), [](const Bigon& a, const Bigon& b) {
        if (a.basepoint != b.basepoint) return a.basepoint < b.basepoint;
        if (a.from != b.from) return a.from < b.from;
        return a.to < b.to;
    });
}

} // namespace

std::vector<Bigon> enumerate_bigons(const TwoBridgeLink& link) {
    const int p = link.p, q = link.q, n2 = 2 * p;
    GeneratorGradings g = alexander_gradings(link);

    // corner pair of the w1 candidate at (level count c, half-width w)
    auto F1 = [&](int m, int n) -> std::pair<int, int> {
        if (m % 2 == 1)
            return {mod2p(static_cast<int64_t>(1 - m) * q + n - 1, n2),
                    mod2p(static_cast<int64_t>(1 - m) * q - n, n2)};
        return {mod2p(static_cast<int64_t>(m) * q - n, n2),
                mod2p(static_cast<int64_t>(m) * q + n - 1, n2)};
    };

    // Loop structure per Remark 3.16: outer = interval half-width w, inner =
    // level count c; the candidate domain is the w1 cap plus, at spine level
    // k = 1..c-1, the regions within half-width w-1 around f_p(kq); it embeds
    // iff the even-level intervals (the disk containing the cap) are pairwise
    // disjoint in [0, p-1] and the odd-level ones in [1, p-1]. The windows
    // exclude the other three caps, so each domain holds one basepoint.
    NetMap net1, net2;
    {
        IntervalSet evens, odds;
        for (int w = 1; w <= p; ++w) {
            evens.reset();
            odds.reset();
            bool seeded = false;
            for (int c = 1; c <= p; ++c) {
                if (c > 1) {
                    if (!seeded) {
                        if (!evens.insert(0, w - 1, 0, p - 1)) break;
                        seeded = true;
                    }
                    int e = c - 1;
                    int center = static_cast<int>(f_p(p, static_cast<int64_t>(e) * q));
                    bool ok = (e % 2 == 0) ? evens.insert(center - w + 1, center + w - 1, 0, p - 1)
                                           : odds.insert(center - w + 1, center + w - 1, 1, p - 1);
                    if (!ok) break;
                }
                auto [i, j] = F1(c, w);
                toggle(net1, i, j, c, w);
            }
        }
    }
    // the w2 family is the image of the w1 family under the diagram
    // automorphism b_i -> b_{q-1-i}, which swaps the two components
    for (auto& [key, item] : net1) {
        if (!item.parity) continue;
        int i = mod2p(q - 1 - key.a, n2), j = mod2p(q - 1 - key.b, n2);
        toggle(net2, i, j, item.m, item.n);
    }

    std::vector<Bigon> out;
    for (auto& [key, item] : net1)
        if (item.parity) emit_with_partner(out, g, p, 1, key, item);
    for (auto& [key, item] : net2)
        if (item.parity) emit_with_partner(out, g, p, 2, key, item);
    sort_census(out);
    return out;
}

namespace {

// planar subdivision of the Schubert diagram: 2p vertices, 4p edges, 2p+2 faces
struct DiagramGeometry {
    int p, q, n;                              // n = 2p vertices
    // edge ids: [0, n) alpha arcs a_t = (t, t+1); [n, n+p) D1 chords; [n+p, n+2p) D2 chords
    std::vector<std::array<int, 2>> edge_ends;
    std::vector<int> d1_chord_of, d2_chord_of;  // vertex -> chord edge id
    std::vector<std::array<int, 4>> rot;        // rotation at each vertex
    std::vector<int> face_of_sector;            // 4 sectors per vertex
    std::vector<std::array<int, 2>> edge_faces; // the two faces along each edge
    int n_faces = 0;
    std::array<int, 4> cap_face{};              // faces containing w1, z1, w2, z2
    std::vector<int> beta_pos;                  // vertex -> position along the beta circle
    std::vector<int> beta_seq;                  // position -> vertex
    std::vector<int> beta_edge;                 // position -> chord edge between seq[i], seq[i+1]

    explicit DiagramGeometry(const TwoBridgeLink& link) : p(link.p), q(link.q), n(2 * link.p) {
        build_edges();
        build_rotation();
        trace_faces();
        find_caps();
        build_beta_cycle();
    }

    void build_edges() {
        edge_ends.resize(static_cast<size_t>(2 * n));
        d1_chord_of.assign(n, -1);
        d2_chord_of.assign(n, -1);
        for (int t = 0; t < n; ++t) edge_ends[t] = {t, (t + 1) % n};
        int id = n;
        for (int i = 0; i < n; ++i) {
            int j = mod2p(n - 1 - i, n);
            if (i < j) {
                edge_ends[id] = {i, j};
                d1_chord_of[i] = d1_chord_of[j] = id;
                ++id;
            }
        }
        require(id == n + p, "D1 chord count");
        for (int i = 0; i < n; ++i) {
            int j = mod2p(2 * q - 1 - i, n);
            require(i != j, "degenerate D2 chord");
            if (i < j) {
                edge_ends[id] = {i, j};
                d2_chord_of[i] = d2_chord_of[j] = id;
                ++id;
            }
        }
        require(id == 2 * n, "D2 chord count");
    }

    void build_rotation() {
        rot.resize(n);
        for (int v = 0; v < n; ++v)
            rot[v] = {mod2p(v - 1, n), d1_chord_of[v], v, d2_chord_of[v]};
    }

    int rot_index(int v, int e) const {
        for (int k = 0; k < 4; ++k)
            if (rot[v][k] == e) return k;
        throw invariant_error("edge not at vertex");
    }

    int other_end(int e, int v) const { return edge_ends[e][0] == v ? edge_ends[e][1] : edge_ends[e][0]; }

    void trace_faces() {
        face_of_sector.assign(static_cast<size_t>(4 * n), -1);
        edge_faces.assign(static_cast<size_t>(2 * n), {-1, -1});
        // darts: 2 per edge; dart (e, which endpoint is the source)
        std::vector<std::array<int, 2>> dart_face(static_cast<size_t>(2 * n), {-1, -1});
        int fid = 0;
        for (int e0 = 0; e0 < 2 * n; ++e0) {
            for (int s0 = 0; s0 < 2; ++s0) {
                if (dart_face[e0][s0] >= 0) continue;
                int e = e0, s = s0;
                do {
                    dart_face[e][s] = fid;
                    if (edge_faces[e][0] < 0)
                        edge_faces[e][0] = fid;
                    else if (edge_faces[e][0] != fid || edge_faces[e][1] >= 0)
                        edge_faces[e][1] = fid;
                    int v = edge_ends[e][1 - s];  // head of the dart
                    int k = rot_index(v, e);
                    int k_out = (k + 3) % 4;  // predecessor in rotation
                    face_of_sector[4 * v + k_out] = fid;
                    int e_next = rot[v][k_out];
                    int s_next = edge_ends[e_next][0] == v ? 0 : 1;
                    e = e_next;
                    s = s_next;
                } while (!(e == e0 && s == s0));
                ++fid;
            }
        }
        n_faces = fid;
        require(n_faces == n + 2, "Euler count of regions");
        for (int e = 0; e < 2 * n; ++e)
            require(edge_faces[e][0] >= 0 && edge_faces[e][1] >= 0 && edge_faces[e][0] != edge_faces[e][1],
                    "edge must bound two distinct regions");
        for (int s = 0; s < 4 * n; ++s) require(face_of_sector[s] >= 0, "sector without region");
    }

    // cap faces are the four bigon regions X0 (w1), Xp (z1), Y0 (w2), Yp (z2)
    void find_caps() {
        auto cap_at = [&](int v, int alpha_arc, int chord) {
            int fa = -1;
            for (int k = 0; k < 4; ++k) {
                int e1 = rot[v][k], e2 = rot[v][(k + 1) % 4];
                if ((e1 == alpha_arc && e2 == chord) || (e1 == chord && e2 == alpha_arc))
                    fa = face_of_sector[4 * v + k];
            }
            require(fa >= 0, "cap region not found");
            return fa;
        };
        cap_face[0] = cap_at(0, mod2p(-1, n), d1_chord_of[0]);                       // w1 in X0
        cap_face[1] = cap_at(p, p - 1, d1_chord_of[p]);                              // z1 in Xp
        cap_face[2] = cap_at(mod2p(q, n), mod2p(q - 1, n), d2_chord_of[mod2p(q, n)]);  // w2 in Y0
        cap_face[3] = cap_at(mod2p(p + q, n), mod2p(p + q - 1, n),
                             d2_chord_of[mod2p(p + q, n)]);                          // z2 in Yp
        std::set<int> uniq(cap_face.begin(), cap_face.end());
        require(uniq.size() == 4, "cap regions must be distinct");
    }

    void build_beta_cycle() {
        beta_pos.assign(n, -1);
        beta_seq.clear();
        beta_edge.clear();
        int v = 0;
        bool use_d2 = true;  // alternate chord types along beta
        for (int i = 0; i < n; ++i) {
            beta_pos[v] = i;
            beta_seq.push_back(v);
            int e = use_d2 ? d2_chord_of[v] : d1_chord_of[v];
            beta_edge.push_back(e);
            v = other_end(e, v);
            use_d2 = !use_d2;
        }
        require(v == 0, "beta walk must close up");
        for (int u = 0; u < n; ++u) require(beta_pos[u] >= 0, "beta walk must visit all points");
    }
};

} // namespace

std::vector<Bigon> enumerate_bigons_bruteforce(const TwoBridgeLink& link) {
    const int n = 2 * link.p;
    DiagramGeometry geo(link);
    GeneratorGradings g = alexander_gradings(link);

    // face adjacency for flood fill
    std::vector<std::vector<std::pair<int, int>>> adj(geo.n_faces);  // (face, via edge)
    for (int e = 0; e < 2 * n; ++e) {
        adj[geo.edge_faces[e][0]].emplace_back(geo.edge_faces[e][1], e);
        adj[geo.edge_faces[e][1]].emplace_back(geo.edge_faces[e][0], e);
    }

    NetMap nets[4];  // one per basepoint
    std::vector<char> blocked(static_cast<size_t>(2 * n), 0);
    std::vector<int> side(geo.n_faces);
    std::vector<int> stack;

    auto alpha_path = [&](int u, int v, bool forward, std::vector<int>& arcs, std::vector<char>& interior) {
        arcs.clear();
        std::fill(interior.begin(), interior.end(), 0);
        int t = u;
        while (t != v) {
            arcs.push_back(forward ? t : mod2p(t - 1, n));
            t = mod2p(t + (forward ? 1 : -1), n);
            if (t != v) interior[t] = 1;
        }
    };
    auto beta_path = [&](int u, int v, bool forward, std::vector<int>& arcs, std::vector<char>& interior) {
        arcs.clear();
        std::fill(interior.begin(), interior.end(), 0);
        int i = geo.beta_pos[u];
        const int iv = geo.beta_pos[v];
        while (i != iv) {
            arcs.push_back(forward ? geo.beta_edge[i] : geo.beta_edge[mod2p(i - 1, n)]);
            i = mod2p(i + (forward ? 1 : -1), n);
            if (i != iv) interior[geo.beta_seq[i]] = 1;
        }
    };

    std::vector<int> arcs_a, arcs_b;
    std::vector<char> int_a(static_cast<size_t>(n), 0), int_b(static_cast<size_t>(n), 0);

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            for (int da = 0; da < 2; ++da) {
                alpha_path(u, v, da == 0, arcs_a, int_a);
                for (int db = 0; db < 2; ++db) {
                    beta_path(u, v, db == 0, arcs_b, int_b);
                    bool clash = false;
                    for (int t = 0; t < n && !clash; ++t)
                        if (int_a[t] && int_b[t]) clash = true;
                    if (clash) continue;

                    for (int e : arcs_a) blocked[e] = 1;
                    for (int e : arcs_b) blocked[e] = 1;
                    // gamma is a simple closed curve, so exactly two sides
                    std::fill(side.begin(), side.end(), -1);
                    int n_sides = 0;
                    for (int f0 = 0; f0 < geo.n_faces; ++f0) {
                        if (side[f0] >= 0) continue;
                        side[f0] = n_sides;
                        stack.assign(1, f0);
                        while (!stack.empty()) {
                            int f = stack.back();
                            stack.pop_back();
                            for (auto [f2, e] : adj[f])
                                if (!blocked[e] && side[f2] < 0) {
                                    side[f2] = n_sides;
                                    stack.push_back(f2);
                                }
                        }
                        ++n_sides;
                    }
                    require(n_sides == 2, "simple curve must have two sides");

                    for (int s = 0; s < 2; ++s) {
                        int cu = 0, cv = 0;
                        for (int k = 0; k < 4; ++k) {
                            cu += side[geo.face_of_sector[4 * u + k]] == s;
                            cv += side[geo.face_of_sector[4 * v + k]] == s;
                        }
                        if (cu != 1 || cv != 1) continue;
                        int caps = 0, cap_idx = -1;
                        for (int c = 0; c < 4; ++c)
                            if (side[geo.cap_face[c]] == s) {
                                ++caps;
                                cap_idx = c;
                            }
                        require(caps == 1, "embedded bigon must contain exactly one basepoint");
                        toggle(nets[cap_idx], u, v, static_cast<int>(arcs_a.size()),
                               static_cast<int>(arcs_b.size()));
                    }
                    for (int e : arcs_a) blocked[e] = 0;
                    for (int e : arcs_b) blocked[e] = 0;
                }
            }
        }
    }

    // cap order in DiagramGeometry: w1, z1, w2, z2
    const Basepoint pts[4] = {Basepoint::w1, Basepoint::z1, Basepoint::w2, Basepoint::z2};
    std::vector<Bigon> out;
    for (int c4 = 0; c4 < 4; ++c4) {
        const Basepoint pt = pts[c4];
        const int c = basepoint_component(pt) - 1, o = 1 - c;
        for (auto& [key, item] : nets[c4]) {
            if (!item.parity) continue;
            require(g.alex2[key.a][o] == g.alex2[key.b][o], "bigon endpoints differ in wrong component");
            int d = g.alex2[key.b][c] - g.alex2[key.a][c];
            require(d == 2 || d == -2, "bigon endpoints must differ by 1 in A");
            // w-bigon: A_c rises from source to target; z-bigon: A_c falls
            bool a_is_from = basepoint_is_w(pt) ? (d > 0) : (d < 0);
            Bigon bg;
            bg.from = a_is_from ? key.a : key.b;
            bg.to = a_is_from ? key.b : key.a;
            bg.basepoint = pt;
            bg.n_alpha = item.m;
            bg.n_beta = item.n;
            out.push_back(bg);
        }
    }
    sort_census(out);
    return out;
}

namespace {

// area filtration from the strip areas of the consecutive-generator bigons
std::vector<int> area_filtration(const TwoBridgeLink& link, const GeneratorGradings& g) {
    const int p = link.p, n = 2 * p;
    const int qinv = inverse_mod(link.q, n);
    std::vector<int> F(n, 0);
    std::vector<char> done(n, 0);
    done[0] = 1;
    auto arc_data = [&](int t, int& comp, int& rung) {
        int m = mod2p(static_cast<int64_t>(t + 1) * qinv, n);
        if (m > p) m -= n;  // reduce to (-p, p]
        comp = (((m % 2) + 2) % 2 == 0) ? 1 : 2;
        rung = m >= 1 ? m : 1 - m;
    };
    for (int t = 0; t + 1 < n; ++t) {
        int comp, rung;
        arc_data(t, comp, rung);
        const int c = comp - 1;
        int x = t, y = t + 1;  // w-strip runs from smaller A_c to larger
        if (g.alex2[x][c] > g.alex2[y][c]) std::swap(x, y);
        // F(x) - F(y) = rung - (p+1)
        if (done[x] == 1 && !done[y]) {
            F[y] = F[x] - (rung - (p + 1));
            done[y] = 1;
        } else if (done[y] == 1 && !done[x]) {
            F[x] = F[y] + (rung - (p + 1));
            done[x] = 1;
        }
    }
    // consistency over the closing arc
    int comp, rung;
    arc_data(n - 1, comp, rung);
    int x = n - 1, y = 0;
    if (g.alex2[x][comp - 1] > g.alex2[y][comp - 1]) std::swap(x, y);
    require(F[x] - F[y] == rung - (p + 1), "area filtration fails to close up");
    return F;
}

} // namespace

AlexanderPolynomial alexander_polynomial(const TwoBridgeLink& link) {
    GeneratorGradings g = alexander_gradings(link);
    // numerator: sum over generators of (-1)^(A1+A2) x^A1 y^A2, doubled exponents
    std::map<std::pair<int, int>, int64_t> num;
    for (auto& a : g.alex2) {
        int s = ((a[0] + a[1]) / 2) % 2 == 0 ? 1 : -1;
        num[{a[0], a[1]}] += s;
    }
    std::erase_if(num, [](auto& kv) { return kv.second == 0; });

    // divide exactly by (X - X^{-1}) in each variable, X = x^{1/2}:
    // multiply by X, then long-divide by X^2 - 1 fiberwise over the other axis
    auto divide = [](std::map<std::pair<int, int>, int64_t>& f, int axis) {
        std::map<int, std::map<int, int64_t>> fibers;  // other-exponent -> (axis exponent -> coeff)
        for (auto& [e, c] : f) {
            int ea = axis == 0 ? e.first : e.second;
            int eo = axis == 0 ? e.second : e.first;
            fibers[eo][ea + 1] += c;  // the multiply-by-X shift
        }
        std::map<std::pair<int, int>, int64_t> quot;
        for (auto& [eo, fib] : fibers) {
            std::erase_if(fib, [](auto& kv) { return kv.second == 0; });
            if (fib.empty()) continue;
            const int floor_exp = fib.begin()->first;
            while (!fib.empty()) {
                auto top = std::prev(fib.end());
                int e = top->first;
                int64_t c = top->second;
                fib.erase(top);
                if (e - 2 < floor_exp) throw invariant_error("inexact Alexander division: grading bug");
                auto key = axis == 0 ? std::pair{e - 2, eo} : std::pair{eo, e - 2};
                quot[key] += c;
                fib[e - 2] += c;
                if (fib[e - 2] == 0) fib.erase(e - 2);
            }
        }
        std::erase_if(quot, [](auto& kv) { return kv.second == 0; });
        f = std::move(quot);
    };
    divide(num, 0);
    divide(num, 1);

    AlexanderPolynomial out;
    out.coeffs = std::move(num);
    // normalize the global sign: lexicographically largest exponent positive
    if (!out.coeffs.empty() && std::prev(out.coeffs.end())->second < 0)
        for (auto& [e, c] : out.coeffs) c = -c;
    return out;
}

SchubertDiagram build_diagram(const TwoBridgeLink& link) {
    SchubertDiagram d;
    d.link = link;
    d.lk = linking_number(link);
    d.gradings = alexander_gradings(link);
    d.bigons = enumerate_bigons(link);
    d.a_max2 = {0, 0};
    for (auto& a : d.gradings.alex2) {
        d.a_max2[0] = std::max(d.a_max2[0], a[0] < 0 ? -a[0] : a[0]);
        d.a_max2[1] = std::max(d.a_max2[1], a[1] < 0 ? -a[1] : a[1]);
    }
    d.area = area_filtration(link, d.gradings);
    return d;
}

} // namespace hfsurg
