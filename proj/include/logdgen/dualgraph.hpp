#pragma once

#include "core.hpp"
#include "duval.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace logdgen {

enum class Role { EXCEPTIONAL, STRICT, FIBRE };

inline const char* to_string(Role r) {
    switch (r) {
        case Role::EXCEPTIONAL: return "exceptional";
        case Role::STRICT: return "strict";
        case Role::FIBRE: return "fibre";
    }
    return "?";
}

inline Role parse_role(const std::string& s) {
    if (s == "exceptional" || s == "EXCEPTIONAL") return Role::EXCEPTIONAL;
    if (s == "strict" || s == "STRICT") return Role::STRICT;
    if (s == "fibre" || s == "FIBRE" || s == "fiber") return Role::FIBRE;
    throw std::invalid_argument("unknown role '" + s + "'");
}

struct CurveVertex {
    std::string id;
    long self_int = 0;
    long genus = 0;
    long mult = 1;
    Rational boundary = 0;
    Role role = Role::EXCEPTIONAL;
    long cusps = 0;  // unibranch singular points (type II fibres)
};

struct Edge {
    std::string a;
    std::string b;
    long w = 1;  // local intersection number at one point
};

// Curves with one edge per intersection point. Nodes are counted per vertex
// in `tangency`; points shared by three or more curves are listed in
// `concurrent` on top of their pairwise edges.
struct DualGraph {
    std::vector<CurveVertex> vertices;
    std::vector<Edge> edges;
    std::map<std::string, long> tangency;
    std::vector<std::vector<std::string>> concurrent;

    DualGraph& add(CurveVertex v) {
        vertices.push_back(std::move(v));
        return *this;
    }
    DualGraph& add(const std::string& id, long self_int, Role role = Role::EXCEPTIONAL,
                   Rational boundary = 0, long mult = 1) {
        CurveVertex v;
        v.id = id;
        v.self_int = self_int;
        v.role = role;
        v.boundary = std::move(boundary);
        v.mult = mult;
        return add(std::move(v));
    }
    DualGraph& link(const std::string& a, const std::string& b, long w = 1) {
        edges.push_back({a, b, w});
        return *this;
    }

    std::optional<std::size_t> find(const std::string& id) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].id == id) return i;
        return std::nullopt;
    }
    std::size_t index_of(const std::string& id) const {
        auto i = find(id);
        if (!i) throw DomainError("unknown vertex id '" + id + "'");
        return *i;
    }
    const CurveVertex& vertex(const std::string& id) const { return vertices[index_of(id)]; }
    CurveVertex& vertex(const std::string& id) { return vertices[index_of(id)]; }

    long nodes(const std::string& id) const {
        auto it = tangency.find(id);
        return it == tangency.end() ? 0 : it->second;
    }

    // Total intersection number of two distinct curves.
    long weight(const std::string& a, const std::string& b) const {
        long w = 0;
        for (auto& e : edges)
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) w += e.w;
        return w;
    }

    std::vector<std::string> ids(std::optional<Role> role = std::nullopt) const {
        std::vector<std::string> out;
        for (auto& v : vertices)
            if (!role || v.role == *role) out.push_back(v.id);
        return out;
    }

    // Arithmetic genus contribution used in adjunction.
    long arithmetic_genus(const std::string& id) const {
        auto& v = vertex(id);
        return v.genus + nodes(id) + v.cusps;
    }

    void validate() const {
        std::set<std::string> seen;
        for (auto& v : vertices) {
            if (v.id.empty()) throw DomainError("vertex with empty id");
            if (!seen.insert(v.id).second) throw DomainError("duplicate vertex id '" + v.id + "'");
            if (v.genus < 0) throw DomainError("negative genus on '" + v.id + "'");
            if (v.mult < 1) throw DomainError("multiplicity must be positive on '" + v.id + "'");
            if (v.cusps < 0) throw DomainError("negative cusp count on '" + v.id + "'");
            if (v.boundary < 0 || v.boundary > 1)
                throw DomainError("boundary coefficient outside [0,1] on '" + v.id + "'");
        }
        for (auto& e : edges) {
            index_of(e.a);
            index_of(e.b);
            if (e.a == e.b) throw DomainError("self-edge on '" + e.a + "'; use tangency");
            if (e.w < 1) throw DomainError("edge weight must be >= 1");
        }
        for (auto& [id, c] : tangency) {
            index_of(id);
            if (c < 0) throw DomainError("negative tangency count");
        }
        for (auto& grp : concurrent) {
            if (grp.size() < 3) throw DomainError("concurrent group needs >= 3 curves");
            for (std::size_t i = 0; i < grp.size(); ++i)
                for (std::size_t j = i + 1; j < grp.size(); ++j)
                    if (weight(grp[i], grp[j]) < 1)
                        throw DomainError("concurrent curves must carry pairwise edges");
        }
    }

    // Subgraph induced on the given ids.
    DualGraph induced(const std::vector<std::string>& keep) const {
        std::set<std::string> k(keep.begin(), keep.end());
        DualGraph g;
        for (auto& v : vertices)
            if (k.count(v.id)) g.vertices.push_back(v);
        for (auto& e : edges)
            if (k.count(e.a) && k.count(e.b)) g.edges.push_back(e);
        for (auto& [id, c] : tangency)
            if (k.count(id)) g.tangency[id] = c;
        for (auto& grp : concurrent) {
            std::vector<std::string> kept;
            for (auto& id : grp)
                if (k.count(id)) kept.push_back(id);
            if (kept.size() >= 3) g.concurrent.push_back(kept);
        }
        return g;
    }
};

inline IntMatrix intersection_matrix(const DualGraph& g, const std::vector<std::string>& subset) {
    for (auto& id : subset) g.index_of(id);
    IntMatrix m(subset.size(), std::vector<long>(subset.size(), 0));
    for (std::size_t i = 0; i < subset.size(); ++i) {
        m[i][i] = g.vertex(subset[i]).self_int;
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            m[i][j] = m[j][i] = g.weight(subset[i], subset[j]);
    }
    return m;
}

inline IntMatrix intersection_matrix(const DualGraph& g) { return intersection_matrix(g, g.ids()); }

using Coefficients = std::map<std::string, Rational>;

// Coefficients a_i with K + sum c C + sum a_i E_i numerically trivial on
// every exceptional E_j.
inline Coefficients pullback_coefficients(const DualGraph& g) {
    g.validate();
    auto exc = g.ids(Role::EXCEPTIONAL);
    Coefficients out;
    if (exc.empty()) return out;
    IntMatrix m = intersection_matrix(g, exc);
    if (!is_negative_definite(m))
        throw DomainError("exceptional configuration is not negative definite");
    std::vector<Rational> rhs;
    for (auto& e : exc) {
        const auto& v = g.vertex(e);
        Rational k_dot_e = Rational(2 * g.arithmetic_genus(e) - 2 - v.self_int);
        for (auto& c : g.vertices)
            if (c.role != Role::EXCEPTIONAL && c.boundary != 0) k_dot_e += c.boundary * g.weight(c.id, e);
        rhs.push_back(-k_dot_e);
    }
    std::vector<Rational> a;
    try {
        a = solve(m, rhs);
    } catch (const std::domain_error&) {
        throw DomainError("singular intersection matrix");
    }
    for (std::size_t i = 0; i < exc.size(); ++i) out[exc[i]] = a[i];
    return out;
}

enum class PairClass { TERMINAL, CANONICAL, PLT, LT, LC, NOT_LC };

inline const char* to_string(PairClass c) {
    switch (c) {
        case PairClass::TERMINAL: return "TERMINAL";
        case PairClass::CANONICAL: return "CANONICAL";
        case PairClass::PLT: return "PLT";
        case PairClass::LT: return "LT";
        case PairClass::LC: return "LC";
        case PairClass::NOT_LC: return "NOT_LC";
    }
    return "?";
}

// Every class below LC is log terminal in the weak sense.
inline bool is_log_terminal(PairClass c) { return c != PairClass::LC && c != PairClass::NOT_LC; }

// Thresholds on the supplied resolution only.
inline PairClass classify_pair(const DualGraph& g) {
    Coefficients a = pullback_coefficients(g);
    std::vector<std::string> reduced;
    for (auto& v : g.vertices)
        if (v.role != Role::EXCEPTIONAL && v.boundary == 1) reduced.push_back(v.id);

    bool all_lt1 = true, all_le0 = true, all_lt0 = true;
    Rational mx = -1;
    for (auto& [id, x] : a) {
        if (x >= 1) all_lt1 = false;
        if (x > 0) all_le0 = false;
        if (x >= 0) all_lt0 = false;
        if (x > mx) mx = x;
    }
    if (all_lt1) {
        if (reduced.empty()) {
            if (all_lt0) return PairClass::TERMINAL;
            if (all_le0) return PairClass::CANONICAL;
            return PairClass::LT;
        }
        bool disjoint = true;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (g.nodes(reduced[i]) > 0) disjoint = false;
            for (std::size_t j = i + 1; j < reduced.size(); ++j)
                if (g.weight(reduced[i], reduced[j]) > 0) disjoint = false;
        }
        return disjoint ? PairClass::PLT : PairClass::LT;
    }
    return mx == 1 ? PairClass::LC : PairClass::NOT_LC;
}

inline void drop_vertex(DualGraph& g, const std::string& v) {
    g.vertices.erase(g.vertices.begin() + static_cast<long>(g.index_of(v)));
    std::erase_if(g.edges, [&](const Edge& e) { return e.a == v || e.b == v; });
    g.tangency.erase(v);
    for (auto& grp : g.concurrent) std::erase(grp, v);
    std::erase_if(g.concurrent, [](const auto& grp) { return grp.size() < 3; });
}

// Contracts a (-1)-curve meeting each neighbour once transversally.
inline DualGraph blow_down(const DualGraph& g, const std::string& v) {
    g.validate();
    const auto& cv = g.vertex(v);
    if (cv.role != Role::EXCEPTIONAL || cv.genus != 0 || cv.self_int != -1 || g.nodes(v) != 0 || cv.cusps != 0)
        throw DomainError("blow_down: '" + v + "' is not an exceptional (-1)-curve");
    std::vector<std::string> nbrs;
    for (auto& e : g.edges) {
        if (e.a != v && e.b != v) continue;
        if (e.w != 1) throw DomainError("blow_down: tangential contact at '" + v + "' unsupported");
        nbrs.push_back(e.a == v ? e.b : e.a);
    }
    std::set<std::string> uniq(nbrs.begin(), nbrs.end());
    if (uniq.size() != nbrs.size()) throw DomainError("blow_down: repeated contact at '" + v + "' unsupported");

    DualGraph out = g;
    drop_vertex(out, v);
    for (auto& n : nbrs) out.vertex(n).self_int += 1;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            bool merged = false;
            for (auto& e : out.edges)
                if ((e.a == nbrs[i] && e.b == nbrs[j]) || (e.a == nbrs[j] && e.b == nbrs[i])) {
                    e.w += 1;
                    merged = true;
                    break;
                }
            if (!merged) out.link(nbrs[i], nbrs[j], 1);
        }
    return out;
}

// Repeatedly contracts exceptional smooth rational (-1)-curves, allowing
// higher contact: C^2 grows by w_C^2, C.D by w_C w_D, and the arithmetic
// genus of C by w_C(w_C-1)/2. The result is the minimal resolution of the
// exceptional part.
inline DualGraph contract_minus_one_curves(DualGraph g) {
    g.validate();
    for (;;) {
        std::optional<std::string> pick;
        for (auto& v : g.vertices)
            if (v.role == Role::EXCEPTIONAL && v.self_int == -1 && g.arithmetic_genus(v.id) == 0) {
                pick = v.id;
                break;
            }
        if (!pick) return g;
        std::map<std::string, long> w;
        for (auto& e : g.edges) {
            if (e.a == *pick) w[e.b] += e.w;
            if (e.b == *pick) w[e.a] += e.w;
        }
        drop_vertex(g, *pick);
        for (auto& [c, wc] : w) {
            g.vertex(c).self_int += wc * wc;
            if (wc > 1) g.tangency[c] += wc * (wc - 1) / 2;
        }
        for (auto i = w.begin(); i != w.end(); ++i)
            for (auto j = std::next(i); j != w.end(); ++j) g.link(i->first, j->first, i->second * j->second);
    }
}

// ---------------------------------------------------------------------------
// Isomorphism of small labelled graphs.

namespace detail {

using VertexKey = std::function<std::string(const DualGraph&, const CurveVertex&)>;

inline bool isomorphic(const DualGraph& x, const DualGraph& y, const VertexKey& key) {
    std::size_t n = x.vertices.size();
    if (n != y.vertices.size() || x.edges.size() != y.edges.size() || x.concurrent.size() != y.concurrent.size())
        return false;
    auto adjacency = [](const DualGraph& g) {
        std::map<std::pair<std::size_t, std::size_t>, std::vector<long>> adj;
        for (auto& e : g.edges) {
            auto i = g.index_of(e.a), j = g.index_of(e.b);
            if (i > j) std::swap(i, j);
            adj[{i, j}].push_back(e.w);
        }
        for (auto& [k, v] : adj) std::sort(v.begin(), v.end());
        return adj;
    };
    auto ax = adjacency(x), ay = adjacency(y);
    auto signature = [&](const DualGraph& g, const auto& adj, std::size_t i) {
        std::vector<long> ws;
        for (auto& [k, v] : adj)
            if (k.first == i || k.second == i) ws.insert(ws.end(), v.begin(), v.end());
        std::sort(ws.begin(), ws.end());
        std::string s = key(g, g.vertices[i]) + "|";
        for (long w : ws) s += std::to_string(w) + ",";
        return s;
    };
    std::vector<std::string> sx(n), sy(n);
    for (std::size_t i = 0; i < n; ++i) {
        sx[i] = signature(x, ax, i);
        sy[i] = signature(y, ay, i);
    }
    {
        auto a = sx, b = sy;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    auto pair_w = [](const auto& adj, std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        auto it = adj.find({i, j});
        return it == adj.end() ? std::vector<long>{} : it->second;
    };
    auto groups = [](const DualGraph& g, const std::vector<std::size_t>* map) {
        std::set<std::set<std::size_t>> out;
        for (auto& grp : g.concurrent) {
            std::set<std::size_t> s;
            for (auto& id : grp) s.insert(map ? (*map)[g.index_of(id)] : g.index_of(id));
            out.insert(s);
        }
        return out;
    };
    auto gy = groups(y, nullptr);

    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == n) return groups(x, &map) == gy;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || sx[i] != sy[j]) continue;
            bool ok = true;
            for (std::size_t p = 0; p < i && ok; ++p)
                ok = pair_w(ax, p, i) == pair_w(ay, map[p], j);
            if (!ok) continue;
            map[i] = j;
            used[j] = true;
            if (rec(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return rec(0);
}

inline std::string shape_key(const DualGraph& g, const CurveVertex& v) {
    return std::to_string(v.self_int) + ":" + std::to_string(v.genus) + ":" + std::to_string(g.nodes(v.id)) + ":" +
           std::to_string(v.cusps);
}

inline std::string chain_id(const std::string& p, long i) { return p + std::to_string(i); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Du Val graphs.

inline DualGraph duval_graph(const DuValType& t) {
    t.validate();
    DualGraph g;
    int n = t.index;
    for (int i = 1; i <= n; ++i) g.add(detail::chain_id("E", i), -2);
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) g.link(detail::chain_id("E", i), detail::chain_id("E", i + 1));
            break;
        case Family::D:
            // E1, E2 are the short arms on E3; E3..En is a chain.
            g.link("E1", "E3").link("E2", "E3");
            for (int i = 3; i < n; ++i) g.link(detail::chain_id("E", i), detail::chain_id("E", i + 1));
            break;
        case Family::E:
            // E1 is the short arm on E4; E2..En is a chain.
            g.link("E1", "E4");
            for (int i = 2; i < n; ++i) g.link(detail::chain_id("E", i), detail::chain_id("E", i + 1));
            break;
    }
    return g;
}

// Matches the exceptional part against A/D/E trees of (-2)-curves.
inline std::optional<DuValType> recognize_duval(const DualGraph& g) {
    g.validate();
    DualGraph sub = g.induced(g.ids(Role::EXCEPTIONAL));
    int n = static_cast<int>(sub.vertices.size());
    if (n == 0) return std::nullopt;
    std::vector<DuValType> cands{DuValType::A(n)};
    if (n >= 4) cands.push_back(DuValType::D(n));
    if (n >= 6 && n <= 8) cands.push_back(DuValType::E(n));
    for (auto& t : cands)
        if (detail::isomorphic(sub, duval_graph(t), detail::shape_key)) return t;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Kodaira fibres.

struct KodairaLabel {
    enum Kind { SMOOTH, I, I_STAR, II, III, IV, II_STAR, III_STAR, IV_STAR } kind = SMOOTH;
    long b = 0;

    static KodairaLabel In(long b) {
        if (b < 1) throw DomainError("I_b needs b >= 1");
        return {I, b};
    }
    static KodairaLabel Istar(long b) {
        if (b < 0) throw DomainError("I*_b needs b >= 0");
        return {I_STAR, b};
    }

    std::string str() const {
        switch (kind) {
            case SMOOTH: return "SMOOTH";
            case I: return "I_" + std::to_string(b);
            case I_STAR: return "I*_" + std::to_string(b);
            case II: return "II";
            case III: return "III";
            case IV: return "IV";
            case II_STAR: return "II*";
            case III_STAR: return "III*";
            case IV_STAR: return "IV*";
        }
        return "?";
    }

    static KodairaLabel parse(const std::string& s) {
        if (s == "SMOOTH" || s == "I_0" || s == "I0") return {SMOOTH, 0};
        if (s == "II") return {II, 0};
        if (s == "III") return {III, 0};
        if (s == "IV") return {IV, 0};
        if (s == "II*") return {II_STAR, 0};
        if (s == "III*") return {III_STAR, 0};
        if (s == "IV*") return {IV_STAR, 0};
        auto num = [&](std::size_t from) {
            std::string t = s.substr(from);
            if (!t.empty() && t[0] == '_') t = t.substr(1);
            if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad Kodaira label '" + s + "'");
            return std::stol(t);
        };
        if (s.rfind("I*", 0) == 0) return Istar(num(2));
        if (s.rfind("I", 0) == 0) return In(num(1));
        throw std::invalid_argument("bad Kodaira label '" + s + "'");
    }

    friend bool operator==(const KodairaLabel&, const KodairaLabel&) = default;
};

// Standard configuration of a Kodaira fibre with component multiplicities.
inline DualGraph kodaira_graph(const KodairaLabel& k) {
    DualGraph g;
    using detail::chain_id;
    auto node = [&](const std::string& id, long self, long mult) { g.add(id, self, Role::FIBRE, 0, mult); };
    auto arm = [&](const std::string& from, const std::string& prefix, std::vector<long> mults) {
        std::string prev = from;
        for (std::size_t i = 0; i < mults.size(); ++i) {
            std::string id = chain_id(prefix, static_cast<long>(i + 1));
            node(id, -2, mults[i]);
            g.link(prev, id);
            prev = id;
        }
    };
    switch (k.kind) {
        case KodairaLabel::SMOOTH:
            node("C", 0, 1);
            g.vertex("C").genus = 1;
            break;
        case KodairaLabel::I:
            if (k.b == 1) {
                node("C", 0, 1);
                g.tangency["C"] = 1;
            } else {
                for (long i = 1; i <= k.b; ++i) node(chain_id("C", i), -2, 1);
                for (long i = 1; i <= k.b; ++i) g.link(chain_id("C", i), chain_id("C", i % k.b + 1));
            }
            break;
        case KodairaLabel::II:
            node("C", 0, 1);
            g.vertex("C").cusps = 1;
            break;
        case KodairaLabel::III:
            node("C1", -2, 1);
            node("C2", -2, 1);
            g.link("C1", "C2", 2);
            break;
        case KodairaLabel::IV:
            node("C1", -2, 1);
            node("C2", -2, 1);
            node("C3", -2, 1);
            g.link("C1", "C2").link("C2", "C3").link("C1", "C3");
            g.concurrent.push_back({"C1", "C2", "C3"});
            break;
        case KodairaLabel::I_STAR:
            for (long i = 0; i <= k.b; ++i) node(chain_id("M", i), -2, 2);
            for (long i = 0; i < k.b; ++i) g.link(chain_id("M", i), chain_id("M", i + 1));
            for (int j = 1; j <= 4; ++j) {
                std::string leaf = chain_id("L", j);
                node(leaf, -2, 1);
                g.link(leaf, j <= 2 ? "M0" : chain_id("M", k.b));
            }
            break;
        case KodairaLabel::IV_STAR:
            node("Z", -2, 3);
            arm("Z", "P", {2, 1});
            arm("Z", "Q", {2, 1});
            arm("Z", "R", {2, 1});
            break;
        case KodairaLabel::III_STAR:
            node("Z", -2, 4);
            arm("Z", "P", {3, 2, 1});
            arm("Z", "Q", {3, 2, 1});
            arm("Z", "R", {2});
            break;
        case KodairaLabel::II_STAR:
            node("Z", -2, 6);
            arm("Z", "P", {5, 4, 3, 2, 1});
            arm("Z", "Q", {4, 2});
            arm("Z", "R", {3});
            break;
    }
    return g;
}

inline std::optional<KodairaLabel> recognize_kodaira(const DualGraph& g) {
    g.validate();
    long n = static_cast<long>(g.vertices.size());
    if (n == 0) return std::nullopt;
    std::vector<KodairaLabel> cands;
    if (n == 1) cands = {{KodairaLabel::SMOOTH, 0}, KodairaLabel::In(1), {KodairaLabel::II, 0}};
    if (n >= 2) cands.push_back(KodairaLabel::In(n));
    if (n == 2) cands.push_back({KodairaLabel::III, 0});
    if (n == 3) cands.push_back({KodairaLabel::IV, 0});
    if (n >= 5) cands.push_back(KodairaLabel::Istar(n - 5));
    if (n == 7) cands.push_back({KodairaLabel::IV_STAR, 0});
    if (n == 8) cands.push_back({KodairaLabel::III_STAR, 0});
    if (n == 9) cands.push_back({KodairaLabel::II_STAR, 0});
    auto key = [](const DualGraph& h, const CurveVertex& v) {
        return detail::shape_key(h, v) + ":" + std::to_string(v.mult);
    };
    for (auto& c : cands)
        if (detail::isomorphic(g, kodaira_graph(c), key)) return c;
    return std::nullopt;
}

// Topological Euler number of the union of the curves.
inline long topological_euler(const DualGraph& g) {
    g.validate();
    long e = 0;
    for (auto& v : g.vertices) e += 2 - 2 * v.genus - g.nodes(v.id);
    std::vector<Edge> loose = g.edges;
    for (auto& grp : g.concurrent) {
        for (std::size_t i = 0; i < grp.size(); ++i)
            for (std::size_t j = i + 1; j < grp.size(); ++j) {
                auto it = std::find_if(loose.begin(), loose.end(), [&](const Edge& x) {
                    return (x.a == grp[i] && x.b == grp[j]) || (x.a == grp[j] && x.b == grp[i]);
                });
                if (it != loose.end()) loose.erase(it);
            }
        e -= static_cast<long>(grp.size()) - 1;
    }
    e -= static_cast<long>(loose.size());
    return e;
}

inline long kodaira_euler_number(const KodairaLabel& k) {
    switch (k.kind) {
        case KodairaLabel::SMOOTH: return 0;
        case KodairaLabel::I: return k.b;
        case KodairaLabel::I_STAR: return k.b + 6;
        case KodairaLabel::II: return 2;
        case KodairaLabel::III: return 3;
        case KodairaLabel::IV: return 4;
        case KodairaLabel::IV_STAR: return 8;
        case KodairaLabel::III_STAR: return 9;
        case KodairaLabel::II_STAR: return 10;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Index-two germs with half boundary. Bullets are strict curves of coefficient
// 1/2; k always counts the (-2)-curves of the parametric chain.

enum class HalfKind {
    A0, A_ALPHA, A_BETA, D_ALPHA, D_BETA, E6, E7, E8,
    A_GAMMA, A_DELTA, A_EPSILON, A_ZETA, D4_GAMMA, D_DELTA, D_EPSILON
};

inline constexpr HalfKind all_half_kinds[] = {
    HalfKind::A0, HalfKind::A_ALPHA, HalfKind::A_BETA, HalfKind::D_ALPHA, HalfKind::D_BETA,
    HalfKind::E6, HalfKind::E7, HalfKind::E8, HalfKind::A_GAMMA, HalfKind::A_DELTA,
    HalfKind::A_EPSILON, HalfKind::A_ZETA, HalfKind::D4_GAMMA, HalfKind::D_DELTA, HalfKind::D_EPSILON,
};

struct HalfLabel {
    HalfKind kind;
    long k = 0;

    static bool parametric(HalfKind h) {
        switch (h) {
            case HalfKind::A_ALPHA: case HalfKind::A_BETA: case HalfKind::D_ALPHA: case HalfKind::D_BETA:
            case HalfKind::A_DELTA: case HalfKind::A_EPSILON: case HalfKind::A_ZETA: case HalfKind::D_DELTA:
            case HalfKind::D_EPSILON:
                return true;
            default:
                return false;
        }
    }
    static long min_k(HalfKind h) { return h == HalfKind::A_ZETA ? 1 : 0; }

    // Germ at a smooth point (first part of the catalog).
    bool smooth_point() const {
        switch (kind) {
            case HalfKind::A0: case HalfKind::A_ALPHA: case HalfKind::A_BETA: case HalfKind::D_ALPHA:
            case HalfKind::D_BETA: case HalfKind::E6: case HalfKind::E7: case HalfKind::E8:
                return true;
            default:
                return false;
        }
    }

    std::string str() const {
        auto name = [&](const char* fam, long idx, const char* tag) {
            std::string s = std::string(fam) + "_" + std::to_string(idx) + "/2";
            if (*tag) s += std::string("-") + tag;
            return s;
        };
        switch (kind) {
            case HalfKind::A0: return name("A", 0, "");
            case HalfKind::A_ALPHA: return name("A", 2 * k + 1, "alpha");
            case HalfKind::A_BETA: return name("A", 2 * k + 2, "beta");
            case HalfKind::D_ALPHA: return name("D", 2 * k + 5, "alpha");
            case HalfKind::D_BETA: return name("D", 2 * k + 4, "beta");
            case HalfKind::E6: return name("E", 6, "");
            case HalfKind::E7: return name("E", 7, "");
            case HalfKind::E8: return name("E", 8, "");
            case HalfKind::A_GAMMA: return name("A", 1, "gamma");
            case HalfKind::A_DELTA: return name("A", 2 * k + 3, "delta");
            case HalfKind::A_EPSILON: return name("A", 2 * k + 2, "epsilon");
            case HalfKind::A_ZETA: return name("A", 2 * k + 1, "zeta");
            case HalfKind::D4_GAMMA: return name("D", 4, "gamma");
            case HalfKind::D_DELTA: return name("D", 2 * k + 5, "delta");
            case HalfKind::D_EPSILON: return name("D", 2 * k + 6, "epsilon");
        }
        return "?";
    }

    friend bool operator==(const HalfLabel&, const HalfLabel&) = default;
};

inline DualGraph half_catalog_graph(const HalfLabel& h) {
    if (!HalfLabel::parametric(h.kind) && h.k != 0) throw DomainError("half catalog: k given for fixed type");
    if (h.k < HalfLabel::min_k(h.kind)) throw DomainError("half catalog: k out of range");
    DualGraph g;
    const Rational half(1, 2);
    int bullets = 0;
    auto bullet = [&]() {
        std::string id = detail::chain_id("s", ++bullets);
        g.add(id, -1, Role::STRICT, half);
        return id;
    };
    auto circ = [&](const std::string& id, long self) {
        g.add(id, self);
        return id;
    };
    // Appends the (-2)-chain after `from` (which may be empty) and returns
    // the last vertex of the chain, or `from` when k = 0.
    auto chain = [&](std::string from) {
        for (long i = 1; i <= h.k; ++i) {
            std::string id = circ(detail::chain_id("c", i), -2);
            if (!from.empty()) g.link(from, id);
            from = id;
        }
        return from;
    };
    auto join = [&](const std::string& a, const std::string& b) {
        if (!a.empty() && !b.empty()) g.link(a, b);
    };
    switch (h.kind) {
        case HalfKind::A0:
            bullet();
            break;
        case HalfKind::A_ALPHA: {
            std::string end = chain("");
            circ("F", -1);
            join(end, "F");
            g.link("F", bullet()).link("F", bullet());
            break;
        }
        case HalfKind::A_BETA: {
            std::string end = chain("");
            circ("T", -3);
            join(end, "T");
            circ("F", -1);
            circ("L", -2);
            g.link("T", "F").link("F", "L").link("F", bullet());
            break;
        }
        case HalfKind::D_ALPHA: {
            std::string end = chain(bullet());
            circ("T", -3);
            g.link(end, "T");
            circ("F", -1);
            circ("L", -2);
            g.link("T", "F").link("F", "L").link("F", bullet());
            break;
        }
        case HalfKind::D_BETA: {
            std::string end = chain(bullet());
            circ("F", -1);
            g.link(end, "F").link("F", bullet()).link("F", bullet());
            break;
        }
        case HalfKind::E6:
            circ("c1", -2);
            circ("c2", -2);
            circ("F", -1);
            circ("Q", -4);
            g.link("c1", "c2").link("c2", "F").link("F", "Q").link("F", bullet());
            break;
        case HalfKind::E7: {
            std::string s = bullet();
            circ("c1", -2);
            circ("F", -1);
            circ("Q", -3);
            g.link(s, "c1").link("c1", "F").link("F", "Q").link("F", bullet());
            break;
        }
        case HalfKind::E8:
            circ("P", -3);
            circ("c1", -2);
            circ("F", -1);
            circ("Q", -3);
            g.link("P", "c1").link("c1", "F").link("F", "Q").link("F", bullet());
            break;
        case HalfKind::A_GAMMA:
            circ("Q", -4);
            break;
        case HalfKind::A_DELTA: {
            circ("T1", -3);
            std::string end = chain("T1");
            circ("T2", -3);
            g.link(end, "T2");
            break;
        }
        case HalfKind::A_EPSILON: {
            std::string end = chain(bullet());
            circ("T", -3);
            g.link(end, "T");
            break;
        }
        case HalfKind::A_ZETA: {
            std::string end = chain(bullet());
            g.link(end, bullet());
            break;
        }
        case HalfKind::D4_GAMMA: {
            std::string s = bullet();
            circ("F", -1);
            circ("Q", -4);
            circ("L", -2);
            g.link(s, "F").link("F", "Q").link("F", "L");
            break;
        }
        case HalfKind::D_DELTA: {
            circ("T", -3);
            std::string end = chain("T");
            circ("F", -1);
            g.link(end, "F").link("F", bullet()).link("F", bullet());
            break;
        }
        case HalfKind::D_EPSILON: {
            circ("T1", -3);
            std::string end = chain("T1");
            circ("T2", -3);
            circ("F", -1);
            circ("L", -2);
            g.link(end, "T2").link("T2", "F").link("F", "L").link("F", bullet());
            break;
        }
    }
    return g;
}

namespace detail {

inline std::string catalog_key(const DualGraph&, const CurveVertex& v) {
    // Self-intersections of non-exceptional curves are not part of the data.
    std::string s = v.role == Role::EXCEPTIONAL ? "E" + std::to_string(v.self_int) : std::string(to_string(v.role));
    return s + ":" + v.boundary.str();
}

}  // namespace detail

inline std::optional<HalfLabel> recognize_half_catalog(const DualGraph& g) {
    g.validate();
    long n = static_cast<long>(g.vertices.size());
    for (HalfKind kind : all_half_kinds) {
        long lo = HalfLabel::parametric(kind) ? HalfLabel::min_k(kind) : 0;
        long hi = HalfLabel::parametric(kind) ? n : 0;
        for (long k = lo; k <= hi; ++k) {
            HalfLabel h{kind, k};
            DualGraph c = half_catalog_graph(h);
            if (static_cast<long>(c.vertices.size()) != n) continue;
            if (detail::isomorphic(g, c, detail::catalog_key)) return h;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Fibre germs of conic fibrations.

enum class FibreKind { I1, I2, I3, II1, II2, II3 };

inline const char* to_string(FibreKind k) {
    switch (k) {
        case FibreKind::I1: return "I1_b";
        case FibreKind::I2: return "I2_b";
        case FibreKind::I3: return "I3_b";
        case FibreKind::II1: return "II1_b";
        case FibreKind::II2: return "II2_b";
        case FibreKind::II3: return "II3_bk";
    }
    return "?";
}

inline FibreKind parse_fibre_kind(const std::string& s) {
    for (auto k : {FibreKind::I1, FibreKind::I2, FibreKind::I3, FibreKind::II1, FibreKind::II2, FibreKind::II3})
        if (s == to_string(k)) return k;
    static const std::map<std::string, FibreKind> alias = {
        {"I-1", FibreKind::I1}, {"I-2", FibreKind::I2}, {"I-3", FibreKind::I3},
        {"II-1", FibreKind::II1}, {"II-2", FibreKind::II2}, {"II-3", FibreKind::II3},
    };
    auto it = alias.find(s);
    if (it == alias.end()) throw std::invalid_argument("unknown fibre kind '" + s + "'");
    return it->second;
}

struct FibreTypeLabel {
    FibreKind kind = FibreKind::I1;
    StandardCoeff b = StandardCoeff::finite(1);
    long k = 0;

    static FibreTypeLabel make(FibreKind kind, StandardCoeff b, long k = 0) {
        FibreTypeLabel l{kind, b, k};
        l.validate();
        return l;
    }

    void validate() const {
        if (!b.infinite && b.b < 1) throw DomainError("fibre label needs b >= 1");
        if (kind == FibreKind::II3 && k < 1) throw DomainError("(II-3) needs k >= 1");
        if (kind != FibreKind::II3 && k != 0) throw DomainError("k only applies to (II-3)");
    }

    std::string str() const {
        static const char* names[] = {"I-1", "I-2", "I-3", "II-1", "II-2", "II-3"};
        std::string s = std::string("(") + names[static_cast<int>(kind)] + ")_";
        if (kind == FibreKind::II3) return s + "{" + b.str() + "," + std::to_string(k) + "}";
        return s + b.str();
    }

    friend bool operator==(const FibreTypeLabel&, const FibreTypeLabel&) = default;
    friend auto operator<=>(const FibreTypeLabel& x, const FibreTypeLabel& y) {
        if (auto c = x.kind <=> y.kind; c != 0) return c;
        if (auto c = x.b <=> y.b; c != 0) return c;
        return x.k <=> y.k;
    }
};

inline DualGraph fibre_type_graph(const FibreTypeLabel& l) {
    l.validate();
    DualGraph g;
    Rational c = l.b.value();
    Rational half_c = c / 2;                                // (b-1)/2b
    Rational near = (Rational(1) + c) / 2;                  // (2b-1)/2b
    auto strict = [&](const std::string& id, Rational coef) { g.add(id, 0, Role::STRICT, std::move(coef)); };
    strict("s0", 1);
    switch (l.kind) {
        case FibreKind::I1:
            g.add("F", 0, Role::FIBRE, c);
            strict("s1", Rational(1, 2));
            strict("s2", Rational(1, 2));
            g.link("s0", "F").link("F", "s1").link("F", "s2");
            break;
        case FibreKind::I2:
            g.add("F", -1, Role::FIBRE, c, 2);
            g.add("E1", -2, Role::EXCEPTIONAL, half_c);
            g.add("E2", -2, Role::EXCEPTIONAL, half_c);
            g.link("s0", "F").link("F", "E1").link("F", "E2");
            break;
        case FibreKind::I3:
            g.add("G", -2, Role::EXCEPTIONAL, near);
            g.add("F", -1, Role::FIBRE, c, 2);
            g.add("E", -2, Role::EXCEPTIONAL, half_c);
            strict("s1", Rational(1, 2));
            g.link("s0", "G").link("G", "F").link("F", "s1").link("F", "E");
            break;
        case FibreKind::II1:
            g.add("F", 0, Role::FIBRE, c);
            strict("s1", 1);
            g.link("s0", "F").link("F", "s1");
            break;
        case FibreKind::II2:
            g.add("F", 0, Role::FIBRE, c);
            strict("s1", Rational(1, 2));
            g.link("s0", "F").link("F", "s1", 2);
            break;
        case FibreKind::II3: {
            g.add("F", -1, Role::FIBRE, c, 2);
            g.link("s0", "F");
            std::string prev = "F";
            for (long i = 1; i <= l.k; ++i) {
                std::string id = detail::chain_id("c", i);
                g.add(id, -2, Role::EXCEPTIONAL, c, 2);
                g.link(prev, id);
                prev = id;
            }
            g.add("L1", -2, Role::EXCEPTIONAL, half_c);
            g.add("L2", -2, Role::EXCEPTIONAL, half_c);
            g.link(prev, "L1").link(prev, "L2");
            break;
        }
    }
    return g;
}

inline std::optional<FibreTypeLabel> recognize_fibre_type(const DualGraph& g) {
    g.validate();
    auto fib = g.ids(Role::FIBRE);
    if (fib.size() != 1) return std::nullopt;
    auto b = StandardCoeff::from_value(g.vertex(fib[0]).boundary);
    if (!b) return std::nullopt;
    long exc = static_cast<long>(g.ids(Role::EXCEPTIONAL).size());
    auto key = [](const DualGraph&, const CurveVertex& v) {
        std::string s = std::string(to_string(v.role)) + ":" + v.boundary.str();
        if (v.role != Role::STRICT) s += ":" + std::to_string(v.self_int);
        return s;
    };
    for (auto kind : {FibreKind::I1, FibreKind::I2, FibreKind::I3, FibreKind::II1, FibreKind::II2, FibreKind::II3}) {
        long k = kind == FibreKind::II3 ? exc - 2 : 0;
        if (kind == FibreKind::II3 && k < 1) continue;
        FibreTypeLabel l{kind, *b, k};
        if (detail::isomorphic(g, fibre_type_graph(l), key)) return l;
    }
    return std::nullopt;
}

}  // namespace logdgen
