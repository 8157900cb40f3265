#ifndef DCP_BUILDING_HPP
#define DCP_BUILDING_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dcp/partitions.hpp"
#include "dcp/subspace.hpp"

namespace dcp {

/// Duplicate-free family of subspaces of one kind in one ambient space,
/// kept in canonical (dimension, text) order.
struct BuildingSet {
    Kind kind = Kind::Generic;
    long n = 0;
    std::vector<Subspace> members;

    void canonicalize() {
        std::sort(members.begin(), members.end(),
                  [](const Subspace& a, const Subspace& b) { return a.sort_key() < b.sort_key(); });
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (auto& m : members)
            if (m.kind != kind || m.n != n)
                throw std::invalid_argument("BuildingSet: member kind/ambient mismatch");
    }

    bool has(const Subspace& s) const {
        return std::binary_search(members.begin(), members.end(), s,
                                  [](const Subspace& a, const Subspace& b) { return a.sort_key() < b.sort_key(); });
    }

    size_t size() const { return members.size(); }

    friend bool operator==(const BuildingSet& a, const BuildingSet& b) {
        return a.kind == b.kind && a.n == b.n && a.members == b.members;
    }
};

inline BuildingSet make_building_set(Kind kind, long n, std::vector<Subspace> members) {
    BuildingSet g;
    g.kind = kind;
    g.n = n;
    g.members = std::move(members);
    g.canonicalize();
    return g;
}

namespace detail {

inline void check_kind_n(Kind kind, long n) {
    long min_n = kind == Kind::D ? 4 : 2;
    if (kind == Kind::Generic) throw std::invalid_argument("generic kind has no canonical arrangement");
    if (n < min_n) throw std::invalid_argument("ambient n below the kind's minimum");
}

inline std::vector<std::vector<std::vector<long>>> set_partitions(const std::vector<long>& elems) {
    std::vector<std::vector<std::vector<long>>> out;
    std::vector<std::vector<long>> cur;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == elems.size()) {
            out.push_back(cur);
            return;
        }
        for (size_t b = 0; b < cur.size(); ++b) {
            cur[b].push_back(elems[i]);
            self(self, i + 1);
            cur[b].pop_back();
        }
        cur.push_back({elems[i]});
        self(self, i + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    return out;
}

/// All sign assignments of a block with the minimum (first) element positive.
inline std::vector<std::vector<SignedElem>> colorings(const std::vector<long>& block) {
    std::vector<std::vector<SignedElem>> out;
    size_t k = block.size();
    for (long mask = 0; mask < (1L << (k - 1)); ++mask) {
        std::vector<SignedElem> b;
        b.push_back({block[0], +1});
        for (size_t i = 1; i < k; ++i) b.push_back({block[i], (mask >> (i - 1)) & 1 ? -1 : +1});
        out.push_back(std::move(b));
    }
    return out;
}

inline std::vector<std::vector<long>> subsets(long n, long min_size) {
    std::vector<std::vector<long>> out;
    for (long mask = 1; mask < (1L << n); ++mask) {
        std::vector<long> s;
        for (long i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.push_back(i + 1);
        if (static_cast<long>(s.size()) >= min_size) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

namespace detail {
inline const BuildingSet& family_cache(Kind kind, long n, BuildingSet (*build)(Kind, long),
                                       std::map<std::pair<int, long>, BuildingSet>& cache,
                                       std::mutex& mtx) {
    std::pair<int, long> key{static_cast<int>(kind), n};
    {
        std::scoped_lock lk(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BuildingSet g = build(kind, n);
    std::scoped_lock lk(mtx);
    return cache.emplace(key, std::move(g)).first->second;
}
}  // namespace detail

/// The irreducible family F of the arrangement.
inline BuildingSet irreducibles_uncached(Kind kind, long n) {
    detail::check_kind_n(kind, n);
    std::vector<Subspace> m;
    if (kind == Kind::A) {
        for (auto& s : detail::subsets(n, 2)) m.push_back(Subspace::a_blocks(n, {s}));
    } else if (kind == Kind::Boolean) {
        for (long i = 1; i <= n; ++i) m.push_back(Subspace::boolean(n, {i}));
    } else {
        // a strong pair in D decomposes as the two colored lines it contains
        long strong_min = kind == Kind::D ? 3 : 1;
        for (auto& s : detail::subsets(n, strong_min)) m.push_back(Subspace::bd(kind, n, s, {}));
        for (auto& blk : detail::subsets(n, 2))
            for (auto& colored : detail::colorings(blk)) m.push_back(Subspace::bd(kind, n, {}, {colored}));
    }
    return make_building_set(kind, n, std::move(m));
}

inline const BuildingSet& irreducibles(Kind kind, long n) {
    static std::map<std::pair<int, long>, BuildingSet> cache;
    static std::mutex mtx;
    return detail::family_cache(kind, n, &irreducibles_uncached, cache, mtx);
}

/// Every subspace of the arrangement's closure lattice (minus {0}) —
/// which is exactly the maximal building set.
inline BuildingSet maximal_building_uncached(Kind kind, long n) {
    detail::check_kind_n(kind, n);
    std::vector<Subspace> m;
    if (kind == Kind::A) {
        std::vector<long> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 1L);
        for (auto& sp : detail::set_partitions(all)) {
            std::vector<std::vector<long>> big;
            for (auto& b : sp)
                if (b.size() >= 2) big.push_back(b);
            if (!big.empty()) m.push_back(Subspace::a_blocks(n, big));
        }
    } else if (kind == Kind::Boolean) {
        for (auto& s : detail::subsets(n, 1)) m.push_back(Subspace::boolean(n, s));
    } else {
        for (long mask = 0; mask < (1L << n); ++mask) {
            std::vector<long> strong, rest;
            for (long i = 0; i < n; ++i)
                ((mask >> i) & 1 ? strong : rest).push_back(i + 1);
            if (kind == Kind::D && strong.size() == 1) continue;
            for (auto& sp : detail::set_partitions(rest)) {
                std::vector<std::vector<long>> big;
                for (auto& b : sp)
                    if (b.size() >= 2) big.push_back(b);
                if (strong.empty() && big.empty()) continue;
                // every coloring combination of the big blocks
                std::vector<std::vector<std::vector<SignedElem>>> per;
                for (auto& b : big) per.push_back(detail::colorings(b));
                std::vector<std::vector<SignedElem>> pick(per.size());
                auto rec = [&](auto&& self, size_t i) -> void {
                    if (i == per.size()) {
                        m.push_back(Subspace::bd(kind, n, strong, pick));
                        return;
                    }
                    for (auto& c : per[i]) {
                        pick[i] = c;
                        self(self, i + 1);
                    }
                };
                rec(rec, 0);
            }
        }
    }
    return make_building_set(kind, n, std::move(m));
}

inline const BuildingSet& maximal_building(Kind kind, long n) {
    static std::map<std::pair<int, long>, BuildingSet> cache;
    static std::mutex mtx;
    return detail::family_cache(kind, n, &maximal_building_uncached, cache, mtx);
}

/// All closure subspaces of a given (possibly signed) form.
inline std::vector<Subspace> subspaces_of_form(Kind kind, long n, const SingularPartition& form) {
    std::vector<Subspace> out;
    for (auto& s : maximal_building(kind, n).members)
        if (form_of(s) == form) out.push_back(s);
    return out;
}

namespace detail {

/// Poset order on forms with optional sign tags.
inline bool leq_form(Kind kind, const SingularPartition& x, const SingularPartition& y) {
    if (kind == Kind::A) return leq_A(x.lambda, y.lambda);
    if (x.sign != 0 && y.sign != 0 && x.sign != y.sign) return false;
    return leq_singular(SingularPartition(x.r, x.lambda), SingularPartition(y.r, y.lambda),
                        kind == Kind::B ? PosetKind::B : PosetKind::D);
}

}  // namespace detail

/// The family of all subspaces whose form is >= the given poset element.
inline BuildingSet g_tilde(Kind kind, long n, const SingularPartition& bottom) {
    detail::check_kind_n(kind, n);
    std::vector<Subspace> m;
    for (auto& s : maximal_building(kind, n).members)
        if (detail::leq_form(kind, bottom, form_of(s))) m.push_back(s);
    return make_building_set(kind, n, std::move(m));
}

inline BuildingSet g_singular(Kind kind, long n, const SingularPartition& bottom) {
    if (kind == Kind::A ? !is_building_partition(bottom.lambda) || bottom.r != 0
                        : !is_singular_building(bottom, kind == Kind::B ? PosetKind::B : PosetKind::D))
        throw std::invalid_argument("g_singular: not a building poset element");
    BuildingSet g = g_tilde(kind, n, bottom);
    for (auto& f : irreducibles(kind, n).members) g.members.push_back(f);
    g.canonicalize();
    return g;
}

inline BuildingSet g_lambda(const Partition& lambda) {
    return g_singular(Kind::A, lambda.n(), SingularPartition(0, lambda));
}

inline BuildingSet g_of_antichain(const std::vector<SingularPartition>& chain, Kind kind, long n) {
    if (chain.empty()) throw std::invalid_argument("g_of_antichain: empty antichain");
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = 0; j < chain.size(); ++j)
            if (i != j && detail::leq_form(kind, chain[i], chain[j]))
                throw std::invalid_argument("g_of_antichain: elements are comparable");
    BuildingSet g = g_singular(kind, n, chain[0]);
    for (size_t i = 1; i < chain.size(); ++i) {
        auto gi = g_tilde(kind, n, chain[i]);
        g.members.insert(g.members.end(), gi.members.begin(), gi.members.end());
    }
    g.canonicalize();
    return g;
}

/// G_s: the irreducibles plus every closure subspace of dimension >= n-s.
inline BuildingSet regular(Kind kind, long n, long s) {
    if (s < -1) throw std::invalid_argument("regular: s must be >= -1");
    BuildingSet g = irreducibles(kind, n);
    for (auto& u : maximal_building(kind, n).members)
        if (u.dim() >= n - s) g.members.push_back(u);
    g.canonicalize();
    return g;
}

/// G~_s: every closure subspace of dimension >= n-s.
inline BuildingSet regular_tilde(Kind kind, long n, long s) {
    if (s < 0) throw std::invalid_argument("regular_tilde: s must be >= 0");
    std::vector<Subspace> m;
    for (auto& u : maximal_building(kind, n).members)
        if (u.dim() >= n - s) m.push_back(u);
    return make_building_set(kind, n, std::move(m));
}

/// Closure of the family under subspace sums.
inline std::vector<Subspace> closure_under_sum(const BuildingSet& g) {
    std::set<Subspace> seen(g.members.begin(), g.members.end());
    std::vector<Subspace> frontier(g.members);
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (auto& f : frontier)
            for (auto& m : g.members) {
                Subspace s = f + m;
                if (seen.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<Subspace> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) { return a.sort_key() < b.sort_key(); });
    return out;
}

/// The maximal members of the family that lie inside u.
inline std::vector<Subspace> maximal_members_inside(const BuildingSet& g, const Subspace& u) {
    std::vector<Subspace> inside;
    for (auto& m : g.members)
        if (Subspace::contains(u, m)) inside.push_back(m);
    std::vector<Subspace> maximal;
    for (auto& a : inside) {
        bool top = true;
        for (auto& b : inside)
            if (!(a == b) && Subspace::contains(b, a)) { top = false; break; }
        if (top) maximal.push_back(a);
    }
    return maximal;
}

/// Building axiom: every closure element is the direct sum of the maximal
/// family members it contains.
inline bool is_building(const BuildingSet& g) {
    for (auto& c : closure_under_sum(g)) {
        auto mx = maximal_members_inside(g, c);
        long dsum = 0;
        Subspace acc = mx.empty() ? c : mx[0];
        for (size_t i = 0; i < mx.size(); ++i) {
            dsum += mx[i].dim();
            if (i > 0) acc = acc + mx[i];
        }
        if (mx.empty() || dsum != c.dim() || !(acc == c)) return false;
    }
    return true;
}

/// Unique decomposition of a closure subspace into irreducibles.
inline std::vector<Subspace> decompose(const Subspace& u) {
    auto mx = maximal_members_inside(irreducibles(u.kind, u.n), u);
    long dsum = 0;
    for (auto& m : mx) dsum += m.dim();
    if (mx.empty() || dsum != u.dim()) throw std::invalid_argument("decompose: not in the closure");
    Subspace acc = mx[0];
    for (size_t i = 1; i < mx.size(); ++i) acc = acc + mx[i];
    if (!(acc == u)) throw std::invalid_argument("decompose: not in the closure");
    std::sort(mx.begin(), mx.end(),
              [](const Subspace& a, const Subspace& b) { return a.sort_key() < b.sort_key(); });
    return mx;
}

/// Nested-set test: no antichain of size >= 2 sums into the family.
inline bool is_nested(const std::vector<Subspace>& set, const BuildingSet& g) {
    for (auto& s : set)
        if (!g.has(s)) throw std::invalid_argument("is_nested: set not inside the family");
    size_t k = set.size();
    if (k > 62) throw std::invalid_argument("is_nested: set too large");
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
        if (__builtin_popcountl(mask) < 2) continue;
        std::vector<size_t> idx;
        for (size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1) idx.push_back(i);
        bool antichain = true;
        for (size_t a : idx)
            for (size_t b : idx)
                if (a != b && Subspace::contains(set[a], set[b])) { antichain = false; }
        if (!antichain) continue;
        Subspace sum = set[idx[0]];
        for (size_t i = 1; i < idx.size(); ++i) sum = sum + set[idx[i]];
        if (g.has(sum)) return false;
    }
    return true;
}

/// Generators of the reflection group's action as signed permutations.
inline std::vector<std::pair<std::vector<long>, std::vector<int>>> group_generators(Kind kind, long n) {
    std::vector<std::pair<std::vector<long>, std::vector<int>>> gens;
    std::vector<long> id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 1L);
    std::vector<int> plus(static_cast<size_t>(n), +1);
    for (long i = 0; i + 1 < n; ++i) {
        auto p = id;
        std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(i) + 1]);
        gens.emplace_back(p, plus);
    }
    if (kind == Kind::B || kind == Kind::Boolean) {
        auto s = plus;
        s[0] = -1;
        gens.emplace_back(id, s);
    } else if (kind == Kind::D) {
        auto s = plus;
        s[0] = s[1] = -1;
        gens.emplace_back(id, s);
    }
    return gens;
}

/// True iff the family is closed under the kind's reflection group.
inline bool is_invariant(const BuildingSet& g) {
    auto gens = group_generators(g.kind, g.n);
    for (auto& m : g.members)
        for (auto& [p, s] : gens)
            if (!g.has(m.act(p, s))) return false;
    return true;
}

/// Full group orbit of a subspace.
inline std::vector<Subspace> orbit(const Subspace& u) {
    auto gens = group_generators(u.kind, u.n);
    std::set<Subspace> seen{u};
    std::vector<Subspace> frontier{u};
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (auto& f : frontier)
            for (auto& [p, s] : gens) {
                Subspace v = f.act(p, s);
                if (seen.insert(v).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

/// Image of the family in the quotient by a minimal member: the generic
/// building set {(A+G0)/G0}. Coordinates are the non-pivot columns of G0.
inline BuildingSet quotient_building(const BuildingSet& g, const Subspace& g0) {
    if (!g.has(g0)) throw std::invalid_argument("quotient_building: g0 not a member");
    for (auto& m : g.members)
        if (!(m == g0) && Subspace::contains(g0, m))
            throw std::invalid_argument("quotient_building: g0 not minimal");
    Matrix base = rref(g0.generators());
    std::vector<size_t> pivots;
    {
        size_t c = 0;
        for (auto& r : base) {
            while (c < r.size() && r[c] == 0) ++c;
            pivots.push_back(c);
        }
    }
    std::vector<bool> is_pivot(static_cast<size_t>(g.n), false);
    for (size_t p : pivots) is_pivot[p] = true;
    long qn = g.n - static_cast<long>(base.size());
    std::vector<Subspace> out;
    for (auto& m : g.members) {
        if (m == g0) continue;
        Matrix rows = m.generators();
        for (auto& v : rows) {
            for (size_t i = 0; i < base.size(); ++i) {
                Rat f = v[pivots[i]];
                if (f == 0) continue;
                for (size_t j = 0; j < v.size(); ++j) v[j] -= f * base[i][j];
            }
        }
        Matrix proj;
        for (auto& v : rows) {
            std::vector<Rat> w;
            for (size_t j = 0; j < v.size(); ++j)
                if (!is_pivot[j]) w.push_back(v[j]);
            proj.push_back(std::move(w));
        }
        Subspace q = Subspace::generic(qn, std::move(proj));
        if (!q.is_zero()) out.push_back(std::move(q));
    }
    return make_building_set(Kind::Generic, qn, std::move(out));
}

// ---- JSON --------------------------------------------------------------

inline nlohmann::json to_json(const BuildingSet& g) {
    if (g.kind == Kind::Generic) throw std::invalid_argument("to_json: generic families not serialized");
    nlohmann::json j;
    j["kind"] = kind_name(g.kind);
    j["n"] = g.n;
    j["members"] = nlohmann::json::array();
    for (auto& m : g.members) {
        nlohmann::json e;
        e["strong"] = m.strong;
        e["blocks"] = nlohmann::json::array();
        e["colors"] = nlohmann::json::array();
        for (auto& b : m.weak) {
            std::vector<long> elems;
            std::vector<int> cols;
            for (auto& x : b) {
                elems.push_back(x.e);
                cols.push_back(x.s);
            }
            e["blocks"].push_back(elems);
            e["colors"].push_back(cols);
        }
        j["members"].push_back(std::move(e));
    }
    return j;
}

inline BuildingSet building_set_from_json(const nlohmann::json& j) {
    Kind kind = kind_parse(j.at("kind").get<std::string>());
    long n = j.at("n").get<long>();
    std::vector<Subspace> members;
    for (auto& e : j.at("members")) {
        std::vector<long> strong = e.value("strong", std::vector<long>{});
        std::vector<std::vector<SignedElem>> weak;
        auto blocks = e.value("blocks", std::vector<std::vector<long>>{});
        auto colors = e.value("colors", std::vector<std::vector<int>>{});
        for (size_t i = 0; i < blocks.size(); ++i) {
            std::vector<SignedElem> b;
            for (size_t k = 0; k < blocks[i].size(); ++k)
                b.push_back({blocks[i][k], i < colors.size() && k < colors[i].size() ? colors[i][k] : +1});
            weak.push_back(std::move(b));
        }
        if (kind == Kind::A) {
            std::vector<std::vector<long>> blks;
            for (auto& b : weak) {
                std::vector<long> v;
                for (auto& x : b) v.push_back(x.e);
                blks.push_back(std::move(v));
            }
            members.push_back(Subspace::a_blocks(n, std::move(blks)));
        } else if (kind == Kind::Boolean) {
            members.push_back(Subspace::boolean(n, std::move(strong)));
        } else {
            members.push_back(Subspace::bd(kind, n, std::move(strong), std::move(weak)));
        }
    }
    return make_building_set(kind, n, std::move(members));
}

}  // namespace dcp

#endif
