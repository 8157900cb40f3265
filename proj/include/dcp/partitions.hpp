#ifndef DCP_PARTITIONS_HPP
#define DCP_PARTITIONS_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp {

enum class PosetKind { A, B, D };

/// Integer partition: weakly decreasing positive parts. The empty
/// partition (n = 0) is allowed only inside SingularPartition.
struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<long>());
        for (long x : parts)
            if (x < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    }
    Partition(std::initializer_list<long> p) : Partition(std::vector<long>(p)) {}

    long n() const { return std::accumulate(parts.begin(), parts.end(), 0L); }
    long length() const { return static_cast<long>(parts.size()); }
    long count(long v) const { return std::count(parts.begin(), parts.end(), v); }
    bool all_ones() const {
        return !parts.empty() && std::all_of(parts.begin(), parts.end(), [](long x) { return x == 1; });
    }
    bool all_even() const {
        return !parts.empty() && std::all_of(parts.begin(), parts.end(), [](long x) { return x % 2 == 0; });
    }
    /// Smallest part > 1, or 0 if none.
    long min_big_part() const {
        long m = 0;
        for (long x : parts)
            if (x > 1) m = x;  // parts descend, last >1 wins
        return m;
    }

    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "(";
        if (parts.empty()) os << "0";
        for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
        os << ")";
        return os.str();
    }

    static Partition parse(const std::string& s) {
        std::string body = s;
        if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
        std::vector<long> p;
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty() && tok != "0") p.push_back(std::stol(tok));
        return Partition(std::move(p));
    }
};

/// A partition with a strong (coloured) part of size r, and for the
/// D-type doubled vertices an optional sign tag.
struct SingularPartition {
    long r = 0;
    Partition lambda;  // partition of n - r; may be empty when r = n
    int sign = 0;      // 0 none, +1, -1

    SingularPartition() = default;
    SingularPartition(long r_, Partition l, int sign_ = 0) : r(r_), lambda(std::move(l)), sign(sign_) {
        if (r < 0) throw std::invalid_argument("SingularPartition: r must be >= 0");
    }

    long n() const { return r + lambda.n(); }

    auto operator<=>(const SingularPartition&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "(" << r << "|";
        if (lambda.parts.empty()) os << "0";
        for (size_t i = 0; i < lambda.parts.size(); ++i) os << (i ? "," : "") << lambda.parts[i];
        os << ")";
        if (sign > 0) os << "+";
        if (sign < 0) os << "-";
        return os.str();
    }

    static SingularPartition parse(const std::string& s) {
        int sign = 0;
        std::string body = s;
        if (!body.empty() && (body.back() == '+' || body.back() == '-')) {
            sign = body.back() == '+' ? 1 : -1;
            body.pop_back();
        }
        if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
        auto bar = body.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("SingularPartition::parse: missing '|'");
        long r = std::stol(body.substr(0, bar));
        Partition l = Partition::parse(body.substr(bar + 1));
        return SingularPartition(r, std::move(l), sign);
    }
};

inline std::vector<Partition> all_partitions(long n, long max_part = -1) {
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rem, long mx) -> void {
        if (rem == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (long x = std::min(rem, mx); x >= 1; --x) {
            cur.push_back(x);
            self(self, rem - x, x);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

/// Building partition: (n) itself, or at least two parts >= 2.
inline bool is_building_partition(const Partition& p) {
    if (p.parts.empty()) return false;
    if (p.length() == 1) return true;  // (n)
    long big = 0;
    for (long x : p.parts)
        if (x >= 2) ++big;
    return big >= 2;
}

// ---- Admissible moves, type A ------------------------------------------

inline std::set<Partition> admissible_moves_A(const Partition& p) {
    std::set<Partition> out;
    const auto& v = p.parts;
    // move a: remove row i entirely, add its boxes to row j with >= 2 boxes
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) {
            if (j == i || v[j] < 2) continue;
            std::vector<long> w;
            w.reserve(v.size() - 1);
            for (size_t k = 0; k < v.size(); ++k)
                if (k != i) w.push_back(k == j ? v[k] + v[i] : v[k]);
            out.insert(Partition(std::move(w)));
        }
    }
    // move b: bundle k >= max(2, smallest row > 1) singleton rows
    long ones = p.count(1);
    long big = p.min_big_part();
    if (big >= 2) {
        for (long k = std::max(2L, big); k <= ones; ++k) {
            std::vector<long> w;
            long skipped = 0;
            for (long x : v) {
                if (x == 1 && skipped < k) { ++skipped; continue; }
                w.push_back(x);
            }
            w.push_back(k);
            out.insert(Partition(std::move(w)));
        }
    }
    return out;
}

namespace detail {
template <class T, class Moves>
const std::set<T>& upset_cached(const T& x, std::map<T, std::set<T>>& cache, std::mutex& mtx, Moves moves) {
    {
        std::scoped_lock lk(mtx);
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
    }
    std::set<T> seen{x};
    std::deque<T> q{x};
    while (!q.empty()) {
        T cur = q.front();
        q.pop_front();
        for (const T& nx : moves(cur))
            if (seen.insert(nx).second) q.push_back(nx);
    }
    std::scoped_lock lk(mtx);
    return cache.emplace(x, std::move(seen)).first->second;
}
}  // namespace detail

/// Everything reachable from p by a (possibly empty) sequence of A-moves.
inline const std::set<Partition>& upset_A(const Partition& p) {
    static std::map<Partition, std::set<Partition>> cache;
    static std::mutex mtx;
    return detail::upset_cached(p, cache, mtx, [](const Partition& x) { return admissible_moves_A(x); });
}

/// mu <= lambda in the admissible-move order on Lambda_n.
inline bool leq_A(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n()) throw std::invalid_argument("leq_A: partitions of different n");
    return upset_A(mu).count(lambda) > 0;
}

/// Dominance: true iff lambda dominates mu (partial sums of lambda >= those of mu).
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n()) throw std::invalid_argument("dominance_leq: partitions of different n");
    long sl = 0, sm = 0;
    size_t k = std::max(lambda.parts.size(), mu.parts.size());
    for (size_t i = 0; i < k; ++i) {
        sl += i < lambda.parts.size() ? lambda.parts[i] : 0;
        sm += i < mu.parts.size() ? mu.parts[i] : 0;
        if (sl < sm) return false;
    }
    return true;
}

// ---- Admissible moves, type B (shared by D on the r != 1 vertices) -----

/// One-move successors of an (unsigned) singular partition.
/// Moves: (a) merge an uncoloured row into a >=2 uncoloured row or into the
/// coloured row; (b) bundle singleton uncoloured rows as in type A; (c)
/// colour an uncoloured row of size >= 2 when no coloured row exists yet
/// (the single-row colouring move is the special case of one row).
inline std::set<SingularPartition> admissible_moves_B(const SingularPartition& sp) {
    if (sp.sign != 0) throw std::invalid_argument("admissible_moves_B: signed input");
    std::set<SingularPartition> out;
    const auto& v = sp.lambda.parts;
    auto without = [&](size_t i) {
        std::vector<long> w;
        w.reserve(v.size() - 1);
        for (size_t k = 0; k < v.size(); ++k)
            if (k != i) w.push_back(v[k]);
        return w;
    };
    for (size_t i = 0; i < v.size(); ++i) {
        // a) onto another uncoloured row with >= 2 boxes
        for (size_t j = 0; j < v.size(); ++j) {
            if (j == i || v[j] < 2) continue;
            std::vector<long> w = without(i);
            // indices shift: recompute target position by value is unsafe; rebuild
            w.clear();
            for (size_t k = 0; k < v.size(); ++k)
                if (k != i) w.push_back(k == j ? v[k] + v[i] : v[k]);
            out.insert(SingularPartition(sp.r, Partition(std::move(w))));
        }
        // a) onto the coloured row, when it exists
        if (sp.r >= 1) out.insert(SingularPartition(sp.r + v[i], Partition(without(i))));
        // c) colour a row of >= 2 boxes when there is no coloured row
        if (sp.r == 0 && v[i] >= 2) out.insert(SingularPartition(v[i], Partition(without(i))));
    }
    // b) bundle singletons, as in type A
    long ones = sp.lambda.count(1);
    long big = sp.lambda.min_big_part();
    if (big >= 2) {
        for (long k = std::max(2L, big); k <= ones; ++k) {
            std::vector<long> w;
            long skipped = 0;
            for (long x : v) {
                if (x == 1 && skipped < k) { ++skipped; continue; }
                w.push_back(x);
            }
            w.push_back(k);
            out.insert(SingularPartition(sp.r, Partition(std::move(w))));
        }
    }
    return out;
}

inline const std::set<SingularPartition>& upset_B(const SingularPartition& sp) {
    static std::map<SingularPartition, std::set<SingularPartition>> cache;
    static std::mutex mtx;
    return detail::upset_cached(sp, cache, mtx,
                                [](const SingularPartition& x) { return admissible_moves_B(x); });
}

/// Order on singular partitions. For kind D both operands must have
/// r != 1, and two signed operands are comparable only with equal signs.
inline bool leq_singular(const SingularPartition& x, const SingularPartition& y, PosetKind kind) {
    if (x.n() != y.n()) throw std::invalid_argument("leq_singular: different n");
    if (kind == PosetKind::A) throw std::invalid_argument("leq_singular: kind must be B or D");
    if (kind == PosetKind::B && (x.sign != 0 || y.sign != 0))
        throw std::invalid_argument("leq_singular: signs are D-only");
    if (kind == PosetKind::D && (x.r == 1 || y.r == 1))
        throw std::invalid_argument("leq_singular: D operands must have r != 1");
    if (x.sign != 0 && y.sign != 0 && x.sign != y.sign) return x.r == y.r && x.lambda == y.lambda && false;
    SingularPartition xu(x.r, x.lambda), yu(y.r, y.lambda);
    return upset_B(xu).count(yu) > 0;
}

/// Singular building partition test (types B and D).
inline bool is_singular_building(const SingularPartition& sp, PosetKind kind) {
    long n = sp.n();
    if (kind == PosetKind::D && sp.r == 1) return false;
    if (sp.lambda.all_ones()) return false;
    if (sp.r == 0) {
        if (!is_building_partition(sp.lambda)) return false;
        if (sp.lambda.length() == 1) return false;  // exclude (n)
        (void)n;
    }
    return true;
}

// ---- Posets ------------------------------------------------------------

/// A finite poset of (singular) partitions with its cover relation.
/// Type A elements are stored with r = 0 and lambda the partition of n.
struct PartitionPoset {
    PosetKind kind = PosetKind::A;
    long n = 0;
    std::vector<SingularPartition> elements;        // sorted canonically
    std::vector<std::vector<bool>> leq;             // leq[i][j]: elem i <= elem j
    std::vector<std::pair<size_t, size_t>> covers;  // (lower, upper)

    bool less(size_t i, size_t j) const { return i != j && leq[i][j]; }

    std::string label(size_t i) const {
        if (kind == PosetKind::A) return elements[i].lambda.str();
        return elements[i].str();
    }
};

inline PartitionPoset building_poset(PosetKind kind, long n) {
    long min_n = kind == PosetKind::D ? 4 : 2;
    if (n < min_n) throw std::invalid_argument("building_poset: n below the kind's minimum");
    PartitionPoset poset;
    poset.kind = kind;
    poset.n = n;
    if (kind == PosetKind::A) {
        for (auto& p : all_partitions(n))
            if (is_building_partition(p)) poset.elements.emplace_back(0, p);
    } else {
        for (long r = 0; r <= n; ++r) {
            if (kind == PosetKind::D && r == 1) continue;
            for (auto& l : all_partitions(n - r)) {
                SingularPartition sp(r, l);
                if (!is_singular_building(sp, kind)) continue;
                if (kind == PosetKind::D && n % 2 == 0 && r == 0 && l.all_even()) {
                    poset.elements.emplace_back(0, l, +1);
                    poset.elements.emplace_back(0, l, -1);
                } else {
                    poset.elements.push_back(std::move(sp));
                }
            }
        }
    }
    std::sort(poset.elements.begin(), poset.elements.end());
    size_t m = poset.elements.size();
    poset.leq.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            const auto& a = poset.elements[i];
            const auto& b = poset.elements[j];
            if (kind == PosetKind::A)
                poset.leq[i][j] = leq_A(a.lambda, b.lambda);
            else if (a.sign != 0 && b.sign != 0 && a.sign != b.sign)
                poset.leq[i][j] = false;
            else
                poset.leq[i][j] = leq_singular(SingularPartition(a.r, a.lambda),
                                               SingularPartition(b.r, b.lambda), kind);
        }
    }
    // transitive reduction
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (!poset.less(i, j)) continue;
            bool direct = true;
            for (size_t k = 0; k < m && direct; ++k)
                if (poset.less(i, k) && poset.less(k, j)) direct = false;
            if (direct) poset.covers.emplace_back(i, j);
        }
    }
    std::sort(poset.covers.begin(), poset.covers.end());
    return poset;
}

/// Enumerates every nonempty antichain, lexicographically over the
/// canonical element order, as index lists into poset.elements.
inline std::vector<std::vector<size_t>> antichains(const PartitionPoset& poset) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur;
    size_t m = poset.elements.size();
    auto rec = [&](auto&& self, size_t start) -> void {
        for (size_t i = start; i < m; ++i) {
            bool ok = true;
            for (size_t j : cur)
                if (poset.leq[i][j] || poset.leq[j][i]) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(i);
            out.push_back(cur);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// DOT digraph, edges lower -> upper cover, byte-deterministic.
inline std::string hasse_dot(const PartitionPoset& poset) {
    std::ostringstream os;
    os << "digraph hasse {\n";
    for (size_t i = 0; i < poset.elements.size(); ++i)
        os << "  n" << i << " [label=\"" << poset.label(i) << "\"];\n";
    for (auto& [lo, hi] : poset.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dcp

#endif
