#ifndef DCP_SUBSPACE_HPP
#define DCP_SUBSPACE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcp/linalg.hpp"
#include "dcp/partitions.hpp"
#include "dcp/rational.hpp"

namespace dcp {

enum class Kind { A, B, D, Boolean, Generic };

inline std::string kind_name(Kind k) {
    switch (k) {
        case Kind::A: return "A";
        case Kind::B: return "B";
        case Kind::D: return "D";
        case Kind::Boolean: return "boolean";
        case Kind::Generic: return "generic";
    }
    return "?";
}

inline Kind kind_parse(const std::string& s) {
    if (s == "A" || s == "a") return Kind::A;
    if (s == "B" || s == "b") return Kind::B;
    if (s == "D" || s == "d") return Kind::D;
    if (s == "boolean" || s == "Boolean" || s == "bool") return Kind::Boolean;
    if (s == "generic" || s == "Generic") return Kind::Generic;
    throw std::invalid_argument("unknown kind: " + s);
}

/// Signed element of a weak block: label in {1..n}, sign +-1.
struct SignedElem {
    long e = 0;
    int s = +1;
    auto operator<=>(const SignedElem&) const = default;
};

/// A subspace of the dual space, held in canonical combinatorial form
/// (A/B/D/Boolean) or as an RREF generator matrix (Generic).
///
/// A:       weak blocks only, all signs +, sizes >= 2; singletons implicit.
/// B/D:     optional strong set (size >= 1 for B, >= 2 or 0 for D) plus
///          weak blocks of size >= 2 whose coloring has the minimum
///          element positive.
/// Boolean: the strong set alone (any nonempty subset).
class Subspace {
public:
    Kind kind = Kind::Generic;
    long n = 0;
    std::vector<long> strong;                  // sorted
    std::vector<std::vector<SignedElem>> weak; // blocks sorted by min element
    Matrix mat;                                // Generic only (canonical RREF)

    static Subspace a_blocks(long n, std::vector<std::vector<long>> blocks) {
        Subspace s;
        s.kind = Kind::A;
        s.n = n;
        for (auto& b : blocks) {
            std::vector<SignedElem> w;
            for (long e : b) w.push_back({e, +1});
            s.weak.push_back(std::move(w));
        }
        s.canonicalize();
        return s;
    }

    static Subspace bd(Kind k, long n, std::vector<long> strong_set,
                       std::vector<std::vector<SignedElem>> weak_blocks) {
        if (k != Kind::B && k != Kind::D) throw std::invalid_argument("Subspace::bd: kind must be B or D");
        Subspace s;
        s.kind = k;
        s.n = n;
        s.strong = std::move(strong_set);
        s.weak = std::move(weak_blocks);
        s.canonicalize();
        return s;
    }

    static Subspace boolean(long n, std::vector<long> subset) {
        Subspace s;
        s.kind = Kind::Boolean;
        s.n = n;
        s.strong = std::move(subset);
        s.canonicalize();
        return s;
    }

    static Subspace generic(long n, Matrix rows) {
        Subspace s;
        s.kind = Kind::Generic;
        s.n = n;
        s.mat = rref(std::move(rows));
        return s;
    }

    long dim() const {
        switch (kind) {
            case Kind::A: {
                long d = 0;
                for (auto& b : weak) d += static_cast<long>(b.size()) - 1;
                return d;
            }
            case Kind::B:
            case Kind::D: {
                long d = static_cast<long>(strong.size());
                for (auto& b : weak) d += static_cast<long>(b.size()) - 1;
                return d;
            }
            case Kind::Boolean: return static_cast<long>(strong.size());
            case Kind::Generic: return static_cast<long>(mat.size());
        }
        return 0;
    }

    bool is_zero() const { return dim() == 0; }

    /// Generator matrix: rows span the subspace of the dual space.
    Matrix generators() const {
        if (kind == Kind::Generic) return mat;
        Matrix g;
        auto row = [&]() { return std::vector<Rat>(static_cast<size_t>(n), Rat(0)); };
        for (long e : strong) {
            auto r = row();
            r[static_cast<size_t>(e - 1)] = 1;
            g.push_back(std::move(r));
        }
        for (auto& b : weak) {
            for (size_t i = 0; i + 1 < b.size(); ++i) {
                auto r = row();
                r[static_cast<size_t>(b[i].e - 1)] = b[i].s;
                r[static_cast<size_t>(b[i + 1].e - 1)] = -b[i + 1].s;
                g.push_back(std::move(r));
            }
        }
        return g;
    }

    std::string str() const {
        std::ostringstream os;
        if (kind == Kind::Generic) {
            os << "gen";
            for (auto& r : mat) {
                os << "[";
                for (size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
                os << "]";
            }
            return os.str();
        }
        if (!strong.empty() || (kind != Kind::A && weak.empty())) {
            os << "[";
            for (size_t i = 0; i < strong.size(); ++i) os << (i ? "," : "") << strong[i];
            os << "]";
        }
        for (auto& b : weak) {
            os << "{";
            for (size_t i = 0; i < b.size(); ++i) {
                if (i) os << ",";
                if (b[i].s < 0) os << "-";
                os << b[i].e;
            }
            os << "}";
        }
        return os.str();
    }

    /// Deterministic total order key: (dim, canonical text).
    std::pair<long, std::string> sort_key() const { return {dim(), str()}; }

    auto operator<=>(const Subspace&) const = default;

    friend Subspace operator+(const Subspace& a, const Subspace& b) { return sum(a, b); }

    /// Subspace sum. Combinatorial kinds merge via a signed union-find (a
    /// sign conflict inside a component forces the whole component strong);
    /// Generic stacks generators. Agrees with the rank semantics by
    /// construction and is cross-checked against it in the tests.
    static Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.kind != b.kind || a.n != b.n)
            throw std::invalid_argument("Subspace::sum: incompatible operands");
        if (a.kind == Kind::Generic) {
            Matrix m = a.mat;
            m.insert(m.end(), b.mat.begin(), b.mat.end());
            return generic(a.n, std::move(m));
        }
        if (a.kind == Kind::Boolean) {
            std::vector<long> u = a.strong;
            u.insert(u.end(), b.strong.begin(), b.strong.end());
            return boolean(a.n, std::move(u));
        }
        SignedUF uf(a.n);
        for (const Subspace* s : {&a, &b}) {
            for (long e : s->strong) uf.mark_zero(e);
            for (auto& blk : s->weak)
                for (size_t i = 0; i + 1 < blk.size(); ++i)
                    uf.unite(blk[i].e, blk[i + 1].e, blk[i].s * blk[i + 1].s);
        }
        return uf.extract(a.kind, a.n);
    }

    /// True iff b's span is inside a's span (combinatorial; Generic by rank).
    static bool contains(const Subspace& a, const Subspace& b) {
        if (a.kind != b.kind || a.n != b.n)
            throw std::invalid_argument("Subspace::contains: incompatible operands");
        if (a.kind == Kind::Generic) return row_span_contains(a.mat, b.mat);
        if (a.kind == Kind::Boolean) return std::includes(a.strong.begin(), a.strong.end(),
                                                          b.strong.begin(), b.strong.end());
        if (!std::includes(a.strong.begin(), a.strong.end(), b.strong.begin(), b.strong.end()))
            return false;
        for (auto& blk : b.weak) {
            bool in_strong = std::all_of(blk.begin(), blk.end(), [&](const SignedElem& x) {
                return std::binary_search(a.strong.begin(), a.strong.end(), x.e);
            });
            if (in_strong) continue;
            bool found = false;
            for (auto& host : a.weak) {
                std::optional<int> flip;  // blk sign = flip * host sign, fixed per block
                bool ok = true;
                for (auto& x : blk) {
                    auto it = std::find_if(host.begin(), host.end(),
                                           [&](const SignedElem& y) { return y.e == x.e; });
                    if (it == host.end()) { ok = false; break; }
                    int f = x.s * it->s;
                    if (!flip) flip = f;
                    else if (*flip != f) { ok = false; break; }
                }
                if (ok) { found = true; break; }
            }
            if (!found) return false;
        }
        return true;
    }

    /// Image under a signed permutation: element e goes to perm[e-1]
    /// carrying sign signs[e-1]. A-kind ignores the signs.
    Subspace act(const std::vector<long>& perm, const std::vector<int>& signs) const {
        if (kind == Kind::Generic) throw std::invalid_argument("Subspace::act: generic unsupported");
        Subspace s;
        s.kind = kind;
        s.n = n;
        for (long e : strong) s.strong.push_back(perm[static_cast<size_t>(e - 1)]);
        for (auto& b : weak) {
            std::vector<SignedElem> w;
            for (auto& x : b)
                w.push_back({perm[static_cast<size_t>(x.e - 1)],
                             kind == Kind::A ? +1 : x.s * signs[static_cast<size_t>(x.e - 1)]});
            s.weak.push_back(std::move(w));
        }
        s.canonicalize();
        return s;
    }

private:
    struct SignedUF {
        std::vector<long> parent;
        std::vector<int> sign;   // sign relative to parent chain root
        std::vector<bool> zero;  // component forced to zero (strong)
        explicit SignedUF(long n) : parent(static_cast<size_t>(n)), sign(static_cast<size_t>(n), 1),
                                    zero(static_cast<size_t>(n), false) {
            std::iota(parent.begin(), parent.end(), 0L);
        }
        std::pair<long, int> find(long x) {
            if (parent[static_cast<size_t>(x)] == x) return {x, 1};
            auto [r, s] = find(parent[static_cast<size_t>(x)]);
            parent[static_cast<size_t>(x)] = r;
            sign[static_cast<size_t>(x)] *= s;
            return {r, sign[static_cast<size_t>(x)]};
        }
        void mark_zero(long e) {
            zero[static_cast<size_t>(find(e - 1).first)] = true;
        }
        void unite(long ea, long eb, int rel) {
            auto [ra, sa] = find(ea - 1);
            auto [rb, sb] = find(eb - 1);
            if (ra == rb) {
                if (sa * sb != rel) zero[static_cast<size_t>(ra)] = true;
                return;
            }
            bool z = zero[static_cast<size_t>(ra)] || zero[static_cast<size_t>(rb)];
            parent[static_cast<size_t>(rb)] = ra;
            sign[static_cast<size_t>(rb)] = sa * sb * rel;
            zero[static_cast<size_t>(ra)] = z;
        }
        Subspace extract(Kind k, long n) {
            std::map<long, std::vector<SignedElem>> comps;
            for (long i = 0; i < n; ++i) {
                auto [r, s] = find(i);
                comps[r].push_back({i + 1, s});
            }
            Subspace out;
            out.kind = k;
            out.n = n;
            for (auto& [r, elems] : comps) {
                if (elems.size() < 2 && !zero[static_cast<size_t>(r)]) continue;
                if (k != Kind::A && zero[static_cast<size_t>(r)]) {
                    for (auto& x : elems) out.strong.push_back(x.e);
                } else {
                    out.weak.push_back(elems);
                }
            }
            out.canonicalize();
            return out;
        }
    };

    void canonicalize() {
        std::sort(strong.begin(), strong.end());
        strong.erase(std::unique(strong.begin(), strong.end()), strong.end());
        for (long e : strong)
            if (e < 1 || e > n) throw std::invalid_argument("Subspace: element out of range");
        std::vector<std::vector<SignedElem>> keep;
        for (auto& b : weak) {
            std::sort(b.begin(), b.end(),
                      [](const SignedElem& x, const SignedElem& y) { return x.e < y.e; });
            for (size_t i = 0; i + 1 < b.size(); ++i)
                if (b[i].e == b[i + 1].e) throw std::invalid_argument("Subspace: repeated element in block");
            if (b.size() < 2) continue;  // weak singleton is the zero subspace
            for (auto& x : b)
                if (x.e < 1 || x.e > n) throw std::invalid_argument("Subspace: element out of range");
            if (kind == Kind::A)
                for (auto& x : b) x.s = +1;
            else if (b.front().s < 0)
                for (auto& x : b) x.s = -x.s;
            keep.push_back(std::move(b));
        }
        std::sort(keep.begin(), keep.end(),
                  [](const auto& x, const auto& y) { return x.front().e < y.front().e; });
        weak = std::move(keep);
        if (kind == Kind::A && !strong.empty())
            throw std::invalid_argument("Subspace: A-kind has no strong set");
        if (kind == Kind::Boolean && !weak.empty())
            throw std::invalid_argument("Subspace: boolean kind has no weak blocks");
        if (kind == Kind::D && strong.size() == 1)
            throw std::invalid_argument("Subspace: D strong set must have size >= 2");
        // disjointness across all blocks
        std::vector<bool> used(static_cast<size_t>(n), false);
        auto touch = [&](long e) {
            if (used[static_cast<size_t>(e - 1)])
                throw std::invalid_argument("Subspace: overlapping blocks");
            used[static_cast<size_t>(e - 1)] = true;
        };
        for (long e : strong) touch(e);
        for (auto& b : weak)
            for (auto& x : b) touch(x.e);
    }
};

/// Either an unsigned form (A uses lambda only) or a singular form; the
/// sign field carries the D sign class when defined.
inline SingularPartition form_of(const Subspace& s) {
    if (s.kind == Kind::Boolean || s.kind == Kind::Generic)
        throw std::invalid_argument("form_of: unsupported kind");
    std::vector<long> parts;
    for (auto& b : s.weak) parts.push_back(static_cast<long>(b.size()));
    long r = static_cast<long>(s.strong.size());
    long covered = r + std::accumulate(parts.begin(), parts.end(), 0L);
    for (long i = covered; i < s.n; ++i) parts.push_back(1);
    Partition lambda(parts);
    int sign = 0;
    if (s.kind == Kind::D && r == 0 && s.n % 2 == 0 && lambda.all_even()) {
        long minus = 0;
        for (auto& b : s.weak)
            for (auto& x : b)
                if (x.s < 0) ++minus;
        sign = minus % 2 == 0 ? +1 : -1;
    }
    return SingularPartition(r, std::move(lambda), sign);
}

/// Number of set partitions of an m-element set with block sizes lambda
/// (all parts, singletons included), times nothing else.
inline Int shape_count(const Partition& lambda) {
    long m = lambda.n();
    Int t = factorial(m);
    for (long p : lambda.parts) t /= factorial(p);
    std::map<long, long> mult;
    for (long p : lambda.parts) ++mult[p];
    for (auto& [p, c] : mult) t /= factorial(c);
    return t;
}

/// How many subspaces of the given form exist in the arrangement closure.
inline Int count_of_form(Kind kind, long n, const SingularPartition& form) {
    if (kind == Kind::A) {
        if (form.r != 0 || form.sign != 0) throw std::invalid_argument("count_of_form: bad A form");
        if (form.lambda.n() != n) throw std::invalid_argument("count_of_form: wrong n");
        return shape_count(form.lambda);
    }
    if (kind != Kind::B && kind != Kind::D) throw std::invalid_argument("count_of_form: unsupported kind");
    if (form.n() != n) throw std::invalid_argument("count_of_form: wrong n");
    long r = form.r;
    const Partition& l = form.lambda;
    Int c = binomial(n, r) * pow2(n - r - l.length()) * shape_count(l);
    if (form.sign != 0) {
        if (kind != Kind::D || r != 0 || !l.all_even())
            throw std::invalid_argument("count_of_form: sign class undefined for this form");
        c /= 2;
    }
    return c;
}

}  // namespace dcp

#endif
