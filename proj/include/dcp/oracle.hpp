#ifndef DCP_ORACLE_HPP
#define DCP_ORACLE_HPP

#include <functional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "dcp/building.hpp"
#include "dcp/qpoly.hpp"

namespace dcp {

/// d_{H,B} = dim B - dim(sum of H); every member of H must lie strictly
/// inside B.
inline long d_H_B(const std::vector<Subspace>& h, const Subspace& b) {
    long s = 0;
    if (!h.empty()) {
        Subspace acc = h[0];
        for (auto& a : h) {
            if (!(Subspace::contains(b, a)) || a == b)
                throw std::invalid_argument("d_H_B: H must lie strictly inside B");
            acc = acc + a;
        }
        s = acc.dim();
    }
    return b.dim() - s;
}

namespace detail {

/// Shared backtracking over nested sets. Members are visited in canonical
/// (dim, text) order, so an element can strictly contain only
/// earlier-added ones; each element's d-value is therefore final at
/// insertion time. visit(chain, d) is called for every nonempty nested
/// set; returning false prunes all supersets of the current set.
template <class Visit>
void walk_nested(const BuildingSet& g, Visit visit) {
    const auto& ms = g.members;
    size_t k = ms.size();
    std::vector<size_t> chosen;
    // incomparable[i] lists chosen positions incomparable with ms[i]
    auto rec = [&](auto&& self, size_t start) -> void {
        for (size_t i = start; i < k; ++i) {
            // nestedness: every antichain {ms[i]} + U with U drawn from the
            // chosen elements incomparable to ms[i] must sum outside g
            std::vector<size_t> incomp;
            std::vector<const Subspace*> inside;
            for (size_t j : chosen) {
                if (Subspace::contains(ms[i], ms[j])) inside.push_back(&ms[j]);
                else if (Subspace::contains(ms[j], ms[i])) continue;
                else incomp.push_back(j);
            }
            bool nested = true;
            // antichains within incomp: subsets that are pairwise
            // incomparable (chosen is nested, so comparabilities inside it
            // are chains; filter per subset)
            size_t m = incomp.size();
            for (unsigned long mask = 1; nested && mask < (1UL << m); ++mask) {
                std::vector<size_t> u;
                for (size_t t = 0; t < m; ++t)
                    if ((mask >> t) & 1) u.push_back(incomp[t]);
                bool anti = true;
                for (size_t a : u)
                    for (size_t b : u)
                        if (a != b && Subspace::contains(ms[a], ms[b])) anti = false;
                if (!anti) continue;
                Subspace sum = ms[i];
                for (size_t j : u) sum = sum + ms[j];
                if (g.has(sum)) nested = false;
            }
            if (!nested) continue;
            long ssum = 0;
            if (!inside.empty()) {
                Subspace acc = *inside[0];
                for (size_t t = 1; t < inside.size(); ++t) acc = acc + *inside[t];
                ssum = acc.dim();
            }
            long d = ms[i].dim() - ssum;
            chosen.push_back(i);
            if (visit(chosen, d)) self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace detail

/// All nested subsets of the family, as sorted index lists into
/// g.members; includes the empty set.
inline std::vector<std::vector<size_t>> enumerate_nested_sets(const BuildingSet& g) {
    std::vector<std::vector<size_t>> out{{}};
    detail::walk_nested(g, [&](const std::vector<size_t>& chain, long) {
        out.push_back(chain);
        return true;
    });
    return out;
}

/// Poincaré polynomial straight from the admissible-monomial basis:
/// 1 + sum over nonempty nested sets of prod (q + ... + q^{d-1}).
inline QPoly poincare_oracle(const BuildingSet& g) {
    QPoly total(1);
    std::vector<QPoly> prod{QPoly(1)};
    detail::walk_nested(g, [&](const std::vector<size_t>& chain, long d) {
        QPoly f = QPoly::geometric(d);
        if (f.is_zero()) return false;  // no admissible exponent; prune supersets
        QPoly p = prod[chain.size() - 1] * f;
        total += p;
        if (prod.size() <= chain.size()) prod.resize(chain.size() + 1);
        prod[chain.size()] = std::move(p);
        return true;
    });
    return total;
}

/// Total Betti number by direct monomial counting (independent of the
/// polynomial assembly path).
inline Int betti_total(const BuildingSet& g) {
    Int total = 1;
    std::vector<Int> prod{Int(1)};
    detail::walk_nested(g, [&](const std::vector<size_t>& chain, long d) {
        if (d <= 1) return false;
        Int p = prod[chain.size() - 1] * Int(d - 1);
        total += p;
        if (prod.size() <= chain.size()) prod.resize(chain.size() + 1);
        prod[chain.size()] = p;
        return true;
    });
    return total;
}

/// Writes every admissible monomial as
/// "c_{1,2}^1 * c_{1,2,3}^2 : degree 3" (one line each), then the count.
inline long dump_admissible_monomials(const BuildingSet& g, std::ostream& os) {
    long count = 0;
    std::vector<long> dvals;
    detail::walk_nested(g, [&](const std::vector<size_t>& chain, long d) {
        if (d <= 1) return false;
        dvals.resize(chain.size());
        dvals[chain.size() - 1] = d;
        // all exponent choices 1..d-1 per element
        std::vector<long> expo(chain.size(), 1);
        for (;;) {
            long deg = 0;
            for (long e : expo) deg += e;
            for (size_t i = 0; i < chain.size(); ++i)
                os << (i ? " * " : "") << "c_" << g.members[chain[i]].str() << "^" << expo[i];
            os << " : degree " << deg << "\n";
            ++count;
            size_t i = 0;
            while (i < expo.size()) {
                if (++expo[i] <= dvals[i] - 1) break;
                expo[i] = 1;
                ++i;
            }
            if (i == expo.size()) break;
        }
        return true;
    });
    return count;
}

/// R_{T,G}(c_a): [a] followed by the members of g in which a is maximal
/// among t's members (proper extensions only), sorted canonically.
inline std::vector<Subspace> restriction_image(const BuildingSet& t, const BuildingSet& g,
                                               const Subspace& a) {
    if (!t.has(a)) throw std::invalid_argument("restriction_image: a not in t");
    for (auto& m : t.members)
        if (!g.has(m)) throw std::invalid_argument("restriction_image: t not a subfamily of g");
    std::vector<Subspace> out{a};
    for (auto& b : g.members) {
        if (b == a || !Subspace::contains(b, a)) continue;
        bool maximal = true;
        for (auto& c : t.members)
            if (!(c == a) && Subspace::contains(b, c) && Subspace::contains(c, a)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(b);
    }
    std::sort(out.begin() + 1, out.end(),
              [](const Subspace& x, const Subspace& y) { return x.sort_key() < y.sort_key(); });
    return out;
}

}  // namespace dcp

#endif
