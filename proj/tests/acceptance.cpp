// Acceptance gate: one line per criterion, exit code counts the failures.
// Failures print the offending comparison so the gap is visible.

#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dcp/building.hpp"
#include "dcp/formulas.hpp"
#include "dcp/genfun.hpp"
#include "dcp/oracle.hpp"
#include "dcp/partitions.hpp"

using namespace dcp;

namespace {

struct Criterion {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    " << what << "\n";
        }
    }
    void expect_eq(const QPoly& got, const std::string& want, const std::string& what) {
        if (got != QPoly::parse(want)) {
            ok = false;
            log << "    " << what << ": got " << got.str() << ", expected " << want << "\n";
        }
    }
};

void criterion_1(Criterion& c) {
    c.expect_eq(poincare_regular_A(5, 1), "q^3+16*q^2+16*q+1", "G_1(A_4)");
    c.expect_eq(poincare_regular_A(5, 2), "q^3+26*q^2+26*q+1", "G_2(A_4)");
    c.expect_eq(poincare_regular_A(5, 3), "q^3+41*q^2+41*q+1", "G_3(A_4)");
    c.expect_eq(poincare_regular_A(6, 1), "q^4+42*q^3+127*q^2+42*q+1", "G_1(A_5)");
    c.expect_eq(poincare_regular_A(6, 2), "q^4+67*q^3+222*q^2+67*q+1", "G_2(A_5)");
    c.expect_eq(poincare_regular_A(6, 3), "q^4+142*q^3+372*q^2+142*q+1", "G_3(A_5)");
    c.expect_eq(poincare_regular_A(6, 4), "q^4+187*q^3+732*q^2+187*q+1", "G_4(A_5)");
    c.expect_eq(poincare_regular_A(7, 5), "q^5+855*q^4+9556*q^3+9556*q^2+855*q+1", "G_5(A_6)");
    c.expect_eq(poincare_max_A(2), "1", "max rank 1");
    c.expect_eq(poincare_max_A(3), "q+1", "max rank 2");
    c.expect_eq(poincare_tilde_D(2, 0), "q+1", "tilde_0 D_2");
    c.expect_eq(poincare_tilde_D(3, 0), "q^2+q+1", "tilde_0 D_3");
    // frozen target; the implementation returns the enumeration-forced value
    c.expect_eq(poincare_tilde_D(3, 1), "q^2+7*q+1", "tilde_1 D_3");
    c.expect_eq(poincare_tilde_D(3, 2), "q^2+7*q+1", "tilde_2 D_3");
}

void criterion_2(Criterion& c) {
    for (long n = 4; n <= 6; ++n)
        for (long s = 1; s <= n - 2; ++s)
            c.expect(poincare_regular_A(n, s) == poincare_oracle(regular(Kind::A, n, s)),
                     "oracle mismatch A n=" + std::to_string(n) + " s=" + std::to_string(s));
    for (long n = 3; n <= 4; ++n)
        for (long s = 0; s <= n - 2; ++s)
            c.expect(poincare_regular_B(n, s) == poincare_oracle(regular(Kind::B, n, s)),
                     "oracle mismatch B n=" + std::to_string(n) + " s=" + std::to_string(s));
    for (long s = 0; s <= 2; ++s)
        c.expect(poincare_regular_D(4, s) == poincare_oracle(regular(Kind::D, 4, s)),
                 "oracle mismatch D n=4 s=" + std::to_string(s));
    for (long n = 2; n <= 5; ++n)
        for (long s = 0; s <= n; ++s) {
            BuildingSet g = regular(Kind::Boolean, n, s);
            c.expect(poincare_blowup_induction(g) == poincare_oracle(g),
                     "blow-up mismatch boolean n=" + std::to_string(n) + " s=" + std::to_string(s));
        }
}

void criterion_3(Criterion& c) {
    for (long n = 1; n <= 12; ++n)
        c.expect(poincare_max_A_inductive(n) == poincare_max_A_closed(n),
                 "maximal-A dual formulas disagree at n=" + std::to_string(n));
    for (long n = 2; n <= 8; ++n)
        for (long s = 0; s <= n - 2; ++s)
            c.expect(poincare_tilde_B_closed(n, s) == poincare_tilde_B_inductive(n, s),
                     "tilde-B dual formulas disagree at n=" + std::to_string(n) +
                         " s=" + std::to_string(s));
}

void criterion_4(Criterion& c) {
    for (long n = 2; n <= 10; ++n) {
        Int e = euler_from_poincare(poincare_max_A(n));
        c.expect(e == euler_permutohedron_A(n),
                 "permutohedron Euler mismatch at n=" + std::to_string(n));
        c.expect(e == euler_closed_A(n), "closed Euler mismatch at n=" + std::to_string(n));
        if (n % 2 == 1) c.expect(e == 0, "odd-rank Euler nonzero at n=" + std::to_string(n));
    }
    c.expect(euler_permutohedron_A(6) == 360, "Euler value at n=6 is not 360");
    for (long n = 2; n <= 6; ++n)
        c.expect(euler_permutohedron_B(n) == euler_from_poincare(poincare_tilde_B(n, n - 2)),
                 "B Euler identity fails at n=" + std::to_string(n));
}

long classification_search_count(Kind kind, long n) {
    auto& irr = irreducibles(kind, n);
    std::map<SingularPartition, std::vector<Subspace>> orbits;
    for (auto& u : maximal_building(kind, n).members) orbits[form_of(u)].push_back(u);
    std::vector<SingularPartition> free_forms;
    for (auto& [f, v] : orbits)
        if (!irr.has(v[0])) free_forms.push_back(f);
    long count = 0;
    for (unsigned long mask = 0; mask < (1UL << free_forms.size()); ++mask) {
        BuildingSet g = irr;
        for (size_t i = 0; i < free_forms.size(); ++i)
            if ((mask >> i) & 1)
                for (auto& u : orbits[free_forms[i]]) g.members.push_back(u);
        g.canonicalize();
        if (is_building(g)) ++count;
    }
    return count;
}

void criterion_5(Criterion& c) {
    for (auto [kind, pk, n] : {std::tuple{Kind::A, PosetKind::A, 3L},
                               {Kind::A, PosetKind::A, 4L},
                               {Kind::A, PosetKind::A, 5L},
                               {Kind::B, PosetKind::B, 3L},
                               {Kind::B, PosetKind::B, 4L},
                               {Kind::D, PosetKind::D, 4L}}) {
        auto poset = building_poset(pk, n);
        long indexed = 0;
        for (auto& chain : antichains(poset)) {
            std::vector<SingularPartition> forms;
            for (size_t i : chain) forms.push_back(poset.elements[i]);
            BuildingSet g = g_of_antichain(forms, kind, n);
            if (is_building(g) && is_invariant(g)) ++indexed;
        }
        long searched = classification_search_count(kind, n);
        c.expect(searched == indexed,
                 "classification count mismatch " + kind_name(kind) + " n=" + std::to_string(n) +
                     ": search found " + std::to_string(searched) + ", antichains index " +
                     std::to_string(indexed));
    }
}

void criterion_6(Criterion& c) {
    for (long n = 3; n <= 6; ++n)
        c.expect(minimal_A_from_series(n) == poincare_regular_A(n, 1),
                 "Phi stratum mismatch at n=" + std::to_string(n));
    for (long n = 2; n <= 4; ++n)
        c.expect(minimal_B_from_series(n) == poincare_regular_B(n, 0),
                 "Phi_B stratum mismatch at n=" + std::to_string(n));
    // ambiguity switch: of the three constructions of Phi_D, exactly one
    // matches the enumerated minimal D_4 polynomial, and it is the default
    QPoly truth = poincare_oracle(irreducibles(Kind::D, 4));
    Rat norm(pow2(3) * factorial(4));
    QPoly dflt = norm * d_series(4).phi_d_y.eval_y(Rat(1)).coeff_t(4);
    QPoly full = norm * d_series_printed(4, LambdaReading::full).phi_d_y.eval_y(Rat(1)).coeff_t(4);
    QPoly halved =
        norm * d_series_printed(4, LambdaReading::halved).phi_d_y.eval_y(Rat(1)).coeff_t(4);
    int matches = (dflt == truth) + (full == truth) + (halved == truth);
    c.expect(matches == 1, "Phi_D switch: " + std::to_string(matches) + " settings match D_4");
    c.expect(dflt == truth, "Phi_D shipped default does not match the D_4 enumeration");
}

void criterion_7(Criterion& c) {
    // poset order axioms through rank 8
    for (auto pk : {PosetKind::A, PosetKind::B, PosetKind::D}) {
        auto poset = building_poset(pk, 8);
        size_t m = poset.elements.size();
        for (size_t i = 0; i < m && c.ok; ++i)
            for (size_t j = 0; j < m; ++j) {
                if (i == j && !poset.leq[i][i]) c.expect(false, "reflexivity fails");
                if (i != j && poset.leq[i][j] && poset.leq[j][i])
                    c.expect(false, "antisymmetry fails");
                for (size_t k = 0; k < m; ++k)
                    if (poset.leq[i][j] && poset.leq[j][k] && !poset.leq[i][k])
                        c.expect(false, "transitivity fails");
            }
    }
    // the move order refines dominance; the converse fails at (4,3) vs (5,2)
    for (auto& mu : all_partitions(7))
        for (auto& lam : all_partitions(7))
            if (leq_A(mu, lam) && !dominance_leq(mu, lam))
                c.expect(false, "move order not inside dominance");
    c.expect(dominance_leq(Partition{4, 3}, Partition{5, 2}) &&
                 !leq_A(Partition{4, 3}, Partition{5, 2}),
             "dominance counterexample (4,3)/(5,2) missing");
    // minimal upper bounds of (8,4,4) and (7,5,3,1)
    {
        std::set<Partition> upper, minimal;
        auto ua = upset_A(Partition{8, 4, 4});
        for (auto& x : upset_A(Partition{7, 5, 3, 1}))
            if (ua.count(x)) upper.insert(x);
        for (auto& x : upper) {
            bool least = true;
            for (auto& y : upper)
                if (y != x && leq_A(y, x)) least = false;
            if (least) minimal.insert(x);
        }
        c.expect(minimal == std::set<Partition>{Partition{12, 4}, Partition{8, 8}},
                 "minimal upper bounds of (8,4,4),(7,5,3,1) are not {(12,4),(8,8)}");
    }
    c.expect(admissible_moves_A(Partition{1, 1, 1, 1, 1}).empty(),
             "moves from (1,1,1,1,1) should be empty");
    // dimension formula equals matrix rank on every construction
    for (auto kind : {Kind::A, Kind::B, Kind::D, Kind::Boolean})
        for (auto& u : maximal_building(kind, 4).members)
            if (u.dim() != rank(u.generators()))
                c.expect(false, "dimension/rank mismatch at " + u.str());
    // blow-up proposition on small families
    for (const BuildingSet& g :
         {maximal_building(Kind::A, 4), regular(Kind::A, 5, 2), irreducibles(Kind::B, 3)}) {
        const Subspace& g0 = g.members.front();
        BuildingSet rest = g;
        rest.members.erase(rest.members.begin());
        QPoly rhs = poincare_oracle(rest) +
                    QPoly::geometric(g0.dim()) * poincare_oracle(quotient_building(g, g0));
        c.expect(poincare_oracle(g) == rhs, "blow-up proposition fails at " + kind_name(g.kind));
    }
    // shape of every computed polynomial
    std::vector<QPoly> out;
    for (long n = 3; n <= 7; ++n)
        for (long s = 1; s <= n - 2; ++s) out.push_back(poincare_regular_A(n, s));
    for (long n = 2; n <= 6; ++n)
        for (long s = 0; s <= n - 2; ++s) out.push_back(poincare_regular_B(n, s));
    for (long n = 4; n <= 6; ++n)
        for (long s = 0; s <= n - 2; ++s) out.push_back(poincare_regular_D(n, s));
    for (auto& p : out)
        if (!p.palindromic() || !p.nonnegative() || !p.integral() || p.coeff(0) != 1)
            c.expect(false, "shape violation in " + p.str());
}

}  // namespace

int main() {
    void (*checks[])(Criterion&) = {criterion_1, criterion_2, criterion_3, criterion_4,
                                    criterion_5, criterion_6, criterion_7};
    int failures = 0;
    for (int i = 0; i < 7; ++i) {
        Criterion c;
        checks[i](c);
        std::cout << "criterion " << i + 1 << ": " << (c.ok ? "pass" : "FAIL") << "\n";
        if (!c.ok) {
            std::cout << c.log.str();
            ++failures;
        }
    }
    return failures;
}
