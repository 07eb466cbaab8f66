#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "cli.hpp"
#include "steinitz/calculus.hpp"
#include "steinitz/classgroup.hpp"
#include "steinitz/cyclotomic.hpp"
#include "steinitz/errors.hpp"
#include "steinitz/group_spec.hpp"
#include "steinitz/realizable.hpp"

namespace steinitz::cli {

namespace {

struct Suite {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool cond, std::string const & what)
    {
        ++checks;
        if (!cond)
            failures.push_back(what);
    }
};

void suite_grouptree(Suite & s)
{
    for (CorpusEntry const & e : builtin_corpus()) {
        MultiplicationTable t = to_multiplication_table(e.tree);
        check_group_axioms(t);
        s.expect(is_solvable_a_group(t), e.name + " is a solvable A-group");
        s.expect(t.order() == static_cast<std::size_t>(e.tree.order()), e.name + " table order");
    }
}

void suite_classgroup(Suite & s, ClassGroupPtr const & cg)
{
    std::size_t const h = cg->order();
    i64 const d = cg->discriminant();
    if (!cg->field().is_rationals()) {
        std::size_t count = 0;
        for (i64 a = 1; 3 * a * a <= -d; ++a)
            for (i64 b = -a + 1; b <= a; ++b)
                if ((b * b - d) % (4 * a) == 0) {
                    QuadForm f{a, b, (b * b - d) / (4 * a)};
                    if (is_reduced(f) && std::gcd(std::gcd(a, b), f.c) == 1)
                        ++count;
                }
        s.expect(count == h, "class number agrees with a direct count of reduced forms");
    }
    std::size_t const lim = std::min<std::size_t>(h, 64);
    for (std::size_t i = 0; i < lim; ++i) {
        IdealClass x = cg->element(i);
        s.expect(cg->compose(x, cg->inverse(x)) == cg->principal(), "inverse law");
        s.expect(cg->pow(x, static_cast<i64>(h)) == cg->principal(), "Lagrange");
        for (std::size_t j = 0; j < lim; ++j) {
            IdealClass y = cg->element(j);
            s.expect(cg->compose(x, y) == cg->compose(y, x), "commutativity");
            if (!cg->field().is_rationals())
                s.expect(cg->class_of(compose(cg->form(x), cg->form(y))) == cg->compose(x, y),
                         "form composition matches the coordinates");
        }
    }
    for (i64 p = 2; p < 300; ++p) {
        if (!is_prime(p) || splitting(p, cg->field()) == Splitting::inert)
            continue;
        IdealClass x = prime_class(*cg, p);
        s.expect(cg->compose(x, prime_class(*cg, p, true)) == cg->principal(),
                 "conjugate primes over " + std::to_string(p) + " are inverse");
    }
}

void suite_cyclotomic(Suite & s, ClassGroupPtr const & cg)
{
    for (i64 m : {1, 3, 4, 5, 7, 8}) {
        WResult w = w_group(cg, galois_group(cg->field(), m));
        s.expect(w.group.is_full(), "W(k, k) is Cl(k) for modulus " + std::to_string(m));
        WResult w1 = w_group(cg, CycloSubgroup::trivial(m));
        s.expect(subgroup_contains(w.group, w1.group), "W monotone in S for modulus " + std::to_string(m));
    }
    for (CorpusEntry const & e : builtin_corpus()) {
        if (e.tree.kind() != GroupTree::Kind::semidirect)
            continue;
        AbelianGroup const & h = e.tree.kernel();
        for (AbElement const & tau : h.elements()) {
            if (h.is_identity(tau))
                continue;
            CycloSubgroup g = g_k_mu_tau(cg->field(), e.tree.quotient(), e.tree.action(), h, tau);
            s.expect(g.is_subset_of(galois_group(cg->field(), h.element_order(tau))),
                     "G_{k,mu,tau} inside the Galois group for " + e.name);
        }
    }
}

void suite_calculus(Suite & s)
{
    for (i64 m = 1; m <= 400; ++m)
        for (i64 e : divisors(m))
            s.expect(mcdle_gcd(e, m).divides, "gcd lemma at e=" + std::to_string(e) + ", m=" + std::to_string(m));
    for (i64 l : {3, 5, 7, 11})
        for (i64 o = l; o <= 125; o *= l)
            for (i64 n = o; n <= 2000; n += 2 * o)
                s.expect(beta_l_three_term(l, o, n) == beta_l_two_term(l, o, n), "beta forms agree");
    for (i64 n = 1; n <= 201; n += 2)
        for (i64 e : divisors(n))
            s.expect(discriminant_exponent(e, n) % 2 == 0, "discriminant exponent even in odd degree");
}

void suite_realizable(Suite & s, ClassGroupPtr const & cg)
{
    RtEngine engine(cg);
    s.expect(engine.rt(GroupTree::abelian(AbelianGroup({2}))).subgroup.is_full(), "R_t(C(2)) = Cl(k)");
    for (CorpusEntry const & e : builtin_corpus()) {
        try {
            check_admissible(e.tree);
        } catch (inadmissible_tree const &) {
            continue;
        }
        RtResult r = engine.rt(e.tree);
        s.expect(r.subgroup.is_closed(), "R_t(" + e.name + ") is a subgroup");
        s.expect(trace_matches(r), "trace of " + e.name + " replays");
    }
    for (i64 n : {3, 5, 7}) {
        s.expect(rt_dihedral(cg, n).subgroup == engine.rt(GroupTree::dihedral(n)).subgroup,
                 "dihedral path agrees for n=" + std::to_string(n));
    }
    s.expect(engine.rt(corpus_tree("c15")).subgroup == engine.rt(corpus_tree("direct_c3_c5")).subgroup,
             "R_t(C(15)) = R_t(C(3) x C(5))");
}

} // namespace

bool run_checks(std::string const & suite, i64 disc, std::ostream & out)
{
    ClassGroupPtr cg = class_group(disc);
    std::vector<std::pair<std::string, std::function<void(Suite &)>>> suites = {
        {"grouptree", suite_grouptree},
        {"classgroup", [&](Suite & s) { suite_classgroup(s, cg); }},
        {"cyclotomic", [&](Suite & s) { suite_cyclotomic(s, cg); }},
        {"calculus", suite_calculus},
        {"realizable", [&](Suite & s) { suite_realizable(s, cg); }},
    };
    bool all_ok = true;
    for (auto const & [name, fn] : suites) {
        if (suite != "all" && suite != name)
            continue;
        Suite s;
        try {
            fn(s);
        } catch (std::exception const & e) {
            s.failures.push_back(std::string("exception: ") + e.what());
        }
        bool const pass = s.failures.empty();
        all_ok = all_ok && pass;
        out << name << ": " << (pass ? "pass" : "FAIL") << " (" << s.checks << " checks)\n";
        for (std::size_t i = 0; i < s.failures.size() && i < 5; ++i)
            out << "  " << s.failures[i] << "\n";
    }
    return all_ok;
}

} // namespace steinitz::cli
