#include <doctest.h>

#include "oracles.hpp"
#include "steinitz/cyclotomic.hpp"
#include "steinitz/errors.hpp"
#include "steinitz/group_spec.hpp"

using namespace steinitz;

namespace {

/*
 * W(k, E) by brute force: compose the reduced forms representing the
 * qualifying primes below a bound.
 */
std::set<oracle::Form> w_oracle(i64 d, i64 m, std::vector<i64> const & s, i64 bound)
{
    std::vector<oracle::Form> forms = oracle::reduced_forms(d);
    std::vector<oracle::Form> gens;
    for (i64 p = 2; p <= bound; ++p) {
        if (!oracle::trial_prime(p) || m % p == 0)
            continue;
        if (std::find(s.begin(), s.end(), p % m) == s.end())
            continue;
        for (oracle::Form const & f : oracle::forms_representing(forms, p))
            gens.push_back(f);
    }
    return oracle::form_closure(d, gens);
}

std::set<oracle::Form> as_forms(ClassSubgroup const & s)
{
    std::set<oracle::Form> out;
    for (std::size_t i : s.members()) {
        QuadForm f = s.parent()->forms()[i];
        out.insert({f.a, f.b, f.c});
    }
    return out;
}

} // namespace

TEST_CASE("unit subgroups")
{
    CHECK(CycloSubgroup::units(7).members() == std::vector<i64>{1, 2, 3, 4, 5, 6});
    CHECK(CycloSubgroup::units(1).members() == std::vector<i64>{0});
    CHECK(CycloSubgroup::generate(7, {2}).members() == std::vector<i64>{1, 2, 4});
    CHECK_THROWS_AS(CycloSubgroup(7, {1, 2}), invalid_input);
    CHECK_THROWS_AS(CycloSubgroup(6, {1, 3}), invalid_input);
    CHECK(CycloSubgroup(7, {1, 6}).is_subset_of(CycloSubgroup::units(7)));
}

TEST_CASE("Galois groups of cyclotomic extensions")
{
    CHECK(galois_group(QuadField::rationals(), 7).members() == std::vector<i64>{1, 2, 3, 4, 5, 6});
    CHECK(galois_group(QuadField::imaginary(-23), 7).order() == 6);
    CHECK(galois_group(QuadField::imaginary(-3), 3).members() == std::vector<i64>{1});
    CHECK(galois_group(QuadField::imaginary(-4), 8).members() == std::vector<i64>{1, 5});
    CHECK(galois_group(QuadField::imaginary(-23), 1).members() == std::vector<i64>{0});
    /* index 2 exactly when D | m */
    for (i64 d : {-3, -4, -7, -8, -15, -20, -23})
        for (i64 m = 1; m <= 60; ++m) {
            std::size_t full = CycloSubgroup::units(m).order();
            std::size_t g = galois_group(QuadField::imaginary(d), m).order();
            REQUIRE(g == (m % d == 0 ? full / 2 : full));
        }
}

TEST_CASE("G_{k,mu,tau}")
{
    QuadField q = QuadField::rationals();
    AbelianGroup c7 = AbelianGroup::cyclic(7);
    GroupTree trivial = GroupTree::abelian(AbelianGroup());
    Action none = validate_action(c7, trivial, {});
    CHECK(g_k_mu_tau(q, trivial, none, c7, AbElement{{1}}).members() == std::vector<i64>{1});

    GroupTree const & d5 = corpus_tree("d5");
    CHECK(g_k_mu_tau(q, d5.quotient(), d5.action(), d5.kernel(), AbElement{{2}}).members()
          == std::vector<i64>{1, 4});

    GroupTree const & f21 = corpus_tree("frobenius21");
    CHECK(g_k_mu_tau(q, f21.quotient(), f21.action(), f21.kernel(), AbElement{{1}}).members()
          == std::vector<i64>{1, 2, 4});
    CHECK_THROWS_AS(g_k_mu_tau(q, f21.quotient(), f21.action(), f21.kernel(), AbElement{{0}}), invalid_input);

    /* over Q(sqrt(-3)) only the part inside Gal(k(zeta_3)/k) = {1} survives */
    GroupTree const & d3 = corpus_tree("d3");
    CHECK(g_k_mu_tau(QuadField::imaginary(-3), d3.quotient(), d3.action(), d3.kernel(), AbElement{{1}}).members()
          == std::vector<i64>{1});

    for (CorpusEntry const & e : builtin_corpus()) {
        if (e.tree.kind() != GroupTree::Kind::semidirect)
            continue;
        AbelianGroup const & h = e.tree.kernel();
        for (i64 d : {0, -3, -7, -23})
            for (AbElement const & tau : h.elements())
                if (!h.is_identity(tau)) {
                    QuadField k = QuadField::from_discriminant(d);
                    CycloSubgroup g = g_k_mu_tau(k, e.tree.quotient(), e.tree.action(), h, tau);
                    CHECK(g.is_subset_of(galois_group(k, h.element_order(tau))));
                }
    }
}

TEST_CASE("fixed field descriptors")
{
    FixedFieldDescriptor a = fixed_field_descriptor(CycloSubgroup(7, {1, 6}));
    FixedFieldDescriptor b = fixed_field_descriptor(CycloSubgroup::generate(7, {6}));
    CHECK(a == b);
    CHECK(a.to_string() == "E(7;1,6)");
    CHECK_FALSE(a == fixed_field_descriptor(CycloSubgroup::trivial(7)));
    CHECK_FALSE(a == fixed_field_descriptor(CycloSubgroup::units(7)));
}

TEST_CASE("W-groups: examples")
{
    CHECK(w_group(class_group(0), CycloSubgroup::trivial(5)).group.is_trivial());

    auto cg23 = class_group(-23);
    CHECK(w_group(cg23, CycloSubgroup::trivial(1)).group.is_full());
    WResult w = w_group(cg23, CycloSubgroup::trivial(3));
    CHECK(w.group.is_full());
    CHECK(w.cert.reached_full);
    /* 59 = 1 mod 3 splits in k but its prime is principal; 13 is not */
    CHECK(prime_class(*cg23, 59) == cg23->principal());
    CHECK(prime_class(*cg23, 13) != cg23->principal());
    CHECK(w.cert.witness_primes == std::vector<i64>{13});

    CHECK(w_group(class_group(-39), CycloSubgroup::trivial(3)).group.order() == 2);
    CHECK(w_group(class_group(-15), CycloSubgroup::trivial(3)).group.is_trivial());

    CHECK_THROWS_AS(w_group(class_group(-3), CycloSubgroup(3, {1, 2})), invalid_input);
    WOptions tiny;
    tiny.initial_bound = 2;
    tiny.ceiling = 5;
    CHECK_THROWS_AS(w_group(cg23, CycloSubgroup::trivial(3), tiny), enumeration_ceiling);
    WOptions over;
    over.initial_bound = 100;
    over.ceiling = 50;
    CHECK_THROWS_AS(w_group(cg23, CycloSubgroup::trivial(3), over), invalid_input);
}

TEST_CASE("W-groups agree with the represented-primes oracle")
{
    struct Case {
        i64 d, m;
        std::vector<i64> s;
    };
    std::vector<Case> cases = {
        {-23, 3, {1}},  {-39, 3, {1}}, {-15, 3, {1}}, {-47, 5, {1}}, {-71, 7, {1, 6}},
        {-84, 4, {1}},  {-260, 3, {1}}, {-39, 5, {1, 4}}, {-3299, 3, {1}}, {-20, 5, {1}},
    };
    for (Case const & c : cases) {
        auto cg = class_group(c.d);
        WResult w = w_group(cg, CycloSubgroup(c.m, c.s));
        CHECK_MESSAGE(as_forms(w.group) == w_oracle(c.d, c.m, c.s, 3000), c.d);
    }
}

TEST_CASE("W over the full Galois group is the class group")
{
    for (i64 d = -3; d >= -5000; --d) {
        if (!is_fundamental_discriminant(d))
            continue;
        auto cg = class_group(d);
        for (i64 m : {1, 3}) {
            WResult w = w_group(cg, galois_group(cg->field(), m));
            REQUIRE_MESSAGE(w.group.is_full(), d);
        }
    }
}

TEST_CASE("W monotone in S and stable under a 4x bound")
{
    for (i64 d : {-23, -39, -47, -71, -84, -3299}) {
        auto cg = class_group(d);
        for (i64 m : {3, 5, 7, 9, 15}) {
            CycloSubgroup gal = galois_group(cg->field(), m);
            CycloSubgroup one = CycloSubgroup::trivial(m);
            std::vector<i64> pm;
            for (i64 a : gal.members())
                if (a == 1 || a == m - 1)
                    pm.push_back(a);
            CycloSubgroup mid(m, pm);
            WResult w1 = w_group(cg, one);
            WResult w2 = w_group(cg, mid);
            WResult w3 = w_group(cg, gal);
            CHECK(subgroup_contains(w2.group, w1.group));
            CHECK(subgroup_contains(w3.group, w2.group));
            WOptions big;
            big.initial_bound = 4 * w1.cert.initial_bound;
            CHECK(w_group(cg, one, big).group == w1.group);
        }
    }
}
