#include <doctest.h>

#include <thread>

#include "steinitz/errors.hpp"
#include "steinitz/group_spec.hpp"
#include "steinitz/realizable.hpp"

using namespace steinitz;

namespace {

GroupTree leaf(std::vector<i64> f)
{
    return GroupTree::abelian(AbelianGroup(std::move(f)));
}

GroupTree trivially_extended(AbelianGroup const & h)
{
    GroupTree one = leaf({});
    return GroupTree::semidirect(h, one, validate_action(h, one, {}));
}

std::vector<i64> const regression_fields = {-23, -47, -71};

} // namespace

TEST_CASE("admissibility gate")
{
    CHECK_NOTHROW(check_admissible(corpus_tree("d15")));
    CHECK_NOTHROW(check_admissible(corpus_tree("c5_d3")));
    CHECK_THROWS_AS(check_admissible(corpus_tree("c3_c4")), inadmissible_tree);
    CHECK_THROWS_AS(check_admissible(leaf({4})), inadmissible_tree);
    CHECK_THROWS_AS(check_admissible(leaf({2, 2})), inadmissible_tree);
    CHECK_THROWS_AS(check_admissible(GroupTree::direct(leaf({2}), leaf({2}), false)), inadmissible_tree);
    CHECK_THROWS_AS(rt(class_group(-23), leaf({6})), inadmissible_tree);
}

TEST_CASE("R_t(C(2)) is the class group")
{
    for (i64 d = 0; d >= -400; --d) {
        if (d != 0 && !is_fundamental_discriminant(d))
            continue;
        auto cg = class_group(d);
        REQUIRE(rt(cg, leaf({2})).subgroup.is_full());
    }
}

TEST_CASE("R_t examples")
{
    auto cg = class_group(-23);
    CHECK(rt(cg, leaf({3})).subgroup.is_full());
    CHECK(rt(cg, corpus_tree("d3")).subgroup.is_full());
    CHECK(subgroup_power(ClassSubgroup::full(cg), 3).is_trivial());
    CHECK(rt(class_group(0), corpus_tree("frobenius21")).subgroup.is_trivial());

    auto cg39 = class_group(-39);
    RtResult r = rt(cg39, leaf({3}));
    CHECK(r.subgroup.order() == 2);
    CHECK(r.subgroup.index() == 2);
    CHECK(rt(class_group(-15), leaf({3})).subgroup.is_trivial());
    CHECK(rt(class_group(-3299), leaf({3, 3})).subgroup.order() == 3);
}

TEST_CASE("dihedral path")
{
    CHECK(rt_dihedral(class_group(-23), 3).subgroup.is_full());
    CHECK(rt_dihedral(class_group(0), 3).subgroup.is_trivial());
    CHECK(rt_dihedral(class_group(-47), 5).subgroup.is_full());
    CHECK_THROWS_AS(rt_dihedral(class_group(-23), 4), invalid_input);
    for (i64 d : {-23, -47, -71, -39, -3299, -84})
        for (i64 n : {3, 5, 7, 9, 15}) {
            auto cg = class_group(d);
            CHECK(rt_dihedral(cg, n).subgroup == rt(cg, GroupTree::dihedral(n)).subgroup);
        }
}

TEST_CASE("leaf, trivial semidirect and direct product agree")
{
    for (i64 d : regression_fields) {
        auto cg = class_group(d);
        for (auto const & f : std::vector<std::vector<i64>>{{3}, {5}, {9}, {3, 3}, {15}}) {
            AbelianGroup h(f);
            CHECK(rt(cg, GroupTree::abelian(h)).subgroup == rt(cg, trivially_extended(h)).subgroup);
        }
        CHECK(rt(cg, leaf({15})).subgroup == rt(cg, corpus_tree("direct_c3_c5")).subgroup);
        CHECK(rt(cg, GroupTree::direct(leaf({5}), leaf({3}))).subgroup
              == rt(cg, GroupTree::direct(leaf({3}), leaf({5}))).subgroup);
        CHECK(rt(cg, corpus_tree("d3xc5")).subgroup
              == rt(cg, GroupTree::direct(leaf({5}), GroupTree::dihedral(3))).subgroup);
    }
}

TEST_CASE("results are subgroups, traces replay, dedupe is invisible")
{
    for (i64 d : {0, -23, -39, -15, -47, -71, -84, -3299}) {
        auto cg = class_group(d);
        RtEngine engine(cg);
        RtOptions plain;
        plain.dedupe = false;
        RtEngine slow(cg, plain);
        for (CorpusEntry const & e : builtin_corpus()) {
            if (e.name == "c3_c4")
                continue;
            RtResult r = engine.rt(e.tree);
            CHECK(r.subgroup.is_closed());
            CHECK(trace_matches(r));
            CHECK(rt_trace_replay(cg, r.trace) == r.subgroup);
            CHECK(slow.rt(e.tree).subgroup == r.subgroup);
        }
    }
}

TEST_CASE("trace tampering is detected")
{
    auto cg = class_group(-23);
    RtResult r = rt(cg, leaf({3}));
    REQUIRE(trace_matches(r));
    REQUIRE(!r.trace.back().w_terms.empty());
    RtResult bad = r;
    bad.trace.back().w_terms[0].generators.clear();
    CHECK_FALSE(trace_matches(bad));
    CHECK(rt_trace_replay(cg, {}).is_trivial());

    RtResult fwd = rt(cg, corpus_tree("d3"));
    fwd.trace.back().powers[0].child = 99;
    CHECK_THROWS_AS(rt_trace_replay(cg, fwd.trace), invalid_input);
}

TEST_CASE("doubling the prime bound changes nothing")
{
    for (i64 d : regression_fields) {
        auto cg = class_group(d);
        for (char const * name : {"c3", "c15", "d9", "frobenius21", "c3xc3_c2"}) {
            RtResult a = rt(cg, corpus_tree(name));
            RtOptions o;
            o.prime_bound = 2 * a.trace.back().w_terms.at(0).cert.initial_bound;
            CHECK(rt(cg, corpus_tree(name), o).subgroup == a.subgroup);
        }
    }
}

TEST_CASE("engine is safe to share between threads")
{
    auto cg = class_group(-3299);
    RtEngine shared(cg);
    std::vector<std::string> names;
    for (CorpusEntry const & e : builtin_corpus())
        if (e.name != "c3_c4")
            names.push_back(e.name);
    std::vector<std::vector<std::size_t>> got(4);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < got.size(); ++t)
        threads.emplace_back([&, t] {
            for (std::string const & n : names)
                got[t].push_back(shared.rt(corpus_tree(n)).subgroup.order());
        });
    for (auto & th : threads)
        th.join();
    for (auto const & g : got)
        CHECK(g == got[0]);
}

TEST_CASE("good-group membership")
{
    auto cg = class_group(-23);
    CHECK(good_membership_check(cg, leaf({3}), ClassSubgroup::full(cg), {}).empty());

    RtResult c3 = rt(cg, leaf({3}));
    auto rep = good_membership_check(cg, leaf({3}), c3.subgroup, {{59, 3, false}});
    REQUIRE(rep.size() == 3);
    CHECK(rep[1].property == "3");
    CHECK(rep[1].exponent == 2);
    for (GoodCheck const & g : rep)
        CHECK(g.holds);

    RtResult d3 = rt(cg, corpus_tree("d3"));
    auto rep2 = good_membership_check(cg, corpus_tree("d3"), d3.subgroup, {{2, 2, false}});
    REQUIRE(rep2.size() == 1);
    CHECK(rep2[0].exponent == 3);
    CHECK(rep2[0].holds);

    CHECK_THROWS_AS(good_membership_check(cg, leaf({3}), c3.subgroup, {{5, 3, false}}), invalid_input);
    CHECK_THROWS_AS(good_membership_check(cg, leaf({3}), c3.subgroup, {{2, 5, false}}), invalid_input);

    /* over D = -39 the C(3) classes are the squares; e = 3 tame at p = 1 mod 3 */
    auto cg39 = class_group(-39);
    RtResult r39 = rt(cg39, leaf({3}));
    for (i64 p = 7; p < 400; p += 6)
        if (is_prime(p) && splitting(p, cg39->field()) != Splitting::inert)
            for (GoodCheck const & g : good_membership_check(cg39, leaf({3}), r39.subgroup, {{p, 3, false}}))
                CHECK(g.holds);
}
