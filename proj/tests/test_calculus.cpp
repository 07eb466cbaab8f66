#include <doctest.h>

#include <numeric>
#include <random>

#include "steinitz/calculus.hpp"
#include "steinitz/errors.hpp"

using namespace steinitz;

TEST_CASE("discriminant exponents")
{
    CHECK(discriminant_exponent(1, 15) == 0);
    CHECK(discriminant_exponent(3, 3) == 2);
    CHECK(discriminant_exponent(5, 15) == 12);
    CHECK_THROWS_AS(discriminant_exponent(4, 15), invalid_input);
    for (i64 n = 1; n < 2000; n += 2)
        for (i64 e : divisors(n))
            REQUIRE(discriminant_exponent(e, n) % 2 == 0);
}

TEST_CASE("Steinitz class from ramification")
{
    auto cg = class_group(-23);
    CHECK(steinitz_from_ramification(*cg, {}, 3) == cg->principal());
    std::vector<RamificationDatum> one{{2, 3, false}};
    CHECK(cg->form(steinitz_from_ramification(*cg, one, 3)) == QuadForm{2, 1, 3});
    std::vector<RamificationDatum> both{{2, 3, false}, {2, 3, true}};
    CHECK(steinitz_from_ramification(*cg, both, 3) == cg->principal());
    std::vector<RamificationDatum> inert{{5, 3, false}};
    CHECK_THROWS_AS(steinitz_from_ramification(*cg, inert, 3), invalid_input);
    std::vector<RamificationDatum> wild{{3, 3, false}};
    CHECK_THROWS_AS(steinitz_from_ramification(*class_group(-47), wild, 3), invalid_input);
    CHECK_THROWS_AS(steinitz_from_ramification(*cg, one, 6), invalid_input);

    /* multiplicative in the ramification list */
    auto big = class_group(-3299);
    std::mt19937 rng(3);
    std::vector<i64> primes;
    for (i64 p = 2; p < 300; ++p)
        if (is_prime(p) && splitting(p, big->field()) != Splitting::inert && p % 3 != 0 && p % 5 != 0)
            primes.push_back(p);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<RamificationDatum> a, b;
        for (int i = 0; i < 3; ++i) {
            a.push_back({primes[rng() % primes.size()], (rng() % 2) ? 3 : 5, (rng() % 2) == 1});
            b.push_back({primes[rng() % primes.size()], (rng() % 2) ? 15 : 3, (rng() % 2) == 1});
        }
        std::vector<RamificationDatum> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        REQUIRE(steinitz_from_ramification(*big, ab, 45)
                == big->compose(steinitz_from_ramification(*big, a, 45), steinitz_from_ramification(*big, b, 45)));
    }
}

TEST_CASE("tower formula")
{
    auto cg = class_group(-23);
    IdealClass x = cg->element(1);
    CHECK(tower_steinitz(*cg, cg->principal(), 5, x) == x);
    CHECK(tower_steinitz(*cg, x, 3, cg->element(2)) == cg->element(2));
    CHECK(cg->form(tower_steinitz(*cg, x, 2, cg->principal())) == QuadForm{2, -1, 3});
}

TEST_CASE("l-parts")
{
    CHECK(l_part(45, 3) == 9);
    CHECK(l_part(45, 5) == 5);
    CHECK(l_part(45, 2) == 1);
}

TEST_CASE("gcd lemma")
{
    CHECK(mcdle_gcd(3, 3).g == 2);
    CHECK(mcdle_gcd(3, 3).divides);
    CHECK(mcdle_gcd(15, 15).g == 2);
    CHECK(mcdle_gcd(21, 42).g == 4);
    CHECK(mcdle_gcd(21, 42).divides);
    CHECK_THROWS_AS(mcdle_gcd(4, 6), invalid_input);
    CHECK(mcdle_gcd(1, 6).g == 0);
    CHECK(mcdle_gcd(1, 6).divides);
    CHECK_THROWS_AS(mcdle_gcd(0, 6), invalid_input);
    for (i64 m = 1; m <= 600; ++m)
        for (i64 e : divisors(m))
            REQUIRE(mcdle_gcd(e, m).divides);
}

TEST_CASE("alpha for odd abelian groups")
{
    CHECK(alpha_abelian(AbelianGroup({3})) == 2);
    CHECK(alpha_abelian(AbelianGroup({9, 3})) == 33);
    CHECK(alpha_abelian(AbelianGroup({5})) == 4);
    CHECK_THROWS_AS(alpha_abelian(AbelianGroup({4})), invalid_input);
}

TEST_CASE("alpha_l and beta_l")
{
    AlphasL a = alphas_l(3, 3, 3);
    CHECK(a.a1 == 2);
    CHECK(a.a2 == 2);
    CHECK(a.a3 == 3);
    a = alphas_l(5, 5, 5);
    CHECK((a.a1 == 4 && a.a2 == 4 && a.a3 == 6));
    a = alphas_l(3, 9, 9);
    CHECK((a.a1 == 6 && a.a2 == 8 && a.a3 == 3));
    CHECK(a.a3_scaled == 9);
    CHECK_THROWS_AS(alphas_l(3, 5, 15), invalid_input);
    CHECK_THROWS_AS(alphas_l(3, 3, 6), invalid_input);

    CHECK(beta_l(3, 3, 3) == 1);
    CHECK(beta_l(5, 5, 5) == 2);
    CHECK(beta_l(3, 9, 27) == 3);
    CHECK(beta_l_three_term(3, 9, 27) == std::gcd(std::gcd(18, 24), 27));

    for (i64 l : {3, 5, 7, 11, 13})
        for (i64 o = l; o <= 1000; o *= l)
            for (i64 n = o; n <= 5000; n += 2 * o) {
                i64 b = beta_l(l, o, n);
                REQUIRE(theorem_exponent(l, o, 1, n) % b == 0);
            }
}

TEST_CASE("theorem exponents")
{
    CHECK(theorem_exponent(3, 3, 2, 3) == 2);
    CHECK(theorem_exponent(3, 3, 1, 3) == 1);
    CHECK(theorem_exponent(7, 7, 3, 7) == 9);
    CHECK_THROWS_AS(theorem_exponent(2, 2, 1, 2), invalid_input);
}

TEST_CASE("good-group exponents")
{
    auto g = good_exponents(3, 6);
    REQUIRE(g.size() == 1);
    CHECK(g[0].l == 3);
    CHECK(g[0].exp == 4);
    CHECK(g[0].half == 2);
    g = good_exponents(15, 15);
    REQUIRE(g.size() == 2);
    CHECK((g[0].l == 3 && g[0].exp == 10 && g[0].half == 5));
    CHECK((g[1].l == 5 && g[1].exp == 12 && g[1].half == 6));
    CHECK(good_exponents(1, 7).empty());
    g = good_exponents(2, 6);
    CHECK((g[0].exp == 3 && !g[0].half));
    CHECK_THROWS_AS(good_exponents(4, 6), invalid_input);
}
