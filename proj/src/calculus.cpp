#include "steinitz/calculus.hpp"

#include <numeric>

#include "steinitz/errors.hpp"

namespace steinitz {

i64 discriminant_exponent(i64 e, i64 n)
{
    if (e < 1 || n < 1)
        throw invalid_input("ramification index and degree must be positive");
    if (n % e != 0)
        throw invalid_input("e = " + std::to_string(e) + " does not divide N = " + std::to_string(n));
    return checked_mul(e - 1, n / e);
}

IdealClass steinitz_from_ramification(ClassGroup const & cg, std::span<RamificationDatum const> ram, i64 n,
                                      bool two_sylow_noncyclic)
{
    if (n < 1)
        throw invalid_input("degree must be positive");
    if (n % 2 == 0 && !two_sylow_noncyclic)
        throw invalid_input("even degree needs a noncyclic 2-Sylow subgroup");
    IdealClass acc = cg.principal();
    for (RamificationDatum const & r : ram) {
        if (r.e < 2)
            throw invalid_input("ramification index must be >= 2");
        if (std::gcd(r.p, r.e) != 1)
            throw invalid_input("ramification at " + std::to_string(r.p) + " with e = "
                                + std::to_string(r.e) + " is wild");
        i64 const d = discriminant_exponent(r.e, n);
        if (d % 2 != 0) {
            if (n % 2 == 1)
                throw internal_error("odd discriminant exponent in odd degree");
            throw invalid_input("discriminant exponent " + std::to_string(d) + " at "
                                + std::to_string(r.p) + " is odd");
        }
        acc = cg.compose(acc, cg.pow(prime_class(cg, r.p, r.conjugate), d / 2));
    }
    return acc;
}

IdealClass tower_steinitz(ClassGroup const & cg, IdealClass st_e, i64 deg_ke, IdealClass norm_st_ke)
{
    if (deg_ke < 1)
        throw invalid_input("relative degree must be positive");
    return cg.compose(cg.pow(st_e, deg_ke), norm_st_ke);
}

i64 l_part(i64 n, i64 l)
{
    if (n < 1)
        throw invalid_input("l_part needs n >= 1");
    if (l < 2)
        throw invalid_input("l_part needs a prime l");
    i64 q = 1;
    while (n % l == 0) {
        n /= l;
        q *= l;
    }
    return q;
}

McdleResult mcdle_gcd(i64 e, i64 m)
{
    if (e < 1 || m < 1 || m % e != 0)
        throw invalid_input("e = " + std::to_string(e) + " does not divide m = " + std::to_string(m));
    /* e = 1: empty gcd 0, and 0 divides the exponent 0 */
    i64 g = 0;
    for (i64 l : prime_divisors(e))
        g = std::gcd(g, checked_mul(l - 1, m / l_part(e, l)));
    i64 const target = discriminant_exponent(e, m);
    return McdleResult{g, g == 0 ? target == 0 : target % g == 0};
}

i64 alpha_abelian(AbelianGroup const & h)
{
    i64 const n = h.order();
    if (n % 2 == 0)
        throw invalid_input("alpha needs |H| odd");
    auto const & f = h.invariant_factors();
    i64 a = 0;
    for (i64 nj : f)
        a = checked_add(a, checked_mul((nj - 1) / 2, n / nj));
    if (!f.empty())
        a = checked_add(a, checked_mul((f[0] - 1) / 2, n / f[0]));
    return a;
}

namespace {

void check_l_data(i64 l, i64 o_tau, i64 n)
{
    if (!is_prime(l) || l == 2)
        throw invalid_input("l must be an odd prime, got " + std::to_string(l));
    if (o_tau < l || l_part(o_tau, l) != o_tau)
        throw invalid_input("o(tau) = " + std::to_string(o_tau) + " is not a positive power of "
                            + std::to_string(l));
    if (n < 1 || n % 2 == 0 || n % o_tau != 0)
        throw invalid_input("n = " + std::to_string(n) + " must be odd and divisible by o(tau)");
}

} // namespace

AlphasL alphas_l(i64 l, i64 o_tau, i64 n)
{
    check_l_data(l, o_tau, n);
    AlphasL a;
    a.a1 = checked_mul(l - 1, n / l);
    a.a2 = checked_mul(o_tau - 1, n / o_tau);
    a.a3 = 3 * (l - 1) / 2;
    a.a3_scaled = checked_mul(a.a3, n / l);
    return a;
}

i64 beta_l_three_term(i64 l, i64 o_tau, i64 n)
{
    AlphasL a = alphas_l(l, o_tau, n);
    return std::gcd(std::gcd(a.a1, a.a2), a.a3_scaled);
}

i64 beta_l_two_term(i64 l, i64 o_tau, i64 n)
{
    check_l_data(l, o_tau, n);
    return std::gcd(checked_mul(o_tau - 1, n / o_tau), checked_mul((l - 1) / 2, n / l));
}

i64 beta_l(i64 l, i64 o_tau, i64 n)
{
    i64 const three = beta_l_three_term(l, o_tau, n);
    i64 const two = beta_l_two_term(l, o_tau, n);
    if (three != two)
        throw internal_error("beta_l forms disagree at l = " + std::to_string(l) + ", o = "
                             + std::to_string(o_tau) + ", n = " + std::to_string(n));
    return three;
}

i64 theorem_exponent(i64 l, i64 o_tau, i64 m, i64 n)
{
    if (l == 2)
        throw invalid_input("theorem_exponent needs an odd prime l");
    if (!is_prime(l))
        throw invalid_input(std::to_string(l) + " is not prime");
    if (o_tau < 1 || o_tau % l != 0)
        throw invalid_input("l must divide o(tau)");
    if (m < 1 || n < 1)
        throw invalid_input("m and n must be positive");
    i64 const mn = checked_mul(m, n);
    if (mn % o_tau != 0)
        throw invalid_input("o(tau) must divide m n");
    return checked_mul((l - 1) / 2, mn / o_tau);
}

std::vector<GoodExponent> good_exponents(i64 e, i64 big_m)
{
    if (e < 1 || big_m < 1 || big_m % e != 0)
        throw invalid_input("e = " + std::to_string(e) + " does not divide M = " + std::to_string(big_m));
    std::vector<GoodExponent> out;
    for (i64 l : prime_divisors(e)) {
        GoodExponent g;
        g.l = l;
        g.exp = checked_mul(l - 1, big_m / l_part(e, l));
        if (g.exp % 2 == 0)
            g.half = g.exp / 2;
        out.push_back(g);
    }
    return out;
}

} // namespace steinitz
