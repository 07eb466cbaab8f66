#ifndef STEINITZ_CALCULUS_HPP
#define STEINITZ_CALCULUS_HPP

#include <optional>
#include <span>
#include <vector>

#include "steinitz/arith.hpp"
#include "steinitz/classgroup.hpp"
#include "steinitz/grouptree.hpp"

namespace steinitz {

/* (e - 1) N / e, the exponent of a prime with ramification index e in d(K/k). */
i64 discriminant_exponent(i64 e, i64 n);

/* A degree-1 prime over p (or its conjugate) with ramification index e. */
struct RamificationDatum {
    i64 p = 0;
    i64 e = 1;
    bool conjugate = false;
};

/*
 * Class of prod P^{(e-1)N/(2e)}. Every exponent (e-1)N/e must be even;
 * when N is even the caller vouches for a noncyclic 2-Sylow subgroup.
 */
IdealClass steinitz_from_ramification(ClassGroup const & cg, std::span<RamificationDatum const> ram, i64 n,
                                      bool two_sylow_noncyclic = false);

/* stE^deg * norm */
IdealClass tower_steinitz(ClassGroup const & cg, IdealClass st_e, i64 deg_ke, IdealClass norm_st_ke);

/* n(l), the largest power of l dividing n */
i64 l_part(i64 n, i64 l);

struct McdleResult {
    i64 g = 0;
    bool divides = false;
};

/* g = gcd over primes l | e of (l-1) m / e(l), 0 when e = 1; divides = g | (e-1) m / e */
McdleResult mcdle_gcd(i64 e, i64 m);

/* sum_j (n_j-1)/2 * n/n_j + (n_1-1)/2 * n/n_1 for |H| odd */
i64 alpha_abelian(AbelianGroup const & h);

struct AlphasL {
    i64 a1 = 0;
    i64 a2 = 0;
    /* 3(l-1)/2, as stated */
    i64 a3 = 0;
    /* 3(l-1)/2 * n/l, the exponent the construction actually produces */
    i64 a3_scaled = 0;
};

AlphasL alphas_l(i64 l, i64 o_tau, i64 n);

/*
 * gcd(a1, a2, a3_scaled) computed next to gcd(a2, (l-1)/2 * n/l); throws
 * internal_error if the two disagree.
 */
i64 beta_l(i64 l, i64 o_tau, i64 n);
i64 beta_l_three_term(i64 l, i64 o_tau, i64 n);
i64 beta_l_two_term(i64 l, i64 o_tau, i64 n);

/* (l-1)/2 * m n / o(tau) */
i64 theorem_exponent(i64 l, i64 o_tau, i64 m, i64 n);

struct GoodExponent {
    i64 l = 0;
    i64 exp = 0;
    std::optional<i64> half;
};

/* for each prime l | e: (l-1) M / e(l), halved when even */
std::vector<GoodExponent> good_exponents(i64 e, i64 big_m);

} // namespace steinitz

#endif
