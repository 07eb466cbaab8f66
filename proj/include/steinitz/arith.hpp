#ifndef STEINITZ_ARITH_HPP
#define STEINITZ_ARITH_HPP

#include <cstdint>
#include <functional>
#include <tuple>
#include <utility>
#include <vector>

namespace steinitz {

using i64 = std::int64_t;
using i128 = __int128;

/* Overflow-checked arithmetic; throws std::overflow_error. */
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 narrow(i128 x);

/* Nonnegative residue of a modulo m (m > 0). */
inline i64 mod(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

/* Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0. */
std::tuple<i64, i64, i64> ext_gcd(i64 a, i64 b);

i64 mod_inverse(i64 a, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);

bool is_prime(i64 n);
bool is_squarefree(i64 n);

/* Prime factorization of |n| by trial division, primes ascending. */
std::vector<std::pair<i64, int>> factor(i64 n);
std::vector<i64> prime_divisors(i64 n);
std::vector<i64> divisors(i64 n);
i64 euler_phi(i64 n);

/* Kronecker symbol (a / n) for n >= 1. */
int kronecker(i64 a, i64 n);

/* Square root of a modulo an odd prime p; a must be a square mod p. */
i64 sqrt_mod_prime(i64 a, i64 p);

/*
 * Calls f(p) for every prime p with lo <= p < hi, in increasing order,
 * using a segmented sieve of Eratosthenes.
 */
void for_each_prime(i64 lo, i64 hi, std::function<void(i64)> const & f);

} // namespace steinitz

#endif
