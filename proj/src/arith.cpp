#include "steinitz/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace steinitz {

i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

i64 narrow(i128 x)
{
    if (x > INT64_MAX || x < INT64_MIN)
        throw std::overflow_error("integer overflow narrowing 128-bit value");
    return static_cast<i64>(x);
}

std::tuple<i64, i64, i64> ext_gcd(i64 a, i64 b)
{
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

i64 mod_inverse(i64 a, i64 m)
{
    auto [g, x, y] = ext_gcd(mod(a, m), m);
    (void) y;
    if (g != 1)
        throw std::domain_error("element is not invertible modulo m");
    return mod(x, m);
}

i64 pow_mod(i64 base, i64 exp, i64 m)
{
    if (m == 1)
        return 0;
    i128 result = 1;
    i128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1)
            result = result * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<i64>(result);
}

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    /* deterministic for all 64-bit n */
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = static_cast<i64>(static_cast<i128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<i64, int>> factor(i64 n)
{
    std::vector<std::pair<i64, int>> out;
    if (n < 0)
        n = -n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(i64 n)
{
    for (auto const & [p, e] : factor(n)) {
        (void) p;
        if (e > 1)
            return false;
    }
    return n != 0;
}

std::vector<i64> prime_divisors(i64 n)
{
    std::vector<i64> out;
    for (auto const & [p, e] : factor(n)) {
        (void) e;
        out.push_back(p);
    }
    return out;
}

std::vector<i64> divisors(i64 n)
{
    std::vector<i64> out{1};
    for (auto const & [p, e] : factor(n)) {
        std::size_t const base = out.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 euler_phi(i64 n)
{
    i64 r = n;
    for (i64 p : prime_divisors(n))
        r = r / p * (p - 1);
    return r;
}

int kronecker(i64 a, i64 n)
{
    if (n <= 0)
        throw std::domain_error("kronecker: n must be positive");
    int result = 1;
    /* strip factors of 2 from n using (a/2) */
    while ((n & 1) == 0) {
        n >>= 1;
        if ((a & 1) == 0)
            return 0;
        i64 const r8 = mod(a, 8);
        if (r8 == 3 || r8 == 5)
            result = -result;
    }
    /* Jacobi symbol (a/n), n odd */
    a = mod(a, n);
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 const r8 = n % 8;
            if (r8 == 3 || r8 == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

i64 sqrt_mod_prime(i64 a, i64 p)
{
    a = mod(a, p);
    if (a == 0)
        return 0;
    if (p == 2)
        return a;
    if (pow_mod(a, (p - 1) / 2, p) != 1)
        throw std::domain_error("sqrt_mod_prime: not a quadratic residue");
    if (p % 4 == 3)
        return pow_mod(a, (p + 1) / 4, p);
    /* Tonelli-Shanks */
    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    i64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    i64 c = pow_mod(z, q, p);
    i64 x = pow_mod(a, (q + 1) / 2, p);
    i64 t = pow_mod(a, q, p);
    int m = s;
    while (t != 1) {
        int i = 0;
        i64 tt = t;
        while (tt != 1) {
            tt = static_cast<i64>(static_cast<i128>(tt) * tt % p);
            ++i;
        }
        i64 b = c;
        for (int j = 0; j < m - i - 1; ++j)
            b = static_cast<i64>(static_cast<i128>(b) * b % p);
        x = static_cast<i64>(static_cast<i128>(x) * b % p);
        c = static_cast<i64>(static_cast<i128>(b) * b % p);
        t = static_cast<i64>(static_cast<i128>(t) * c % p);
        m = i;
    }
    return x;
}

void for_each_prime(i64 lo, i64 hi, std::function<void(i64)> const & f)
{
    lo = std::max<i64>(lo, 2);
    if (hi <= lo)
        return;
    i64 root = static_cast<i64>(std::sqrt(static_cast<double>(hi))) + 1;
    while (root * root < hi)
        ++root;

    std::vector<char> small(static_cast<std::size_t>(root + 1), 1);
    std::vector<i64> base;
    for (i64 i = 2; i <= root; ++i) {
        if (!small[i])
            continue;
        base.push_back(i);
        for (i64 j = i * i; j <= root; j += i)
            small[j] = 0;
    }

    constexpr i64 segment = 1 << 18;
    std::vector<char> sieve;
    for (i64 start = lo; start < hi; start += segment) {
        i64 const end = std::min(hi, start + segment);
        sieve.assign(static_cast<std::size_t>(end - start), 1);
        for (i64 p : base) {
            if (p * p >= end)
                break;
            i64 first = std::max(p * p, (start + p - 1) / p * p);
            for (i64 j = first; j < end; j += p)
                sieve[j - start] = 0;
        }
        for (i64 i = start; i < end; ++i) {
            if (sieve[i - start])
                f(i);
        }
    }
}

} // namespace steinitz
