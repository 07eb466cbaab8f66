#ifndef STEINITZ_CYCLOTOMIC_HPP
#define STEINITZ_CYCLOTOMIC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/arith.hpp"
#include "steinitz/classgroup.hpp"
#include "steinitz/grouptree.hpp"

namespace steinitz {

/*
 * A subgroup of (Z/mZ)*, members as sorted residues in [0, m). For m = 1
 * the only member is 0.
 */
class CycloSubgroup
{
    i64 m = 1;
    std::vector<i64> members_{0};

    public:

    CycloSubgroup() = default;
    /* throws invalid_input unless the residues form a subgroup */
    CycloSubgroup(i64 modulus, std::vector<i64> members);
    static CycloSubgroup generate(i64 modulus, std::vector<i64> const & gens);
    static CycloSubgroup trivial(i64 modulus);
    static CycloSubgroup units(i64 modulus);

    i64 modulus() const { return m; }
    std::vector<i64> const & members() const { return members_; }
    std::size_t order() const { return members_.size(); }
    bool contains(i64 a) const;
    bool is_subset_of(CycloSubgroup const & o) const;
    std::string to_string() const;

    bool operator==(CycloSubgroup const &) const = default;
    auto operator<=>(CycloSubgroup const &) const = default;
};

/* Gal(k(zeta_m)/k) as a subgroup of (Z/mZ)*. */
CycloSubgroup galois_group(QuadField const & field, i64 m);

/*
 * G_{k,mu,tau}: the a in Gal(k(zeta_o)/k), o = o(tau), such that some g in
 * the acting group sends tau to tau^a.
 */
CycloSubgroup g_k_mu_tau(QuadField const & field, GroupTree const & g, Action const & mu,
                         AbelianGroup const & h, AbElement const & tau,
                         EnumerationLimits const & limits = {});

/* Names the fixed field of S inside k(zeta_m). */
struct FixedFieldDescriptor {
    i64 modulus = 1;
    std::vector<i64> members{0};

    std::string to_string() const;
    auto operator<=>(FixedFieldDescriptor const &) const = default;
};

FixedFieldDescriptor fixed_field_descriptor(CycloSubgroup const & s);

struct WOptions {
    std::optional<i64> initial_bound;
    std::optional<i64> ceiling;
};

/* How a W-group enumeration ended. */
struct WCertificate {
    i64 initial_bound = 0;
    i64 final_bound = 0;
    int windows = 0;
    bool reached_full = false;
    std::size_t qualifying_primes = 0;
    /* the primes whose classes enlarged the subgroup, in order */
    std::vector<i64> witness_primes;
};

struct WResult {
    ClassSubgroup group;
    WCertificate cert;
};

/* 10 (h m log(|D|+3))^2 capped at 10^6 */
i64 default_w_bound(i64 h, i64 m, i64 disc);
/* 10^8 unless STEINITZ_PRIME_CEILING is set */
i64 prime_ceiling();

/*
 * W(k, E) for E the fixed field of S in k(zeta_m): generated by the classes
 * of degree-1 primes over p with p not dividing m and p mod m in S. Primes
 * are enumerated up to the initial bound, then in doubling windows until
 * two consecutive windows add nothing or the whole class group is reached.
 */
WResult w_group(ClassGroupPtr const & cg, CycloSubgroup const & s, WOptions const & opts = {});

} // namespace steinitz

#endif
