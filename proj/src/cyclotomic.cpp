#include "steinitz/cyclotomic.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "steinitz/errors.hpp"

namespace steinitz {

namespace {

bool closed(i64 m, std::vector<i64> const & sorted)
{
    for (i64 x : sorted)
        for (i64 y : sorted)
            if (!std::binary_search(sorted.begin(), sorted.end(),
                                    static_cast<i64>(static_cast<i128>(x) * y % m)))
                return false;
    return true;
}

} // namespace

CycloSubgroup::CycloSubgroup(i64 modulus, std::vector<i64> members) : m(modulus)
{
    if (m < 1)
        throw invalid_input("modulus must be >= 1");
    for (i64 & a : members) {
        a = mod(a, m);
        if (std::gcd(a, m) != 1)
            throw invalid_input(std::to_string(a) + " is not a unit mod " + std::to_string(m));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
    /* a finite set closed under products is a group */
    if (!std::binary_search(members_.begin(), members_.end(), mod(1, m)) || !closed(m, members_))
        throw invalid_input("residues mod " + std::to_string(m) + " do not form a subgroup");
}

CycloSubgroup CycloSubgroup::generate(i64 modulus, std::vector<i64> const & gens)
{
    if (modulus < 1)
        throw invalid_input("modulus must be >= 1");
    std::vector<char> in(static_cast<std::size_t>(modulus), 0);
    std::vector<i64> out{mod(1, modulus)};
    in[out[0]] = 1;
    std::vector<i64> g;
    for (i64 a : gens) {
        a = mod(a, modulus);
        if (std::gcd(a, modulus) != 1)
            throw invalid_input(std::to_string(a) + " is not a unit mod " + std::to_string(modulus));
        g.push_back(a);
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (i64 a : g) {
            i64 y = static_cast<i64>(static_cast<i128>(out[i]) * a % modulus);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    return CycloSubgroup(modulus, std::move(out));
}

CycloSubgroup CycloSubgroup::trivial(i64 modulus)
{
    return CycloSubgroup(modulus, {1});
}

CycloSubgroup CycloSubgroup::units(i64 modulus)
{
    if (modulus < 1)
        throw invalid_input("modulus must be >= 1");
    std::vector<i64> u;
    for (i64 a = 0; a < modulus; ++a)
        if (std::gcd(a, modulus) == 1)
            u.push_back(a);
    return CycloSubgroup(modulus, std::move(u));
}

bool CycloSubgroup::contains(i64 a) const
{
    return std::binary_search(members_.begin(), members_.end(), mod(a, m));
}

bool CycloSubgroup::is_subset_of(CycloSubgroup const & o) const
{
    return m == o.m && std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
}

std::string CycloSubgroup::to_string() const
{
    std::ostringstream s;
    s << "{";
    for (std::size_t i = 0; i < members_.size(); ++i)
        s << (i ? "," : "") << members_[i];
    s << "} mod " << m;
    return s.str();
}

CycloSubgroup galois_group(QuadField const & field, i64 m)
{
    CycloSubgroup all = CycloSubgroup::units(m);
    if (field.is_rationals() || m % field.discriminant() != 0)
        return all;
    i64 const d = field.discriminant();
    std::vector<i64> ker;
    for (i64 a : all.members())
        if (kronecker(d, a) == 1)
            ker.push_back(a);
    return CycloSubgroup(m, std::move(ker));
}

CycloSubgroup g_k_mu_tau(QuadField const & field, GroupTree const & g, Action const & mu,
                         AbelianGroup const & h, AbElement const & tau, EnumerationLimits const & limits)
{
    if (!h.contains(tau))
        throw invalid_input("tau is not an element of " + h.to_string());
    if (h.is_identity(tau))
        throw invalid_input("G_{k,mu,tau} needs tau != 1");
    i64 const o = h.element_order(tau);
    CycloSubgroup const gal = galois_group(field, o);

    std::map<AbElement, i64> power_of;
    for (i64 a = 0; a < o; ++a)
        power_of.emplace(h.scale(tau, a), a);

    std::vector<TreeElement> const elems = g.elements(limits);
    if (mu.size() != elems.size())
        throw invalid_input("action table does not cover the acting group");
    std::vector<i64> hits;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        auto it = power_of.find(mu.at(static_cast<std::size_t>(g.index_of(elems[i]))).apply(h, tau));
        if (it != power_of.end() && gal.contains(it->second))
            hits.push_back(it->second);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (!std::binary_search(hits.begin(), hits.end(), mod(1, o)) || !closed(o, hits))
        throw internal_error("G_{k,mu,tau} for tau of order " + std::to_string(o) + " is not a subgroup");
    return CycloSubgroup(o, std::move(hits));
}

std::string FixedFieldDescriptor::to_string() const
{
    std::ostringstream s;
    s << "E(" << modulus << ";";
    for (std::size_t i = 0; i < members.size(); ++i)
        s << (i ? "," : "") << members[i];
    s << ")";
    return s.str();
}

FixedFieldDescriptor fixed_field_descriptor(CycloSubgroup const & s)
{
    return FixedFieldDescriptor{s.modulus(), s.members()};
}

i64 default_w_bound(i64 h, i64 m, i64 disc)
{
    double const x = static_cast<double>(h) * static_cast<double>(m)
                     * std::log(static_cast<double>(std::llabs(disc)) + 3.0);
    double const b = 10.0 * x * x;
    if (!(b < 1e6))
        return 1'000'000;
    return std::max<i64>(2, static_cast<i64>(b));
}

i64 prime_ceiling()
{
    char const * env = std::getenv("STEINITZ_PRIME_CEILING");
    if (env == nullptr || *env == '\0')
        return 100'000'000;
    char * end = nullptr;
    errno = 0;
    long long v = std::strtoll(env, &end, 10);
    if (errno != 0 || *end != '\0' || v < 2)
        throw invalid_input(std::string("STEINITZ_PRIME_CEILING must be an integer >= 2, got '") + env + "'");
    return v;
}

WResult w_group(ClassGroupPtr const & cg, CycloSubgroup const & s, WOptions const & opts)
{
    QuadField const & field = cg->field();
    i64 const m = s.modulus();
    if (!s.is_subset_of(galois_group(field, m)))
        throw invalid_input(s.to_string() + " is not inside Gal(k(zeta_" + std::to_string(m) + ")/k)");
    i64 const ceiling = opts.ceiling ? *opts.ceiling : prime_ceiling();
    i64 const bound = opts.initial_bound
                          ? *opts.initial_bound
                          : std::min(default_w_bound(static_cast<i64>(cg->order()), m, field.discriminant()),
                                     ceiling);
    if (bound < 2)
        throw invalid_input("prime bound must be >= 2");
    if (bound > ceiling)
        throw invalid_input("prime bound " + std::to_string(bound) + " exceeds the ceiling "
                            + std::to_string(ceiling));

    WCertificate cert;
    cert.initial_bound = bound;
    ClassSubgroup group = ClassSubgroup::trivial(cg);
    if (cg->order() == 1) {
        /* nothing to find; still report one qualifying prime exists */
        cert.final_bound = bound;
        cert.reached_full = true;
        return WResult{group, cert};
    }

    std::vector<char> in(cg->order(), 0);
    in[0] = 1;
    std::vector<IdealClass> gens;
    bool changed = false;
    auto visit = [&](i64 p) {
        if (group.is_full() || m % p == 0 || !s.contains(p))
            return;
        if (splitting(p, field) == Splitting::inert)
            return;
        ++cert.qualifying_primes;
        IdealClass x = prime_class(*cg, p);
        if (in[x.index])
            return;
        gens.push_back(x);
        group = subgroup_generate(cg, gens);
        for (std::size_t idx : group.members())
            in[idx] = 1;
        cert.witness_primes.push_back(p);
        changed = true;
    };

    for_each_prime(2, bound + 1, visit);
    i64 lo = bound + 1;
    int quiet = 0;
    while (!group.is_full()) {
        if (quiet >= 2 && cert.qualifying_primes > 0)
            break;
        if (lo > ceiling) {
            if (cert.qualifying_primes == 0)
                throw enumeration_ceiling("no qualifying prime below " + std::to_string(ceiling) + " for "
                                          + s.to_string() + " over " + field.to_string());
            throw enumeration_ceiling("W-group over " + field.to_string() + " for " + s.to_string()
                                      + " did not stabilize below " + std::to_string(ceiling));
        }
        i64 const hi = std::min(ceiling, 2 * (lo - 1));
        changed = false;
        for_each_prime(lo, hi + 1, visit);
        ++cert.windows;
        quiet = changed ? 0 : quiet + 1;
        lo = hi + 1;
    }
    cert.final_bound = lo - 1;
    cert.reached_full = group.is_full();
    return WResult{group, cert};
}

} // namespace steinitz
