#ifndef STEINITZ_REALIZABLE_HPP
#define STEINITZ_REALIZABLE_HPP

#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "steinitz/classgroup.hpp"
#include "steinitz/cyclotomic.hpp"
#include "steinitz/grouptree.hpp"

namespace steinitz {

struct RtOptions {
    /* initial prime bound for every W-group; default per W */
    std::optional<i64> prime_bound;
    std::optional<i64> ceiling;
    /* share W-groups between equal fixed fields */
    bool dedupe = true;
    EnumerationLimits limits;
};

/* One W(k, E)^exponent factor of a node, repeated multiplicity times. */
struct WTerm {
    FixedFieldDescriptor field;
    i64 l = 0;
    i64 exponent = 0;
    std::size_t multiplicity = 1;
    std::vector<std::size_t> generators;
    std::vector<std::size_t> members;
    WCertificate cert;
};

/* R_t of an earlier trace entry raised to a power. */
struct PowerTerm {
    std::size_t child = 0;
    i64 exponent = 1;
};

struct TraceEntry {
    std::string node;
    std::string formula;
    /* C(2) leaf */
    bool full_class_group = false;
    std::vector<PowerTerm> powers;
    std::vector<WTerm> w_terms;
    std::vector<std::size_t> members;
};

/* The subgroup R_t(k, G) and the trace that produced it, root entry last. */
struct RtResult {
    ClassSubgroup subgroup;
    std::vector<TraceEntry> trace;
};

/*
 * Throws inadmissible_tree unless every abelian leaf is odd, trivial or
 * exactly C(2), every semidirect node has |H| odd and prime to |G|, and
 * every direct node satisfies the parity rule.
 */
void check_admissible(GroupTree const & tree);

/*
 * Evaluates R_t over one base field. Results of subtrees and W-groups are
 * memoized; the memo is safe to share between threads.
 */
class RtEngine
{
    public:

    RtEngine(ClassGroupPtr cg, RtOptions opts = {});

    ClassGroupPtr const & class_group() const { return cg; }
    RtOptions const & options() const { return opts; }

    RtResult rt(GroupTree const & tree);
    WResult w(CycloSubgroup const & s);

    private:

    ClassGroupPtr cg;
    RtOptions opts;
    std::mutex mutex;
    std::map<std::string, std::shared_future<RtResult>> nodes;
    std::map<FixedFieldDescriptor, std::shared_future<WResult>> ws;

    RtResult compute(GroupTree const & tree);
    RtResult compute_kernel(AbelianGroup const & h, GroupTree const * g, Action const * mu, i64 m,
                            std::string const & node);
};

RtResult rt(ClassGroupPtr const & cg, GroupTree const & tree, RtOptions const & opts = {});

/*
 * Cl^n * prod_{l | n} prod_{o = l^j | n} W(k, {+-1} mod o)^{(l-1)/2 * 2n/o},
 * evaluated without the tree recursion.
 */
RtResult rt_dihedral(ClassGroupPtr const & cg, i64 n, RtOptions const & opts = {});

/* Re-evaluates a trace from its recorded W generators. */
ClassSubgroup rt_trace_replay(ClassGroupPtr const & cg, std::vector<TraceEntry> const & trace);
bool trace_matches(RtResult const & result);

struct RamScenario {
    i64 p = 0;
    i64 e = 1;
    bool conjugate = false;
};

struct GoodCheck {
    RamScenario scenario;
    /* "2b" or "3" */
    std::string property;
    /* 0 for property 2b */
    i64 l = 0;
    i64 exponent = 0;
    bool holds = false;
};

/*
 * For each scenario, checks that the good-group exponents of the prime
 * class land in R_t: the half discriminant exponent when |G| is odd, and
 * (l-1) m / e(l) (and its half when even) for every l | e.
 */
std::vector<GoodCheck> good_membership_check(ClassGroupPtr const & cg, GroupTree const & tree,
                                             ClassSubgroup const & rt_group,
                                             std::vector<RamScenario> const & scenarios);

} // namespace steinitz

#endif
