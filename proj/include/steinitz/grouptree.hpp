#ifndef STEINITZ_GROUPTREE_HPP
#define STEINITZ_GROUPTREE_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "steinitz/arith.hpp"

namespace steinitz {

/* Every exhaustive enumeration refuses to go past these sizes. */
struct EnumerationLimits {
    std::size_t max_elements = 100000;
    /* multiplication tables are quadratic in the order */
    std::size_t max_table_order = 2048;
};

/* Element of C(n_1) x ... x C(n_r) as an exponent vector. */
struct AbElement {
    std::vector<i64> coords;

    auto operator<=>(AbElement const &) const = default;
};

/*
 * C(n_1) x ... x C(n_r) with n_{i+1} | n_i and every n_i >= 2. The empty
 * factor list is the trivial group.
 */
class AbelianGroup
{
    std::vector<i64> factors;
    i64 order_ = 1;

    public:

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<i64> invariant_factors);
    static AbelianGroup cyclic(i64 n);

    std::vector<i64> const & invariant_factors() const { return factors; }
    std::size_t rank() const { return factors.size(); }
    i64 order() const { return order_; }
    bool is_trivial() const { return factors.empty(); }

    bool contains(AbElement const & t) const;
    AbElement identity() const;
    AbElement add(AbElement const & x, AbElement const & y) const;
    AbElement negate(AbElement const & x) const;
    AbElement scale(AbElement const & x, i64 k) const;
    bool is_identity(AbElement const & x) const;

    /* mixed radix, first coordinate most significant */
    i64 index_of(AbElement const & x) const;
    AbElement element_at(i64 index) const;
    std::vector<AbElement> elements(EnumerationLimits const & limits = {}) const;

    i64 element_order(AbElement const & t) const;
    /* H(l), the elements of l-power order, in index order */
    std::vector<AbElement> sylow_part(i64 l, EnumerationLimits const & limits = {}) const;
    /* tau(l) = tau^{o(tau)/o(tau)(l)} */
    AbElement tau_l(AbElement const & t, i64 l) const;

    std::string to_string() const;

    bool operator==(AbelianGroup const & o) const { return factors == o.factors; }
};

/*
 * An endomorphism of an AbelianGroup: column j holds the exponent vector of
 * the image of the j-th generator. Entries of row i are kept reduced mod n_i.
 */
class EndoMatrix
{
    std::size_t dim_ = 0;
    std::vector<i64> entries;

    public:

    EndoMatrix() = default;
    /* rows given row-major; validated against the group */
    EndoMatrix(AbelianGroup const & h, std::vector<std::vector<i64>> const & rows);
    static EndoMatrix identity(AbelianGroup const & h);

    std::size_t dim() const { return dim_; }
    i64 at(std::size_t i, std::size_t j) const { return entries[i * dim_ + j]; }
    std::vector<std::vector<i64>> rows() const;

    AbElement apply(AbelianGroup const & h, AbElement const & t) const;
    /* (this o other) */
    EndoMatrix compose(AbelianGroup const & h, EndoMatrix const & other) const;
    bool is_automorphism(AbelianGroup const & h, EnumerationLimits const & limits = {}) const;

    bool operator==(EndoMatrix const &) const = default;
};

class GroupTree;

/* Element of a group tree: all leaf coordinates, flattened left to right. */
struct TreeElement {
    std::vector<i64> coords;

    auto operator<=>(TreeElement const &) const = default;
};

/* A completed action table mu, indexed by the canonical element index of the acting group. */
class Action
{
    std::vector<EndoMatrix> table;

    public:

    Action() = default;
    explicit Action(std::vector<EndoMatrix> t) : table(std::move(t)) {}

    std::size_t size() const { return table.size(); }
    EndoMatrix const & at(std::size_t g_index) const { return table.at(g_index); }
    std::vector<EndoMatrix> const & matrices() const { return table; }
    bool is_trivial() const;
};

/* Images of a generating set (or of every element) of the acting group. */
using GeneratorImages = std::vector<std::pair<TreeElement, EndoMatrix>>;

enum class TwoSylow { trivial, cyclic, noncyclic };

/*
 * A'-group structure tree: abelian leaf, semidirect node H x|_mu G, or
 * direct product node. Immutable; copies share structure.
 */
class GroupTree
{
    public:

    enum class Kind { abelian, semidirect, direct };

    static GroupTree abelian(AbelianGroup h);
    /*
     * By default the node must satisfy |H| odd and gcd(|H|, |G|) = 1; the
     * action must already be complete (see validate_action).
     */
    static GroupTree semidirect(AbelianGroup h, GroupTree g, Action mu, bool strict = true);
    /* By default refuses two even factors unless both 2-Sylows are noncyclic. */
    static GroupTree direct(GroupTree left, GroupTree right, bool strict = true);

    /* C(n) x| C(2) with the inversion action */
    static GroupTree dihedral(i64 n);

    Kind kind() const;
    AbelianGroup const & leaf() const;
    AbelianGroup const & kernel() const;
    GroupTree const & quotient() const;
    Action const & action() const;
    GroupTree const & left() const;
    GroupTree const & right() const;

    i64 order() const;
    bool is_odd() const { return order() % 2 == 1; }
    TwoSylow two_sylow() const;

    std::size_t coord_count() const;
    std::vector<i64> radices() const;

    TreeElement identity() const;
    bool contains(TreeElement const & x) const;
    TreeElement multiply(TreeElement const & a, TreeElement const & b) const;
    TreeElement inverse(TreeElement const & a) const;
    i64 index_of(TreeElement const & x) const;
    TreeElement element_at(i64 index) const;
    std::vector<TreeElement> elements(EnumerationLimits const & limits = {}) const;

    /* Canonical structural key; equal keys mean identical trees. */
    std::string const & key() const;
    /* Short human-readable description, e.g. "C(7) x| C(3)". */
    std::string describe() const;

    private:

    struct Node;
    std::shared_ptr<Node const> node;

    explicit GroupTree(std::shared_ptr<Node const> n) : node(std::move(n)) {}
};

/*
 * Completes an action given on a generating set by breadth-first closure,
 * checking every matrix is an automorphism and that the closure is
 * consistent (which makes the result a homomorphism G -> Aut(H)).
 */
Action validate_action(AbelianGroup const & h, GroupTree const & g, GeneratorImages const & images,
                       EnumerationLimits const & limits = {});

bool two_sylow_cyclic(GroupTree const & tree);

/* Row-major Cayley table over canonical element indices. */
class MultiplicationTable
{
    std::size_t n_ = 0;
    std::vector<std::uint32_t> data;

    public:

    MultiplicationTable() = default;
    MultiplicationTable(std::size_t n, std::vector<std::uint32_t> d);

    std::size_t order() const { return n_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data[i * n_ + j]; }
};

MultiplicationTable to_multiplication_table(GroupTree const & tree, EnumerationLimits const & limits = {});

/* Throws invalid_input when the table is not a group. */
void check_group_axioms(MultiplicationTable const & t);

/* Element subsets of a table-defined group, used by the verifier. */
std::vector<std::uint32_t> table_closure(MultiplicationTable const & t, std::vector<std::uint32_t> const & gens);
std::vector<std::uint32_t> table_sylow(MultiplicationTable const & t, i64 l);
bool table_is_abelian(MultiplicationTable const & t, std::vector<std::uint32_t> const & subset);

/*
 * True iff the derived series reaches the trivial group and every Sylow
 * subgroup is abelian. Throws invalid_input if the table is not a group.
 */
bool is_solvable_a_group(MultiplicationTable const & t);

} // namespace steinitz

#endif
