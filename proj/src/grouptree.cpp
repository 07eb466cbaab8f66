#include "steinitz/grouptree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "steinitz/errors.hpp"

namespace steinitz {

/* ---------------------------------------------------------------- abelian */

AbelianGroup::AbelianGroup(std::vector<i64> invariant_factors)
    : factors(std::move(invariant_factors))
{
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2)
            throw invalid_input("invariant factors must be >= 2");
        if (i > 0 && factors[i - 1] % factors[i] != 0)
            throw invalid_input("invariant factors must satisfy n_{i+1} | n_i, got "
                                + to_string());
        order_ = checked_mul(order_, factors[i]);
    }
}

AbelianGroup AbelianGroup::cyclic(i64 n)
{
    if (n == 1)
        return AbelianGroup();
    return AbelianGroup(std::vector<i64>{n});
}

bool AbelianGroup::contains(AbElement const & t) const
{
    if (t.coords.size() != factors.size())
        return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (t.coords[i] < 0 || t.coords[i] >= factors[i])
            return false;
    return true;
}

AbElement AbelianGroup::identity() const
{
    return AbElement{std::vector<i64>(factors.size(), 0)};
}

AbElement AbelianGroup::add(AbElement const & x, AbElement const & y) const
{
    AbElement r{std::vector<i64>(factors.size())};
    for (std::size_t i = 0; i < factors.size(); ++i)
        r.coords[i] = mod(x.coords[i] + y.coords[i], factors[i]);
    return r;
}

AbElement AbelianGroup::negate(AbElement const & x) const
{
    AbElement r{std::vector<i64>(factors.size())};
    for (std::size_t i = 0; i < factors.size(); ++i)
        r.coords[i] = mod(-x.coords[i], factors[i]);
    return r;
}

AbElement AbelianGroup::scale(AbElement const & x, i64 k) const
{
    AbElement r{std::vector<i64>(factors.size())};
    for (std::size_t i = 0; i < factors.size(); ++i)
        r.coords[i] = static_cast<i64>(static_cast<i128>(x.coords[i]) * mod(k, factors[i]) % factors[i]);
    return r;
}

bool AbelianGroup::is_identity(AbElement const & x) const
{
    return std::all_of(x.coords.begin(), x.coords.end(), [](i64 c) { return c == 0; });
}

i64 AbelianGroup::index_of(AbElement const & x) const
{
    if (!contains(x))
        throw invalid_input("element does not belong to " + to_string());
    i64 idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        idx = idx * factors[i] + x.coords[i];
    return idx;
}

AbElement AbelianGroup::element_at(i64 index) const
{
    if (index < 0 || index >= order_)
        throw invalid_input("element index out of range");
    AbElement r{std::vector<i64>(factors.size())};
    for (std::size_t i = factors.size(); i-- > 0;) {
        r.coords[i] = index % factors[i];
        index /= factors[i];
    }
    return r;
}

std::vector<AbElement> AbelianGroup::elements(EnumerationLimits const & limits) const
{
    if (static_cast<std::size_t>(order_) > limits.max_elements)
        throw cap_exceeded("enumeration of " + to_string() + " exceeds the element cap");
    std::vector<AbElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (i64 i = 0; i < order_; ++i)
        out.push_back(element_at(i));
    return out;
}

i64 AbelianGroup::element_order(AbElement const & t) const
{
    if (!contains(t))
        throw invalid_input("element does not belong to " + to_string());
    i64 o = 1;
    for (std::size_t i = 0; i < factors.size(); ++i)
        o = std::lcm(o, factors[i] / std::gcd(factors[i], t.coords[i]));
    return o;
}

std::vector<AbElement> AbelianGroup::sylow_part(i64 l, EnumerationLimits const & limits) const
{
    if (!is_prime(l) || order_ % l != 0)
        throw invalid_input("sylow_part: l must be a prime dividing |H|");
    std::vector<AbElement> out;
    for (auto & t : elements(limits)) {
        i64 o = element_order(t);
        while (o % l == 0)
            o /= l;
        if (o == 1)
            out.push_back(std::move(t));
    }
    return out;
}

AbElement AbelianGroup::tau_l(AbElement const & t, i64 l) const
{
    if (!is_prime(l) || order_ % l != 0)
        throw invalid_input("tau_l: l must be a prime dividing |H|");
    i64 const o = element_order(t);
    i64 ol = 1;
    for (i64 r = o; r % l == 0; r /= l)
        ol *= l;
    return scale(t, o / ol);
}

std::string AbelianGroup::to_string() const
{
    if (factors.empty())
        return "1";
    std::ostringstream s;
    for (std::size_t i = 0; i < factors.size(); ++i)
        s << (i ? "xC(" : "C(") << factors[i] << ")";
    return s.str();
}

/* ------------------------------------------------------------- matrices */

EndoMatrix::EndoMatrix(AbelianGroup const & h, std::vector<std::vector<i64>> const & rows)
    : dim_(h.rank()), entries(h.rank() * h.rank())
{
    auto const & n = h.invariant_factors();
    if (rows.size() != dim_)
        throw invalid_input("action matrix has the wrong number of rows");
    for (std::size_t i = 0; i < dim_; ++i) {
        if (rows[i].size() != dim_)
            throw invalid_input("action matrix has the wrong number of columns");
        for (std::size_t j = 0; j < dim_; ++j) {
            /* tau_j has order n_j, so its image must be killed by n_j */
            if (static_cast<i128>(n[j]) * rows[i][j] % n[i] != 0)
                throw invalid_input("action matrix does not define a homomorphism of "
                                    + h.to_string());
            entries[i * dim_ + j] = mod(rows[i][j], n[i]);
        }
    }
}

EndoMatrix EndoMatrix::identity(AbelianGroup const & h)
{
    std::vector<std::vector<i64>> rows(h.rank(), std::vector<i64>(h.rank(), 0));
    for (std::size_t i = 0; i < h.rank(); ++i)
        rows[i][i] = 1;
    return EndoMatrix(h, rows);
}

std::vector<std::vector<i64>> EndoMatrix::rows() const
{
    std::vector<std::vector<i64>> r(dim_, std::vector<i64>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            r[i][j] = at(i, j);
    return r;
}

AbElement EndoMatrix::apply(AbelianGroup const & h, AbElement const & t) const
{
    auto const & n = h.invariant_factors();
    AbElement r{std::vector<i64>(dim_, 0)};
    for (std::size_t i = 0; i < dim_; ++i) {
        i128 acc = 0;
        for (std::size_t j = 0; j < dim_; ++j)
            acc += static_cast<i128>(at(i, j)) * t.coords[j];
        r.coords[i] = static_cast<i64>(acc % n[i]);
    }
    return r;
}

EndoMatrix EndoMatrix::compose(AbelianGroup const & h, EndoMatrix const & other) const
{
    auto const & n = h.invariant_factors();
    EndoMatrix r;
    r.dim_ = dim_;
    r.entries.assign(dim_ * dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            i128 acc = 0;
            for (std::size_t k = 0; k < dim_; ++k)
                acc += static_cast<i128>(at(i, k)) * other.at(k, j);
            r.entries[i * dim_ + j] = static_cast<i64>(acc % n[i]);
        }
    return r;
}

bool EndoMatrix::is_automorphism(AbelianGroup const & h, EnumerationLimits const & limits) const
{
    /* an endomorphism of a finite group is bijective iff its kernel is trivial */
    for (auto const & t : h.elements(limits))
        if (!h.is_identity(t) && h.is_identity(apply(h, t)))
            return false;
    return true;
}

bool Action::is_trivial() const
{
    return std::all_of(table.begin(), table.end(), [&](EndoMatrix const & m) {
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                if (m.at(i, j) != (i == j ? 1 : 0))
                    return false;
        return true;
    });
}

/* ----------------------------------------------------------------- trees */

struct GroupTree::Node {
    Kind kind = Kind::abelian;
    AbelianGroup h;
    std::optional<GroupTree> first;
    std::optional<GroupTree> second;
    Action mu;

    i64 order = 1;
    TwoSylow two = TwoSylow::trivial;
    std::vector<i64> radices;
    std::string key;
};

namespace {

TwoSylow leaf_two_sylow(AbelianGroup const & h)
{
    auto const & n = h.invariant_factors();
    auto even = std::count_if(n.begin(), n.end(), [](i64 x) { return x % 2 == 0; });
    if (even == 0)
        return TwoSylow::trivial;
    return even == 1 ? TwoSylow::cyclic : TwoSylow::noncyclic;
}

TwoSylow combine_direct(TwoSylow a, TwoSylow b)
{
    if (a == TwoSylow::trivial)
        return b;
    if (b == TwoSylow::trivial)
        return a;
    return TwoSylow::noncyclic;
}

std::string matrix_key(EndoMatrix const & m)
{
    std::ostringstream s;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            s << (i + j ? "," : "") << m.at(i, j);
    return s.str();
}

std::string leaf_key(AbelianGroup const & h)
{
    std::ostringstream s;
    s << "A[";
    for (std::size_t i = 0; i < h.rank(); ++i)
        s << (i ? "," : "") << h.invariant_factors()[i];
    s << "]";
    return s.str();
}

/* brute-force fallback: 2-Sylow of the multiplication table */
TwoSylow table_two_sylow(GroupTree const & t);

} // namespace

GroupTree GroupTree::abelian(AbelianGroup h)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::abelian;
    n->order = h.order();
    n->two = leaf_two_sylow(h);
    n->radices = h.invariant_factors();
    n->key = leaf_key(h);
    n->h = std::move(h);
    return GroupTree(std::move(n));
}

GroupTree GroupTree::semidirect(AbelianGroup h, GroupTree g, Action mu, bool strict)
{
    if (strict) {
        if (h.order() % 2 == 0)
            throw invalid_input("semidirect node needs |H| odd, got " + h.to_string());
        if (std::gcd(h.order(), g.order()) != 1)
            throw invalid_input("semidirect node needs gcd(|H|, |G|) = 1, got "
                                + h.to_string() + " and order " + std::to_string(g.order()));
    }
    if (mu.size() != static_cast<std::size_t>(g.order()))
        throw invalid_input("action table does not cover the acting group");
    for (auto const & m : mu.matrices())
        if (m.dim() != h.rank())
            throw invalid_input("action matrix dimension does not match H");

    auto n = std::make_shared<Node>();
    n->kind = Kind::semidirect;
    n->order = checked_mul(h.order(), g.order());
    n->radices = h.invariant_factors();
    auto const & gr = g.radices();
    n->radices.insert(n->radices.end(), gr.begin(), gr.end());

    std::ostringstream key;
    key << "S(" << leaf_key(h) << ";" << g.key() << ";";
    for (std::size_t i = 0; i < mu.size(); ++i)
        key << (i ? "|" : "") << matrix_key(mu.at(i));
    key << ")";
    n->key = key.str();

    TwoSylow const th = leaf_two_sylow(h);
    n->h = std::move(h);
    n->mu = std::move(mu);
    n->first = std::move(g);
    GroupTree out(n);
    if (th == TwoSylow::trivial)
        n->two = n->first->two_sylow();
    else if (n->first->is_odd())
        n->two = th;
    else
        n->two = table_two_sylow(out);
    return out;
}

GroupTree GroupTree::direct(GroupTree left, GroupTree right, bool strict)
{
    if (strict && !left.is_odd() && !right.is_odd()
        && !(left.two_sylow() == TwoSylow::noncyclic && right.two_sylow() == TwoSylow::noncyclic))
        throw invalid_input("direct product of two even-order groups needs both 2-Sylow "
                            "subgroups noncyclic");
    auto n = std::make_shared<Node>();
    n->kind = Kind::direct;
    n->order = checked_mul(left.order(), right.order());
    n->two = combine_direct(left.two_sylow(), right.two_sylow());
    n->radices = left.radices();
    auto const & rr = right.radices();
    n->radices.insert(n->radices.end(), rr.begin(), rr.end());
    n->key = "D(" + left.key() + ";" + right.key() + ")";
    n->first = std::move(left);
    n->second = std::move(right);
    return GroupTree(std::move(n));
}

GroupTree GroupTree::dihedral(i64 n)
{
    AbelianGroup h = AbelianGroup::cyclic(n);
    GroupTree c2 = abelian(AbelianGroup::cyclic(2));
    GeneratorImages images{{TreeElement{{1}}, EndoMatrix(h, {{n - 1}})}};
    Action mu = validate_action(h, c2, images);
    return semidirect(std::move(h), std::move(c2), std::move(mu));
}

GroupTree::Kind GroupTree::kind() const { return node->kind; }

AbelianGroup const & GroupTree::leaf() const
{
    if (node->kind != Kind::abelian)
        throw invalid_input("not an abelian leaf");
    return node->h;
}

AbelianGroup const & GroupTree::kernel() const
{
    if (node->kind != Kind::semidirect)
        throw invalid_input("not a semidirect node");
    return node->h;
}

GroupTree const & GroupTree::quotient() const
{
    if (node->kind != Kind::semidirect)
        throw invalid_input("not a semidirect node");
    return *node->first;
}

Action const & GroupTree::action() const
{
    if (node->kind != Kind::semidirect)
        throw invalid_input("not a semidirect node");
    return node->mu;
}

GroupTree const & GroupTree::left() const
{
    if (node->kind != Kind::direct)
        throw invalid_input("not a direct product node");
    return *node->first;
}

GroupTree const & GroupTree::right() const
{
    if (node->kind != Kind::direct)
        throw invalid_input("not a direct product node");
    return *node->second;
}

i64 GroupTree::order() const { return node->order; }
TwoSylow GroupTree::two_sylow() const { return node->two; }
std::size_t GroupTree::coord_count() const { return node->radices.size(); }
std::vector<i64> GroupTree::radices() const { return node->radices; }
std::string const & GroupTree::key() const { return node->key; }

std::string GroupTree::describe() const
{
    switch (node->kind) {
    case Kind::abelian:
        return node->h.to_string();
    case Kind::semidirect:
        if (node->mu.is_trivial())
            return node->h.to_string() + " x| " + node->first->describe() + " (trivial)";
        return node->h.to_string() + " x| (" + node->first->describe() + ")";
    case Kind::direct:
        return "(" + node->first->describe() + ") x (" + node->second->describe() + ")";
    }
    return {};
}

TreeElement GroupTree::identity() const
{
    return TreeElement{std::vector<i64>(coord_count(), 0)};
}

bool GroupTree::contains(TreeElement const & x) const
{
    auto const & r = node->radices;
    if (x.coords.size() != r.size())
        return false;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= r[i])
            return false;
    return true;
}

namespace {

std::pair<std::vector<i64>, std::vector<i64>> split(std::vector<i64> const & v, std::size_t at)
{
    return {std::vector<i64>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(at)),
            std::vector<i64>(v.begin() + static_cast<std::ptrdiff_t>(at), v.end())};
}

std::vector<i64> join(std::vector<i64> a, std::vector<i64> const & b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

TreeElement GroupTree::multiply(TreeElement const & a, TreeElement const & b) const
{
    if (!contains(a) || !contains(b))
        throw invalid_input("multiply: element shape does not match the tree");
    switch (node->kind) {
    case Kind::abelian:
        return TreeElement{node->h.add(AbElement{a.coords}, AbElement{b.coords}).coords};
    case Kind::semidirect: {
        std::size_t const r = node->h.rank();
        auto [h1, g1] = split(a.coords, r);
        auto [h2, g2] = split(b.coords, r);
        GroupTree const & g = *node->first;
        auto const & m = node->mu.at(static_cast<std::size_t>(g.index_of(TreeElement{g1})));
        AbElement h = node->h.add(AbElement{h1}, m.apply(node->h, AbElement{h2}));
        return TreeElement{join(h.coords, g.multiply(TreeElement{g1}, TreeElement{g2}).coords)};
    }
    case Kind::direct: {
        std::size_t const r = node->first->coord_count();
        auto [l1, r1] = split(a.coords, r);
        auto [l2, r2] = split(b.coords, r);
        return TreeElement{join(node->first->multiply(TreeElement{l1}, TreeElement{l2}).coords,
                                node->second->multiply(TreeElement{r1}, TreeElement{r2}).coords)};
    }
    }
    return {};
}

TreeElement GroupTree::inverse(TreeElement const & a) const
{
    if (!contains(a))
        throw invalid_input("inverse: element shape does not match the tree");
    switch (node->kind) {
    case Kind::abelian:
        return TreeElement{node->h.negate(AbElement{a.coords}).coords};
    case Kind::semidirect: {
        std::size_t const r = node->h.rank();
        auto [h, g] = split(a.coords, r);
        GroupTree const & q = *node->first;
        TreeElement ginv = q.inverse(TreeElement{g});
        auto const & m = node->mu.at(static_cast<std::size_t>(q.index_of(ginv)));
        AbElement hinv = node->h.negate(m.apply(node->h, AbElement{h}));
        return TreeElement{join(hinv.coords, ginv.coords)};
    }
    case Kind::direct: {
        std::size_t const r = node->first->coord_count();
        auto [l, rr] = split(a.coords, r);
        return TreeElement{join(node->first->inverse(TreeElement{l}).coords,
                                node->second->inverse(TreeElement{rr}).coords)};
    }
    }
    return {};
}

i64 GroupTree::index_of(TreeElement const & x) const
{
    if (!contains(x))
        throw invalid_input("index_of: element shape does not match the tree");
    i64 idx = 0;
    for (std::size_t i = 0; i < node->radices.size(); ++i)
        idx = idx * node->radices[i] + x.coords[i];
    return idx;
}

TreeElement GroupTree::element_at(i64 index) const
{
    if (index < 0 || index >= node->order)
        throw invalid_input("element index out of range");
    auto const & r = node->radices;
    TreeElement e{std::vector<i64>(r.size())};
    for (std::size_t i = r.size(); i-- > 0;) {
        e.coords[i] = index % r[i];
        index /= r[i];
    }
    return e;
}

std::vector<TreeElement> GroupTree::elements(EnumerationLimits const & limits) const
{
    if (static_cast<std::size_t>(order()) > limits.max_elements)
        throw cap_exceeded("enumeration of a group of order " + std::to_string(order())
                           + " exceeds the element cap");
    std::vector<TreeElement> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (i64 i = 0; i < order(); ++i)
        out.push_back(element_at(i));
    return out;
}

bool two_sylow_cyclic(GroupTree const & tree)
{
    return tree.two_sylow() == TwoSylow::cyclic;
}

/* -------------------------------------------------------------- actions */

Action validate_action(AbelianGroup const & h, GroupTree const & g, GeneratorImages const & images,
                       EnumerationLimits const & limits)
{
    if (static_cast<std::size_t>(g.order()) > limits.max_elements)
        throw cap_exceeded("acting group exceeds the element cap");
    if (static_cast<std::size_t>(h.order()) > limits.max_elements)
        throw cap_exceeded("H exceeds the element cap");

    for (auto const & [elt, m] : images) {
        if (!g.contains(elt))
            throw invalid_input("action given on an element outside the acting group");
        if (m.dim() != h.rank())
            throw invalid_input("action matrix dimension does not match H");
        if (!m.is_automorphism(h, limits))
            throw invalid_input("action matrix is not invertible on " + h.to_string());
    }

    std::size_t const n = static_cast<std::size_t>(g.order());
    std::vector<std::optional<EndoMatrix>> table(n);
    std::deque<TreeElement> queue;
    table[static_cast<std::size_t>(g.index_of(g.identity()))] = EndoMatrix::identity(h);
    queue.push_back(g.identity());

    while (!queue.empty()) {
        TreeElement x = std::move(queue.front());
        queue.pop_front();
        EndoMatrix const mx = *table[static_cast<std::size_t>(g.index_of(x))];
        for (auto const & [gen, mg] : images) {
            TreeElement y = g.multiply(x, gen);
            EndoMatrix my = mx.compose(h, mg);
            auto & slot = table[static_cast<std::size_t>(g.index_of(y))];
            if (!slot) {
                slot = std::move(my);
                queue.push_back(std::move(y));
            } else if (*slot != my) {
                throw invalid_input("inconsistent action: two words for the same element "
                                    "give different matrices");
            }
        }
    }

    std::vector<EndoMatrix> done;
    done.reserve(n);
    for (auto & m : table) {
        if (!m)
            throw invalid_input("action generators do not generate the acting group");
        done.push_back(std::move(*m));
    }
    return Action(std::move(done));
}

/* ------------------------------------------------------- Cayley tables */

MultiplicationTable::MultiplicationTable(std::size_t n, std::vector<std::uint32_t> d)
    : n_(n), data(std::move(d))
{
    if (data.size() != n * n)
        throw invalid_input("multiplication table is not square");
}

MultiplicationTable to_multiplication_table(GroupTree const & tree, EnumerationLimits const & limits)
{
    if (static_cast<std::size_t>(tree.order()) > limits.max_table_order)
        throw cap_exceeded("multiplication table of order " + std::to_string(tree.order())
                           + " exceeds the table cap");
    auto const elts = tree.elements(limits);
    std::size_t const n = elts.size();
    std::vector<std::uint32_t> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i * n + j] = static_cast<std::uint32_t>(tree.index_of(tree.multiply(elts[i], elts[j])));
    return MultiplicationTable(n, std::move(d));
}

namespace {

std::uint32_t table_identity(MultiplicationTable const & t)
{
    for (std::uint32_t e = 0; e < t.order(); ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < t.order() && ok; ++x)
            ok = t(e, x) == x && t(x, e) == x;
        if (ok)
            return e;
    }
    throw invalid_input("table has no identity element");
}

std::vector<std::uint32_t> table_inverses(MultiplicationTable const & t, std::uint32_t e)
{
    std::vector<std::uint32_t> inv(t.order());
    for (std::uint32_t x = 0; x < t.order(); ++x)
        for (std::uint32_t y = 0; y < t.order(); ++y)
            if (t(x, y) == e) {
                inv[x] = y;
                break;
            }
    return inv;
}

i64 table_element_order(MultiplicationTable const & t, std::uint32_t e, std::uint32_t x)
{
    i64 o = 1;
    for (std::uint32_t y = x; y != e; y = t(y, x))
        ++o;
    return o;
}

bool is_power_of(i64 n, i64 l)
{
    while (n % l == 0)
        n /= l;
    return n == 1;
}

TwoSylow table_two_sylow(GroupTree const & tree)
{
    auto t = to_multiplication_table(tree);
    auto s = table_sylow(t, 2);
    if (s.size() == 1)
        return TwoSylow::trivial;
    std::uint32_t const e = table_identity(t);
    for (auto x : s)
        if (table_element_order(t, e, x) == static_cast<i64>(s.size()))
            return TwoSylow::cyclic;
    return TwoSylow::noncyclic;
}

} // namespace

void check_group_axioms(MultiplicationTable const & t)
{
    std::size_t const n = t.order();
    if (n == 0)
        throw invalid_input("empty table is not a group");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> row(n, 0), col(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (t(i, j) >= n || t(j, i) >= n)
                throw invalid_input("table entry out of range");
            if (row[t(i, j)]++ || col[t(j, i)]++)
                throw invalid_input("table is not a Latin square");
        }
    }
    table_identity(t);
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (t(t(a, b), c) != t(a, t(b, c)))
            throw invalid_input("table is not associative");
    };
    if (n <= 256) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int k = 0; k < 2000000; ++k)
            assoc(pick(rng), pick(rng), pick(rng));
    }
}

std::vector<std::uint32_t> table_closure(MultiplicationTable const & t, std::vector<std::uint32_t> const & gens)
{
    std::uint32_t const e = table_identity(t);
    std::vector<char> in(t.order(), 0);
    std::vector<std::uint32_t> out{e};
    in[e] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (auto g : gens) {
            std::uint32_t y = t(out[i], g);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> table_sylow(MultiplicationTable const & t, i64 l)
{
    std::uint32_t const e = table_identity(t);
    i64 target = 1;
    for (i64 n = static_cast<i64>(t.order()); n % l == 0; n /= l)
        target *= l;

    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> s{e};
    for (std::uint32_t x = 0; x < t.order() && static_cast<i64>(s.size()) < target; ++x) {
        if (!is_power_of(table_element_order(t, e, x), l))
            continue;
        if (std::binary_search(s.begin(), s.end(), x))
            continue;
        /* a failing candidate never succeeds later: <S,x> only grows with S */
        gens.push_back(x);
        auto c = table_closure(t, gens);
        if (is_power_of(static_cast<i64>(c.size()), l))
            s = std::move(c);
        else
            gens.pop_back();
    }
    if (static_cast<i64>(s.size()) != target)
        throw internal_error("Sylow search did not reach the full Sylow order");
    return s;
}

bool table_is_abelian(MultiplicationTable const & t, std::vector<std::uint32_t> const & subset)
{
    for (auto a : subset)
        for (auto b : subset)
            if (t(a, b) != t(b, a))
                return false;
    return true;
}

bool is_solvable_a_group(MultiplicationTable const & t)
{
    check_group_axioms(t);
    std::uint32_t const e = table_identity(t);
    auto const inv = table_inverses(t, e);

    std::vector<std::uint32_t> current(t.order());
    std::iota(current.begin(), current.end(), 0U);
    while (current.size() > 1) {
        std::vector<std::uint32_t> commutators;
        std::vector<char> seen(t.order(), 0);
        for (auto a : current)
            for (auto b : current) {
                std::uint32_t c = t(t(inv[a], inv[b]), t(a, b));
                if (!seen[c]) {
                    seen[c] = 1;
                    commutators.push_back(c);
                }
            }
        auto next = table_closure(t, commutators);
        if (next.size() == current.size())
            return false;
        current = std::move(next);
    }

    for (i64 l : prime_divisors(static_cast<i64>(t.order())))
        if (!table_is_abelian(t, table_sylow(t, l)))
            return false;
    return true;
}

} // namespace steinitz
