#include "steinitz/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "steinitz/abelian_structure.hpp"
#include "steinitz/errors.hpp"

namespace steinitz {

bool is_fundamental_discriminant(i64 d)
{
    if (d == 0 || d == 1)
        return false;
    if (mod(d, 4) == 1)
        return is_squarefree(d);
    if (mod(d, 4) != 0)
        return false;
    i64 const q = d / 4;
    i64 const r = mod(q, 4);
    return (r == 2 || r == 3) && is_squarefree(q);
}

QuadField QuadField::imaginary(i64 d)
{
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw invalid_input(std::to_string(d) + " is not a negative fundamental discriminant");
    if (-d > max_abs_discriminant)
        throw invalid_input("|D| = " + std::to_string(-d) + " exceeds the supported bound "
                            + std::to_string(max_abs_discriminant));
    return QuadField(d);
}

QuadField QuadField::from_discriminant(i64 d)
{
    return d == 0 ? rationals() : imaginary(d);
}

std::string QuadField::to_string() const
{
    if (disc == 0)
        return "Q";
    return "Q(sqrt(" + std::to_string(disc % 4 == 0 ? disc / 4 : disc) + "))";
}

i64 QuadForm::discriminant() const
{
    return narrow(static_cast<i128>(b) * b - static_cast<i128>(4) * a * c);
}

std::string QuadForm::to_string() const
{
    std::ostringstream s;
    s << "(" << a << "," << b << "," << c << ")";
    return s.str();
}

bool is_reduced(QuadForm const & f)
{
    if (std::llabs(f.b) > f.a || f.a > f.c)
        return false;
    if ((std::llabs(f.b) == f.a || f.a == f.c) && f.b < 0)
        return false;
    return true;
}

namespace {

void check_form(QuadForm const & f)
{
    if (f.a <= 0)
        throw invalid_input("form " + f.to_string() + " needs a > 0");
    if (f.discriminant() >= 0)
        throw invalid_input("form " + f.to_string() + " is not positive definite");
    if (std::gcd(std::gcd(f.a, f.b), f.c) != 1)
        throw invalid_input("form " + f.to_string() + " is not primitive");
}

/* move b into (-a, a] keeping the discriminant */
QuadForm normalize(QuadForm const & f)
{
    i128 const a = f.a, b = f.b, c = f.c;
    i128 const two_a = 2 * a;
    /* k = floor((a - b) / 2a) */
    i128 num = a - b;
    i128 k = num / two_a;
    if (num % two_a != 0 && num < 0)
        --k;
    i128 const nb = b + two_a * k;
    i128 const nc = a * k * k + b * k + c;
    return QuadForm{f.a, narrow(nb), narrow(nc)};
}

} // namespace

QuadForm reduce(QuadForm f)
{
    check_form(f);
    for (;;) {
        if (!(-f.a < f.b && f.b <= f.a))
            f = normalize(f);
        if (f.a > f.c) {
            f = QuadForm{f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0)
            f.b = -f.b;
        return f;
    }
}

QuadForm compose(QuadForm const & f1, QuadForm const & f2)
{
    check_form(f1);
    check_form(f2);
    i64 const d = f1.discriminant();
    if (f2.discriminant() != d)
        throw invalid_input("compose: discriminant mismatch " + f1.to_string() + " vs "
                            + f2.to_string());
    /*
     * e = gcd(a1, a2, beta) = u a1 + v a2 + w beta with beta = (b1 + b2)/2;
     * a3 = a1 a2 / e^2, b3 = b2 + 2 (a2/e) (v (beta - b2) - w c2) mod 2 a3.
     */
    i64 const beta = (f1.b + f2.b) / 2;
    auto [g1, u1, v1] = ext_gcd(f1.a, f2.a);
    auto [e, x, w] = ext_gcd(g1, beta);
    (void) u1;
    i128 const v = static_cast<i128>(x) * v1;
    i128 const a2e = f2.a / e;
    i128 const a3 = static_cast<i128>(f1.a / e) * a2e;
    i128 b3 = f2.b + 2 * a2e * ((v * (beta - f2.b) - static_cast<i128>(w) * f2.c) % a3);
    b3 %= 2 * a3;
    i128 const c3 = (b3 * b3 - d) / (4 * a3);
    if ((b3 * b3 - d) % (4 * a3) != 0)
        throw internal_error("compose: non-integral third coefficient");
    return reduce(QuadForm{narrow(a3), narrow(b3), narrow(c3)});
}

QuadForm principal_form(i64 d)
{
    if (mod(d, 4) == 0)
        return QuadForm{1, 0, -d / 4};
    return QuadForm{1, 1, (1 - d) / 4};
}

Splitting splitting(i64 p, QuadField const & field)
{
    if (!is_prime(p))
        throw invalid_input(std::to_string(p) + " is not prime");
    if (field.is_rationals())
        return Splitting::split;
    i64 const d = field.discriminant();
    if (d % p == 0)
        return Splitting::ramified;
    return kronecker(d, p) == 1 ? Splitting::split : Splitting::inert;
}

char const * to_string(Splitting s)
{
    switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::ramified: return "ramified";
    }
    return "?";
}

/* ------------------------------------------------------------ ClassGroup */

namespace {

i64 ab_key(i64 a, i64 b)
{
    return (a << 32) + (b + (i64{1} << 31));
}

} // namespace

ClassGroup::ClassGroup(Token, QuadField field) : field_(field)
{
    if (field_.is_rationals()) {
        coords_ = {{}};
        by_coords = {0};
        return;
    }
    i64 const d = field_.discriminant();

    i64 const amax = static_cast<i64>(std::sqrt(static_cast<double>(-d) / 3.0)) + 1;
    for (i64 a = 1; a <= amax; ++a) {
        if (3 * a * a > -d)
            break;
        for (i64 babs = 0; babs <= a; ++babs) {
            for (int sign = 0; sign < (babs == 0 ? 1 : 2); ++sign) {
                i64 const b = sign == 0 ? babs : -babs;
                if (mod(b - d, 2) != 0)
                    continue;
                i64 const num = b * b - d;
                if (num % (4 * a) != 0)
                    continue;
                QuadForm f{a, b, num / (4 * a)};
                if (!is_reduced(f) || std::gcd(std::gcd(a, b), f.c) != 1)
                    continue;
                by_ab.emplace(ab_key(f.a, f.b), forms_.size());
                forms_.push_back(f);
            }
        }
    }
    if (forms_.empty() || forms_[0] != principal_form(d))
        throw internal_error("class group enumeration lost the principal form");

    std::size_t const h = forms_.size();
    auto compose_idx = [&](std::size_t x, std::size_t y) {
        return class_of(steinitz::compose(forms_[x], forms_[y])).index;
    };
    std::vector<std::size_t> all(h);
    std::iota(all.begin(), all.end(), std::size_t{0});
    AbelianStructure st = abelian_structure(0, all, compose_idx, h);
    if (st.members.size() != h)
        throw internal_error("class group structure does not cover every form");

    factors = st.invariant_factors;
    gens = st.generators;
    coords_.assign(h, {});
    for (std::size_t k = 0; k < h; ++k)
        coords_[st.members[k]] = st.coords[k];

    by_coords.assign(h, h);
    for (std::size_t x = 0; x < h; ++x) {
        std::size_t idx = index_of_coords(coords_[x]);
        if (idx >= h || by_coords[idx] != h)
            throw internal_error("class group coordinates are not a bijection");
        by_coords[idx] = x;
    }
    /* coordinates must turn composition into addition */
    for (std::size_t x = 0; x < h; ++x)
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            std::vector<i64> c = coords_[x];
            c[gi] = (c[gi] + 1) % factors[gi];
            if (compose_idx(x, gens[gi]) != by_coords[index_of_coords(c)])
                throw internal_error("class group coordinates are not a homomorphism");
        }
}

ClassGroupPtr ClassGroup::compute(QuadField const & field)
{
    return std::make_shared<ClassGroup const>(Token{}, field);
}

ClassGroupPtr class_group(i64 disc)
{
    return ClassGroup::compute(QuadField::from_discriminant(disc));
}

std::size_t ClassGroup::index_of_coords(std::vector<i64> const & c) const
{
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        idx = idx * static_cast<std::size_t>(factors[i]) + static_cast<std::size_t>(c[i]);
    return idx;
}

void ClassGroup::check(IdealClass x) const
{
    if (x.group == nullptr || x.index >= order())
        throw invalid_input("ideal class does not belong to this class group");
    if (x.group != this && x.group->field() != field_)
        throw invalid_input("ideal class belongs to a different class group");
}

std::vector<IdealClass> ClassGroup::generators() const
{
    std::vector<IdealClass> out;
    for (std::size_t g : gens)
        out.push_back(IdealClass{this, g});
    return out;
}

IdealClass ClassGroup::element(std::size_t index) const
{
    IdealClass x{this, index};
    check(x);
    return x;
}

std::vector<IdealClass> ClassGroup::elements() const
{
    std::vector<IdealClass> out;
    for (std::size_t i = 0; i < order(); ++i)
        out.push_back(IdealClass{this, i});
    return out;
}

QuadForm const & ClassGroup::form(IdealClass x) const
{
    check(x);
    if (field_.is_rationals())
        throw invalid_input("Q has no quadratic forms");
    return forms_[x.index];
}

IdealClass ClassGroup::class_of(QuadForm const & f) const
{
    if (field_.is_rationals())
        throw invalid_input("Q has no quadratic forms");
    if (f.discriminant() != discriminant())
        throw invalid_input("form " + f.to_string() + " has the wrong discriminant");
    QuadForm r = reduce(f);
    auto it = by_ab.find(ab_key(r.a, r.b));
    if (it == by_ab.end())
        throw internal_error("reduced form " + r.to_string() + " missing from the class group");
    return IdealClass{this, it->second};
}

std::vector<i64> const & ClassGroup::coords(IdealClass x) const
{
    check(x);
    return coords_[x.index];
}

IdealClass ClassGroup::compose(IdealClass x, IdealClass y) const
{
    check(x);
    check(y);
    std::vector<i64> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        c[i] = (coords_[x.index][i] + coords_[y.index][i]) % factors[i];
    return IdealClass{this, by_coords[index_of_coords(c)]};
}

IdealClass ClassGroup::inverse(IdealClass x) const
{
    return pow(x, -1);
}

IdealClass ClassGroup::pow(IdealClass x, i64 e) const
{
    check(x);
    std::vector<i64> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        c[i] = static_cast<i64>(static_cast<i128>(coords_[x.index][i]) * mod(e, factors[i]) % factors[i]);
    return IdealClass{this, by_coords[index_of_coords(c)]};
}

i64 ClassGroup::element_order(IdealClass x) const
{
    check(x);
    i64 o = 1;
    for (std::size_t i = 0; i < factors.size(); ++i)
        o = std::lcm(o, factors[i] / std::gcd(factors[i], coords_[x.index][i]));
    return o;
}

IdealClass prime_class(ClassGroup const & cg, i64 p, bool conjugate)
{
    QuadField const & field = cg.field();
    Splitting const s = splitting(p, field);
    if (field.is_rationals())
        return cg.principal();
    if (s == Splitting::inert)
        throw invalid_input("prime " + std::to_string(p) + " is inert in " + field.to_string());
    i64 const d = field.discriminant();

    /* smallest b in [0, 2p) with b^2 = D mod 4p */
    i64 b = -1;
    if (p == 2) {
        for (i64 t = 0; t < 4 && b < 0; ++t)
            if (mod(t * t - d, 8) == 0)
                b = t;
    } else {
        i64 const r = sqrt_mod_prime(mod(d, p), p);
        i64 const parity = mod(d, 2);
        for (i64 s0 : {r, mod(p - r, p)}) {
            i64 cand = mod(s0, 2) == parity ? s0 : s0 + p;
            if (b < 0 || cand < b)
                b = cand;
        }
    }
    if (b < 0)
        throw internal_error("prime_class: no square root of D mod 4p");
    i128 const num = static_cast<i128>(b) * b - d;
    QuadForm f{p, conjugate ? -b : b, narrow(num / (4 * p))};
    return cg.class_of(f);
}

/* --------------------------------------------------------- subgroups */

ClassSubgroup::ClassSubgroup(ClassGroupPtr parent, std::vector<std::size_t> members, std::vector<std::size_t> g)
    : parent_(std::move(parent)), members_(std::move(members)), gens(std::move(g))
{
    std::sort(members_.begin(), members_.end());
}

ClassSubgroup ClassSubgroup::trivial(ClassGroupPtr parent)
{
    return ClassSubgroup(std::move(parent), {0}, {});
}

ClassSubgroup ClassSubgroup::full(ClassGroupPtr parent)
{
    auto gens = parent->generators();
    return subgroup_generate(parent, gens);
}

std::vector<IdealClass> ClassSubgroup::generators() const
{
    std::vector<IdealClass> out;
    for (std::size_t g : gens)
        out.push_back(parent_->element(g));
    return out;
}

bool ClassSubgroup::contains(IdealClass x) const
{
    return std::binary_search(members_.begin(), members_.end(), parent_->element(x.index).index);
}

ClassSubgroup::Structure ClassSubgroup::structure() const
{
    ClassGroup const & cg = *parent_;
    auto compose_idx = [&](std::size_t x, std::size_t y) {
        return cg.compose(cg.element(x), cg.element(y)).index;
    };
    AbelianStructure st = abelian_structure(0, gens, compose_idx, cg.order());
    Structure out;
    out.invariant_factors = st.invariant_factors;
    for (std::size_t g : st.generators)
        out.generators.push_back(cg.element(g));
    return out;
}

bool ClassSubgroup::is_closed() const
{
    ClassGroup const & cg = *parent_;
    if (!std::binary_search(members_.begin(), members_.end(), std::size_t{0}))
        return false;
    for (std::size_t x : members_) {
        if (!std::binary_search(members_.begin(), members_.end(), cg.inverse(cg.element(x)).index))
            return false;
        for (std::size_t y : members_)
            if (!std::binary_search(members_.begin(), members_.end(),
                                    cg.compose(cg.element(x), cg.element(y)).index))
                return false;
    }
    return true;
}

bool ClassSubgroup::operator==(ClassSubgroup const & o) const
{
    return subgroup_eq(*this, o);
}

namespace {

void check_parent(ClassGroupPtr const & a, ClassGroupPtr const & b)
{
    if (a.get() != b.get() && a->field() != b->field())
        throw invalid_input("subgroups of different class groups");
}

} // namespace

ClassSubgroup subgroup_generate(ClassGroupPtr const & cg, std::vector<IdealClass> const & gens)
{
    std::vector<char> in(cg->order(), 0);
    std::vector<std::size_t> members{0};
    in[0] = 1;
    std::vector<std::size_t> used;
    std::vector<IdealClass> closure_gens;
    for (IdealClass g : gens) {
        g = cg->element(g.index);
        if (g.group != cg.get() && g.group->field() != cg->field())
            throw invalid_input("generator belongs to a different class group");
        if (in[g.index])
            continue;
        used.push_back(g.index);
        closure_gens.push_back(g);
        /* re-close: every member times every generator so far */
        for (std::size_t i = 0; i < members.size(); ++i)
            for (IdealClass const & s : closure_gens) {
                std::size_t y = cg->compose(cg->element(members[i]), s).index;
                if (!in[y]) {
                    in[y] = 1;
                    members.push_back(y);
                }
            }
    }
    return ClassSubgroup(cg, std::move(members), std::move(used));
}

ClassSubgroup subgroup_from_members(ClassGroupPtr const & cg, std::vector<std::size_t> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<IdealClass> gens;
    for (std::size_t m : members)
        gens.push_back(cg->element(m));
    ClassSubgroup s = subgroup_generate(cg, gens);
    if (s.members() != members)
        throw invalid_input("member set is not a subgroup");
    return s;
}

ClassSubgroup subgroup_power(ClassSubgroup const & s, i64 e)
{
    if (e < 0)
        throw invalid_input("subgroup_power needs e >= 0");
    auto const & cg = s.parent();
    std::vector<IdealClass> gens;
    for (IdealClass g : s.generators())
        gens.push_back(cg->pow(g, e));
    return subgroup_generate(cg, gens);
}

ClassSubgroup subgroup_product(ClassSubgroup const & s1, ClassSubgroup const & s2)
{
    check_parent(s1.parent(), s2.parent());
    auto gens = s1.generators();
    for (IdealClass g : s2.generators())
        gens.push_back(g);
    return subgroup_generate(s1.parent(), gens);
}

bool subgroup_eq(ClassSubgroup const & s1, ClassSubgroup const & s2)
{
    check_parent(s1.parent(), s2.parent());
    return s1.members() == s2.members();
}

bool subgroup_contains(ClassSubgroup const & s1, ClassSubgroup const & s2)
{
    check_parent(s1.parent(), s2.parent());
    return std::includes(s1.members().begin(), s1.members().end(),
                         s2.members().begin(), s2.members().end());
}

} // namespace steinitz
