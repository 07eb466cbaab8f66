#ifndef STEINITZ_CLASSGROUP_HPP
#define STEINITZ_CLASSGROUP_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "steinitz/arith.hpp"

namespace steinitz {

/* Largest |D| for which class groups are enumerated. */
inline constexpr i64 max_abs_discriminant = 10'000'000;

bool is_fundamental_discriminant(i64 d);

/* The base field: Q, or an imaginary quadratic field of fundamental discriminant D < 0. */
class QuadField
{
    i64 disc = 0;

    explicit QuadField(i64 d) : disc(d) {}

    public:

    static QuadField rationals() { return QuadField(0); }
    static QuadField imaginary(i64 d);
    /* 0 encodes Q */
    static QuadField from_discriminant(i64 d);

    bool is_rationals() const { return disc == 0; }
    i64 discriminant() const { return disc; }
    std::string to_string() const;

    bool operator==(QuadField const &) const = default;
};

/* a x^2 + b x y + c y^2 */
struct QuadForm {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    i64 discriminant() const;
    std::string to_string() const;

    bool operator==(QuadForm const &) const = default;
};

bool is_reduced(QuadForm const & f);
QuadForm reduce(QuadForm f);
/* Gauss composition; the result is reduced. */
QuadForm compose(QuadForm const & f1, QuadForm const & f2);
QuadForm principal_form(i64 d);
/* (a, -b, c), the inverse class */
inline QuadForm opposite(QuadForm const & f) { return QuadForm{f.a, -f.b, f.c}; }

enum class Splitting { split, inert, ramified };

Splitting splitting(i64 p, QuadField const & field);
char const * to_string(Splitting s);

class ClassGroup;

/* An ideal class: an element of a particular ClassGroup. */
struct IdealClass {
    ClassGroup const * group = nullptr;
    std::size_t index = 0;

    bool operator==(IdealClass const &) const = default;
};

/*
 * Cl(k) for k = Q or an imaginary quadratic field, fully enumerated as
 * reduced forms. Elements are stored in canonical order: a ascending, then
 * |b| ascending, then b >= 0 first. Index 0 is the principal class.
 */
class ClassGroup : public std::enable_shared_from_this<ClassGroup>
{
    QuadField field_;
    std::vector<QuadForm> forms_;
    std::unordered_map<i64, std::size_t> by_ab;
    std::vector<i64> factors;
    std::vector<std::size_t> gens;
    std::vector<std::vector<i64>> coords_;
    std::vector<std::size_t> by_coords;

    struct Token {};

    public:

    ClassGroup(Token, QuadField field);

    static std::shared_ptr<ClassGroup const> compute(QuadField const & field);

    QuadField const & field() const { return field_; }
    i64 discriminant() const { return field_.discriminant(); }
    std::size_t order() const { return coords_.size(); }
    std::vector<i64> const & invariant_factors() const { return factors; }
    std::vector<IdealClass> generators() const;

    IdealClass principal() const { return IdealClass{this, 0}; }
    IdealClass element(std::size_t index) const;
    std::vector<IdealClass> elements() const;
    /* only for imaginary fields; Q has no forms */
    QuadForm const & form(IdealClass x) const;
    std::vector<QuadForm> const & forms() const { return forms_; }
    IdealClass class_of(QuadForm const & f) const;
    std::vector<i64> const & coords(IdealClass x) const;

    IdealClass compose(IdealClass x, IdealClass y) const;
    IdealClass inverse(IdealClass x) const;
    IdealClass pow(IdealClass x, i64 e) const;
    i64 element_order(IdealClass x) const;

    private:

    void check(IdealClass x) const;
    std::size_t index_of_coords(std::vector<i64> const & c) const;
};

using ClassGroupPtr = std::shared_ptr<ClassGroup const>;

/* Convenience wrapper around ClassGroup::compute. */
ClassGroupPtr class_group(i64 disc);

/*
 * Class of the degree-1 prime over p given by the form (p, b, (b^2-D)/4p)
 * with b the smallest nonnegative solution of b^2 = D mod 4p. conjugate
 * selects the other prime over p (the inverse class).
 */
IdealClass prime_class(ClassGroup const & cg, i64 p, bool conjugate = false);

/* A subgroup of a ClassGroup, stored as its sorted member list. */
class ClassSubgroup
{
    ClassGroupPtr parent_;
    std::vector<std::size_t> members_;
    std::vector<std::size_t> gens;

    ClassSubgroup(ClassGroupPtr parent, std::vector<std::size_t> members, std::vector<std::size_t> gens);

    public:

    static ClassSubgroup trivial(ClassGroupPtr parent);
    static ClassSubgroup full(ClassGroupPtr parent);

    ClassGroupPtr const & parent() const { return parent_; }
    std::vector<std::size_t> const & members() const { return members_; }
    std::vector<IdealClass> generators() const;
    std::size_t order() const { return members_.size(); }
    std::size_t index() const { return parent_->order() / members_.size(); }
    bool is_trivial() const { return members_.size() == 1; }
    bool is_full() const { return members_.size() == parent_->order(); }
    bool contains(IdealClass x) const;

    /* invariant factors (n_{i+1} | n_i) and matching generators */
    struct Structure {
        std::vector<i64> invariant_factors;
        std::vector<IdealClass> generators;
    };
    Structure structure() const;

    /* closed under composition and inverse, contains the principal class */
    bool is_closed() const;

    friend ClassSubgroup subgroup_generate(ClassGroupPtr const & cg, std::vector<IdealClass> const & gens);
    friend ClassSubgroup subgroup_from_members(ClassGroupPtr const & cg, std::vector<std::size_t> members);

    bool operator==(ClassSubgroup const & o) const;
};

ClassSubgroup subgroup_generate(ClassGroupPtr const & cg, std::vector<IdealClass> const & gens);
/* Builds a subgroup from an explicit member set; throws if it is not closed. */
ClassSubgroup subgroup_from_members(ClassGroupPtr const & cg, std::vector<std::size_t> members);
/* image of S under x -> x^e */
ClassSubgroup subgroup_power(ClassSubgroup const & s, i64 e);
ClassSubgroup subgroup_product(ClassSubgroup const & s1, ClassSubgroup const & s2);
bool subgroup_eq(ClassSubgroup const & s1, ClassSubgroup const & s2);
/* s2 is a subset of s1 */
bool subgroup_contains(ClassSubgroup const & s1, ClassSubgroup const & s2);

} // namespace steinitz

#endif
