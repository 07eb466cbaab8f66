#ifndef STEINITZ_ABELIAN_STRUCTURE_HPP
#define STEINITZ_ABELIAN_STRUCTURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "steinitz/arith.hpp"

namespace steinitz {

using IntMatrix = std::vector<std::vector<i64>>;

/*
 * Smith normal form D = U * A * V of a square integer matrix. Only the
 * column transform V and its inverse are tracked; diagonal entries are
 * nonnegative and each divides the next.
 */
struct SmithForm {
    std::vector<i64> diagonal;
    IntMatrix v;
    IntMatrix v_inverse;
};

SmithForm smith_normal_form(IntMatrix a);

/*
 * Structure of the subgroup generated by some elements of a finite abelian
 * group given as a black box on element ids [0, universe).
 *
 * invariant_factors follow the n_{i+1} | n_i convention and generators[i]
 * has order invariant_factors[i]. coords[k] is the exponent vector of
 * members[k] with respect to generators.
 */
struct AbelianStructure {
    std::vector<i64> invariant_factors;
    std::vector<std::size_t> generators;
    std::vector<std::size_t> members;
    std::vector<std::vector<i64>> coords;
};

using ComposeFn = std::function<std::size_t(std::size_t, std::size_t)>;

AbelianStructure abelian_structure(std::size_t identity,
                                   std::span<std::size_t const> gens,
                                   ComposeFn const & compose,
                                   std::size_t universe);

} // namespace steinitz

#endif
