#include "steinitz/abelian_structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <utility>

#include "steinitz/errors.hpp"

namespace steinitz {

namespace {

/* column j += q * column i, mirrored on the tracked transforms */
void add_column(SmithForm & s, IntMatrix & a, std::size_t i, std::size_t j, i64 q)
{
    for (auto & row : a)
        row[j] = checked_add(row[j], checked_mul(q, row[i]));
    for (auto & row : s.v)
        row[j] = checked_add(row[j], checked_mul(q, row[i]));
    /* V^{-1} picks up the inverse elementary operation on rows */
    auto & vi = s.v_inverse;
    for (std::size_t c = 0; c < vi[i].size(); ++c)
        vi[i][c] = checked_add(vi[i][c], -checked_mul(q, vi[j][c]));
}

void swap_columns(SmithForm & s, IntMatrix & a, std::size_t i, std::size_t j)
{
    for (auto & row : a)
        std::swap(row[i], row[j]);
    for (auto & row : s.v)
        std::swap(row[i], row[j]);
    std::swap(s.v_inverse[i], s.v_inverse[j]);
}

void add_row(IntMatrix & a, std::size_t i, std::size_t j, i64 q)
{
    for (std::size_t c = 0; c < a[j].size(); ++c)
        a[j][c] = checked_add(a[j][c], checked_mul(q, a[i][c]));
}

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

} // namespace

SmithForm smith_normal_form(IntMatrix a)
{
    std::size_t const n = a.size();
    SmithForm s;
    s.v = identity_matrix(n);
    s.v_inverse = identity_matrix(n);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            /* pivot: smallest nonzero entry of the trailing block */
            std::size_t pr = n, pc = n;
            i64 best = std::numeric_limits<i64>::max();
            for (std::size_t r = t; r < n; ++r)
                for (std::size_t c = t; c < n; ++c)
                    if (a[r][c] != 0 && std::llabs(a[r][c]) < best) {
                        best = std::llabs(a[r][c]);
                        pr = r;
                        pc = c;
                    }
            if (pr == n)
                break;
            std::swap(a[t], a[pr]);
            if (pc != t)
                swap_columns(s, a, t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < n; ++r) {
                i64 q = a[r][t] / a[t][t];
                if (q != 0)
                    add_row(a, t, r, -q);
                if (a[r][t] != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                i64 q = a[t][c] / a[t][t];
                if (q != 0)
                    add_column(s, a, t, c, -q);
                if (a[t][c] != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            /* the pivot must divide the whole trailing block */
            bool divides = true;
            for (std::size_t r = t + 1; r < n && divides; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        add_row(a, r, t, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a[t][t] < 0) {
            for (auto & x : a[t])
                x = -x;
        }
    }
    s.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        s.diagonal[i] = a[i][i];
    return s;
}

AbelianStructure abelian_structure(std::size_t identity,
                                   std::span<std::size_t const> gens,
                                   ComposeFn const & compose,
                                   std::size_t universe)
{
    constexpr std::size_t absent = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> slot(universe, absent);

    /* exponent vectors with respect to the (dependent) raw generators */
    std::vector<std::size_t> members{identity};
    std::vector<std::vector<i64>> raw{{}};
    slot[identity] = 0;

    std::vector<std::size_t> raw_gens;
    std::vector<std::vector<i64>> relations;

    for (std::size_t x : gens) {
        if (slot[x] != absent)
            continue;
        std::size_t const k_index = raw_gens.size();
        /* smallest k >= 1 with x^k in the current subgroup */
        i64 k = 1;
        std::size_t y = x;
        while (slot[y] == absent) {
            y = compose(y, x);
            ++k;
        }
        std::vector<i64> rel(k_index + 1, 0);
        auto const & w = raw[slot[y]];
        for (std::size_t j = 0; j < w.size(); ++j)
            rel[j] = -w[j];
        rel[k_index] = k;
        relations.push_back(std::move(rel));

        std::size_t const old_size = members.size();
        for (auto & v : raw)
            v.resize(k_index + 1, 0);
        std::size_t xj = x;
        for (i64 j = 1; j < k; ++j) {
            for (std::size_t s = 0; s < old_size; ++s) {
                std::size_t z = compose(members[s], xj);
                if (slot[z] != absent)
                    throw internal_error("abelian_structure: coset collision");
                std::vector<i64> v = raw[s];
                v[k_index] = j;
                slot[z] = members.size();
                members.push_back(z);
                raw.push_back(std::move(v));
            }
            xj = compose(xj, x);
        }
        raw_gens.push_back(x);
    }

    std::size_t const n = raw_gens.size();
    AbelianStructure out;
    out.members = members;
    if (n == 0) {
        out.coords.assign(members.size(), {});
        return out;
    }

    IntMatrix rel(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < relations[i].size(); ++j)
            rel[i][j] = relations[i][j];
    SmithForm snf = smith_normal_form(rel);

    /* keep nontrivial factors, largest first */
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (snf.diagonal[i] == 0)
            throw internal_error("abelian_structure: infinite factor");
        if (snf.diagonal[i] > 1)
            keep.push_back(i);
    }
    std::reverse(keep.begin(), keep.end());

    auto power = [&](std::size_t g, i64 e, i64 order) {
        e = mod(e, order);
        std::size_t r = identity;
        std::size_t b = g;
        while (e > 0) {
            if (e & 1)
                r = compose(r, b);
            b = compose(b, b);
            e >>= 1;
        }
        return r;
    };
    /* order of each raw generator: the product of relation diagonals bounds it */
    i64 group_order = static_cast<i64>(members.size());

    for (std::size_t i : keep) {
        out.invariant_factors.push_back(snf.diagonal[i]);
        std::size_t g = identity;
        for (std::size_t j = 0; j < n; ++j)
            g = compose(g, power(raw_gens[j], snf.v_inverse[i][j], group_order));
        out.generators.push_back(g);
    }

    out.coords.resize(members.size());
    for (std::size_t m = 0; m < members.size(); ++m) {
        std::vector<i64> c;
        c.reserve(keep.size());
        for (std::size_t i : keep) {
            i128 acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                acc += static_cast<i128>(raw[m][j]) * snf.v[j][i];
            c.push_back(static_cast<i64>(((acc % snf.diagonal[i]) + snf.diagonal[i]) % snf.diagonal[i]));
        }
        out.coords[m] = std::move(c);
    }
    return out;
}

} // namespace steinitz
