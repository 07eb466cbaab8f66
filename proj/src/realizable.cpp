#include "steinitz/realizable.hpp"

#include <numeric>
#include <sstream>

#include "steinitz/calculus.hpp"
#include "steinitz/errors.hpp"

namespace steinitz {

void check_admissible(GroupTree const & tree)
{
    switch (tree.kind()) {
    case GroupTree::Kind::abelian: {
        AbelianGroup const & h = tree.leaf();
        if (h.order() % 2 == 0 && h.invariant_factors() != std::vector<i64>{2})
            throw inadmissible_tree("even abelian leaf " + h.to_string() + " other than C(2)");
        return;
    }
    case GroupTree::Kind::semidirect: {
        AbelianGroup const & h = tree.kernel();
        GroupTree const & g = tree.quotient();
        if (h.order() % 2 == 0)
            throw inadmissible_tree("semidirect kernel " + h.to_string() + " has even order");
        if (std::gcd(h.order(), g.order()) != 1)
            throw inadmissible_tree("semidirect kernel " + h.to_string() + " and quotient " + g.describe()
                                    + " have orders that are not coprime");
        if (tree.action().size() != static_cast<std::size_t>(g.order()))
            throw inadmissible_tree("action table of " + tree.describe() + " is incomplete");
        check_admissible(g);
        return;
    }
    case GroupTree::Kind::direct: {
        GroupTree const & a = tree.left();
        GroupTree const & b = tree.right();
        check_admissible(a);
        check_admissible(b);
        if (!a.is_odd() && !b.is_odd()
            && !(a.two_sylow() == TwoSylow::noncyclic && b.two_sylow() == TwoSylow::noncyclic))
            throw inadmissible_tree("direct product " + tree.describe()
                                    + " has two even factors without noncyclic 2-Sylow subgroups");
        return;
    }
    }
}

namespace {

std::vector<std::size_t> indices(std::vector<IdealClass> const & xs)
{
    std::vector<std::size_t> out;
    for (IdealClass const & x : xs)
        out.push_back(x.index);
    return out;
}

/* Appends a finished sub-trace and returns the index of its root. */
std::size_t splice(std::vector<TraceEntry> & trace, std::vector<TraceEntry> const & sub)
{
    std::size_t const offset = trace.size();
    for (TraceEntry e : sub) {
        for (PowerTerm & p : e.powers)
            p.child += offset;
        trace.push_back(std::move(e));
    }
    return trace.size() - 1;
}

std::string formula_text(TraceEntry const & e)
{
    std::ostringstream s;
    bool first = true;
    auto sep = [&] {
        if (!first)
            s << " * ";
        first = false;
    };
    if (e.full_class_group) {
        sep();
        s << "Cl(k)";
    }
    for (PowerTerm const & p : e.powers) {
        sep();
        s << "R[" << p.child << "]^" << p.exponent;
    }
    for (WTerm const & w : e.w_terms) {
        sep();
        s << "W(" << w.field.to_string() << ")^" << w.exponent;
        if (w.multiplicity > 1)
            s << " x" << w.multiplicity;
    }
    if (first)
        s << "1";
    return s.str();
}

WTerm make_w_term(FixedFieldDescriptor const & d, i64 l, i64 exponent, WResult const & w)
{
    WTerm t;
    t.field = d;
    t.l = l;
    t.exponent = exponent;
    t.generators = indices(w.group.generators());
    t.members = w.group.members();
    t.cert = w.cert;
    return t;
}

ClassSubgroup evaluate_entry(ClassGroupPtr const & cg, TraceEntry const & e,
                             std::vector<ClassSubgroup> const & done)
{
    ClassSubgroup acc = e.full_class_group ? ClassSubgroup::full(cg) : ClassSubgroup::trivial(cg);
    for (PowerTerm const & p : e.powers) {
        if (p.child >= done.size())
            throw invalid_input("corrupt trace: forward reference to entry " + std::to_string(p.child));
        if (p.exponent < 0)
            throw invalid_input("corrupt trace: negative exponent");
        acc = subgroup_product(acc, subgroup_power(done[p.child], p.exponent));
    }
    for (WTerm const & w : e.w_terms) {
        std::vector<IdealClass> gens;
        for (std::size_t g : w.generators) {
            if (g >= cg->order())
                throw invalid_input("corrupt trace: class index out of range");
            gens.push_back(cg->element(g));
        }
        if (w.exponent < 0)
            throw invalid_input("corrupt trace: negative exponent");
        acc = subgroup_product(acc, subgroup_power(subgroup_generate(cg, gens), w.exponent));
    }
    return acc;
}

std::vector<ClassSubgroup> replay_all(ClassGroupPtr const & cg, std::vector<TraceEntry> const & trace)
{
    std::vector<ClassSubgroup> done;
    for (TraceEntry const & e : trace)
        done.push_back(evaluate_entry(cg, e, done));
    return done;
}

WOptions w_options(RtOptions const & o)
{
    return WOptions{o.prime_bound, o.ceiling};
}

} // namespace

RtEngine::RtEngine(ClassGroupPtr c, RtOptions o) : cg(std::move(c)), opts(std::move(o)) {}

WResult RtEngine::w(CycloSubgroup const & s)
{
    if (!opts.dedupe)
        return w_group(cg, s, w_options(opts));
    FixedFieldDescriptor const d = fixed_field_descriptor(s);
    std::promise<WResult> promise;
    std::shared_future<WResult> f;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = ws.find(d);
        if (it != ws.end()) {
            f = it->second;
        } else {
            f = promise.get_future().share();
            ws.emplace(d, f);
            owner = true;
        }
    }
    if (!owner)
        return f.get();
    try {
        WResult r = w_group(cg, s, w_options(opts));
        promise.set_value(r);
        return r;
    } catch (...) {
        promise.set_exception(std::current_exception());
        throw;
    }
}

RtResult RtEngine::rt(GroupTree const & tree)
{
    std::promise<RtResult> promise;
    std::shared_future<RtResult> f;
    bool owner = false;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = nodes.find(tree.key());
        if (it != nodes.end()) {
            f = it->second;
        } else {
            f = promise.get_future().share();
            nodes.emplace(tree.key(), f);
            owner = true;
        }
    }
    if (!owner)
        return f.get();
    try {
        RtResult r = compute(tree);
        promise.set_value(r);
        return r;
    } catch (...) {
        promise.set_exception(std::current_exception());
        throw;
    }
}

RtResult RtEngine::compute_kernel(AbelianGroup const & h, GroupTree const * g, Action const * mu, i64 m,
                                  std::string const & node)
{
    QuadField const & field = cg->field();
    i64 const n = h.order();
    TraceEntry entry;
    entry.node = node;
    std::map<FixedFieldDescriptor, std::size_t> seen;
    for (i64 l : prime_divisors(n)) {
        for (AbElement const & tau : h.sylow_part(l, opts.limits)) {
            if (h.is_identity(tau))
                continue;
            i64 const o = h.element_order(tau);
            CycloSubgroup const s = g != nullptr ? g_k_mu_tau(field, *g, *mu, h, tau, opts.limits)
                                                 : CycloSubgroup::trivial(o);
            FixedFieldDescriptor const d = fixed_field_descriptor(s);
            i64 const e = theorem_exponent(l, o, m, n);
            if (opts.dedupe) {
                auto it = seen.find(d);
                if (it != seen.end()) {
                    WTerm & t = entry.w_terms[it->second];
                    if (t.exponent != e)
                        throw internal_error("equal fixed fields with different exponents");
                    ++t.multiplicity;
                    continue;
                }
                seen.emplace(d, entry.w_terms.size());
            }
            entry.w_terms.push_back(make_w_term(d, l, e, w(s)));
        }
    }
    RtResult out{ClassSubgroup::trivial(cg), {}};
    out.trace.push_back(std::move(entry));
    return out;
}

RtResult RtEngine::compute(GroupTree const & tree)
{
    RtResult out{ClassSubgroup::trivial(cg), {}};
    TraceEntry root;
    switch (tree.kind()) {
    case GroupTree::Kind::abelian: {
        AbelianGroup const & h = tree.leaf();
        if (h.is_trivial()) {
            root.node = tree.describe();
        } else if (h.invariant_factors() == std::vector<i64>{2}) {
            root.node = tree.describe();
            root.full_class_group = true;
        } else if (h.order() % 2 == 1) {
            root = compute_kernel(h, nullptr, nullptr, 1, tree.describe()).trace.back();
        } else {
            throw inadmissible_tree("even abelian leaf " + h.to_string() + " other than C(2)");
        }
        break;
    }
    case GroupTree::Kind::semidirect: {
        check_admissible(tree);
        GroupTree const & g = tree.quotient();
        RtResult child = rt(g);
        root = compute_kernel(tree.kernel(), &g, &tree.action(), g.order(), tree.describe()).trace.back();
        std::size_t const at = splice(out.trace, child.trace);
        root.powers.push_back(PowerTerm{at, tree.kernel().order()});
        break;
    }
    case GroupTree::Kind::direct: {
        check_admissible(tree);
        GroupTree const & a = tree.left();
        GroupTree const & b = tree.right();
        auto left = std::async(std::launch::async, [&] { return rt(a); });
        RtResult rb = rt(b);
        RtResult ra = left.get();
        std::size_t const ia = splice(out.trace, ra.trace);
        std::size_t const ib = splice(out.trace, rb.trace);
        root.node = tree.describe();
        root.powers.push_back(PowerTerm{ia, b.order()});
        root.powers.push_back(PowerTerm{ib, a.order()});
        break;
    }
    }

    std::vector<ClassSubgroup> done = replay_all(cg, out.trace);
    out.subgroup = evaluate_entry(cg, root, done);
    if (!out.subgroup.is_closed())
        throw internal_error("R_t of " + tree.describe() + " is not a subgroup");
    root.formula = formula_text(root);
    root.members = out.subgroup.members();
    out.trace.push_back(std::move(root));
    return out;
}

RtResult rt(ClassGroupPtr const & cg, GroupTree const & tree, RtOptions const & opts)
{
    check_admissible(tree);
    RtEngine engine(cg, opts);
    return engine.rt(tree);
}

RtResult rt_dihedral(ClassGroupPtr const & cg, i64 n, RtOptions const & opts)
{
    if (n < 3 || n % 2 == 0)
        throw invalid_input("rt_dihedral needs an odd n >= 3, got " + std::to_string(n));
    QuadField const & field = cg->field();
    RtResult out{ClassSubgroup::full(cg), {}};

    TraceEntry cl;
    cl.node = "C(2)";
    cl.full_class_group = true;
    cl.formula = "Cl(k)";
    cl.members = out.subgroup.members();
    out.trace.push_back(cl);

    TraceEntry root;
    root.node = "D(" + std::to_string(n) + ")";
    root.powers.push_back(PowerTerm{0, n});
    ClassSubgroup acc = subgroup_power(ClassSubgroup::full(cg), n);
    for (auto [l, k] : factor(n)) {
        i64 o = 1;
        for (int j = 1; j <= k; ++j) {
            o *= l;
            std::vector<i64> pm;
            CycloSubgroup const gal = galois_group(field, o);
            for (i64 a : gal.members())
                if (a == 1 || a == o - 1)
                    pm.push_back(a);
            CycloSubgroup const s(o, pm);
            i64 const e = (l - 1) / 2 * (2 * n / o);
            WResult const w = w_group(cg, s, w_options(opts));
            WTerm t = make_w_term(fixed_field_descriptor(s), l, e, w);
            /* tau of order o in C(n): phi(o) of them */
            t.multiplicity = static_cast<std::size_t>(euler_phi(o));
            root.w_terms.push_back(t);
            acc = subgroup_product(acc, subgroup_power(w.group, e));
        }
    }
    root.formula = formula_text(root);
    root.members = acc.members();
    out.trace.push_back(root);
    out.subgroup = acc;
    return out;
}

ClassSubgroup rt_trace_replay(ClassGroupPtr const & cg, std::vector<TraceEntry> const & trace)
{
    if (trace.empty())
        return ClassSubgroup::trivial(cg);
    return replay_all(cg, trace).back();
}

bool trace_matches(RtResult const & result)
{
    ClassGroupPtr const & cg = result.subgroup.parent();
    std::vector<ClassSubgroup> done = replay_all(cg, result.trace);
    for (std::size_t i = 0; i < done.size(); ++i)
        if (done[i].members() != result.trace[i].members)
            return false;
    ClassSubgroup const last = done.empty() ? ClassSubgroup::trivial(cg) : done.back();
    return last == result.subgroup;
}

std::vector<GoodCheck> good_membership_check(ClassGroupPtr const & cg, GroupTree const & tree,
                                             ClassSubgroup const & rt_group,
                                             std::vector<RamScenario> const & scenarios)
{
    i64 const m = tree.order();
    std::vector<GoodCheck> out;
    for (RamScenario const & sc : scenarios) {
        if (sc.e < 1 || m % sc.e != 0)
            throw invalid_input("ramification index " + std::to_string(sc.e) + " does not divide |G| = "
                                + std::to_string(m));
        IdealClass const x = prime_class(*cg, sc.p, sc.conjugate);
        auto record = [&](std::string property, i64 l, i64 exponent) {
            out.push_back(GoodCheck{sc, std::move(property), l, exponent,
                                    rt_group.contains(cg->pow(x, exponent))});
        };
        if (m % 2 == 1)
            record("2b", 0, discriminant_exponent(sc.e, m) / 2);
        for (GoodExponent const & g : good_exponents(sc.e, m)) {
            record("3", g.l, g.exp);
            if (g.half)
                record("3/2", g.l, *g.half);
        }
    }
    return out;
}

} // namespace steinitz
