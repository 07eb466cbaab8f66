#include "render.hpp"

#include <sstream>

#include "steinitz/errors.hpp"
#include "steinitz/group_spec.hpp"

namespace steinitz::cli {

using nlohmann::json;

std::string structure_text(std::vector<i64> const & factors)
{
    if (factors.empty())
        return "1";
    std::ostringstream s;
    for (std::size_t i = 0; i < factors.size(); ++i)
        s << (i ? " x " : "") << "C" << factors[i];
    return s.str();
}

std::string forms_text(ClassGroup const & cg, std::vector<IdealClass> const & xs)
{
    if (xs.empty())
        return "none";
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s << (i ? ", " : "") << cg.form(xs[i]).to_string();
    return s.str();
}

json form_json(QuadForm const & f)
{
    return json::array({f.a, f.b, f.c});
}

json class_json(ClassGroup const & cg, IdealClass x)
{
    if (cg.field().is_rationals())
        return nullptr;
    return form_json(cg.form(x));
}

json class_group_json(ClassGroup const & cg)
{
    json gens = json::array();
    for (IdealClass g : cg.generators())
        gens.push_back(form_json(cg.form(g)));
    return json{{"disc", cg.discriminant()},
                {"order", cg.order()},
                {"invariant_factors", cg.invariant_factors()},
                {"generators", gens}};
}

json subgroup_json(ClassSubgroup const & s)
{
    ClassSubgroup::Structure st = s.structure();
    json gens = json::array();
    for (IdealClass g : st.generators)
        gens.push_back(form_json(s.parent()->form(g)));
    return json{{"order", s.order()},
                {"invariant_factors", st.invariant_factors},
                {"generators", gens},
                {"index", s.index()}};
}

json certificate_json(WCertificate const & c)
{
    return json{{"initial_bound", c.initial_bound},
                {"final_bound", c.final_bound},
                {"windows", c.windows},
                {"reached_full", c.reached_full},
                {"qualifying_primes", c.qualifying_primes},
                {"witness_primes", c.witness_primes}};
}

json trace_json(ClassGroup const & cg, GroupTree const & tree, RtResult const & r)
{
    json forms = json::array();
    for (QuadForm const & f : cg.forms())
        forms.push_back(form_json(f));
    json entries = json::array();
    for (TraceEntry const & e : r.trace) {
        json powers = json::array();
        for (PowerTerm const & p : e.powers)
            powers.push_back(json{{"child", p.child}, {"exponent", p.exponent}});
        json ws = json::array();
        for (WTerm const & w : e.w_terms)
            ws.push_back(json{{"modulus", w.field.modulus},
                              {"galois_subgroup", w.field.members},
                              {"fixed_field", w.field.to_string()},
                              {"l", w.l},
                              {"exponent", w.exponent},
                              {"multiplicity", w.multiplicity},
                              {"generators", w.generators},
                              {"members", w.members},
                              {"certificate", certificate_json(w.cert)}});
        entries.push_back(json{{"node", e.node},
                               {"formula", e.formula},
                               {"full_class_group", e.full_class_group},
                               {"powers", powers},
                               {"w_terms", ws},
                               {"members", e.members}});
    }
    return json{{"disc", cg.discriminant()},
                {"group", json::parse(group_spec_text(tree))},
                {"forms", forms},
                {"entries", entries}};
}

std::vector<TraceEntry> trace_from_json(json const & doc)
{
    try {
        std::vector<TraceEntry> out;
        for (json const & e : doc.at("entries")) {
            TraceEntry t;
            t.node = e.at("node").get<std::string>();
            t.formula = e.at("formula").get<std::string>();
            t.full_class_group = e.at("full_class_group").get<bool>();
            for (json const & p : e.at("powers"))
                t.powers.push_back(PowerTerm{p.at("child").get<std::size_t>(), p.at("exponent").get<i64>()});
            for (json const & w : e.at("w_terms")) {
                WTerm x;
                x.field.modulus = w.at("modulus").get<i64>();
                x.field.members = w.at("galois_subgroup").get<std::vector<i64>>();
                x.l = w.at("l").get<i64>();
                x.exponent = w.at("exponent").get<i64>();
                x.multiplicity = w.at("multiplicity").get<std::size_t>();
                x.generators = w.at("generators").get<std::vector<std::size_t>>();
                x.members = w.at("members").get<std::vector<std::size_t>>();
                json const & c = w.at("certificate");
                x.cert.initial_bound = c.at("initial_bound").get<i64>();
                x.cert.final_bound = c.at("final_bound").get<i64>();
                x.cert.windows = c.at("windows").get<int>();
                x.cert.reached_full = c.at("reached_full").get<bool>();
                x.cert.qualifying_primes = c.at("qualifying_primes").get<std::size_t>();
                x.cert.witness_primes = c.at("witness_primes").get<std::vector<i64>>();
                t.w_terms.push_back(std::move(x));
            }
            t.members = e.at("members").get<std::vector<std::size_t>>();
            out.push_back(std::move(t));
        }
        return out;
    } catch (json::exception const & e) {
        throw invalid_input(std::string("corrupt trace document: ") + e.what());
    }
}

} // namespace steinitz::cli
