#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "render.hpp"
#include "steinitz/calculus.hpp"
#include "steinitz/classgroup.hpp"
#include "steinitz/cyclotomic.hpp"
#include "steinitz/errors.hpp"
#include "steinitz/group_spec.hpp"
#include "steinitz/realizable.hpp"

namespace steinitz::cli {

using nlohmann::json;

namespace {

i64 parse_int(std::string_view s, std::string const & what)
{
    i64 v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw invalid_input("malformed " + what + " '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t k = s.find(sep, start);
        out.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
        if (k == std::string_view::npos)
            return out;
        start = k + 1;
    }
}

/* "p:e" items, p' selects the conjugate prime */
std::vector<RamificationDatum> parse_ram(std::string const & text)
{
    std::vector<RamificationDatum> out;
    if (text.empty())
        return out;
    for (std::string_view item : split(text, ',')) {
        auto parts = split(item, ':');
        if (parts.size() != 2)
            throw invalid_input("ramification item '" + std::string(item) + "' is not p:e");
        RamificationDatum r;
        std::string_view p = parts[0];
        if (!p.empty() && p.back() == '\'') {
            r.conjugate = true;
            p.remove_suffix(1);
        }
        r.p = parse_int(p, "prime");
        r.e = parse_int(parts[1], "ramification index");
        out.push_back(r);
    }
    return out;
}

void emit(std::ostream & out, json const & j)
{
    out << j.dump(2) << "\n";
}

int cmd_classgroup(CliConfig const & c, std::ostream & out)
{
    ClassGroupPtr cg = class_group(c.disc);
    if (c.json) {
        emit(out, class_group_json(*cg));
        return ok;
    }
    out << "h = " << cg->order() << ", Cl ≅ " << structure_text(cg->invariant_factors())
        << ", generators: " << forms_text(*cg, cg->generators()) << "\n";
    return ok;
}

int cmd_wgroup(CliConfig const & c, std::ostream & out)
{
    ClassGroupPtr cg = class_group(c.disc);
    CycloSubgroup s = CycloSubgroup::generate(c.modulus, c.subgroup);
    WResult w = w_group(cg, s, WOptions{c.bound, std::nullopt});
    if (c.json) {
        emit(out, json{{"disc", c.disc},
                       {"modulus", c.modulus},
                       {"subgroup", s.members()},
                       {"w", subgroup_json(w.group)},
                       {"certificate", certificate_json(w.cert)}});
        return ok;
    }
    ClassSubgroup::Structure st = w.group.structure();
    out << "W ≅ " << structure_text(st.invariant_factors) << ", index " << w.group.index()
        << ", generators: " << forms_text(*cg, st.generators) << "\n";
    out << "stabilized at bound " << w.cert.final_bound << " (initial " << w.cert.initial_bound << ", "
        << w.cert.windows << " windows" << (w.cert.reached_full ? ", full group reached" : "") << ")\n";
    return ok;
}

int cmd_steinitz(CliConfig const & c, std::ostream & out)
{
    ClassGroupPtr cg = class_group(c.disc);
    std::vector<RamificationDatum> ram = parse_ram(c.ram);
    IdealClass st = steinitz_from_ramification(*cg, ram, c.order, c.noncyclic_two_sylow);
    if (c.json) {
        json r = json::array();
        for (RamificationDatum const & d : ram)
            r.push_back(json{{"p", d.p}, {"e", d.e}, {"conjugate", d.conjugate}});
        emit(out, json{{"disc", c.disc}, {"order", c.order}, {"ramification", r}, {"class", class_json(*cg, st)}});
        return ok;
    }
    out << "st = " << (cg->field().is_rationals() ? std::string("1") : cg->form(st).to_string()) << "\n";
    return ok;
}

int cmd_exponents(CliConfig const & c, std::ostream & out)
{
    AlphasL a = alphas_l(c.l, c.otau, c.n);
    i64 const three = beta_l_three_term(c.l, c.otau, c.n);
    i64 const two = beta_l_two_term(c.l, c.otau, c.n);
    i64 const beta = beta_l(c.l, c.otau, c.n);
    i64 const te = theorem_exponent(c.l, c.otau, c.m, c.n);
    if (c.json) {
        emit(out, json{{"l", c.l},
                       {"otau", c.otau},
                       {"m", c.m},
                       {"n", c.n},
                       {"alphas", {{"a1", a.a1}, {"a2", a.a2}, {"a3", a.a3}, {"a3_scaled", a.a3_scaled}}},
                       {"beta_l", beta},
                       {"beta_three_term", three},
                       {"beta_two_term", two},
                       {"theorem_exponent", te}});
        return ok;
    }
    out << "alpha_l = (" << a.a1 << ", " << a.a2 << ", " << a.a3 << "), a3 scaled = " << a.a3_scaled << "\n";
    out << "beta_l = " << beta << " (three-term " << three << ", two-term " << two << ")\n";
    out << "theorem exponent = " << te << "\n";
    return ok;
}

int cmd_rt(CliConfig const & c, std::ostream & out)
{
    ClassGroupPtr cg = class_group(c.disc);
    GroupTree tree = c.builtin.empty() ? load_group_spec(c.group_path) : corpus_tree(c.builtin);
    RtOptions opts;
    opts.prime_bound = c.bound;
    opts.dedupe = !c.no_dedupe;
    RtResult r = rt(cg, tree, opts);
    if (c.trace_path) {
        std::ofstream f(*c.trace_path);
        if (!f)
            throw invalid_input("cannot write trace file " + *c.trace_path);
        f << trace_json(*cg, tree, r).dump(2) << "\n";
        if (!f)
            throw invalid_input("cannot write trace file " + *c.trace_path);
    }
    if (c.json) {
        emit(out, json{{"disc", c.disc},
                       {"group", tree.describe()},
                       {"class_group", class_group_json(*cg)},
                       {"rt", subgroup_json(r.subgroup)},
                       {"trace_file", c.trace_path ? json(*c.trace_path) : json(nullptr)}});
        return ok;
    }
    if (r.subgroup.is_full()) {
        out << "R_t = Cl(k), index 1\n";
    } else {
        ClassSubgroup::Structure st = r.subgroup.structure();
        out << "R_t ≅ " << structure_text(st.invariant_factors) << ", index " << r.subgroup.index()
            << ", generators: " << forms_text(*cg, st.generators) << "\n";
    }
    if (c.trace_path)
        out << "trace written to " << *c.trace_path << "\n";
    return ok;
}

int cmd_check(CliConfig const & c, std::ostream & out)
{
    return run_checks(c.suite, c.disc, out) ? ok : internal;
}

} // namespace

std::optional<int> parse_args(int argc, char const * const * argv, CliConfig & config, std::ostream & out,
                              std::ostream & err)
{
    CLI::App app{"Realizable Steinitz classes over Q and imaginary quadratic fields", "steinitz"};
    app.require_subcommand(1);

    auto disc_opt = [&](CLI::App * sub) {
        sub->add_option("--disc", config.disc, "fundamental discriminant D < 0, or 0 for Q")->required();
    };
    auto json_flag = [&](CLI::App * sub) { sub->add_flag("--json", config.json, "print JSON"); };

    CLI::App * cg = app.add_subcommand("classgroup", "class group structure");
    disc_opt(cg);
    json_flag(cg);

    std::string subgroup_text = "1";
    CLI::App * w = app.add_subcommand("wgroup", "W-group of a fixed field inside k(zeta_m)");
    disc_opt(w);
    w->add_option("--modulus", config.modulus, "m")->required()->check(CLI::PositiveNumber);
    w->add_option("--subgroup", subgroup_text, "generators of S in (Z/mZ)*, comma separated");
    w->add_option("--bound", config.bound, "initial prime bound");
    json_flag(w);

    CLI::App * st = app.add_subcommand("steinitz", "Steinitz class from ramification data");
    disc_opt(st);
    st->add_option("--ram", config.ram, "p:e,... (p' for the conjugate prime)");
    st->add_option("--order", config.order, "N = [K:k]")->required();
    st->add_flag("--noncyclic-2-sylow", config.noncyclic_two_sylow, "allow even N");
    json_flag(st);

    CLI::App * ex = app.add_subcommand("exponents", "alpha, beta and theorem exponents");
    ex->add_option("--l", config.l, "odd prime l")->required();
    ex->add_option("--otau", config.otau, "o(tau), a power of l")->required();
    ex->add_option("--m", config.m, "|G|")->required();
    ex->add_option("--n", config.n, "|H|")->required();
    json_flag(ex);

    CLI::App * r = app.add_subcommand("rt", "R_t(k, G)");
    disc_opt(r);
    auto * grp = r->add_option("--group", config.group_path, "group spec JSON file");
    auto * bi = r->add_option("--builtin", config.builtin, "name of a bundled group");
    grp->excludes(bi);
    r->add_option("--bound", config.bound, "initial prime bound for every W-group");
    r->add_flag("--no-dedupe", config.no_dedupe, "one W-group per tau, no sharing");
    r->add_option("--trace", config.trace_path, "write the evaluation trace here");
    json_flag(r);

    CLI::App * ck = app.add_subcommand("check", "run invariant suites");
    ck->add_option("--suite", config.suite, "all|grouptree|classgroup|cyclotomic|calculus|realizable")
        ->check(CLI::IsMember({"all", "grouptree", "classgroup", "cyclotomic", "calculus", "realizable"}));
    ck->add_option("--disc", config.disc, "discriminant for field-dependent suites");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    for (CLI::App * sub : app.get_subcommands())
        config.subcommand = sub->get_name();

    try {
        if (config.subcommand != "exponents")
            (void) QuadField::from_discriminant(config.disc);
        if (config.subcommand == "wgroup") {
            config.subgroup.clear();
            for (std::string_view a : split(subgroup_text, ','))
                config.subgroup.push_back(parse_int(a, "residue"));
        }
        if (config.subcommand == "rt" && config.group_path.empty() && config.builtin.empty())
            throw invalid_input("rt needs --group or --builtin");
        if (config.bound) {
            if (*config.bound < 2)
                throw invalid_input("--bound must be >= 2");
            if (*config.bound > prime_ceiling())
                throw invalid_input("--bound exceeds the prime ceiling " + std::to_string(prime_ceiling()));
        }
    } catch (invalid_input const & e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
    return std::nullopt;
}

int run(CliConfig const & config, std::ostream & out, std::ostream & err)
{
    try {
        std::string const & s = config.subcommand;
        if (s == "classgroup")
            return cmd_classgroup(config, out);
        if (s == "wgroup")
            return cmd_wgroup(config, out);
        if (s == "steinitz")
            return cmd_steinitz(config, out);
        if (s == "exponents")
            return cmd_exponents(config, out);
        if (s == "rt")
            return cmd_rt(config, out);
        if (s == "check")
            return cmd_check(config, out);
        err << "error: unknown subcommand '" << s << "'\n";
        return usage;
    } catch (inadmissible_tree const & e) {
        err << "inadmissible: " << e.what() << "\n";
        return bad_input;
    } catch (invalid_input const & e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (std::overflow_error const & e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (enumeration_ceiling const & e) {
        err << "ceiling: " << e.what() << "\n";
        return ceiling;
    } catch (std::exception const & e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
}

int main(int argc, char const * const * argv, std::ostream & out, std::ostream & err)
{
    CliConfig config;
    if (auto code = parse_args(argc, argv, config, out, err))
        return *code;
    return run(config, out, err);
}

} // namespace steinitz::cli
