#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "render.hpp"
#include "steinitz/errors.hpp"
#include "steinitz/group_spec.hpp"
#include "steinitz/realizable.hpp"

using namespace steinitz;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "steinitz");
    std::vector<char const *> argv;
    for (auto const & a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path const groups_dir = STEINITZ_GROUPS_DIR;

} // namespace

TEST_CASE("text outputs")
{
    CHECK(run_cli({"classgroup", "--disc", "-23"}).out == "h = 3, Cl ≅ C3, generators: (2,1,3)\n");
    CHECK(run_cli({"classgroup", "--disc", "0"}).code == 0);
    CHECK(run_cli({"rt", "--disc", "-23", "--builtin", "c3"}).out == "R_t = Cl(k), index 1\n");
    CHECK(run_cli({"rt", "--disc", "-39", "--builtin", "c3"}).out == "R_t ≅ C2, index 2, generators: (3,3,4)\n");
    Run w = run_cli({"wgroup", "--disc", "-23", "--modulus", "3", "--subgroup", "1"});
    CHECK(w.code == 0);
    CHECK(w.out.rfind("W ≅ C3, index 1", 0) == 0);
    CHECK(w.out.find("stabilized at bound") != std::string::npos);
    Run st = run_cli({"steinitz", "--disc", "-23", "--ram", "13:3", "--order", "3"});
    CHECK(st.code == 0);
    CHECK(st.out.rfind("st = (", 0) == 0);
    Run ex = run_cli({"exponents", "--l", "3", "--otau", "3", "--m", "2", "--n", "3"});
    CHECK(ex.out.find("theorem exponent = 2") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run_cli({}).code == cli::usage);
    CHECK(run_cli({"frobnicate"}).code == cli::usage);
    CHECK(run_cli({"classgroup"}).code == cli::usage);
    CHECK(run_cli({"classgroup", "--disc", "-12"}).code == cli::bad_input);
    CHECK(run_cli({"classgroup", "--disc", "5"}).code == cli::bad_input);
    CHECK(run_cli({"classgroup", "--disc", "abc"}).code != cli::ok);
    CHECK(run_cli({"rt", "--disc", "-23", "--builtin", "nope"}).code == cli::bad_input);
    CHECK(run_cli({"rt", "--disc", "-23", "--builtin", "c3_c4"}).code == cli::bad_input);
    CHECK(run_cli({"rt", "--disc", "-23", "--group", "/nonexistent.json"}).code == cli::bad_input);
    CHECK(run_cli({"steinitz", "--disc", "-23", "--ram", "2:2", "--order", "2"}).code == cli::bad_input);
    CHECK(run_cli({"steinitz", "--disc", "-23", "--ram", "2:2", "--order", "2", "--noncyclic-2-sylow"}).code
          == cli::bad_input);
    CHECK(run_cli({"wgroup", "--disc", "-23", "--modulus", "7", "--subgroup", "3"}).code == cli::ok);
    CHECK(run_cli({"wgroup", "--disc", "-23", "--modulus", "7", "--subgroup", "7"}).code == cli::bad_input);
    CHECK(run_cli({"exponents", "--l", "2", "--otau", "2", "--m", "1", "--n", "2"}).code == cli::bad_input);
    CHECK(run_cli({"--help"}).code == cli::ok);
}

TEST_CASE("json agrees with text and with the library")
{
    for (i64 d : {-23, -39, -3299}) {
        std::string const ds = std::to_string(d);
        json cg = json::parse(run_cli({"classgroup", "--disc", ds, "--json"}).out);
        auto lib = class_group(d);
        CHECK(cg["order"] == lib->order());
        CHECK(cg["invariant_factors"] == json(lib->invariant_factors()));

        json r = json::parse(run_cli({"rt", "--disc", ds, "--builtin", "c3", "--json"}).out);
        RtResult const expect = rt(lib, corpus_tree("c3"));
        CHECK(r["rt"]["order"] == expect.subgroup.order());
        CHECK(r["rt"]["index"] == expect.subgroup.index());
    }
}

TEST_CASE("output is deterministic")
{
    std::vector<std::string> args = {"rt", "--disc", "-3299", "--builtin", "frobenius21", "--json"};
    CHECK(run_cli(args).out == run_cli(args).out);
    std::vector<std::string> nd = args;
    nd.push_back("--no-dedupe");
    CHECK(json::parse(run_cli(nd).out)["rt"] == json::parse(run_cli(args).out)["rt"]);
}

TEST_CASE("trace file round trip")
{
    auto path = std::filesystem::temp_directory_path() / "steinitz_test_trace.json";
    Run r = run_cli({"rt", "--disc", "-23", "--builtin", "d15", "--trace", path.string()});
    REQUIRE(r.code == 0);
    json doc = json::parse(std::ifstream(path));
    std::filesystem::remove(path);
    CHECK(doc["disc"] == -23);
    auto cg = class_group(-23);
    std::vector<TraceEntry> trace = cli::trace_from_json(doc);
    CHECK(rt_trace_replay(cg, trace) == rt(cg, corpus_tree("d15")).subgroup);
    CHECK(parse_group_spec(doc["group"].dump()).key() == corpus_tree("d15").key());
}

TEST_CASE("bundled group files match the corpus")
{
    std::size_t seen = 0;
    for (auto const & f : std::filesystem::directory_iterator(groups_dir)) {
        if (f.path().extension() != ".json")
            continue;
        ++seen;
        GroupTree const t = load_group_spec(f.path());
        CHECK_MESSAGE(t.key() == corpus_tree(f.path().stem().string()).key(), f.path().string());
    }
    CHECK(seen >= 8);
    CHECK(run_cli({"rt", "--disc", "-23", "--group", (groups_dir / "frobenius21.json").string()}).code == 0);
}

TEST_CASE("group spec serialization round trips")
{
    for (CorpusEntry const & e : builtin_corpus())
        CHECK(parse_group_spec(group_spec_text(e.tree)).key() == e.tree.key());
}

TEST_CASE("group spec errors")
{
    CHECK_THROWS_AS(parse_group_spec("not json"), invalid_input);
    CHECK_THROWS_AS(parse_group_spec(R"({"kind":"abelian"})"), invalid_input);
    CHECK_THROWS_AS(parse_group_spec(R"({"kind":"cyclic","invariant_factors":[3]})"), invalid_input);
    CHECK_THROWS_AS(parse_group_spec(R"({"kind":"abelian","invariant_factors":[0]})"), invalid_input);
    /* 2 is not an automorphism of C(3) of order dividing 5 */
    CHECK_THROWS_AS(parse_group_spec(R"({"kind":"semidirect","h":{"kind":"abelian","invariant_factors":[3]},
        "g":{"kind":"abelian","invariant_factors":[5]},
        "action":{"on_generators":[{"g_element":[1],"matrix":[[2]]}]}})"),
                    invalid_input);
    /* |H| even */
    CHECK_THROWS_AS(parse_group_spec(R"({"kind":"semidirect","h":{"kind":"abelian","invariant_factors":[4]},
        "g":{"kind":"abelian","invariant_factors":[3]},
        "action":{"on_generators":[{"g_element":[1],"matrix":[[1]]}]}})"),
                    invalid_input);
    try {
        parse_group_spec(R"({"kind":"direct","left":{"kind":"abelian","invariant_factors":[3]},"right":{}})");
        FAIL("no throw");
    } catch (invalid_input const & e) {
        CHECK(std::string(e.what()).find("$.right") != std::string::npos);
    }
}

TEST_CASE("check subcommand")
{
    Run r = run_cli({"check", "--disc", "-23"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fail") == std::string::npos);
}

TEST_CASE("argument parsing")
{
    cli::CliConfig c;
    std::ostringstream out, err;
    char const * a1[] = {"steinitz", "rt", "--disc", "-23", "--group", "d3.json"};
    CHECK_FALSE(cli::parse_args(6, a1, c, out, err).has_value());
    CHECK(c.subcommand == "rt");
    CHECK(c.disc == -23);
    CHECK(c.group_path == "d3.json");
    cli::CliConfig j;
    char const * a2[] = {"steinitz", "classgroup", "--disc", "-23", "--json"};
    CHECK_FALSE(cli::parse_args(5, a2, j, out, err).has_value());
    CHECK(j.json);
}

TEST_CASE("json of the other subcommands reproduces the text")
{
    auto form_of = [](json const & f) {
        return "(" + f[0].dump() + "," + f[1].dump() + "," + f[2].dump() + ")";
    };

    std::vector<std::string> w = {"wgroup", "--disc", "-3299", "--modulus", "9", "--subgroup", "1"};
    std::string const wtext = run_cli(w).out;
    w.push_back("--json");
    json wj = json::parse(run_cli(w).out);
    CHECK(wtext.find("index " + wj["w"]["index"].dump()) != std::string::npos);
    CHECK(wtext.find("stabilized at bound " + wj["certificate"]["final_bound"].dump()) != std::string::npos);

    std::vector<std::string> s = {"steinitz", "--disc", "-23", "--ram", "13:3", "--order", "3"};
    std::string const stext = run_cli(s).out;
    s.push_back("--json");
    CHECK(stext == "st = " + form_of(json::parse(run_cli(s).out)["class"]) + "\n");

    std::vector<std::string> e = {"exponents", "--l", "5", "--otau", "25", "--m", "4", "--n", "75"};
    std::string const etext = run_cli(e).out;
    e.push_back("--json");
    json ej = json::parse(run_cli(e).out);
    CHECK(etext.find("beta_l = " + ej["beta_l"].dump()) != std::string::npos);
    CHECK(etext.find("theorem exponent = " + ej["theorem_exponent"].dump()) != std::string::npos);
}
