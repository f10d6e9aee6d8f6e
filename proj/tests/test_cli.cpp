#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "strassoc/json_io.hpp"

using strassoc::json_io::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    [[nodiscard]] Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = strassoc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STRASSOC_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents = {}) {
    const auto path = std::filesystem::temp_directory_path() / ("strassoc_cli_" + name);
    if (!contents.empty()) std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST_CASE("cli: associativity of ofo") {
    const auto r = run({"check", "assoc", "--input", data("ofo.json"), "--bound", "5"});
    CHECK(r.code == 0);
    CHECK(r.json()["report"]["verdict"] == "holds");
    CHECK(r.err.find("holds") != std::string::npos);
}

TEST_CASE("cli: preassociativity witness re-verifies through eval") {
    const auto r = run({"check", "preassoc", "--input", data("len_of_Ga.json"), "--bound", "3"});
    REQUIRE(r.code == 1);
    const Json w = r.json()["report"]["witness"];
    CHECK(w["bindings"] == Json{{"y", ""}, {"y2", "b"}, {"x", ""}, {"z", "b"}});

    const std::string x = w["bindings"]["x"], y = w["bindings"]["y"], y2 = w["bindings"]["y2"],
                      z = w["bindings"]["z"];
    const auto e = run({"eval", "--input", data("len_of_Ga.json"), y, y2, x + y + z, x + y2 + z});
    REQUIRE(e.code == 0);
    const Json v = e.json()["results"];
    CHECK(v[0]["value"] == v[1]["value"]);
    CHECK(v[2]["value"] != v[3]["value"]);
    CHECK(v[2]["value"] == w["lhs"]);
    CHECK(v[3]["value"] == w["rhs"]);
}

TEST_CASE("cli: associativity witness re-verifies through eval") {
    const auto r = run({"check", "assoc", "--builtin", "letter_remove_g", "--letter", "a",
                        "--alphabet", "ab", "--bound", "4"});
    // G_a lengthens strings, so some instances leave the bound: holds, but inconclusive.
    CHECK(r.code == 3);
    CHECK(r.json()["report"]["verdict"] == "holds");
    CHECK(r.json()["report"]["incomplete"] == true);
    const auto s = run({"check", "assoc", "--builtin", "separator_insert", "--letter", "|",
                        "--alphabet", "ab|", "--bound", "4"});
    CHECK(s.code == 3);
    CHECK(run({"check", "assoc", "--builtin", "sort", "--alphabet", "ab"}).code == 0);

    const auto bad = temp_file("swap.json", R"({"alphabet":["a","b"],"bound":3,"function":{"kind":"table",
      "codomain":"string","entries":[["",""],["a","b"],["b","a"],["aa","aa"],["ab","ab"],["ba","ba"],
      ["bb","bb"],["aaa","a"],["aab","a"],["aba","a"],["abb","a"],["baa","a"],["bab","a"],["bba","a"],
      ["bbb","a"]]}})");
    const auto f = run({"check", "assoc", "--input", bad});
    REQUIRE(f.code == 1);
    const Json w = f.json()["report"]["witness"];
    const std::string x = w["bindings"]["x"], y = w["bindings"]["y"], z = w["bindings"]["z"];
    const auto fy = run({"eval", "--input", bad, y}).json()["results"][0]["value"].get<std::string>();
    const auto e = run({"eval", "--input", bad, x + y + z, x + fy + z}).json()["results"];
    CHECK(e[0]["value"] != e[1]["value"]);
    CHECK(e[0]["value"] == w["lhs"]);
}

TEST_CASE("cli: alpha classify") {
    const auto r = run({"alpha", "classify", "--input", data("alpha_periodic.json")});
    CHECK(r.code == 0);
    const Json j = r.json();
    CHECK(j["kind"] == "structured");
    CHECK(j["n1"] == 2);
    CHECK(j["ell"] == 2);
    CHECK(j["values"] == Json::array({0, 1, 4, 5}));

    CHECK(run({"alpha", "classify", "--values", "0,1,4,5,4"}).code == 3);
    CHECK(run({"alpha", "classify", "--values", "0,1,1,3,4,5,6"}).code == 1);
    CHECK(run({"alpha", "check", "--values", "1,2,3,4,5,6,6"}).code == 1);
    CHECK(run({"alpha", "check", "--values", "0,1,4,5,4,5,4"}).code == 0);
}

TEST_CASE("cli: alpha synth and minimize") {
    const auto ok = run({"alpha", "synth", "--n1", "2", "--ell", "2", "--window", "0,1,4,5",
                         "--bound", "7"});
    CHECK(ok.code == 0);
    CHECK(ok.json()["table"] == Json::array({0, 1, 4, 5, 4, 5, 4, 5}));
    const auto bad = run({"alpha", "synth", "--n1", "1", "--ell", "2", "--window", "0,2,4"});
    CHECK(bad.code == 1);
    CHECK(bad.json()["violation"] == "wrong_residue");

    const auto m = run({"alpha", "minimize", "--values", "0,1,2,3,4,3,4,3,4,3,4,3", "--witness",
                        "3:4", "--witness", "3:6"});
    CHECK(m.code == 0);
    CHECK(m.json()["threshold"] == 3);
    CHECK(m.json()["period"] == 2);
    CHECK(run({"alpha", "minimize", "--values", "0,1,2", "--witness", "x"}).code == 2);
}

TEST_CASE("cli: extend output is associative") {
    const std::string out = temp_file("extended.json");
    const auto e = run({"extend", "--input", data("partial_first_letter.json"), "--bound", "5",
                        "--output", out});
    REQUIRE(e.code == 0);
    CHECK(e.json()["output"] == out);
    const auto c = run({"check", "assoc", "--input", out});
    CHECK(c.code == 0);
    CHECK(c.json()["bound"] == 5);
    const auto v = run({"eval", "--input", out, "babba"});
    CHECK(v.json()["results"][0]["value"] == "b");

    // Without --output the function spec itself is printed.
    const auto inline_spec = run({"extend", "--input", data("partial_first_letter.json"), "--bound", "3"});
    CHECK(inline_spec.json()["function"]["kind"] == "table");

    const auto gap = temp_file("gap.json", R"({"alphabet":["a","b"],"m":1,"parts":{"0":"",
      "1":[["a",""],["b","b"]],"2":[["aa","b"],["ab","b"],["ba","b"],["bb","b"]]}})");
    const auto g = run({"extend", "--input", gap});
    CHECK(g.code == 1);
    CHECK(g.json()["conditions"]["d"]["verdict"] == "fails");

    const auto from_fn = run({"extend", "--builtin", "ofo", "--alphabet", "ab", "--input",
                              data("ofo.json"), "--m", "3"});
    CHECK(from_fn.code == 2);  // ofo over abc is 3-bounded, but extend takes no --builtin
}

TEST_CASE("cli: factorize") {
    const auto r = run({"factorize", "--builtin", "length", "--alphabet", "ab", "--bound", "4"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["g"][2] == Json::array({Json{{"token", 2}}, "aa"}));
    CHECK(j["f"][3] == Json::array({"aaa", Json{{"token", 3}}}));
    CHECK(j["checks"]["H_associative"]["verdict"] == "holds");
    CHECK(j["H"]["function"]["entries"][6] == Json::array({"bb", "aa"}));

    const auto no = run({"factorize", "--input", data("len_of_Ga.json")});
    CHECK(no.code == 1);
    CHECK(no.json()["preassociative"] == false);
}

TEST_CASE("cli: theta commands") {
    const auto c = run({"theta", "class", "--alphabet", "ab", "--x0", "a", "--x1", "b", "--m-exp",
                        "0", "--bound", "4", "ab"});
    CHECK(c.code == 0);
    CHECK(c.json()["members"] == Json::array({"aa", "ab", "ba", "bb"}));
    const auto t = run({"theta", "class", "--alphabet", "ab", "--x0", "a", "--x1", "bb", "--bound",
                        "3", "aa"});
    CHECK(t.code == 3);

    const auto r = run({"theta", "rep", "--input", data("theta_ab.json"), "--bound", "4", "bb"});
    CHECK(r.json()["rep"] == "aa");
    const auto table = run({"theta", "rep", "--input", data("theta_ab.json"), "--bound", "2"});
    CHECK(table.json()["classes"] == 6);

    const auto chain = run({"theta", "chain", "--input", data("theta_ab.json")});
    CHECK(chain.code == 0);
    CHECK(chain.json()["bound"] == 8);
    CHECK(chain.json()["comparison"]["f_merges"] == Json::array({"aa", "bb"}));

    CHECK(run({"theta", "class", "--alphabet", "ab", "--x0", "a", "--x1", "a", "b"}).code == 2);
}

TEST_CASE("cli: compare") {
    const auto len = temp_file("len.json", R"({"alphabet":["a","b"],"bound":4,
      "function":{"kind":"builtin","name":"length"}})");
    const auto id = temp_file("id.json", R"({"alphabet":["a","b"],"bound":4,
      "function":{"kind":"builtin","name":"identity"}})");
    const auto r = run({"compare", "--input", len, "--input", id});
    CHECK(r.code == 0);
    CHECK(r.json()["relation"] == "f_below_g");
    CHECK(run({"compare", "--input", id, "--input", id}).json()["relation"] == "equivalent");
}

TEST_CASE("cli: other checks and exit codes") {
    const std::vector<std::string> ab{"--alphabet", "ab", "--bound", "4"};
    auto with = [&](std::vector<std::string> head) {
        head.insert(head.end(), ab.begin(), ab.end());
        return run(head);
    };
    CHECK(with({"check", "standard", "--builtin", "ofo"}).code == 0);
    CHECK(with({"check", "standard", "--builtin", "letter_remove", "--letter", "a"}).code == 1);
    CHECK(with({"check", "assoc-reduced", "--builtin", "sort"}).code == 0);
    CHECK(with({"check", "idempotent", "--builtin", "ofo"}).code == 0);
    CHECK(with({"check", "bounded", "--builtin", "ofo", "--m", "2"}).code == 0);
    CHECK(with({"check", "bounded", "--builtin", "sort", "--m", "2"}).code == 1);
    CHECK(with({"check", "bounded", "--builtin", "sort"}).code == 2);
    CHECK(with({"check", "range", "--builtin", "ofo", "--m", "2"}).code == 0);
    CHECK(with({"check", "equiv-defs", "--builtin", "sort"}).code == 0);
    CHECK(with({"check", "equiv-defs", "--builtin", "letter_remove_g", "--letter", "a"}).code == 2);
    CHECK(with({"check", "rigidity", "--builtin", "identity"}).code == 0);
    CHECK(with({"check", "rigidity", "--builtin", "sort"}).code == 3);
    CHECK(with({"check", "weakly-length", "--builtin", "sort"}).code == 0);
    CHECK(with({"check", "length", "--builtin", "sort"}).code == 1);
    CHECK(with({"check", "preassoc", "--builtin", "identity"}).code == 3);
    const auto abs = with({"check", "absorbed", "--builtin", "letter_remove", "--letter", "a"});
    CHECK(abs.code == 0);
    CHECK(abs.json()["absorbed"] == "a");
    CHECK(with({"check", "absorbed", "--builtin", "ofo"}).code == 2);
    CHECK(with({"check", "range-conditions", "--builtin", "length", "--m", "1"}).code == 1);
    CHECK(with({"check", "range-factorizations", "--builtin", "ofo", "--m", "2"}).code == 0);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", "assoc", "--input", "/nonexistent.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: malformed tables name the location") {
    const auto partial = temp_file("partial.json", R"({"alphabet":["a","b"],"bound":1,
      "function":{"kind":"table","codomain":"string","entries":[["",""],["a","a"]]}})");
    const auto r = run({"check", "assoc", "--input", partial});
    CHECK(r.code == 2);
    CHECK(r.err.find("/function/entries") != std::string::npos);
    CHECK(r.err.find("\"b\"") != std::string::npos);

    const auto foreign = temp_file("foreign.json", R"({"alphabet":["a","b"],"bound":1,
      "function":{"kind":"table","codomain":"string","entries":[["",""],["a","c"],["b","b"]]}})");
    const auto f = run({"check", "assoc", "--input", foreign});
    CHECK(f.code == 2);
    CHECK(f.err.find("/function/entries/1/1") != std::string::npos);

    const auto syntax = temp_file("syntax.json", "{\"alphabet\": [");
    CHECK(run({"check", "assoc", "--input", syntax}).code == 2);

    const auto too_far = run({"check", "assoc", "--input", partial, "--bound", "2"});
    CHECK(too_far.code == 2);
}

TEST_CASE("cli: output is deterministic across runs and worker counts") {
    const std::vector<std::string> base{"check", "preassoc", "--input", data("len_of_Ga.json"),
                                        "--bound", "6"};
    auto with_jobs = [&](const char* j) {
        auto a = base;
        a.insert(a.end(), {"--jobs", j});
        return run(a);
    };
    const auto one = with_jobs("1");
    CHECK(one.code == 1);
    CHECK(with_jobs("1").out == one.out);
    CHECK(with_jobs("3").out == one.out);
    CHECK(with_jobs("8").out == one.out);
}

TEST_CASE("cli: function specs round-trip") {
    const auto ga = temp_file("ga_builtin.json", R"({"alphabet":["a","b"],"bound":3,
      "function":{"kind":"builtin","name":"letter_remove_g","params":{"a":"a"}}})");
    const auto doc = strassoc::json_io::function_doc_from_json(strassoc::json_io::read_file(ga));
    const auto f = doc.at_bound(3);
    const auto table = f.materialize(3);
    const Json written = strassoc::json_io::function_to_json(table);
    const auto back = strassoc::json_io::function_doc_from_json(written).at_bound(3);
    for (const auto& x : strassoc::enumerate_strings(f.alphabet(), 3)) CHECK(back.eval(x) == f.eval(x));
    CHECK(strassoc::json_io::function_to_json(f)["function"]["params"]["a"] == "a");
}
