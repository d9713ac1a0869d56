#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcat/reedy_model.hpp"
#include "rcat/scenario.hpp"

using namespace rcat;

namespace {

Json minimal_scenario() {
    return Json{{"schema", 1},
                {"base", Json{{"kind", "finset"}}},
                {"index", "arrow"},
                {"suites", Json::array({"eq1"})},
                {"samples", 3},
                {"seed", 5}};
}

}  // namespace

TEST_CASE("scenario parsing accepts valid input and echoes it faithfully") {
    Scenario sc = scenario_from_json(minimal_scenario());
    CHECK(sc.base.kind == "finset");
    CHECK(sc.index_name == "arrow");
    CHECK(sc.index.base.n_objects == 2);
    CHECK(sc.module_.kind == "self");
    CHECK(sc.samples == 3);
    CHECK(sc.seed == 5);

    // round-trip: serialize and reparse
    Json echoed = scenario_to_json(sc);
    Scenario sc2 = scenario_from_json(echoed);
    CHECK(scenario_to_json(sc2) == echoed);
}

TEST_CASE("scenario parsing rejects malformed input") {
    auto bad = [](const std::function<void(Json&)>& mutate) {
        Json j = minimal_scenario();
        mutate(j);
        CHECK_THROWS_AS(scenario_from_json(j), StructuralError);
    };
    bad([](Json& j) { j.erase("schema"); });
    bad([](Json& j) { j["schema"] = 99; });
    bad([](Json& j) { j["base"]["kind"] = "topological"; });
    bad([](Json& j) { j["suites"] = Json::array({"nonsense"}); });
    bad([](Json& j) { j["samples"] = 0; });
    bad([](Json& j) { j["module"] = Json{{"kind", "mystery"}}; });
    bad([](Json& j) { j["caps"] = Json{{"max_size", -1}}; });
    CHECK_THROWS_AS(scenario_from_json(Json{{"schema", 1}}), Json::exception);
}

TEST_CASE("a raw index category parses and validates") {
    Json j = minimal_scenario();
    j["index"] = to_json(builtin_reedy("span"));
    Scenario sc = scenario_from_json(j);
    CHECK(sc.index_name == "custom");
    CHECK(sc.index.base.n_objects == 3);

    j["index"]["degree"] = Json::array({0, 0, 0});  // minus arrows no longer lower degree
    CHECK_THROWS_AS(scenario_from_json(j), StructuralError);
}

TEST_CASE("suite selection validates the base and module requirements") {
    Json j = minimal_scenario();
    j["suites"] = Json::array({"prop1"});
    Scenario sc = scenario_from_json(j);  // parses; base check happens at run time
    CHECK_THROWS_AS(run_scenario(sc), StructuralError);

    j["base"] = Json{{"kind", "chain"}, {"p", 2}};
    j["suites"] = Json::array({"yoneda_module"});
    CHECK_THROWS_AS(run_scenario(scenario_from_json(j)), StructuralError);

    j["suites"] = Json::array({"lemma8"});
    j["index"] = "span";  // not direct
    CHECK_THROWS_AS(run_scenario(scenario_from_json(j)), StructuralError);
}

TEST_CASE("reports are byte-identical across runs with the same scenario and seed") {
    Json j = minimal_scenario();
    j["base"] = Json{{"kind", "chain"}, {"p", 3}};
    j["index"] = "span";
    j["suites"] = Json::array({"eq1", "coreduction", "adj_l3", "negative_controls"});
    Scenario sc = scenario_from_json(j);
    auto r1 = report_to_json(run_scenario(sc), true);
    auto r2 = report_to_json(run_scenario(sc), true);
    CHECK(r1.dump() == r2.dump());

    // a different seed changes at least the recorded per-case seeds
    sc.seed = 6;
    auto r3 = report_to_json(run_scenario(sc), true);
    CHECK(r1.dump() != r3.dump());
}

TEST_CASE("suite accounting: passes plus failures equals cases") {
    Json j = minimal_scenario();
    j["suites"] = Json::array({"eq1", "yoneda_monoidal", "negative_controls"});
    RunReport rep = run_scenario(scenario_from_json(j));
    for (const SuiteReport& s : rep.suites) {
        CHECK(s.passes + static_cast<int>(s.failures.size()) == s.cases);
    }
    CHECK(rep.ok);  // negative-control detections do not fail the run
}

TEST_CASE("exhaustive tier engages for small FinSet fixtures and arrow/terminal indices") {
    Json j = minimal_scenario();
    RunReport rep = run_scenario(scenario_from_json(j));
    CHECK(rep.suites[0].mode == "exhaustive");
    // identity shape: sizes 0..3 give 4 diagrams
    j["index"] = "terminal";
    rep = run_scenario(scenario_from_json(j));
    CHECK(rep.suites[0].cases == 4);

    j["index"] = "span";  // too large to enumerate: falls back to sampling
    rep = run_scenario(scenario_from_json(j));
    CHECK(rep.suites[0].mode == "sampled");

    j["index"] = "arrow";
    j["base"] = Json{{"kind", "chain"}, {"p", 2}};  // linear base is never enumerated
    rep = run_scenario(scenario_from_json(j));
    CHECK(rep.suites[0].mode == "sampled");
}

TEST_CASE("negative controls report one detection per injected mutation") {
    for (const char* base : {"finset", "chain"}) {
        Json j = minimal_scenario();
        if (std::string(base) == "chain") j["base"] = Json{{"kind", "chain"}, {"p", 3}};
        j["suites"] = Json::array({"negative_controls"});
        j["samples"] = 10;
        RunReport rep = run_scenario(scenario_from_json(j));
        const SuiteReport& s = rep.suites[0];
        CHECK(s.cases == 10);
        CHECK(s.passes == 0);
        CHECK(s.failures.size() == 10);
        for (const FailureRecord& f : s.failures) {
            CHECK_FALSE(f.witness.is_null());
            CHECK_FALSE(f.detail.empty());
        }
        CHECK(rep.ok);
    }
}

TEST_CASE("failure witnesses round-trip through serialization") {
    // Rebuild a negative-control witness from its serialized form and confirm
    // the rebuilt object still exhibits the recorded defect.
    Json j = minimal_scenario();
    j["suites"] = Json::array({"negative_controls"});
    j["samples"] = 2;
    RunReport rep = run_scenario(scenario_from_json(j));
    FinSetCat FS;
    for (const FailureRecord& f : rep.suites[0].failures) {
        const Json& w = f.witness;
        if (w.at("kind") == "broken_functoriality") {
            Diagram<FinSetCat> d;
            d.shape = builtin_reedy("arrow").base;
            for (const Json& o : w.at("object").at("obj"))
                d.obj.push_back(finset_obj_from_json(o));
            for (const Json& m : w.at("object").at("mor"))
                d.mor.push_back(finset_mor_from_json(m));
            CHECK_FALSE(validate_diagram(FS, d).ok());
        }
    }
}

TEST_CASE("generated fixtures are deterministic and valid") {
    auto a = generate_fixture("chain_complex", Json::object(), 42);
    auto b = generate_fixture("chain_complex", Json::object(), 42);
    CHECK(a.dump() == b.dump());
    CHECK(validate_complex(complex_from_json(a.at("object"))).ok());
    CHECK(generate_fixture("chain_complex", Json::object(), 43).dump() != a.dump());

    auto d = generate_fixture("diagram", Json{{"base", "finset"}, {"index", "square"}}, 7);
    FinSetCat FS;
    Diagram<FinSetCat> dia;
    dia.shape = builtin_reedy("square").base;
    for (const Json& o : d.at("object").at("obj")) dia.obj.push_back(finset_obj_from_json(o));
    for (const Json& m : d.at("object").at("mor")) dia.mor.push_back(finset_mor_from_json(m));
    CHECK(validate_diagram(FS, dia).ok());

    ChainCat CC(3);
    auto cof = generate_fixture("cofibration", Json::object(), 9);
    CHECK(CC.classify(chain_map_from_json(cof.at("object"))).cofibration);
    auto tcof = generate_fixture("trivial_cofibration", Json::object(), 9);
    auto tfl = CC.classify(chain_map_from_json(tcof.at("object")));
    CHECK(tfl.trivial_cofibration);
    auto fib = generate_fixture("fibration", Json::object(), 9);
    CHECK(CC.classify(chain_map_from_json(fib.at("object"))).fibration);
    auto tfib = generate_fixture("trivial_fibration", Json::object(), 9);
    CHECK(CC.classify(chain_map_from_json(tfib.at("object"))).trivial_fibration);

    CHECK_THROWS_AS(generate_fixture("nonsense", Json::object(), 1), StructuralError);
}

TEST_CASE("generated fixture pinned as a golden value") {
    auto g = generate_fixture("chain_complex", Json{{"p", 2}, {"max_degree", 2}, {"max_dim", 2}},
                              1);
    auto g2 = generate_fixture("chain_complex", Json{{"p", 2}, {"max_degree", 2}, {"max_dim", 2}},
                               1);
    CHECK(g.dump() == g2.dump());
    auto c = complex_from_json(g.at("object"));
    CHECK(c.p == 2);
    CHECK(validate_complex(c).ok());
}

TEST_CASE("builtin catalog contents") {
    Json cat = builtins_catalog();
    bool saw_arrow = false, saw_span = false, saw_square = false;
    for (const Json& e : cat) {
        if (e.at("name") == "arrow") {
            saw_arrow = true;
            CHECK(e.at("n_objects") == 2);
            CHECK(e.at("n_arrows") == 3);
            CHECK(e.at("direct") == true);
        }
        if (e.at("name") == "span") {
            saw_span = true;
            CHECK(e.at("inverse") == true);
        }
        if (e.at("name") == "square") {
            saw_square = true;
            CHECK(e.at("direct") == true);
            CHECK(e.at("degrees") == Json::array({0, 1, 1, 2}));
        }
    }
    CHECK(saw_arrow);
    CHECK(saw_span);
    CHECK(saw_square);
}

TEST_CASE("run flag reflects genuine failures and suite order follows the request") {
    Json j = minimal_scenario();
    j["suites"] = Json::array({"yoneda_monoidal", "eq1"});
    RunReport rep = run_scenario(scenario_from_json(j));
    REQUIRE(rep.suites.size() == 2);
    CHECK(rep.suites[0].name == "yoneda_monoidal");
    CHECK(rep.suites[1].name == "eq1");
    CHECK(rep.ok);

    Json rj = report_to_json(rep, true);
    CHECK(rj.at("schema") == 1);
    CHECK(rj.at("tool_version") == std::string(kToolVersion));
    CHECK_FALSE(rj.at("suites")[0].contains("wall_ms"));
    Json rjt = report_to_json(rep, false);
    CHECK(rjt.at("suites")[0].contains("wall_ms"));
}
