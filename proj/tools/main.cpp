#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "rcat/scenario.hpp"

namespace {

int write_out(const rcat::Json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file: " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for diagram categories over finite Reedy shapes"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, kind;
    std::uint64_t seed = 0;
    int samples = 0;
    bool omit_timing = false;

    auto* run = app.add_subcommand("run", "run the suites of a scenario file");
    run->add_option("--scenario", scenario_path, "path to a scenario JSON file")->required();
    run->add_option("--seed", seed, "override the scenario seed");
    run->add_option("--samples", samples, "override the scenario sample count");
    run->add_option("--out", out_path, "write the report here instead of stdout");
    run->add_flag("--omit-timing", omit_timing, "drop wall-clock fields from the report");

    auto* lb = app.add_subcommand("list-builtins", "catalog of builtin index categories");
    lb->add_option("--out", out_path, "write the catalog here instead of stdout");

    auto* gen = app.add_subcommand("generate", "emit a deterministic fixture");
    gen->add_option("--kind", kind, "fixture kind")->required();
    std::uint64_t gen_seed = 1;
    gen->add_option("--seed", gen_seed, "fixture seed");
    std::string params_text = "{}";
    gen->add_option("--params", params_text, "JSON object of generator parameters");
    gen->add_option("--out", out_path, "write the fixture here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (lb->parsed()) return write_out(rcat::builtins_catalog(), out_path);

        if (gen->parsed()) {
            rcat::Json params = rcat::Json::parse(params_text);
            return write_out(rcat::generate_fixture(kind, params, gen_seed), out_path);
        }

        std::ifstream in(scenario_path);
        if (!in) {
            std::cerr << "error: cannot read scenario file: " << scenario_path << "\n";
            return 2;
        }
        rcat::Json sj = rcat::Json::parse(in);
        rcat::Scenario sc = rcat::scenario_from_json(sj);
        if (run->count("--seed") > 0) sc.seed = seed;
        if (run->count("--samples") > 0) {
            if (samples <= 0) {
                std::cerr << "error: --samples must be positive\n";
                return 2;
            }
            sc.samples = samples;
        }
        if (const char* cap = std::getenv("RCAT_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(cap, &end, 10);
            if (end == cap || *end != '\0' || v == 0) {
                std::cerr << "error: RCAT_CAP must be a positive integer\n";
                return 2;
            }
            sc.caps.hom_cap = v;
        }
        rcat::RunReport rep = rcat::run_scenario(sc);
        int rc = write_out(rcat::report_to_json(rep, omit_timing), out_path);
        if (rc != 0) return rc;
        return rep.ok ? 0 : 1;
    } catch (const rcat::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rcat::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rcat::Json::parse_error& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return 2;
    }
}
