// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion re-exercises the public library surface at the
// scale the release bar demands, with a wall-clock budget.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rcat/enrichment.hpp"
#include "rcat/reedy_model.hpp"
#include "rcat/sampler.hpp"
#include "rcat/scenario.hpp"

using namespace rcat;

namespace {

using Clock = std::chrono::steady_clock;

int g_failed = 0;

struct Criterion {
    int number;
    std::string label;
    double budget_s;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string detail;

    Criterion(int n, std::string lbl, double budget) : number(n), label(std::move(lbl)),
                                                       budget_s(budget) {}

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void finish() {
        double secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count() /
            1000.0;
        if (ok && secs > budget_s) {
            ok = false;
            detail = "exceeded time budget of " + std::to_string(budget_s) + "s";
        }
        std::printf("criterion %d: %s — %s (%.1fs)%s%s\n", number, ok ? "PASS" : "FAIL",
                    label.c_str(), secs, ok ? "" : ": ", ok ? "" : detail.c_str());
        if (!ok) ++g_failed;
    }
};

Scenario base_scenario(const std::string& base, const std::string& index,
                       std::vector<std::string> suites, int samples, std::uint64_t seed) {
    Json j{{"schema", 1},
           {"base", base == "finset" ? Json{{"kind", "finset"}}
                                     : Json{{"kind", "chain"}, {"p", 3}}},
           {"index", index},
           {"suites", suites},
           {"samples", samples},
           {"seed", seed}};
    return scenario_from_json(j);
}

int suite_failures(const RunReport& rep) {
    int n = 0;
    for (const auto& s : rep.suites) n += static_cast<int>(s.failures.size());
    return n;
}

int suite_cases(const RunReport& rep) {
    int n = 0;
    for (const auto& s : rep.suites) n += s.cases;
    return n;
}

/// All FinSet diagrams over the two-object single-arrow shape with object
/// sizes ≤ max (identity slots filled automatically).
std::vector<Diagram<FinSetCat>> all_arrow_diagrams(const FinSetCat& FS, const FiniteCategory& I,
                                                   int max) {
    int arrow = -1;
    for (int f = 0; f < I.n_arrows(); ++f)
        if (!I.is_identity(f)) arrow = f;
    int s = I.arrow_src[arrow];
    std::vector<Diagram<FinSetCat>> out;
    for (int a = 0; a <= max; ++a)
        for (int b = 0; b <= max; ++b) {
            if (b == 0 && a > 0) continue;
            long long count = 1;
            for (int k = 0; k < a; ++k) count *= b;
            for (long long e = 0; e < std::max(1LL, count); ++e) {
                FinSetMor f{a, b, std::vector<int>(a)};
                long long v = e;
                for (int k = 0; k < a; ++k) {
                    f.table[k] = static_cast<int>(v % b);
                    v /= b;
                }
                out.push_back(make_diagram<FinSetCat>(
                    FS, I, [&](int i) { return FinSetObj{i == s ? a : b}; },
                    [&](int) { return f; }));
            }
        }
    return out;
}

/// Retract shape 0 ⇄ 1 with r∘s = id: the smallest genuinely mixed Reedy
/// category (the idempotent s∘r raises after lowering).
ReedyStructure mixed_retract() {
    ReedyStructure R;
    FiniteCategory c;
    c.n_objects = 2;
    c.arrow_src = {0, 1, 0, 1, 1};
    c.arrow_tgt = {0, 1, 1, 0, 1};
    c.identity = {0, 1};
    c.comp.assign(5, std::vector<int>(5, -1));
    for (int g = 0; g < 5; ++g)
        for (int f = 0; f < 5; ++f) {
            if (c.arrow_tgt[f] != c.arrow_src[g]) continue;
            if (g == c.identity[c.arrow_src[g]]) c.comp[g][f] = f;
            else if (f == c.identity[c.arrow_src[f]]) c.comp[g][f] = g;
        }
    c.comp[3][2] = 0;  // r∘s = id
    c.comp[2][3] = 4;  // s∘r = e
    c.comp[4][2] = 2;
    c.comp[3][4] = 3;
    c.comp[4][4] = 4;
    R.base = c;
    R.degree = {0, 1};
    R.plus_arrows = {2};
    R.minus_arrows = {3};
    return R;
}

/// Dimension of the degree-0 cycle space of a complex.
int cycles0(const ChainComplex& c) {
    int idx = -c.lo;
    if (idx < 0 || idx >= static_cast<int>(c.dims.size())) return 0;
    return c.dims[idx] - c.d[idx].rank();
}

// ---------------------------------------------------------------------------

void criterion1() {
    Criterion cr(1, "representable-hom cardinality identity on every builtin index", 10.0);
    for (const std::string& name : builtin_names()) {
        Json j{{"schema", 1},
               {"base", Json{{"kind", "finset"}}},
               {"index", name},
               {"suites", Json::array({"eq1"})},
               {"samples", 500},
               {"seed", 101},
               {"caps", Json{{"max_size", 3}}}};
        RunReport rep = run_scenario(scenario_from_json(j));
        cr.require(suite_failures(rep) == 0, name + ": unexpected failures");
        bool small = name == "terminal" || name == "arrow";
        cr.require(rep.suites[0].mode == (small ? "exhaustive" : "sampled"),
                   name + ": wrong enumeration tier");
        if (!small) cr.require(rep.suites[0].cases >= 500, name + ": too few sampled cases");
    }
    cr.finish();
}

void criterion2() {
    Criterion cr(2, "canonical evaluation maps are exact isomorphisms on both bases", 30.0);
    for (const std::string& base : {"finset", "chain"}) {
        for (const std::string& idx : {"arrow", "span", "square"}) {
            RunReport rep = run_scenario(base_scenario(base, idx, {"yoneda_monoidal"}, 40, 102));
            cr.require(suite_failures(rep) == 0, base + "/" + idx + " evaluation map failed");
        }
        Json j{{"schema", 1},
               {"base", base == "finset" ? Json{{"kind", "finset"}}
                                         : Json{{"kind", "chain"}, {"p", 2}}},
               {"index", "arrow"},
               {"module", Json{{"kind", "diagram_over"}, {"inner_index", "arrow"}}},
               {"suites", Json::array({"yoneda_module"})},
               {"samples", 20},
               {"seed", 103}};
        RunReport rep = run_scenario(scenario_from_json(j));
        cr.require(suite_failures(rep) == 0, base + ": module-valued evaluation map failed");
    }
    cr.finish();
}

void criterion3() {
    Criterion cr(3, "(co)end comparison maps are isomorphisms on 200+ diagrams per base/index",
                 60.0);
    for (const std::string& base : {"finset", "chain"}) {
        for (const std::string& name : builtin_names()) {
            RunReport rep =
                run_scenario(base_scenario(base, name, {"coreduction", "reduction"}, 200, 104));
            cr.require(suite_failures(rep) == 0, base + "/" + name + " comparison map failed");
            cr.require(suite_cases(rep) >= 400, base + "/" + name + ": too few cases");
        }
    }
    cr.finish();
}

void criterion4() {
    Criterion cr(4, "adjunction chains hold with exact two-sided inverses", 120.0);
    FinSetCat FS;
    FiniteCategory I = builtin_reedy("arrow").base;
    auto dias = all_arrow_diagrams(FS, I, 2);
    SelfModule<FinSetCat> SM(FS);
    PointwiseModule<SelfModule<FinSetCat>> PW(SM, I);

    // exhaustive FinSet tier over the two-object shape, sizes ≤ 2
    for (int m = 0; m <= 2; ++m)
        for (const auto& X : dias)
            for (const auto& Y : dias) {
                auto res = verify_pointwise_adjunction(PW, FinSetObj{m}, X, Y);
                cr.require(res.ok, "pointwise adjunction: " + res.detail);
            }
    for (const auto& M : dias)
        for (int c = 0; c <= 2; ++c)
            for (const auto& X : dias) {
                auto w = verify_l3(SM, I, M, FinSetObj{c}, X);
                cr.require(w.ok, "tensor/hom chain: " + w.detail);
            }
    for (const auto& M : dias)
        for (const auto& X : dias)
            for (const auto& Y : dias) {
                auto res = verify_p2(SM, I, M, X, Y);
                cr.require(res.ok, "two-variable chain: " + res.detail);
            }

    // sampled chain-base tier, 200 cases per suite
    for (const char* suite : {"adj_l1", "adj_l3", "adj_l6", "adj_p2"}) {
        RunReport rep = run_scenario(base_scenario("chain", "arrow", {suite}, 200, 105));
        cr.require(suite_failures(rep) == 0, std::string(suite) + " failed on chain base");
        cr.require(suite_cases(rep) >= 200, std::string(suite) + ": too few cases");
    }
    cr.finish();
}

void criterion5() {
    Criterion cr(5, "pushout-product and hom-corner maps carry the required flags", 300.0);
    ChainCat CC(2);
    std::function<ChainComplex(Rng&)> ro = [](Rng& rng) { return random_complex(rng, 2, 2, 2); };
    std::vector<std::pair<std::string, ReedyStructure>> fixtures = {
        {"arrow", builtin_reedy("arrow")},
        {"span", builtin_reedy("span")},
        {"square", builtin_reedy("square")},
        {"mixed_retract", mixed_retract()}};

    Rng rng(106);
    const int per_fixture = 125;  // × 4 fixtures = 500 pairs per pairing
    for (const auto& [name, R] : fixtures) {
        for (int rep = 0; rep < per_fixture; ++rep) {
            bool ftriv = rng.coin(), gtriv = rng.coin();
            auto fb = CC.factorize(
                random_chain_map(CC, random_complex(rng, 2, 2, 2),
                                 random_complex(rng, 2, 2, 2), rng),
                ftriv ? FactKind::TrivCofThenFib : FactKind::CofThenTrivFib).first;
            auto fd = random_reedy_cofibration(CC, R, rng, ro, ftriv);
            auto gd = random_reedy_cofibration(CC, R, rng, ro, gtriv);

            auto [c1, f1] = pushout_product_prop1(CC, R, fb, gd);
            cr.require(f1.is_cofibration && (!(ftriv || gtriv) || f1.is_trivial_cofibration),
                       name + " base-against-diagram pairing: " + f1.detail);

            auto [c2, f2] = pushout_product_lemma7(CC, R, fd, fb);
            cr.require(f2.is_cofibration && (!ftriv || f2.is_trivial_cofibration),
                       name + " diagram-against-base pairing: " + f2.detail);

            auto [c3, f3] = pushout_product_thm1(CC, R, fd, gd);
            cr.require(f3.is_cofibration && (!(ftriv || gtriv) || f3.is_trivial_cofibration),
                       name + " diagram-against-diagram pairing: " + f3.detail);

            auto p = random_reedy_fibration(CC, R, rng, ro, gtriv);
            auto [c4, f4] = lemma7_fibration_side(CC, R, fb, p);
            cr.require(f4.is_fibration && (!(ftriv || gtriv) || f4.is_trivial_fibration),
                       name + " hom-corner pairing: " + f4.detail);
        }
    }

    // representable tensors: all object pairs of all direct builtins, both kinds of f
    for (const std::string& name : builtin_names()) {
        ReedyStructure R = builtin_reedy(name);
        if (!is_direct(R)) continue;
        for (bool triv : {false, true}) {
            auto f = CC.factorize(
                random_chain_map(CC, random_complex(rng, 2, 2, 2),
                                 random_complex(rng, 2, 2, 2), rng),
                triv ? FactKind::TrivCofThenFib : FactKind::CofThenTrivFib).first;
            for (int p = 0; p < R.base.n_objects; ++p)
                for (int q = 0; q < R.base.n_objects; ++q) {
                    auto rep = lemma8_check(CC, R, p, q, f);
                    cr.require(rep.ok, name + " representable tensor: " + rep.detail);
                }
        }
    }

    // unit axiom on cofibrant fixtures over each pairing fixture
    for (const auto& [name, R] : fixtures) {
        for (int rep = 0; rep < 5; ++rep) {
            auto X = random_free_diagram<ChainCat>(CC, R.base, rng, ro, 2);
            auto ua = unit_axiom_check(CC, R, X);
            cr.require(ua.ok, name + " unit axiom: " + ua.detail);
        }
    }
    cr.finish();
}

void criterion6() {
    Criterion cr(6, "injected mutations are detected with 100% rate", 60.0);
    int mutations = 0, detected = 0;
    for (const std::string& base : {"finset", "chain"}) {
        RunReport rep = run_scenario(base_scenario(base, "arrow", {"negative_controls"}, 30, 107));
        mutations += rep.suites[0].cases;
        detected += static_cast<int>(rep.suites[0].failures.size());
        cr.require(rep.suites[0].passes == 0, base + ": a mutation slipped through");
    }
    cr.require(mutations >= 50, "fewer than 50 injected mutations");
    cr.require(detected == mutations, "detection rate below 100%");
    cr.finish();
}

void criterion7() {
    Criterion cr(7, "independent oracles agree on every fixture", 60.0);
    Rng rng(108);

    // natural-transformation count vs end-of-homs, set tier
    {
        FinSetCat FS;
        SelfModule<FinSetCat> SM(FS);
        std::function<FinSetObj(Rng&)> ro = [](Rng& r) { return FinSetObj{1 + r.below(2)}; };
        for (const char* idx : {"arrow", "span", "cospan"}) {
            FiniteCategory I = builtin_reedy(idx).base;
            FunctorCat<FinSetCat> D(FS, I);
            for (int rep = 0; rep < 25; ++rep) {
                auto X = random_free_diagram<FinSetCat>(FS, I, rng, ro, 2);
                auto Y = random_free_diagram<FinSetCat>(FS, I, rng, ro, 2);
                auto direct = D.hom_list(X, Y);
                auto e = hom_l(SM, I, X, Y);
                cr.require(static_cast<int>(direct.size()) == e.obj.size,
                           "set tier: transformation count disagrees with the end of homs");
            }
        }
    }

    // chain tier: degree-zero cycles of the end of hom-complexes
    {
        ChainCat CC(3);
        SelfModule<ChainCat> SM(CC);
        std::function<ChainComplex(Rng&)> ro = [](Rng& r) { return random_complex(r, 3, 2, 2); };
        for (const char* idx : {"arrow", "span"}) {
            FiniteCategory I = builtin_reedy(idx).base;
            FunctorCat<ChainCat> D(CC, I);
            for (int rep = 0; rep < 25; ++rep) {
                auto X = random_free_diagram<ChainCat>(CC, I, rng, ro, 2);
                auto Y = random_free_diagram<ChainCat>(CC, I, rng, ro, 2);
                auto direct = D.hom_list(X, Y);
                auto e = hom_l(SM, I, X, Y);
                cr.require(static_cast<int>(direct.size()) == cycles0(e.obj),
                           "chain tier: transformation space disagrees with the end of homs");
            }
        }

        // graded dimension of a tensor product against the homology pairing
        for (int rep = 0; rep < 100; ++rep) {
            auto A = random_complex(rng, 3, 2, 2);
            auto B = random_complex(rng, 3, 2, 2);
            auto hA = CC.homology(A);
            auto hB = CC.homology(B);
            auto hT = CC.homology(CC.tensor_obj(A, B));
            for (int n = hT.lo - 1; n <= hT.lo + static_cast<int>(hT.dims.size()) + 1; ++n) {
                int expect = 0;
                for (int i = hA.lo; i < hA.lo + static_cast<int>(hA.dims.size()); ++i)
                    expect += hA.dim(i) * hB.dim(n - i);
                cr.require(hT.dim(n) == expect,
                           "tensor homology dimension disagrees with the graded pairing");
            }
        }
    }

    // (co)limit universal properties: existence and uniqueness of mediation
    {
        FinSetCat FS;
        std::function<FinSetObj(Rng&)> ro = [](Rng& r) { return FinSetObj{1 + r.below(2)}; };
        for (const char* idx : {"span", "cospan", "parallel_pair"}) {
            FiniteCategory I = builtin_reedy(idx).base;
            for (int rep = 0; rep < 20; ++rep) {
                auto X = random_free_diagram<FinSetCat>(FS, I, rng, ro, 2);
                auto lim = finite_limit(FS, X);
                FinSetObj c{2};
                for (const auto& h : FS.hom_list(c, lim.obj)) {
                    std::vector<FinSetMor> cone;
                    for (int i = 0; i < I.n_objects; ++i)
                        cone.push_back(FS.compose(lim.legs[i], h));
                    auto med = factor_limit(FS, lim, c, cone);
                    cr.require(FS.eq(med, h), "limit mediation is not unique");
                }
                auto col = finite_colimit(FS, X);
                for (const auto& h : FS.hom_list(col.obj, c)) {
                    std::vector<FinSetMor> cocone;
                    for (int i = 0; i < I.n_objects; ++i)
                        cocone.push_back(FS.compose(h, col.legs[i]));
                    auto med = factor_colimit(FS, col, c, cocone);
                    cr.require(FS.eq(med, h), "colimit mediation is not unique");
                }
            }
        }
    }
    cr.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (g_failed == 0) {
        std::printf("acceptance: all 7 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failed);
    return 1;
}
