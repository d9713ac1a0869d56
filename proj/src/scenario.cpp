#include "rcat/scenario.hpp"

#include <algorithm>
#include <chrono>

#include "rcat/enrichment.hpp"
#include "rcat/reedy_model.hpp"
#include "rcat/sampler.hpp"

namespace rcat {

namespace {

using Clock = std::chrono::steady_clock;

void record(SuiteReport& r, int idx, std::uint64_t cs, bool ok, const std::string& detail,
            Json witness) {
    ++r.cases;
    if (ok)
        ++r.passes;
    else
        r.failures.push_back({idx, cs, detail, std::move(witness)});
}

// ---------------------------------------------------------------------------
// Typed environment per base category.

template <class B>
struct Env {
    B base;
    const Scenario* sc;
    ReedyStructure R;
    std::function<typename B::Obj(Rng&)> rand_obj;

    Diagram<B> rand_diagram(Rng& rng) const {
        return random_free_diagram<B>(base, R.base, rng, rand_obj, 2);
    }
};

Env<FinSetCat> make_env_finset(const Scenario& sc) {
    Env<FinSetCat> e;
    e.base.cap = sc.caps.hom_cap;
    e.sc = &sc;
    e.R = sc.index;
    int m = std::max(1, sc.caps.max_size);
    e.rand_obj = [m](Rng& rng) { return FinSetObj{1 + rng.below(m)}; };
    return e;
}

Env<ChainCat> make_env_chain(const Scenario& sc) {
    Env<ChainCat> e;
    e.base = ChainCat(sc.base.p);
    e.base.cap = sc.caps.hom_cap;
    e.sc = &sc;
    e.R = sc.index;
    int span = std::max(1, sc.base.max_degree);
    int dim = std::max(1, sc.base.max_dim);
    e.rand_obj = [p = sc.base.p, span, dim](Rng& rng) {
        return random_complex(rng, p, span, dim);
    };
    return e;
}

/// All FinSet diagrams with sizes ≤ max over a one-object identity-only shape
/// or a two-object single-arrow shape; empty when the shape is larger.
std::vector<Diagram<FinSetCat>> enumerate_small_diagrams(const FinSetCat& FS,
                                                         const FiniteCategory& I, int max_size) {
    std::vector<Diagram<FinSetCat>> out;
    int non_id = 0, arrow = -1;
    for (int f = 0; f < I.n_arrows(); ++f)
        if (!I.is_identity(f)) {
            ++non_id;
            arrow = f;
        }
    if (I.n_objects == 1 && non_id == 0) {
        for (int s = 0; s <= max_size; ++s)
            out.push_back(make_diagram<FinSetCat>(
                FS, I, [&](int) { return FinSetObj{s}; },
                [&](int) { return FS.id(FinSetObj{s}); }));
        return out;
    }
    if (I.n_objects == 2 && non_id == 1) {
        int s = I.arrow_src[arrow];
        for (int a = 0; a <= max_size; ++a)
            for (int b = 0; b <= max_size; ++b) {
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
    return {};
}

// ---------------------------------------------------------------------------
// Suites generic over the base (and module where relevant).

template <class B>
SuiteReport suite_eq1(const Env<B>& env) {
    SuiteReport r;
    r.name = "eq1";
    const auto& I = env.R.base;
    auto check_all = [&](const Diagram<B>& M, int idx, std::uint64_t cs) {
        for (int i = 0; i < I.n_objects; ++i) {
            auto res = representable_hom_check(env.base, I, M, i);
            record(r, idx, cs, res.ok, res.detail,
                   Json{{"diagram", to_json(M)}, {"object_index", i}});
        }
    };
    if constexpr (!B::linear) {
        auto all = enumerate_small_diagrams(env.base, I, 3);
        if (!all.empty()) {
            r.mode = "exhaustive";
            for (std::size_t k = 0; k < all.size(); ++k)
                check_all(all[k], static_cast<int>(k), case_seed(env.sc->seed, k));
            return r;
        }
    }
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        check_all(env.rand_diagram(rng), c, cs);
    }
    return r;
}

template <class B>
SuiteReport suite_yoneda_monoidal(const Env<B>& env) {
    SuiteReport r;
    r.name = "yoneda_monoidal";
    const auto& I = env.R.base;
    SelfModule<B> SM(env.base);
    auto check_all = [&](const Diagram<B>& X, int idx, std::uint64_t cs) {
        for (int i = 0; i < I.n_objects; ++i) {
            auto w = yoneda_eval_check(SM, I, X, i);
            record(r, idx, cs, w.ok, w.detail,
                   Json{{"diagram", to_json(X)}, {"object_index", i}});
        }
    };
    if constexpr (!B::linear) {
        auto all = enumerate_small_diagrams(env.base, I, 2);
        if (!all.empty()) {
            r.mode = "exhaustive";
            for (std::size_t k = 0; k < all.size(); ++k)
                check_all(all[k], static_cast<int>(k), case_seed(env.sc->seed, k));
            return r;
        }
    }
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        check_all(env.rand_diagram(rng), c, cs);
    }
    return r;
}

template <class B>
SuiteReport suite_yoneda_module(const Env<B>& env) {
    SuiteReport r;
    r.name = "yoneda_module";
    const auto& I = env.R.base;
    FiniteCategory J = builtin_reedy(env.sc->module_.inner_index).base;
    PointwiseModule<SelfModule<B>> PW(SelfModule<B>(env.base), J);
    FunctorCat<B> CJ(env.base, J);
    CJ.cap = env.sc->caps.hom_cap;
    std::function<Diagram<B>(Rng&)> rj = [&](Rng& rng) {
        return random_free_diagram<B>(env.base, J, rng, env.rand_obj, 1);
    };
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        auto X = random_free_diagram<FunctorCat<B>>(CJ, I, rng, rj, 1);
        for (int i = 0; i < I.n_objects; ++i) {
            auto w = yoneda_eval_check(PW, I, X, i);
            record(r, c, cs, w.ok, w.detail,
                   Json{{"diagram", to_json(X)}, {"object_index", i}});
        }
    }
    return r;
}

/// Dispatch on the configured module: calls body(mod, rand_cobj) where mod is
/// the inner closed module (self or pointwise-over-J) and rand_cobj samples a
/// free object of the module's target category.
template <class B, class F>
void with_module(const Env<B>& env, F&& body) {
    if (env.sc->module_.kind == "self") {
        SelfModule<B> SM(env.base);
        std::function<typename B::Obj(Rng&)> rc = env.rand_obj;
        body(SM, rc);
    } else {
        FiniteCategory J = builtin_reedy(env.sc->module_.inner_index).base;
        PointwiseModule<SelfModule<B>> PW(SelfModule<B>(env.base), J);
        std::function<Diagram<B>(Rng&)> rc = [env, J](Rng& rng) {
            return random_free_diagram<B>(env.base, J, rng, env.rand_obj, 1);
        };
        body(PW, rc);
    }
}

template <class B>
SuiteReport suite_coreduction(const Env<B>& env, bool reduction) {
    SuiteReport r;
    r.name = reduction ? "reduction" : "coreduction";
    const auto& I = env.R.base;
    with_module(env, [&](const auto& mod, const auto& rand_cobj) {
        for (int c = 0; c < env.sc->samples; ++c) {
            std::uint64_t cs = case_seed(env.sc->seed, c);
            Rng rng(cs);
            auto M = random_free_diagram<typename std::decay_t<decltype(mod)>::C>(
                mod.cat, I, rng, rand_cobj, 2);
            auto w = reduction ? reduction_check(mod, I, M) : coreduction_check(mod, I, M);
            record(r, c, cs, w.ok, w.detail, Json{{"diagram", to_json(M)}});
        }
    });
    return r;
}

template <class B>
SuiteReport suite_adj_l1(const Env<B>& env) {
    SuiteReport r;
    r.name = "adj_l1";
    const auto& I = env.R.base;
    PointwiseModule<SelfModule<B>> PW(SelfModule<B>(env.base), I);
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        auto m = env.rand_obj(rng);
        auto X = env.rand_diagram(rng);
        auto Y = env.rand_diagram(rng);
        auto res = verify_pointwise_adjunction(PW, m, X, Y);
        record(r, c, cs, res.ok, res.detail,
               Json{{"m", to_json(m)}, {"X", to_json(X)}, {"Y", to_json(Y)}});
    }
    return r;
}

template <class B>
SuiteReport suite_adj_l6(const Env<B>& env) {
    SuiteReport r;
    r.name = "adj_l6";
    const auto& I = env.R.base;
    with_module(env, [&](const auto& inner, const auto& rand_cobj) {
        using Inner = std::decay_t<decltype(inner)>;
        PointwiseModule<Inner> PW(inner, I);
        for (int c = 0; c < env.sc->samples; ++c) {
            std::uint64_t cs = case_seed(env.sc->seed, c);
            Rng rng(cs);
            auto m = env.rand_obj(rng);
            auto X = random_free_diagram<typename Inner::C>(inner.cat, I, rng, rand_cobj, 1);
            auto Y = random_free_diagram<typename Inner::C>(inner.cat, I, rng, rand_cobj, 1);
            auto res = verify_pointwise_adjunction(PW, m, X, Y);
            record(r, c, cs, res.ok, res.detail,
                   Json{{"m", to_json(m)}, {"X", to_json(X)}, {"Y", to_json(Y)}});
        }
    });
    return r;
}

template <class B>
SuiteReport suite_adj_l3(const Env<B>& env) {
    SuiteReport r;
    r.name = "adj_l3";
    const auto& I = env.R.base;
    with_module(env, [&](const auto& mod, const auto& rand_cobj) {
        using Mod = std::decay_t<decltype(mod)>;
        for (int c = 0; c < env.sc->samples; ++c) {
            std::uint64_t cs = case_seed(env.sc->seed, c);
            Rng rng(cs);
            auto M = env.rand_diagram(rng);
            auto cc = rand_cobj(rng);
            auto X = random_free_diagram<typename Mod::C>(mod.cat, I, rng, rand_cobj, 1);
            auto w = verify_l3(mod, I, M, cc, X);
            record(r, c, cs, w.ok, w.detail,
                   Json{{"M", to_json(M)}, {"c", to_json(cc)}, {"X", to_json(X)}});
        }
    });
    return r;
}

template <class B>
SuiteReport suite_adj_p2(const Env<B>& env) {
    SuiteReport r;
    r.name = "adj_p2";
    const auto& I = env.R.base;
    with_module(env, [&](const auto& mod, const auto& rand_cobj) {
        using Mod = std::decay_t<decltype(mod)>;
        for (int c = 0; c < env.sc->samples; ++c) {
            std::uint64_t cs = case_seed(env.sc->seed, c);
            Rng rng(cs);
            auto M = env.rand_diagram(rng);
            auto X = random_free_diagram<typename Mod::C>(mod.cat, I, rng, rand_cobj, 1);
            auto Y = random_free_diagram<typename Mod::C>(mod.cat, I, rng, rand_cobj, 1);
            auto res = verify_p2(mod, I, M, X, Y);
            record(r, c, cs, res.ok, res.detail,
                   Json{{"M", to_json(M)}, {"X", to_json(X)}, {"Y", to_json(Y)}});
        }
    });
    return r;
}

// ---------------------------------------------------------------------------
// Model-structure suites (chain base, self module).

ChainMap sampled_base_cof(const ChainCat& CC, const Env<ChainCat>& env, Rng& rng, bool trivial) {
    auto g = random_chain_map(CC, env.rand_obj(rng), env.rand_obj(rng), rng);
    return CC.factorize(g, trivial ? FactKind::TrivCofThenFib : FactKind::CofThenTrivFib).first;
}

SuiteReport suite_prop1(const Env<ChainCat>& env) {
    SuiteReport r;
    r.name = "prop1";
    const ChainCat& CC = env.base;
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        bool ftriv = rng.coin(), gtriv = rng.coin();
        auto f = sampled_base_cof(CC, env, rng, ftriv);
        auto g = random_reedy_cofibration(CC, env.R, rng, env.rand_obj, gtriv);
        auto [corner, fl] = pushout_product_prop1(CC, env.R, f, g);
        bool ok = fl.is_cofibration && (!(ftriv || gtriv) || fl.is_trivial_cofibration);
        record(r, c, cs, ok, fl.detail,
               Json{{"f", to_json(f)}, {"g", to_json(g)}, {"f_trivial", ftriv},
                    {"g_trivial", gtriv}});
    }
    return r;
}

SuiteReport suite_lemma7(const Env<ChainCat>& env) {
    SuiteReport r;
    r.name = "lemma7";
    const ChainCat& CC = env.base;
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        bool ftriv = rng.coin(), gtriv = rng.coin();
        auto fdiag = random_reedy_cofibration(CC, env.R, rng, env.rand_obj, ftriv);
        auto gbase = sampled_base_cof(CC, env, rng, gtriv);
        auto [corner, fl] = pushout_product_lemma7(CC, env.R, fdiag, gbase);
        bool ok = fl.is_cofibration && (!(ftriv || gtriv) || fl.is_trivial_cofibration);

        auto fb = sampled_base_cof(CC, env, rng, ftriv);
        auto p = random_reedy_fibration(CC, env.R, rng, env.rand_obj, gtriv);
        auto [corner2, fl2] = lemma7_fibration_side(CC, env.R, fb, p);
        bool ok2 = fl2.is_fibration && (!(ftriv || gtriv) || fl2.is_trivial_fibration);
        record(r, c, cs, ok && ok2, ok ? fl2.detail : fl.detail,
               Json{{"f_diag", to_json(fdiag)}, {"g_base", to_json(gbase)},
                    {"f_base", to_json(fb)}, {"p", to_json(p)}, {"f_trivial", ftriv},
                    {"g_trivial", gtriv}});
    }
    return r;
}

SuiteReport suite_thm1(const Env<ChainCat>& env) {
    SuiteReport r;
    r.name = "thm1";
    const ChainCat& CC = env.base;
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        bool ftriv = rng.coin(), gtriv = rng.coin();
        auto f = random_reedy_cofibration(CC, env.R, rng, env.rand_obj, ftriv);
        auto g = random_reedy_cofibration(CC, env.R, rng, env.rand_obj, gtriv);
        auto [corner, fl] = pushout_product_thm1(CC, env.R, f, g);
        bool ok = fl.is_cofibration && (!(ftriv || gtriv) || fl.is_trivial_cofibration);
        record(r, c, cs, ok, fl.detail,
               Json{{"f", to_json(f)}, {"g", to_json(g)}, {"f_trivial", ftriv},
                    {"g_trivial", gtriv}});
    }
    return r;
}

SuiteReport suite_lemma8(const Env<ChainCat>& env) {
    SuiteReport r;
    r.name = "lemma8";
    const ChainCat& CC = env.base;
    int n = env.R.base.n_objects;
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        int p = (c / n) % n, q = c % n;  // cycles through all pairs
        bool triv = rng.coin();
        auto f = sampled_base_cof(CC, env, rng, triv);
        auto rep = lemma8_check(CC, env.R, p, q, f);
        record(r, c, cs, rep.ok, rep.detail,
               Json{{"p", p}, {"q", q}, {"f", to_json(f)}, {"f_trivial", triv}});
    }
    return r;
}

SuiteReport suite_unit_axiom(const Env<ChainCat>& env) {
    SuiteReport r;
    r.name = "unit_axiom";
    const ChainCat& CC = env.base;
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        auto X = env.rand_diagram(rng);
        auto rep = unit_axiom_check(CC, env.R, X);
        record(r, c, cs, rep.ok, rep.detail, Json{{"X", to_json(X)}});
    }
    return r;
}

SuiteReport suite_restriction(const Env<ChainCat>& env) {
    SuiteReport r;
    r.name = "restriction";
    const ChainCat& CC = env.base;
    auto pr = restrict_plus_shape(env.R);
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        auto g = random_reedy_map(CC, env.R, rng, env.rand_obj, 2);
        auto full = classify_reedy(CC, env.R, g);
        auto restr = classify_reedy(CC, pr.reedy, restrict_plus(CC, pr, g));
        bool ok = full.is_cofibration == restr.is_cofibration &&
                  full.is_trivial_cofibration ==
                      (restr.is_cofibration && full.is_weak_equivalence);
        record(r, c, cs, ok, ok ? "" : "cofibration flag differs under restriction",
               Json{{"g", to_json(g)}});
    }
    return r;
}

// ---------------------------------------------------------------------------
// Negative controls: each case injects a known defect; a detection is
// recorded as a failure record (with witness), so a healthy toolchain reports
// failures == cases for this suite. The run's exit status ignores it.

template <class B>
SuiteReport suite_negative_controls(const Env<B>& env) {
    SuiteReport r;
    r.name = "negative_controls";
    FiniteCategory arrow_shape = builtin_reedy("arrow").base;
    for (int c = 0; c < env.sc->samples; ++c) {
        std::uint64_t cs = case_seed(env.sc->seed, c);
        Rng rng(cs);
        bool detected = false;
        std::string kind;
        Json witness;
        if constexpr (B::linear) {
            const ChainCat& CC = env.base;
            switch (c % 5) {
                case 0: {  // differential with d∘d ≠ 0
                    kind = "broken_differential";
                    ChainComplex bad;
                    bad.p = CC.p;
                    bad.lo = 0;
                    bad.dims = {1, 1, 1};
                    Mat one(1, 1, CC.p);
                    one.at(0, 0) = 1 + rng.below(CC.p - 1);
                    bad.d = {Mat(0, 1, CC.p), one, one};
                    witness = to_json(bad);
                    detected = !validate_complex(bad).ok();
                    break;
                }
                case 1: {  // non-natural transformation component
                    kind = "broken_naturality";
                    auto X = yoneda_lower(CC, arrow_shape, 0);
                    FunctorCat<ChainCat> D(CC, arrow_shape);
                    auto n = D.id(X);
                    n.comp[0] = CC.zero_mor(X.obj[0], X.obj[0]);
                    witness = to_json(n);
                    detected = !validate_nat(CC, n).ok();
                    break;
                }
                case 2: {  // zero self-map of the unit is not a cofibration
                    kind = "fake_cofibration";
                    auto z = CC.zero_mor(CC.unit(), CC.unit());
                    witness = to_json(z);
                    detected = !CC.classify(z).cofibration;
                    break;
                }
                case 3: {  // ... and not a fibration either
                    kind = "fake_fibration";
                    auto z = CC.zero_mor(CC.unit(), CC.unit());
                    witness = to_json(z);
                    detected = !CC.classify(z).fibration;
                    break;
                }
                default: {  // Reedy-level: zero endomorphism of constant unit
                    kind = "fake_reedy_cofibration";
                    FunctorCat<ChainCat> D(CC, env.R.base);
                    auto K = D.constant(CC.unit());
                    auto z = D.zero_mor(K, K);
                    witness = to_json(z);
                    detected = !classify_reedy(CC, env.R, z).is_cofibration;
                    break;
                }
            }
        } else {
            const FinSetCat& FS = env.base;
            switch (c % 2) {
                case 0: {  // identity slot holds a non-identity map
                    kind = "broken_functoriality";
                    Diagram<FinSetCat> bad;
                    bad.shape = arrow_shape;
                    bad.obj = {FinSetObj{2}, FinSetObj{2}};
                    bad.mor.resize(arrow_shape.n_arrows());
                    for (int f = 0; f < arrow_shape.n_arrows(); ++f)
                        bad.mor[f] = FS.id(FinSetObj{2});
                    bad.mor[arrow_shape.identity[0]] = FinSetMor{2, 2, {1, 0}};
                    witness = to_json(bad);
                    detected = !validate_diagram(FS, bad).ok();
                    break;
                }
                default: {  // non-natural transformation component
                    kind = "broken_naturality";
                    auto h0 = yoneda_lower(FS, arrow_shape, 0);
                    auto X = tensor_const(FS, h0, FinSetObj{2});
                    FunctorCat<FinSetCat> D(FS, arrow_shape);
                    auto n = D.id(X);
                    n.comp[0] = FinSetMor{2, 2, {1, 0}};
                    witness = to_json(n);
                    detected = !validate_nat(FS, n).ok();
                    break;
                }
            }
        }
        record(r, c, cs, !detected, "mutation detected: " + kind,
               Json{{"kind", kind}, {"object", witness}});
    }
    return r;
}

// ---------------------------------------------------------------------------

void require(bool cond, const std::string& msg) {
    if (!cond) throw StructuralError(msg);
}

template <class B>
SuiteReport dispatch_suite(const std::string& name, const Env<B>& env) {
    const Scenario& sc = *env.sc;
    if (name == "eq1") return suite_eq1(env);
    if (name == "yoneda_monoidal") return suite_yoneda_monoidal(env);
    if (name == "yoneda_module") {
        require(sc.module_.kind == "diagram_over",
                "suite yoneda_module requires module.kind = diagram_over");
        return suite_yoneda_module(env);
    }
    if (name == "coreduction") return suite_coreduction(env, false);
    if (name == "reduction") return suite_coreduction(env, true);
    if (name == "adj_l1") return suite_adj_l1(env);
    if (name == "adj_l6") return suite_adj_l6(env);
    if (name == "adj_l3") return suite_adj_l3(env);
    if (name == "adj_p2") return suite_adj_p2(env);
    if (name == "negative_controls") return suite_negative_controls(env);
    if constexpr (B::linear) {
        require(sc.module_.kind == "self",
                "model-structure suites are defined for module.kind = self");
        if (name == "prop1") return suite_prop1(env);
        if (name == "lemma7") return suite_lemma7(env);
        if (name == "thm1") return suite_thm1(env);
        if (name == "lemma8") {
            require(is_direct(env.R), "suite lemma8 requires a direct index category");
            return suite_lemma8(env);
        }
        if (name == "unit_axiom") return suite_unit_axiom(env);
        if (name == "restriction") return suite_restriction(env);
    } else {
        require(name != "prop1" && name != "lemma7" && name != "thm1" && name != "lemma8" &&
                    name != "unit_axiom" && name != "restriction",
                "suite " + name + " requires base.kind = chain");
    }
    throw StructuralError("unknown suite: " + name);
}

template <class B>
void run_typed(const Scenario& sc, const Env<B>& env, RunReport& out) {
    for (const std::string& name : sc.suites) {
        auto t0 = Clock::now();
        SuiteReport sr = dispatch_suite(name, env);
        sr.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        if (name != "negative_controls" && !sr.failures.empty()) out.ok = false;
        out.suites.push_back(std::move(sr));
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"eq1",    "yoneda_monoidal", "yoneda_module", "coreduction",
            "reduction", "adj_l1",       "adj_l3",        "adj_l6",
            "adj_p2", "prop1",           "lemma7",        "lemma8",
            "thm1",   "unit_axiom",      "restriction",   "negative_controls"};
}

Scenario scenario_from_json(const Json& j) {
    if (!j.contains("schema") || j.at("schema").get<int>() != 1)
        throw StructuralError("scenario: missing or unsupported schema field");
    Scenario sc;
    const Json& b = j.at("base");
    sc.base.kind = b.at("kind").get<std::string>();
    if (sc.base.kind != "finset" && sc.base.kind != "chain")
        throw StructuralError("scenario: base.kind must be finset or chain");
    if (sc.base.kind == "chain") {
        sc.base.p = b.value("p", 3);
        sc.base.max_degree = b.value("max_degree", 2);
        sc.base.max_dim = b.value("max_dim", 2);
        if (sc.base.p < 2) throw StructuralError("scenario: base.p must be a prime >= 2");
    }
    const Json& idx = j.at("index");
    if (idx.is_string()) {
        sc.index_name = idx.get<std::string>();
        sc.index = builtin_reedy(sc.index_name);
    } else {
        sc.index_name = "custom";
        sc.index = reedy_from_json(idx);
    }
    auto vr = validate_reedy(sc.index);
    if (!vr.ok()) throw StructuralError("scenario: invalid index: " + vr.issues[0].detail);
    if (j.contains("module")) {
        sc.module_.kind = j.at("module").at("kind").get<std::string>();
        if (sc.module_.kind != "self" && sc.module_.kind != "diagram_over")
            throw StructuralError("scenario: module.kind must be self or diagram_over");
        if (sc.module_.kind == "diagram_over")
            sc.module_.inner_index = j.at("module").at("inner_index").get<std::string>();
    }
    sc.suites = j.at("suites").get<std::vector<std::string>>();
    auto known = suite_names();
    for (const auto& s : sc.suites)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw StructuralError("scenario: unknown suite: " + s);
    sc.samples = j.value("samples", 20);
    if (sc.samples <= 0) throw StructuralError("scenario: samples must be positive");
    sc.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("caps")) {
        sc.caps.hom_cap = j.at("caps").value("hom_cap", sc.caps.hom_cap);
        sc.caps.max_size = j.at("caps").value("max_size", sc.caps.max_size);
        if (sc.caps.hom_cap == 0 || sc.caps.max_size <= 0)
            throw StructuralError("scenario: caps must be positive");
    }
    return sc;
}

Json scenario_to_json(const Scenario& sc) {
    Json j;
    j["schema"] = 1;
    if (sc.base.kind == "chain")
        j["base"] = Json{{"kind", "chain"},
                         {"p", sc.base.p},
                         {"max_degree", sc.base.max_degree},
                         {"max_dim", sc.base.max_dim}};
    else
        j["base"] = Json{{"kind", "finset"}};
    if (sc.index_name != "custom")
        j["index"] = sc.index_name;
    else
        j["index"] = to_json(sc.index);
    if (sc.module_.kind == "diagram_over")
        j["module"] = Json{{"kind", "diagram_over"}, {"inner_index", sc.module_.inner_index}};
    else
        j["module"] = Json{{"kind", "self"}};
    j["suites"] = sc.suites;
    j["samples"] = sc.samples;
    j["seed"] = sc.seed;
    j["caps"] = Json{{"hom_cap", sc.caps.hom_cap}, {"max_size", sc.caps.max_size}};
    return j;
}

RunReport run_scenario(const Scenario& sc) {
    RunReport out;
    out.scenario = sc;
    if (sc.base.kind == "finset") {
        auto env = make_env_finset(sc);
        run_typed(sc, env, out);
    } else {
        auto env = make_env_chain(sc);
        run_typed(sc, env, out);
    }
    return out;
}

Json report_to_json(const RunReport& rep, bool omit_timing) {
    Json j;
    j["schema"] = 1;
    j["tool_version"] = kToolVersion;
    j["scenario"] = scenario_to_json(rep.scenario);
    Json suites = Json::array();
    for (const SuiteReport& s : rep.suites) {
        Json sj;
        sj["name"] = s.name;
        sj["mode"] = s.mode;
        sj["cases"] = s.cases;
        sj["passes"] = s.passes;
        Json fails = Json::array();
        for (const FailureRecord& f : s.failures) {
            Json fj;
            fj["case"] = f.case_index;
            fj["seed"] = f.case_seed_value;
            fj["detail"] = f.detail;
            fj["witness"] = f.witness;
            fails.push_back(std::move(fj));
        }
        sj["failures"] = std::move(fails);
        if (!omit_timing) sj["wall_ms"] = s.wall_ms;
        suites.push_back(std::move(sj));
    }
    j["suites"] = std::move(suites);
    j["ok"] = rep.ok;
    return j;
}

Json generate_fixture(const std::string& kind, const Json& params, std::uint64_t seed) {
    Rng rng(seed);
    int p = params.value("p", 3);
    int span = params.value("max_degree", 2);
    int dim = params.value("max_dim", 2);
    Json out;
    out["schema"] = 1;
    out["kind"] = kind;
    out["seed"] = seed;
    if (kind == "chain_complex") {
        out["object"] = to_json(random_complex(rng, p, std::max(1, span), std::max(1, dim)));
        return out;
    }
    if (kind == "chain_map") {
        ChainCat CC(p);
        auto a = random_complex(rng, p, std::max(1, span), std::max(1, dim));
        auto b = random_complex(rng, p, std::max(1, span), std::max(1, dim));
        out["object"] = to_json(random_chain_map(CC, a, b, rng));
        return out;
    }
    if (kind == "diagram") {
        std::string index = params.value("index", std::string("arrow"));
        std::string base = params.value("base", std::string("finset"));
        FiniteCategory I = builtin_reedy(index).base;
        if (base == "finset") {
            FinSetCat FS;
            int m = params.value("max_size", 2);
            std::function<FinSetObj(Rng&)> ro = [m](Rng& r) { return FinSetObj{1 + r.below(m)}; };
            out["object"] = to_json(random_free_diagram<FinSetCat>(FS, I, rng, ro, 2));
        } else {
            ChainCat CC(p);
            std::function<ChainComplex(Rng&)> ro = [&](Rng& r) {
                return random_complex(r, p, std::max(1, span), std::max(1, dim));
            };
            out["object"] = to_json(random_free_diagram<ChainCat>(CC, I, rng, ro, 2));
        }
        return out;
    }
    if (kind == "cofibration" || kind == "trivial_cofibration" || kind == "fibration" ||
        kind == "trivial_fibration") {
        ChainCat CC(p);
        auto a = random_complex(rng, p, std::max(1, span), std::max(1, dim));
        auto b = random_complex(rng, p, std::max(1, span), std::max(1, dim));
        auto g = random_chain_map(CC, a, b, rng);
        bool first = kind == "cofibration" || kind == "trivial_cofibration";
        bool trivial = kind == "trivial_cofibration" || kind == "trivial_fibration";
        FactKind fk = (first != trivial) ? FactKind::CofThenTrivFib : FactKind::TrivCofThenFib;
        auto [u, v] = CC.factorize(g, fk);
        out["object"] = to_json(first ? u : v);
        return out;
    }
    if (kind == "reedy_cofibration") {
        std::string index = params.value("index", std::string("arrow"));
        ChainCat CC(p);
        ReedyStructure R = builtin_reedy(index);
        std::function<ChainComplex(Rng&)> ro = [&](Rng& r) {
            return random_complex(r, p, std::max(1, span), std::max(1, dim));
        };
        out["object"] = to_json(random_reedy_cofibration(CC, R, rng, ro, false));
        return out;
    }
    throw StructuralError("generate: unknown kind: " + kind);
}

Json builtins_catalog() {
    Json out = Json::array();
    for (const std::string& name : builtin_names()) {
        ReedyStructure r = builtin_reedy(name);
        Json j;
        j["name"] = name;
        j["n_objects"] = r.base.n_objects;
        j["n_arrows"] = r.base.n_arrows();
        j["degrees"] = r.degree;
        j["direct"] = is_direct(r);
        bool inverse = r.plus_arrows.empty();
        j["inverse"] = inverse;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace rcat
