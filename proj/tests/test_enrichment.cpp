#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcat/enrichment.hpp"
#include "rcat/module.hpp"
#include "rcat/sampler.hpp"

using namespace rcat;

namespace {

FiniteCategory shape(const std::string& name) { return builtin_reedy(name).base; }

std::function<FinSetObj(Rng&)> small_set = [](Rng& rng) { return FinSetObj{1 + rng.below(2)}; };

Diagram<FinSetCat> random_fs_diagram(const FinSetCat& FS, const FiniteCategory& I, Rng& rng) {
    return random_free_diagram<FinSetCat>(FS, I, rng, small_set, 2);
}

Diagram<ChainCat> random_ch_diagram(const ChainCat& CC, const FiniteCategory& I, Rng& rng) {
    std::function<ChainComplex(Rng&)> ro = [&](Rng& r) { return random_complex(r, CC.p, 2, 2); };
    return random_free_diagram<ChainCat>(CC, I, rng, ro, 2);
}

}  // namespace

TEST_CASE("representable hom identity, FinSet, with cardinality oracle") {
    FinSetCat FS;
    Rng rng(11);
    for (const char* nm : {"terminal", "arrow", "parallel_pair", "span"}) {
        FiniteCategory I = shape(nm);
        FunctorCat<FinSetCat> D(FS, I);
        for (int rep = 0; rep < 3; ++rep) {
            auto M = random_fs_diagram(FS, I, rng);
            for (int i = 0; i < I.n_objects; ++i) {
                auto r = representable_hom_check(FS, I, M, i);
                CHECK_MESSAGE(r.ok, nm, " i=", i, ": ", r.detail);
                // independent count: maps out of h_i are the points of M_i
                auto hi = yoneda_lower(FS, I, i);
                CHECK(static_cast<int>(D.hom_list(hi, M).size()) == M.obj[i].size);
            }
        }
    }
}

TEST_CASE("representable hom identity, chain complexes") {
    ChainCat CC(3);
    Rng rng(12);
    for (const char* nm : {"terminal", "arrow", "span"}) {
        FiniteCategory I = shape(nm);
        for (int rep = 0; rep < 3; ++rep) {
            auto M = random_ch_diagram(CC, I, rng);
            for (int i = 0; i < I.n_objects; ++i) {
                auto r = representable_hom_check(CC, I, M, i);
                CHECK_MESSAGE(r.ok, nm, " i=", i, ": ", r.detail);
            }
        }
    }
}

TEST_CASE("Yoneda evaluation, self module over FinSet, arbitrary diagrams") {
    FinSetCat FS;
    SelfModule<FinSetCat> SM(FS);
    FiniteCategory I = shape("arrow");
    // all diagrams on the arrow with |X_0| = 2, |X_1| = 2
    FinSetObj a{2}, b{2};
    for (const auto& f : FS.hom_list(a, b)) {
        auto X = make_diagram<FinSetCat>(
            FS, I, [&](int j) { return j == 0 ? a : b; }, [&](int) { return f; });
        for (int i = 0; i < I.n_objects; ++i) {
            auto w = yoneda_eval_check(SM, I, X, i);
            CHECK_MESSAGE(w.ok, "i=", i, ": ", w.detail);
        }
    }
}

TEST_CASE("Yoneda evaluation, self module, random diagrams, both bases") {
    FinSetCat FS;
    ChainCat CC(2);
    SelfModule<FinSetCat> SF(FS);
    SelfModule<ChainCat> SC(CC);
    Rng rng(13);
    for (const char* nm : {"terminal", "arrow", "span", "parallel_pair"}) {
        FiniteCategory I = shape(nm);
        auto X = random_fs_diagram(FS, I, rng);
        auto Y = random_ch_diagram(CC, I, rng);
        for (int i = 0; i < I.n_objects; ++i) {
            auto w1 = yoneda_eval_check(SF, I, X, i);
            CHECK_MESSAGE(w1.ok, nm, " finset i=", i, ": ", w1.detail);
            auto w2 = yoneda_eval_check(SC, I, Y, i);
            CHECK_MESSAGE(w2.ok, nm, " chain i=", i, ": ", w2.detail);
        }
    }
}

TEST_CASE("Yoneda evaluation, pointwise module on a diagram category") {
    FinSetCat FS;
    FiniteCategory J = shape("arrow"), I = shape("arrow");
    PointwiseModule<SelfModule<FinSetCat>> PW(SelfModule<FinSetCat>(FS), J);
    FunctorCat<FinSetCat> CJ(FS, J);
    Rng rng(14);
    std::function<Diagram<FinSetCat>(Rng&)> ro = [&](Rng& r) {
        return random_fs_diagram(FS, J, r);
    };
    auto X = random_free_diagram<FunctorCat<FinSetCat>>(CJ, I, rng, ro, 1);
    for (int i = 0; i < I.n_objects; ++i) {
        auto w = yoneda_eval_check(PW, I, X, i);
        CHECK_MESSAGE(w.ok, "i=", i, ": ", w.detail);
    }
}

TEST_CASE("coreduction and reduction, FinSet") {
    FinSetCat FS;
    SelfModule<FinSetCat> SM(FS);
    Rng rng(15);
    for (const char* nm : {"terminal", "arrow", "span"}) {
        FiniteCategory I = shape(nm);
        for (int rep = 0; rep < 2; ++rep) {
            auto M = random_fs_diagram(FS, I, rng);
            auto cw = coreduction_check(SM, I, M);
            CHECK_MESSAGE(cw.ok, nm, " coreduction: ", cw.detail);
            auto rw = reduction_check(SM, I, M);
            CHECK_MESSAGE(rw.ok, nm, " reduction: ", rw.detail);
        }
    }
    // a non-free diagram as well
    FiniteCategory I = shape("arrow");
    FinSetObj a{3}, b{2};
    auto f = FinSetMor{3, 2, {0, 0, 1}};
    auto X = make_diagram<FinSetCat>(
        FS, I, [&](int j) { return j == 0 ? a : b; }, [&](int) { return f; });
    CHECK(coreduction_check(SM, I, X).ok);
    CHECK(reduction_check(SM, I, X).ok);
}

TEST_CASE("coreduction and reduction, chain complexes") {
    ChainCat CC(3);
    SelfModule<ChainCat> SM(CC);
    Rng rng(16);
    for (const char* nm : {"terminal", "arrow", "span"}) {
        FiniteCategory I = shape(nm);
        auto M = random_ch_diagram(CC, I, rng);
        auto cw = coreduction_check(SM, I, M);
        CHECK_MESSAGE(cw.ok, nm, " coreduction: ", cw.detail);
        auto rw = reduction_check(SM, I, M);
        CHECK_MESSAGE(rw.ok, nm, " reduction: ", rw.detail);
    }
}

TEST_CASE("two-variable adjunction tensor/hom_r/hom_l") {
    FinSetCat FS;
    ChainCat CC(2);
    SelfModule<FinSetCat> SF(FS);
    SelfModule<ChainCat> SC(CC);
    Rng rng(17);
    for (const char* nm : {"terminal", "arrow", "span"}) {
        FiniteCategory I = shape(nm);
        auto M = random_fs_diagram(FS, I, rng);
        auto X = random_fs_diagram(FS, I, rng);
        FinSetObj c{1 + rng.below(2)};
        auto w = verify_l3(SF, I, M, c, X);
        CHECK_MESSAGE(w.ok, nm, " finset: ", w.detail);

        auto Mc = random_ch_diagram(CC, I, rng);
        auto Xc = random_ch_diagram(CC, I, rng);
        auto cc = random_complex(rng, CC.p, 2, 2);
        auto wc = verify_l3(SC, I, Mc, cc, Xc);
        CHECK_MESSAGE(wc.ok, nm, " chain: ", wc.detail);
    }
}

TEST_CASE("hom_l over the terminal index is plain power") {
    FinSetCat FS;
    SelfModule<FinSetCat> SM(FS);
    FiniteCategory I = shape("terminal");
    Rng rng(18);
    auto M = random_fs_diagram(FS, I, rng);
    auto X = random_fs_diagram(FS, I, rng);
    auto hl = hom_l(SM, I, M, X);
    CHECK(FS.is_iso(hl.wedge[0]));
    CHECK(FS.eq_obj(FS.tgt(hl.wedge[0]), FS.pow_obj(X.obj[0], M.obj[0])));
}

TEST_CASE("pointwise closed-module adjunction on diagram categories") {
    FinSetCat FS;
    ChainCat CC(2);
    Rng rng(19);
    for (const char* nm : {"arrow", "span"}) {
        FiniteCategory I = shape(nm);
        PointwiseModule<SelfModule<FinSetCat>> PF(SelfModule<FinSetCat>(FS), I);
        auto X = random_fs_diagram(FS, I, rng);
        auto Y = random_fs_diagram(FS, I, rng);
        FinSetObj m{1 + rng.below(2)};
        auto r = verify_pointwise_adjunction(PF, m, X, Y);
        CHECK_MESSAGE(r.ok, nm, " finset: ", r.detail);

        PointwiseModule<SelfModule<ChainCat>> PC(SelfModule<ChainCat>(CC), I);
        auto Xc = random_ch_diagram(CC, I, rng);
        auto Yc = random_ch_diagram(CC, I, rng);
        auto mc = random_complex(rng, CC.p, 2, 2);
        auto rc = verify_pointwise_adjunction(PC, mc, Xc, Yc);
        CHECK_MESSAGE(rc.ok, nm, " chain: ", rc.detail);
    }
}

TEST_CASE("pointwise adjunction with a nested inner module") {
    FinSetCat FS;
    FiniteCategory J = shape("arrow"), I = shape("arrow");
    using Inner = PointwiseModule<SelfModule<FinSetCat>>;
    Inner inner(SelfModule<FinSetCat>(FS), J);
    PointwiseModule<Inner> PW(inner, I);
    FunctorCat<FinSetCat> CJ(FS, J);
    Rng rng(20);
    std::function<FinSetObj(Rng&)> one = [](Rng&) { return FinSetObj{1}; };
    std::function<Diagram<FinSetCat>(Rng&)> ro = [&](Rng& r) {
        return random_free_diagram<FinSetCat>(FS, J, r, one, 1);
    };
    auto X = random_free_diagram<FunctorCat<FinSetCat>>(CJ, I, rng, ro, 1);
    auto Y = random_free_diagram<FunctorCat<FinSetCat>>(CJ, I, rng, ro, 1);
    FinSetObj m{2};
    auto r = verify_pointwise_adjunction(PW, m, X, Y);
    CHECK_MESSAGE(r.ok, r.detail);
}

TEST_CASE("adjunction naturality in both variables, sampled") {
    FinSetCat FS;
    FiniteCategory I = shape("arrow");
    PointwiseModule<SelfModule<FinSetCat>> PW(SelfModule<FinSetCat>(FS), I);
    const auto& DC = PW.cat;
    Rng rng(21);
    auto X = random_fs_diagram(FS, I, rng);
    auto X2 = X;  // endomorphism sample: guaranteed nonempty hom set
    auto Y = random_fs_diagram(FS, I, rng);
    FinSetObj m{2}, m2{1};
    auto phi = random_nat<FinSetCat>(DC, X2, X, rng);
    auto psi = random_finset_map(rng, m2.size, m.size);
    for (const auto& eta : DC.hom_list(PW.act(m, X), Y)) {
        // in the diagram variable
        auto lhs = PW.t1(DC.compose(eta, PW.act_mor(FS.id(m), phi)), m, X2, Y);
        auto rhs = DC.compose(PW.t1(eta, m, X, Y), phi);
        CHECK(DC.eq(lhs, rhs));
        // in the base variable, through both right adjoints
        auto eta2 = DC.compose(eta, PW.act_mor(psi, DC.id(X)));
        CHECK(DC.eq(PW.t1(eta2, m2, X, Y),
                    DC.compose(PW.pow_mor(psi, DC.id(Y)), PW.t1(eta, m, X, Y))));
        CHECK(FS.eq(PW.t2(eta2, m2, X, Y), FS.compose(PW.t2(eta, m, X, Y), psi)));
    }
}

TEST_CASE("diagram-level action with Hom and Map right adjoints") {
    FinSetCat FS;
    ChainCat CC(2);
    SelfModule<FinSetCat> SF(FS);
    SelfModule<ChainCat> SC(CC);
    Rng rng(22);
    for (const char* nm : {"terminal", "arrow"}) {
        FiniteCategory I = shape(nm);
        auto M = random_fs_diagram(FS, I, rng);
        auto X = random_fs_diagram(FS, I, rng);
        auto Y = random_fs_diagram(FS, I, rng);
        auto r = verify_p2(SF, I, M, X, Y);
        CHECK_MESSAGE(r.ok, nm, " finset: ", r.detail);

        auto Mc = random_ch_diagram(CC, I, rng);
        auto Xc = random_ch_diagram(CC, I, rng);
        auto Yc = random_ch_diagram(CC, I, rng);
        auto rc = verify_p2(SC, I, Mc, Xc, Yc);
        CHECK_MESSAGE(rc.ok, nm, " chain: ", rc.detail);
    }
}

TEST_CASE("diagram-level action on the span shape, FinSet") {
    FinSetCat FS;
    SelfModule<FinSetCat> SF(FS);
    Rng rng(23);
    FiniteCategory I = shape("span");
    auto M = random_fs_diagram(FS, I, rng);
    auto X = random_fs_diagram(FS, I, rng);
    auto Y = random_fs_diagram(FS, I, rng);
    auto r = verify_p2(SF, I, M, X, Y);
    CHECK_MESSAGE(r.ok, r.detail);
}
