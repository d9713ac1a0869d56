#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rcat/chain.hpp"
#include "rcat/diagram.hpp"
#include "rcat/finset.hpp"
#include "rcat/sampler.hpp"
#include "rcat/yoneda.hpp"

using namespace rcat;

static const FinSetCat FS;

static Diagram<FinSetCat> random_fs_diagram(const FiniteCategory& I, Rng& rng, int max_size = 3) {
    return random_free_diagram<FinSetCat>(
        FS, I, rng, [&](Rng& r) { return FinSetObj{1 + r.below(max_size)}; });
}

TEST_CASE("representable diagrams are functorial over every builtin shape") {
    for (const auto& name : builtin_names()) {
        FiniteCategory I = builtin_reedy(name).base;
        for (int i = 0; i < I.n_objects; ++i) {
            CHECK(validate_diagram(FS, yoneda_lower(FS, I, i)).ok());
            CHECK(validate_diagram(FS, yoneda_upper(FS, I, i)).ok());
        }
        ChainCat CC(3);
        for (int i = 0; i < I.n_objects; ++i) {
            auto h = yoneda_lower(CC, I, i);
            CHECK(validate_diagram(CC, h).ok());
            for (const auto& m : h.mor) CHECK(validate_chain_map(m).ok());
        }
    }
}

TEST_CASE("free and cofree diagrams are functorial") {
    Rng rng(30);
    for (const auto& name : builtin_names()) {
        FiniteCategory I = builtin_reedy(name).base;
        for (int t = 0; t < 3; ++t) {
            CHECK(validate_diagram(FS, random_fs_diagram(I, rng)).ok());
            std::vector<std::pair<int, FinSetObj>> cells{{rng.below(I.n_objects), {2}}};
            CHECK(validate_diagram(FS, cofree_diagram(FS, I, cells)).ok());
            ChainCat CC(2);
            std::vector<std::pair<int, ChainComplex>> ccells{
                {rng.below(I.n_objects), random_complex(rng, 2, 2, 2)}};
            CHECK(validate_diagram(CC, free_diagram(CC, I, ccells)).ok());
            CHECK(validate_diagram(CC, cofree_diagram(CC, I, ccells)).ok());
        }
    }
}

TEST_CASE("limit over cospan shape is the pullback, counted by brute force") {
    FiniteCategory I = builtin_reedy("cospan").base;  // 1 → 0 ← 2
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        auto D = random_fs_diagram(I, rng);
        auto lim = finite_limit(FS, D);
        CHECK(validate_diagram(FS, D).ok());
        // brute force: triples (x0, x1, x2) with D(f)(x1) = x0 = D(g)(x2)
        int count = 0;
        auto harr = I.hom(1, 0), garr = I.hom(2, 0);
        REQUIRE(harr.size() == 1);
        REQUIRE(garr.size() == 1);
        const auto& f = D.mor[harr[0]];
        const auto& g = D.mor[garr[0]];
        for (int x1 = 0; x1 < D.obj[1].size; ++x1)
            for (int x2 = 0; x2 < D.obj[2].size; ++x2)
                if (f.table[x1] == g.table[x2]) ++count;
        CHECK(lim.obj.size == count);
        // legs form a commuting cone
        CHECK(FS.compose(f, lim.legs[1]) == lim.legs[0]);
        CHECK(FS.compose(g, lim.legs[2]) == lim.legs[0]);
    }
}

TEST_CASE("colimit over span shape is the pushout, counted by brute force") {
    FiniteCategory I = builtin_reedy("span").base;  // 1 ← 0 → 2
    Rng rng(32);
    for (int t = 0; t < 20; ++t) {
        auto D = random_fs_diagram(I, rng);
        auto col = finite_colimit(FS, D);
        const auto& f = D.mor[I.hom(0, 1)[0]];
        const auto& g = D.mor[I.hom(0, 2)[0]];
        // brute-force quotient of D1 ⊔ D2 by f(x) ~ g(x)
        int n1 = D.obj[1].size, n2 = D.obj[2].size;
        std::vector<int> parent(n1 + n2);
        for (int i = 0; i < n1 + n2; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int x = 0; x < D.obj[0].size; ++x) {
            int a = find(f.table[x]), b = find(n1 + g.table[x]);
            if (a != b) parent[a] = b;
        }
        std::set<int> classes;
        for (int i = 0; i < n1 + n2; ++i) classes.insert(find(i));
        CHECK(col.obj.size == static_cast<int>(classes.size()));
        CHECK(FS.compose(col.legs[1], f) == FS.compose(col.legs[2], g));
    }
}

TEST_CASE("limit and colimit universal properties over every builtin shape") {
    Rng rng(33);
    for (const auto& name : builtin_names()) {
        FiniteCategory I = builtin_reedy(name).base;
        auto D = random_fs_diagram(I, rng, 2);
        auto lim = finite_limit(FS, D);
        for (int a = 0; a < I.n_arrows(); ++a)
            CHECK(FS.compose(D.mor[a], lim.legs[I.arrow_src[a]]) == lim.legs[I.arrow_tgt[a]]);
        // a cone from the limit itself factors through as the identity
        auto m = factor_limit(FS, lim, lim.obj, lim.legs);
        CHECK(m == FS.id(lim.obj));

        auto col = finite_colimit(FS, D);
        for (int a = 0; a < I.n_arrows(); ++a)
            CHECK(FS.compose(col.legs[I.arrow_tgt[a]], D.mor[a]) == col.legs[I.arrow_src[a]]);
        auto m2 = factor_colimit(FS, col, col.obj, col.legs);
        CHECK(m2 == FS.id(col.obj));
    }
}

TEST_CASE("chain limits/colimits agree with pointwise dimension counts") {
    Rng rng(34);
    ChainCat CC(3);
    FiniteCategory I = builtin_reedy("parallel_pair").base;
    for (int t = 0; t < 10; ++t) {
        auto D = random_free_diagram<ChainCat>(CC, I, rng,
                                               [&](Rng& r) { return random_complex(r, 3, 2, 2); });
        auto lim = finite_limit(CC, D);
        auto col = finite_colimit(CC, D);
        CHECK(validate_complex(lim.obj).ok());
        CHECK(validate_complex(col.obj).ok());
        for (int a = 0; a < I.n_arrows(); ++a) {
            CHECK(CC.eq(CC.compose(D.mor[a], lim.legs[I.arrow_src[a]]), lim.legs[I.arrow_tgt[a]]));
            CHECK(CC.eq(CC.compose(col.legs[I.arrow_tgt[a]], D.mor[a]), col.legs[I.arrow_src[a]]));
        }
        CHECK(CC.eq(factor_limit(CC, lim, lim.obj, lim.legs), CC.id(lim.obj)));
        CHECK(CC.eq(factor_colimit(CC, col, col.obj, col.legs), CC.id(col.obj)));
    }
}

TEST_CASE("functor category: hom enumeration matches a direct commuting-square count") {
    FiniteCategory I = builtin_reedy("arrow").base;
    FunctorCat<FinSetCat> D(FS, I);
    Rng rng(35);
    for (int t = 0; t < 15; ++t) {
        auto X = random_fs_diagram(I, rng, 2);
        auto Y = random_fs_diagram(I, rng, 2);
        auto homs = D.hom_list(X, Y);
        int arrow = I.hom(0, 1)[0];
        int count = 0;
        for (const auto& c0 : FS.hom_list(X.obj[0], Y.obj[0]))
            for (const auto& c1 : FS.hom_list(X.obj[1], Y.obj[1]))
                if (FS.compose(Y.mor[arrow], c0) == FS.compose(c1, X.mor[arrow])) ++count;
        CHECK(static_cast<int>(homs.size()) == count);
        for (const auto& n : homs) CHECK(validate_nat(FS, n).ok());
    }
}

TEST_CASE("linear functor category: hom basis matches exhaustive enumeration for p=2") {
    FiniteCategory I = builtin_reedy("arrow").base;
    ChainCat CC(2);
    FunctorCat<ChainCat> D(CC, I);
    Rng rng(36);
    for (int t = 0; t < 8; ++t) {
        auto X = random_free_diagram<ChainCat>(CC, I, rng,
                                               [&](Rng& r) { return random_complex(r, 2, 2, 2); });
        auto Y = random_free_diagram<ChainCat>(CC, I, rng,
                                               [&](Rng& r) { return random_complex(r, 2, 2, 2); });
        auto basis = D.hom_list(X, Y);
        for (const auto& n : basis) CHECK(validate_nat(CC, n).ok());
        // independent count: enumerate all pairs from the pointwise bases
        auto b0 = CC.hom_list(X.obj[0], Y.obj[0]);
        auto b1 = CC.hom_list(X.obj[1], Y.obj[1]);
        if (b0.size() + b1.size() > 14) continue;
        int arrow = I.hom(0, 1)[0];
        long long count = 0;
        int total = static_cast<int>(b0.size() + b1.size());
        for (long long mask = 0; mask < (1LL << total); ++mask) {
            auto c0 = CC.zero_mor(X.obj[0], Y.obj[0]);
            auto c1 = CC.zero_mor(X.obj[1], Y.obj[1]);
            for (std::size_t k = 0; k < b0.size(); ++k)
                if (mask >> k & 1) c0 = CC.add(c0, b0[k]);
            for (std::size_t k = 0; k < b1.size(); ++k)
                if (mask >> (b0.size() + k) & 1) c1 = CC.add(c1, b1[k]);
            if (CC.eq(CC.compose(Y.mor[arrow], c0), CC.compose(c1, X.mor[arrow]))) ++count;
        }
        CHECK((1LL << basis.size()) == count);
    }
}

TEST_CASE("ends and coends of the projection bifunctor are limit and colimit") {
    Rng rng(37);
    for (const auto& name : {"arrow", "parallel_pair", "composable_pair", "span"}) {
        FiniteCategory I = builtin_reedy(name).base;
        FiniteCategory sq = product_category(opposite(I), I);
        auto D = random_fs_diagram(I, rng, 2);
        int n = I.n_objects, na = I.n_arrows();
        auto T = make_diagram<FinSetCat>(
            FS, sq, [&](int ij) { return D.obj[ij % n]; },
            [&](int ab) { return D.mor[ab % na]; });
        REQUIRE(validate_diagram(FS, T).ok());
        auto e = end_of(FS, I, T);
        auto lim = finite_limit(FS, D);
        CHECK(e.obj.size == lim.obj.size);
        auto c = coend_of(FS, I, T);
        auto col = finite_colimit(FS, D);
        CHECK(c.obj.size == col.obj.size);
        // wedge compatibility: T(id,f)∘ω_i = T(f,id)∘ω_j for every arrow f
        for (int f = 0; f < na; ++f) {
            if (I.is_identity(f)) continue;
            int i = I.arrow_src[f], j = I.arrow_tgt[f];
            CHECK(FS.compose(T.mor[I.identity[i] * na + f], e.wedge[i]) ==
                  FS.compose(T.mor[f * na + I.identity[j]], e.wedge[j]));
            CHECK(FS.compose(c.cowedge[i], T.mor[f * na + I.identity[i]]) ==
                  FS.compose(c.cowedge[j], T.mor[I.identity[j] * na + f]));
        }
    }
}

TEST_CASE("pushout and pullback universal properties in both bases") {
    Rng rng(38);
    for (int t = 0; t < 20; ++t) {
        // FinSet
        int a = 1 + rng.below(3), b = 1 + rng.below(3), c = 1 + rng.below(3);
        auto f = random_finset_map(rng, a, b);
        auto g = random_finset_map(rng, a, c);
        auto po = pushout(FS, f, g);
        CHECK(FS.compose(po.leg_b, f) == FS.compose(po.leg_c, g));
        CHECK(factor_pushout(FS, po, po.obj, po.leg_b, po.leg_c) == FS.id(po.obj));
        auto f2 = random_finset_map(rng, b, a);
        auto g2 = random_finset_map(rng, c, a);
        auto pb = pullback(FS, f2, g2);
        CHECK(FS.compose(f2, pb.leg_b) == FS.compose(g2, pb.leg_c));
        CHECK(factor_pullback(FS, pb, pb.obj, pb.leg_b, pb.leg_c) == FS.id(pb.obj));

        // chains
        ChainCat CC(t % 2 == 0 ? 2 : 5);
        auto A = random_complex(rng, CC.p, 2, 2), B = random_complex(rng, CC.p, 2, 2),
             Cc = random_complex(rng, CC.p, 2, 2);
        auto cf = random_chain_map(CC, A, B, rng);
        auto cg = random_chain_map(CC, A, Cc, rng);
        auto cpo = pushout(CC, cf, cg);
        CHECK(CC.eq(CC.compose(cpo.leg_b, cf), CC.compose(cpo.leg_c, cg)));
        CHECK(CC.eq(factor_pushout(CC, cpo, cpo.obj, cpo.leg_b, cpo.leg_c), CC.id(cpo.obj)));
        auto ch = random_chain_map(CC, B, A, rng);
        auto ck = random_chain_map(CC, Cc, A, rng);
        auto cpb = pullback(CC, ch, ck);
        CHECK(CC.eq(CC.compose(ch, cpb.leg_b), CC.compose(ck, cpb.leg_c)));
        CHECK(CC.eq(factor_pullback(CC, cpb, cpb.obj, cpb.leg_b, cpb.leg_c), CC.id(cpb.obj)));
    }
}

TEST_CASE("nested functor categories satisfy the same interface") {
    FiniteCategory J = builtin_reedy("arrow").base;
    FiniteCategory I = builtin_reedy("parallel_pair").base;
    ChainCat CC(2);
    FunctorCat<ChainCat> CJ(CC, J);
    FunctorCat<FunctorCat<ChainCat>> CJI(CJ, I);
    Rng rng(39);
    auto rand_inner = [&](Rng& r) {
        return random_free_diagram<ChainCat>(CC, J, r,
                                             [&](Rng& rr) { return random_complex(rr, 2, 2, 1); });
    };
    auto X = random_free_diagram<FunctorCat<ChainCat>>(CJ, I, rng, rand_inner, 1);
    auto Y = random_free_diagram<FunctorCat<ChainCat>>(CJ, I, rng, rand_inner, 1);
    CHECK(validate_diagram(CJ, X).ok());
    CHECK(validate_diagram(CJ, Y).ok());
    auto basis = CJI.hom_list(X, Y);
    for (const auto& n : basis) CHECK(validate_nat(CJ, n).ok());
    auto pr = CJI.product({X, Y});
    CHECK(validate_diagram(CJ, pr.obj).ok());
    auto m = CJI.tuple(pr, pr.obj, pr.legs);
    CHECK(CJI.eq(m, CJI.id(pr.obj)));
}
