#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "rcat/enrichment.hpp"
#include "rcat/module.hpp"

namespace rcat {

// ---------------------------------------------------------------------------
// Boundary comma categories, materialized as FiniteCategory values and fed to
// the generic (co)limit engine.

struct CommaData {
    FiniteCategory cat;
    std::vector<int> objs;       // underlying arrow index of I per comma object
    std::vector<int> arr_under;  // underlying arrow index of I per comma arrow
};

/// ∂(I⁺↓i): objects are non-identity degree-raising arrows f: j → i; a
/// morphism f → f' is g in I⁺ ∪ {identities} with f'∘g = f.
inline CommaData latching_category(const ReedyStructure& R, int i) {
    CommaData cd;
    const FiniteCategory& I = R.base;
    for (int f : R.plus_arrows)
        if (I.arrow_tgt[f] == i) cd.objs.push_back(f);
    int n = static_cast<int>(cd.objs.size());
    cd.cat.n_objects = n;
    std::vector<std::array<int, 3>> arrows;  // (src obj, tgt obj, g)
    cd.cat.identity.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int f = cd.objs[a], f2 = cd.objs[b];
            for (int g = 0; g < I.n_arrows(); ++g) {
                if (!I.is_identity(g) && !R.in_plus(g)) continue;
                if (I.arrow_src[g] != I.arrow_src[f] || I.arrow_tgt[g] != I.arrow_src[f2])
                    continue;
                if (I.compose(f2, g) != f) continue;
                if (a == b && I.is_identity(g))
                    cd.cat.identity[a] = static_cast<int>(arrows.size());
                arrows.push_back({a, b, g});
            }
        }
    for (const auto& t : arrows) {
        cd.cat.arrow_src.push_back(t[0]);
        cd.cat.arrow_tgt.push_back(t[1]);
        cd.arr_under.push_back(t[2]);
    }
    int na = cd.cat.n_arrows();
    cd.cat.comp.assign(na, std::vector<int>(na, -1));
    for (int h = 0; h < na; ++h)
        for (int k = 0; k < na; ++k) {
            if (cd.cat.arrow_tgt[k] != cd.cat.arrow_src[h]) continue;
            int g = I.compose(cd.arr_under[h], cd.arr_under[k]);
            for (int m = 0; m < na; ++m)
                if (cd.cat.arrow_src[m] == cd.cat.arrow_src[k] &&
                    cd.cat.arrow_tgt[m] == cd.cat.arrow_tgt[h] && cd.arr_under[m] == g)
                    cd.cat.comp[h][k] = m;
        }
    return cd;
}

/// ∂(i↓I⁻): objects are non-identity degree-lowering arrows f: i → j; a
/// morphism f → f' is g in I⁻ ∪ {identities} with g∘f = f'.
inline CommaData matching_category(const ReedyStructure& R, int i) {
    CommaData cd;
    const FiniteCategory& I = R.base;
    for (int f : R.minus_arrows)
        if (I.arrow_src[f] == i) cd.objs.push_back(f);
    int n = static_cast<int>(cd.objs.size());
    cd.cat.n_objects = n;
    std::vector<std::array<int, 3>> arrows;
    cd.cat.identity.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int f = cd.objs[a], f2 = cd.objs[b];
            for (int g = 0; g < I.n_arrows(); ++g) {
                if (!I.is_identity(g) && !R.in_minus(g)) continue;
                if (I.arrow_src[g] != I.arrow_tgt[f] || I.arrow_tgt[g] != I.arrow_tgt[f2])
                    continue;
                if (I.compose(g, f) != f2) continue;
                if (a == b && I.is_identity(g))
                    cd.cat.identity[a] = static_cast<int>(arrows.size());
                arrows.push_back({a, b, g});
            }
        }
    for (const auto& t : arrows) {
        cd.cat.arrow_src.push_back(t[0]);
        cd.cat.arrow_tgt.push_back(t[1]);
        cd.arr_under.push_back(t[2]);
    }
    int na = cd.cat.n_arrows();
    cd.cat.comp.assign(na, std::vector<int>(na, -1));
    for (int h = 0; h < na; ++h)
        for (int k = 0; k < na; ++k) {
            if (cd.cat.arrow_tgt[k] != cd.cat.arrow_src[h]) continue;
            int g = I.compose(cd.arr_under[h], cd.arr_under[k]);
            for (int m = 0; m < na; ++m)
                if (cd.cat.arrow_src[m] == cd.cat.arrow_src[k] &&
                    cd.cat.arrow_tgt[m] == cd.cat.arrow_tgt[h] && cd.arr_under[m] == g)
                    cd.cat.comp[h][k] = m;
        }
    return cd;
}

// ---------------------------------------------------------------------------
// Latching/matching objects. The accessor-based versions only touch the
// entries of X actually appearing in the comma diagram, which is what the
// inductive factorization needs while the middle diagram is still partial.

template <class C>
struct LatchingData {
    int i = 0;
    typename C::Obj obj;
    typename C::Mor to_x;  // L_iX → X_i
    CommaData index;
    ColimitData<C> col;
};

template <class C>
struct MatchingData {
    int i = 0;
    typename C::Obj obj;
    typename C::Mor from_x;  // X_i → M_iX
    CommaData index;
    LimitData<C> lim;
};

/// Latching object only (no canonical map): safe on partially-built diagrams
/// because it touches just the strictly lower part.
template <class C>
LatchingData<C> latching_core(const C& cat, const ReedyStructure& R, int i,
                              const std::vector<typename C::Obj>& obj,
                              const std::vector<typename C::Mor>& mor) {
    LatchingData<C> L;
    L.i = i;
    L.index = latching_category(R, i);
    const FiniteCategory& I = R.base;
    Diagram<C> d;
    d.shape = L.index.cat;
    for (int f : L.index.objs) d.obj.push_back(obj[I.arrow_src[f]]);
    for (int a = 0; a < L.index.cat.n_arrows(); ++a) {
        int g = L.index.arr_under[a];
        if (I.is_identity(g))
            d.mor.push_back(cat.id(d.obj[L.index.cat.arrow_src[a]]));
        else
            d.mor.push_back(mor[g]);
    }
    L.col = finite_colimit(cat, d);
    L.obj = L.col.obj;
    return L;
}

template <class C>
LatchingData<C> latching(const C& cat, const ReedyStructure& R, const Diagram<C>& X, int i) {
    auto L = latching_core(cat, R, i, X.obj, X.mor);
    std::vector<typename C::Mor> cocone;
    for (int f : L.index.objs) cocone.push_back(X.mor[f]);
    L.to_x = factor_colimit(cat, L.col, X.obj[i], cocone);
    return L;
}

template <class C>
MatchingData<C> matching_core(const C& cat, const ReedyStructure& R, int i,
                              const std::vector<typename C::Obj>& obj,
                              const std::vector<typename C::Mor>& mor) {
    MatchingData<C> M;
    M.i = i;
    M.index = matching_category(R, i);
    const FiniteCategory& I = R.base;
    Diagram<C> d;
    d.shape = M.index.cat;
    for (int f : M.index.objs) d.obj.push_back(obj[I.arrow_tgt[f]]);
    for (int a = 0; a < M.index.cat.n_arrows(); ++a) {
        int g = M.index.arr_under[a];
        if (I.is_identity(g))
            d.mor.push_back(cat.id(d.obj[M.index.cat.arrow_src[a]]));
        else
            d.mor.push_back(mor[g]);
    }
    M.lim = finite_limit(cat, d);
    M.obj = M.lim.obj;
    return M;
}

template <class C>
MatchingData<C> matching(const C& cat, const ReedyStructure& R, const Diagram<C>& X, int i) {
    auto M = matching_core(cat, R, i, X.obj, X.mor);
    std::vector<typename C::Mor> cone;
    for (int f : M.index.objs) cone.push_back(X.mor[f]);
    M.from_x = factor_limit(cat, M.lim, X.obj[i], cone);
    return M;
}

/// Induced map L_iX → L_iY for a transformation with components comp[].
template <class C>
typename C::Mor latching_induced(const C& cat, const ReedyStructure& R,
                                 const LatchingData<C>& LX, const LatchingData<C>& LY,
                                 const std::vector<typename C::Mor>& comp) {
    std::vector<typename C::Mor> cocone;
    for (std::size_t k = 0; k < LX.index.objs.size(); ++k) {
        int j = R.base.arrow_src[LX.index.objs[k]];
        cocone.push_back(cat.compose(LY.col.legs[k], comp[j]));
    }
    return factor_colimit(cat, LX.col, LY.obj, cocone);
}

/// Induced map M_iX → M_iY.
template <class C>
typename C::Mor matching_induced(const C& cat, const ReedyStructure& R,
                                 const MatchingData<C>& MX, const MatchingData<C>& MY,
                                 const std::vector<typename C::Mor>& comp) {
    std::vector<typename C::Mor> cone;
    for (std::size_t k = 0; k < MX.index.objs.size(); ++k) {
        int j = R.base.arrow_tgt[MX.index.objs[k]];
        cone.push_back(cat.compose(comp[j], MX.lim.legs[k]));
    }
    return factor_limit(cat, MY.lim, MX.obj, cone);
}

// ---------------------------------------------------------------------------
// Reedy classification.

struct ReedyFlags {
    bool is_cofibration = false;
    bool is_fibration = false;
    bool is_weak_equivalence = false;
    bool is_trivial_cofibration = false;
    bool is_trivial_fibration = false;
    std::string detail;  // first failing site, when a flag is false
};

/// Relative latching map X_i ∐_{L_iX} L_iY → Y_i of a transformation g: X→Y.
template <class C>
typename C::Mor relative_latching_map(const C& cat, const ReedyStructure& R,
                                      const NatTrans<C>& g, int i) {
    auto LX = latching(cat, R, g.src, i);
    auto LY = latching(cat, R, g.tgt, i);
    auto li = latching_induced(cat, R, LX, LY, g.comp);
    auto po = pushout(cat, LX.to_x, li);
    return factor_pushout(cat, po, g.tgt.obj[i], g.comp[i], LY.to_x);
}

/// Relative matching map X_i → Y_i ×_{M_iY} M_iX.
template <class C>
typename C::Mor relative_matching_map(const C& cat, const ReedyStructure& R,
                                      const NatTrans<C>& g, int i) {
    auto MX = matching(cat, R, g.src, i);
    auto MY = matching(cat, R, g.tgt, i);
    auto mi = matching_induced(cat, R, MX, MY, g.comp);
    auto pb = pullback(cat, MY.from_x, mi);
    return factor_pullback(cat, pb, g.src.obj[i], g.comp[i], MX.from_x);
}

template <class C>
ReedyFlags classify_reedy(const C& cat, const ReedyStructure& R, const NatTrans<C>& g) {
    ReedyFlags out;
    out.is_cofibration = out.is_fibration = out.is_weak_equivalence = true;
    for (int i = 0; i < R.base.n_objects; ++i) {
        auto fl = cat.classify(relative_latching_map(cat, R, g, i));
        if (!fl.cofibration && out.is_cofibration) {
            out.is_cofibration = false;
            out.detail = "relative latching map not a cofibration at object " + std::to_string(i);
        }
        auto fm = cat.classify(relative_matching_map(cat, R, g, i));
        if (!fm.fibration && out.is_fibration) {
            out.is_fibration = false;
            out.detail = "relative matching map not a fibration at object " + std::to_string(i);
        }
        if (!cat.quasi_iso(g.comp[i]) && out.is_weak_equivalence) {
            out.is_weak_equivalence = false;
            out.detail = "component at object " + std::to_string(i) + " is not a quasi-iso";
        }
    }
    out.is_trivial_cofibration = out.is_cofibration && out.is_weak_equivalence;
    out.is_trivial_fibration = out.is_fibration && out.is_weak_equivalence;
    if (out.is_cofibration && out.is_fibration && out.is_weak_equivalence) out.detail.clear();
    return out;
}

// ---------------------------------------------------------------------------
// Restriction to the degree-raising subcategory.

struct PlusRestriction {
    ReedyStructure reedy;          // over the direct subcategory
    std::vector<int> kept_arrows;  // old arrow index per new arrow
};

inline PlusRestriction restrict_plus_shape(const ReedyStructure& R) {
    PlusRestriction out;
    const FiniteCategory& I = R.base;
    std::vector<int> old2new(I.n_arrows(), -1);
    for (int a = 0; a < I.n_arrows(); ++a)
        if (I.is_identity(a) || R.in_plus(a)) {
            old2new[a] = static_cast<int>(out.kept_arrows.size());
            out.kept_arrows.push_back(a);
        }
    FiniteCategory& P = out.reedy.base;
    P.n_objects = I.n_objects;
    for (int a : out.kept_arrows) {
        P.arrow_src.push_back(I.arrow_src[a]);
        P.arrow_tgt.push_back(I.arrow_tgt[a]);
    }
    P.identity.resize(I.n_objects);
    for (int i = 0; i < I.n_objects; ++i) P.identity[i] = old2new[I.identity[i]];
    int na = P.n_arrows();
    P.comp.assign(na, std::vector<int>(na, -1));
    for (int h = 0; h < na; ++h)
        for (int k = 0; k < na; ++k)
            if (P.arrow_tgt[k] == P.arrow_src[h])
                P.comp[h][k] = old2new[I.compose(out.kept_arrows[h], out.kept_arrows[k])];
    out.reedy.degree = R.degree;
    for (int a : out.kept_arrows)
        if (!I.is_identity(a)) out.reedy.plus_arrows.push_back(old2new[a]);
    return out;
}

template <class C>
Diagram<C> restrict_plus(const C&, const PlusRestriction& pr, const Diagram<C>& X) {
    Diagram<C> out;
    out.shape = pr.reedy.base;
    out.obj = X.obj;
    for (int a : pr.kept_arrows) out.mor.push_back(X.mor[a]);
    return out;
}

template <class C>
NatTrans<C> restrict_plus(const C& cat, const PlusRestriction& pr, const NatTrans<C>& g) {
    NatTrans<C> out;
    out.src = restrict_plus(cat, pr, g.src);
    out.tgt = restrict_plus(cat, pr, g.tgt);
    out.comp = g.comp;
    return out;
}

// ---------------------------------------------------------------------------
// Inductive Reedy factorization.

template <class C>
std::pair<NatTrans<C>, NatTrans<C>> reedy_factorize(const C& cat, const ReedyStructure& R,
                                                    const NatTrans<C>& g, FactKind kind) {
    const FiniteCategory& I = R.base;
    const Diagram<C>& X = g.src;
    const Diagram<C>& Y = g.tgt;
    int n = I.n_objects, na = I.n_arrows();

    std::vector<typename C::Obj> Z(n);
    std::vector<typename C::Mor> Zmor(na);
    std::vector<char> obj_done(n, 0), mor_done(na, 0);
    std::vector<typename C::Mor> ucomp(n), vcomp(n);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return R.degree[a] < R.degree[b]; });

    for (int i : order) {
        auto LX = latching(cat, R, X, i);
        auto LZ = latching_core(cat, R, i, Z, Zmor);
        auto li = latching_induced(cat, R, LX, LZ, ucomp);
        auto po = pushout(cat, LX.to_x, li);

        auto MZ = matching_core(cat, R, i, Z, Zmor);
        auto MY = matching(cat, R, Y, i);
        auto mi = matching_induced(cat, R, MZ, MY, vcomp);
        auto pb = pullback(cat, MY.from_x, mi);

        // corner map P = X_i ∐_{L_iX} L_iZ  →  Q = Y_i ×_{M_iY} M_iZ
        // leg into Y_i
        std::vector<typename C::Mor> y_cocone;
        for (int f : LZ.index.objs)
            y_cocone.push_back(cat.compose(Y.mor[f], vcomp[I.arrow_src[f]]));
        auto lz_to_y = factor_colimit(cat, LZ.col, Y.obj[i], y_cocone);
        auto p_to_y = factor_pushout(cat, po, Y.obj[i], g.comp[i], lz_to_y);
        // leg into M_iZ
        std::vector<typename C::Mor> x_cone;
        for (int f : MZ.index.objs)
            x_cone.push_back(cat.compose(ucomp[I.arrow_tgt[f]], X.mor[f]));
        auto x_to_mz = factor_limit(cat, MZ.lim, X.obj[i], x_cone);
        std::vector<typename C::Mor> lz_cone;
        for (std::size_t k = 0; k < MZ.index.objs.size(); ++k) {
            int f = MZ.index.objs[k];
            int j = I.arrow_tgt[f];
            std::vector<typename C::Mor> cc;
            for (int fp : LZ.index.objs) cc.push_back(Zmor[I.compose(f, fp)]);
            lz_cone.push_back(factor_colimit(cat, LZ.col, Z[j], cc));
        }
        auto lz_to_mz = factor_limit(cat, MZ.lim, LZ.obj, lz_cone);
        auto p_to_mz = factor_pushout(cat, po, MZ.obj, x_to_mz, lz_to_mz);
        auto corner = factor_pullback(cat, pb, po.obj, p_to_y, p_to_mz);

        auto [first, second] = cat.factorize(corner, kind);
        Z[i] = cat.tgt(first);
        obj_done[i] = 1;
        ucomp[i] = cat.compose(first, po.leg_b);
        vcomp[i] = cat.compose(pb.leg_b, second);
        // structure maps: plus arrows into i
        for (std::size_t k = 0; k < LZ.index.objs.size(); ++k) {
            int f = LZ.index.objs[k];
            Zmor[f] = cat.compose(first, cat.compose(po.leg_c, LZ.col.legs[k]));
            mor_done[f] = 1;
        }
        // structure maps: minus arrows out of i
        for (std::size_t k = 0; k < MZ.index.objs.size(); ++k) {
            int f = MZ.index.objs[k];
            Zmor[f] = cat.compose(MZ.lim.legs[k], cat.compose(pb.leg_c, second));
            mor_done[f] = 1;
        }
        Zmor[I.identity[i]] = cat.id(Z[i]);
        mor_done[I.identity[i]] = 1;
        // backfill mixed arrows between processed objects
        for (int a = 0; a < na; ++a) {
            if (mor_done[a] || !obj_done[I.arrow_src[a]] || !obj_done[I.arrow_tgt[a]]) continue;
            auto fac = reedy_factorizations(R, a);
            if (fac.size() != 1) throw StructuralError("reedy_factorize: non-unique factorization");
            int fm = fac[0].minus_part, fp = fac[0].plus_part;
            if (!mor_done[fm] || !mor_done[fp]) continue;
            Zmor[a] = cat.compose(Zmor[fp], Zmor[fm]);
            mor_done[a] = 1;
        }
    }

    Diagram<C> Zd;
    Zd.shape = I;
    Zd.obj = Z;
    Zd.mor = Zmor;
    NatTrans<C> u{X, Zd, ucomp}, v{Zd, Y, vcomp};
    return {u, v};
}

// ---------------------------------------------------------------------------
// Pushout-product pairings.

enum class Pairing { PROP1, LEMMA7, THM1 };

/// f in the base, g in the diagram category, pointwise action (PROP1).
template <class C>
std::pair<NatTrans<C>, ReedyFlags> pushout_product_prop1(const C& cat, const ReedyStructure& R,
                                                         const typename C::Mor& f,
                                                         const NatTrans<C>& g) {
    FunctorCat<C> D(cat, R.base);
    auto a = cat.src(f), b = cat.tgt(f);
    auto t = [&](const typename C::Obj& m, const Diagram<C>& X) {
        return make_diagram<C>(
            cat, R.base, [&](int i) { return cat.tensor_obj(m, X.obj[i]); },
            [&](int ar) { return cat.tensor_mor(cat.id(m), X.mor[ar]); });
    };
    auto tm = [&](const typename C::Mor& fm, const NatTrans<C>& fx) {
        return make_nat<C>(t(cat.src(fm), fx.src), t(cat.tgt(fm), fx.tgt),
                           [&](int i) { return cat.tensor_mor(fm, fx.comp[i]); });
    };
    auto idg = [&](const Diagram<C>& X) { return D.id(X); };
    auto id_a_g = tm(cat.id(a), g);
    auto f_id_x = tm(f, idg(g.src));
    auto id_b_g = tm(cat.id(b), g);
    auto f_id_y = tm(f, idg(g.tgt));
    auto po = pushout(D, id_a_g, f_id_x);
    auto corner = factor_pushout(D, po, t(b, g.tgt), f_id_y, id_b_g);
    return {corner, classify_reedy(cat, R, corner)};
}

/// f in the diagram category over the base, g in the base (LEMMA7).
template <class C>
std::pair<NatTrans<C>, ReedyFlags> pushout_product_lemma7(const C& cat, const ReedyStructure& R,
                                                          const NatTrans<C>& f,
                                                          const typename C::Mor& g) {
    FunctorCat<C> D(cat, R.base);
    auto t = [&](const Diagram<C>& M, const typename C::Obj& c) {
        return make_diagram<C>(
            cat, R.base, [&](int i) { return cat.tensor_obj(M.obj[i], c); },
            [&](int ar) { return cat.tensor_mor(M.mor[ar], cat.id(c)); });
    };
    auto tm = [&](const NatTrans<C>& fm, const typename C::Mor& fc) {
        return make_nat<C>(t(fm.src, cat.src(fc)), t(fm.tgt, cat.tgt(fc)),
                           [&](int i) { return cat.tensor_mor(fm.comp[i], fc); });
    };
    auto a_g = tm(D.id(f.src), g);
    auto f_c = tm(f, cat.id(cat.src(g)));
    auto b_g = tm(D.id(f.tgt), g);
    auto f_d = tm(f, cat.id(cat.tgt(g)));
    auto po = pushout(D, a_g, f_c);
    auto corner = factor_pushout(D, po, t(f.tgt, cat.tgt(g)), f_d, b_g);
    return {corner, classify_reedy(cat, R, corner)};
}

/// f and g both in the diagram category, pointwise tensor (THM1).
template <class C>
std::pair<NatTrans<C>, ReedyFlags> pushout_product_thm1(const C& cat, const ReedyStructure& R,
                                                        const NatTrans<C>& f,
                                                        const NatTrans<C>& g) {
    FunctorCat<C> D(cat, R.base);
    SelfModule<C> SM(cat);
    auto id_a_g = s5_tensor_mor(SM, R.base, D.id(f.src), g);
    auto f_id_x = s5_tensor_mor(SM, R.base, f, D.id(g.src));
    auto id_b_g = s5_tensor_mor(SM, R.base, D.id(f.tgt), g);
    auto f_id_y = s5_tensor_mor(SM, R.base, f, D.id(g.tgt));
    auto po = pushout(D, id_a_g, f_id_x);
    auto corner = factor_pushout(D, po, s5_tensor(SM, R.base, f.tgt, g.tgt), f_id_y, id_b_g);
    return {corner, classify_reedy(cat, R, corner)};
}

/// The dual corner map hom_r(b, X) → hom_r(a, X) ×_{hom_r(a, Y)} hom_r(b, Y)
/// for a base cofibration f: a → b and a Reedy fibration p: X → Y.
template <class C>
std::pair<NatTrans<C>, ReedyFlags> lemma7_fibration_side(const C& cat, const ReedyStructure& R,
                                                         const typename C::Mor& f,
                                                         const NatTrans<C>& p) {
    FunctorCat<C> D(cat, R.base);
    SelfModule<C> SM(cat);
    auto a = cat.src(f), b = cat.tgt(f);
    auto haX = hom_r(SM, R.base, a, p.src);
    auto hbX = hom_r(SM, R.base, b, p.src);
    auto haY = hom_r(SM, R.base, a, p.tgt);
    auto hbY = hom_r(SM, R.base, b, p.tgt);
    auto hm = [&](const typename C::Mor& fc, const NatTrans<C>& fx, const Diagram<C>& s,
                  const Diagram<C>& t) {
        return make_nat<C>(s, t, [&](int i) { return SM.map_mor(fc, fx.comp[i]); });
    };
    auto u = hm(cat.id(a), p, haX, haY);  // hom_r(a,X) → hom_r(a,Y)
    auto idX = D.id(p.src);
    auto idY = D.id(p.tgt);
    auto v = hm(f, idY, hbY, haY);  // hom_r(b,Y) → hom_r(a,Y)
    auto pb = pullback(D, u, v);
    auto to_b = hm(f, idX, hbX, haX);
    auto to_c = hm(cat.id(b), p, hbX, hbY);
    auto corner = factor_pullback(D, pb, hbX, to_b, to_c);
    return {corner, classify_reedy(cat, R, corner)};
}

// ---------------------------------------------------------------------------
// Representable-tensor cofibrancy over a direct index, and the unit axiom.

struct Lemma8Report {
    bool ok = false;
    bool unit_cofibrant = false;
    bool hh_cofibrant = false;
    bool flags_match = false;
    std::string detail;
};

template <class C>
Lemma8Report lemma8_check(const C& cat, const ReedyStructure& R, int p, int q,
                          const typename C::Mor& f) {
    Lemma8Report rep;
    if (!is_direct(R)) {
        rep.detail = "index category is not direct";
        return rep;
    }
    rep.unit_cofibrant = cat.classify(cat.zero_mor(cat.initial(), cat.unit())).cofibration;
    FunctorCat<C> D(cat, R.base);
    auto hp = yoneda_lower(cat, R.base, p);
    auto hq = yoneda_lower(cat, R.base, q);
    auto hh = make_diagram<C>(
        cat, R.base, [&](int i) { return cat.tensor_obj(hp.obj[i], hq.obj[i]); },
        [&](int ar) { return cat.tensor_mor(hp.mor[ar], hq.mor[ar]); });
    auto from_zero = make_nat<C>(D.initial(), hh,
                                 [&](int i) { return cat.zero_mor(cat.initial(), hh.obj[i]); });
    rep.hh_cofibrant = classify_reedy(cat, R, from_zero).is_cofibration;
    auto hhf = make_nat<C>(
        make_diagram<C>(
            cat, R.base, [&](int i) { return cat.tensor_obj(hh.obj[i], cat.src(f)); },
            [&](int ar) { return cat.tensor_mor(hh.mor[ar], cat.id(cat.src(f))); }),
        make_diagram<C>(
            cat, R.base, [&](int i) { return cat.tensor_obj(hh.obj[i], cat.tgt(f)); },
            [&](int ar) { return cat.tensor_mor(hh.mor[ar], cat.id(cat.tgt(f))); }),
        [&](int i) { return cat.tensor_mor(cat.id(hh.obj[i]), f); });
    auto fl = classify_reedy(cat, R, hhf);
    auto base_fl = cat.classify(f);
    rep.flags_match = (fl.is_cofibration == base_fl.cofibration) &&
                      (fl.is_trivial_cofibration == base_fl.trivial_cofibration);
    rep.ok = rep.unit_cofibrant && rep.hh_cofibrant && rep.flags_match;
    if (!rep.ok) {
        if (!rep.unit_cofibrant) rep.detail = "monoidal unit is not cofibrant";
        else if (!rep.hh_cofibrant) rep.detail = "representable tensor is not Reedy cofibrant";
        else rep.detail = "tensored map flags do not match the base flags";
    }
    return rep;
}

struct UnitAxiomReport {
    bool ok = false;
    std::string detail;
};

template <class C>
UnitAxiomReport unit_axiom_check(const C& cat, const ReedyStructure& R, const Diagram<C>& X) {
    UnitAxiomReport rep;
    FunctorCat<C> D(cat, R.base);
    auto from_zero = make_nat<C>(D.initial(), X,
                                 [&](int i) { return cat.zero_mor(cat.initial(), X.obj[i]); });
    if (!classify_reedy(cat, R, from_zero).is_cofibration) {
        rep.detail = "input diagram is not cofibrant";
        return rep;
    }
    auto const_k = D.constant(cat.unit());
    auto zk = make_nat<C>(D.initial(), const_k,
                          [&](int) { return cat.zero_mor(cat.initial(), cat.unit()); });
    auto [u, v] = reedy_factorize(cat, R, zk, FactKind::CofThenTrivFib);
    auto vfl = classify_reedy(cat, R, v);
    if (!vfl.is_trivial_fibration) {
        rep.detail = "cofibrant replacement second factor is not a trivial fibration";
        return rep;
    }
    for (int i = 0; i < R.base.n_objects; ++i) {
        auto m = cat.tensor_mor(v.comp[i], cat.id(X.obj[i]));
        if (!cat.quasi_iso(m)) {
            rep.detail = "replacement tensored with X fails quasi-iso at object " +
                         std::to_string(i);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Constructive samplers for (trivial) Reedy cofibrations/fibrations: factor a
// random transformation between random free diagrams and keep the factor with
// the requested flags. Never rejection sampling.

template <class C>
NatTrans<C> random_reedy_map(const C& cat, const ReedyStructure& R, Rng& rng,
                             const std::function<typename C::Obj(Rng&)>& rand_obj,
                             int max_cells = 2) {
    FunctorCat<C> D(cat, R.base);
    auto X = random_free_diagram<C>(cat, R.base, rng, rand_obj, max_cells);
    auto Y = random_free_diagram<C>(cat, R.base, rng, rand_obj, max_cells);
    return random_nat<C>(D, X, Y, rng);
}

template <class C>
NatTrans<C> random_reedy_cofibration(const C& cat, const ReedyStructure& R, Rng& rng,
                                     const std::function<typename C::Obj(Rng&)>& rand_obj,
                                     bool trivial) {
    auto g = random_reedy_map(cat, R, rng, rand_obj);
    auto kind = trivial ? FactKind::TrivCofThenFib : FactKind::CofThenTrivFib;
    return reedy_factorize(cat, R, g, kind).first;
}

template <class C>
NatTrans<C> random_reedy_fibration(const C& cat, const ReedyStructure& R, Rng& rng,
                                   const std::function<typename C::Obj(Rng&)>& rand_obj,
                                   bool trivial) {
    auto g = random_reedy_map(cat, R, rng, rand_obj);
    auto kind = trivial ? FactKind::CofThenTrivFib : FactKind::TrivCofThenFib;
    return reedy_factorize(cat, R, g, kind).second;
}

}  // namespace rcat
