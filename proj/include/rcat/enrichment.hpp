#pragma once

#include <functional>
#include <string>

#include "rcat/module.hpp"
#include "rcat/sampler.hpp"

namespace rcat {

struct CheckResult {
    bool ok = false;
    std::string detail;
};

/// Exact bijection check between two materialized hom spaces (full lists in
/// the set-like tier, bases in the linear tier — where the maps are linear,
/// a basis roundtrip plus equal dimension is a complete proof).
template <class Cat1, class Cat2, class F, class G>
CheckResult check_bijection(const Cat1& c1, const std::vector<typename Cat1::Mor>& h1,
                            const Cat2& c2, const std::vector<typename Cat2::Mor>& h2, F&& fwd,
                            G&& bwd) {
    CheckResult r;
    if (h1.size() != h2.size()) {
        r.detail = "hom spaces have different size: " + std::to_string(h1.size()) + " vs " +
                   std::to_string(h2.size());
        return r;
    }
    for (std::size_t k = 0; k < h1.size(); ++k) {
        auto img = fwd(h1[k]);
        if (!c1.eq(bwd(img), h1[k])) {
            r.detail = "backward∘forward is not the identity at element " + std::to_string(k);
            return r;
        }
    }
    for (std::size_t k = 0; k < h2.size(); ++k) {
        auto img = bwd(h2[k]);
        if (!c2.eq(fwd(img), h2[k])) {
            r.detail = "forward∘backward is not the identity at element " + std::to_string(k);
            return r;
        }
    }
    r.ok = true;
    return r;
}

// ---------------------------------------------------------------------------
// Eq-style representable hom identity: B^I(h_i, M) ≅ B(k, M_i), with the
// constructive inverse sending u to the transformation whose j-component is
// the cotuple of M(f)∘u over f ∈ I(i, j).

template <class B>
CheckResult representable_hom_check(const B& base, const FiniteCategory& I, const Diagram<B>& M,
                                    int i) {
    FunctorCat<B> D(base, I);
    auto hi = yoneda_lower(base, I, i);
    auto h1 = D.hom_list(hi, M);
    auto h2 = base.hom_list(base.unit(), M.obj[i]);
    auto inj_id = base.copower(static_cast<int>(I.hom(i, i).size()))
                      .legs[hom_index(I, i, i, I.identity[i])];
    auto fwd = [&](const NatTrans<B>& eta) { return base.compose(eta.comp[i], inj_id); };
    auto bwd = [&](const typename B::Mor& u) {
        return make_nat<B>(hi, M, [&](int j) {
            auto cp = base.copower(static_cast<int>(I.hom(i, j).size()));
            std::vector<typename B::Mor> legs;
            for (int f : I.hom(i, j)) legs.push_back(base.compose(M.mor[f], u));
            return base.cotuple(cp, M.obj[j], legs);
        });
    };
    return check_bijection(D, h1, base, h2, fwd, bwd);
}

// ---------------------------------------------------------------------------
// Yoneda evaluation: ∫_q X_q^{h_i(q)} ≅ X_i, in any closed module. With the
// self module this is the monoidal Yoneda lemma; with a nontrivial module it
// is the module version.

template <class Mod>
struct YonedaWitness {
    bool ok = false;
    std::string detail;
    typename Mod::C::Mor forward, backward;  // end ⇄ X_i
};

template <class Mod>
YonedaWitness<Mod> yoneda_eval_check(const Mod& mod, const FiniteCategory& I,
                                     const Diagram<typename Mod::C>& X, int i) {
    YonedaWitness<Mod> w;
    const auto& C = mod.cat;
    const auto& B = mod.base;
    auto hi = yoneda_lower(B, I, i);
    int n = I.n_objects, na = I.n_arrows();
    FiniteCategory sq = product_category(opposite(I), I);
    auto T = make_diagram<typename Mod::C>(
        C, sq, [&](int qq) { return mod.pow(X.obj[qq % n], hi.obj[qq / n]); },
        [&](int ab) { return mod.pow_mor(hi.mor[ab / na], X.mor[ab % na]); });
    auto E = end_of(C, I, T);

    auto inj_id =
        B.copower(static_cast<int>(I.hom(i, i).size())).legs[hom_index(I, i, i, I.identity[i])];
    auto ev = mod.pow_mor(inj_id, C.id(X.obj[i]));
    w.forward = C.compose(C.inverse(mod.pow_unit(X.obj[i])), C.compose(ev, E.wedge[i]));

    std::vector<typename Mod::C::Mor> wedge;
    for (int q = 0; q < n; ++q) {
        std::vector<typename Mod::C::Mor> zf;
        for (int f : I.hom(i, q)) zf.push_back(X.mor[f]);
        auto eval_map = act_copower_cotuple(mod, static_cast<int>(I.hom(i, q).size()), X.obj[i], zf,
                                            X.obj[q]);
        wedge.push_back(mod.t1(eval_map, hi.obj[q], X.obj[i], X.obj[q]));
    }
    w.backward = factor_end(C, E, X.obj[i], wedge);

    if (!C.eq(C.compose(w.forward, w.backward), C.id(X.obj[i])))
        w.detail = "forward∘backward is not the identity on X_i";
    else if (!C.eq(C.compose(w.backward, w.forward), C.id(E.obj)))
        w.detail = "backward∘forward is not the identity on the end";
    else
        w.ok = true;
    return w;
}

// ---------------------------------------------------------------------------
// Codifferential / differential bifunctors and the Yoneda (co)reduction.

/// The map h_i(j) → h_{i'}(j) induced by precomposition with g: i' → i.
template <class B>
typename B::Mor h_precompose(const B& base, const FiniteCategory& I, int g, int j) {
    int i2 = I.arrow_src[g], i = I.arrow_tgt[g];
    auto src_cp = base.copower(static_cast<int>(I.hom(i, j).size()));
    auto tgt_cp = base.copower(static_cast<int>(I.hom(i2, j).size()));
    std::vector<typename B::Mor> legs;
    for (int f : I.hom(i, j)) legs.push_back(tgt_cp.legs[hom_index(I, i2, j, I.compose(f, g))]);
    return base.cotuple(src_cp, tgt_cp.obj, legs);
}

/// The map h^q(j) → h^{q'}(j) induced by postcomposition with g: q → q'.
template <class B>
typename B::Mor h_postcompose(const B& base, const FiniteCategory& I, int g, int j) {
    int q = I.arrow_src[g], q2 = I.arrow_tgt[g];
    auto src_cp = base.copower(static_cast<int>(I.hom(j, q).size()));
    auto tgt_cp = base.copower(static_cast<int>(I.hom(j, q2).size()));
    std::vector<typename B::Mor> legs;
    for (int f : I.hom(j, q)) legs.push_back(tgt_cp.legs[hom_index(I, j, q2, I.compose(g, f))]);
    return base.cotuple(src_cp, tgt_cp.obj, legs);
}

/// CM(i, j) = h_i ⊗ M_j as a bifunctor valued in the diagram category.
template <class Mod>
Diagram<FunctorCat<typename Mod::C>> codifferential(const Mod& mod, const FiniteCategory& I,
                                                    const Diagram<typename Mod::C>& M) {
    FunctorCat<typename Mod::C> D(mod.cat, I);
    int n = I.n_objects, na = I.n_arrows();
    FiniteCategory sq = product_category(opposite(I), I);
    auto cell = [&](int i, int j) {
        auto hi = yoneda_lower(mod.base, I, i);
        return make_diagram<typename Mod::C>(
            mod.cat, I, [&](int q) { return mod.act(hi.obj[q], M.obj[j]); },
            [&](int f) { return mod.act_mor(hi.mor[f], mod.cat.id(M.obj[j])); });
    };
    return make_diagram<FunctorCat<typename Mod::C>>(
        D, sq, [&](int ij) { return cell(ij / n, ij % n); },
        [&](int ab) {
            int a1 = ab / na, a2 = ab % na;
            auto src_cell = cell(I.arrow_tgt[a1], I.arrow_src[a2]);
            auto tgt_cell = cell(I.arrow_src[a1], I.arrow_tgt[a2]);
            return make_nat<typename Mod::C>(src_cell, tgt_cell, [&](int q) {
                return mod.act_mor(h_precompose(mod.base, I, a1, q), M.mor[a2]);
            });
        });
}

/// DX(i, j) = X_j^{h^i} as a bifunctor valued in the diagram category.
template <class Mod>
Diagram<FunctorCat<typename Mod::C>> differential(const Mod& mod, const FiniteCategory& I,
                                                  const Diagram<typename Mod::C>& X) {
    FunctorCat<typename Mod::C> D(mod.cat, I);
    int n = I.n_objects, na = I.n_arrows();
    FiniteCategory sq = product_category(opposite(I), I);
    auto hexp = [&](int q, int j) {
        return mod.base.copower(static_cast<int>(I.hom(j, q).size())).obj;
    };
    auto cell = [&](int i, int j) {
        auto hu = yoneda_upper(mod.base, I, i);
        return make_diagram<typename Mod::C>(
            mod.cat, I, [&](int q) { return mod.pow(X.obj[j], hexp(i, q)); },
            [&](int f) { return mod.pow_mor(hu.mor[f], mod.cat.id(X.obj[j])); });
    };
    return make_diagram<FunctorCat<typename Mod::C>>(
        D, sq, [&](int ij) { return cell(ij / n, ij % n); },
        [&](int ab) {
            int a1 = ab / na, a2 = ab % na;
            auto src_cell = cell(I.arrow_tgt[a1], I.arrow_src[a2]);
            auto tgt_cell = cell(I.arrow_src[a1], I.arrow_tgt[a2]);
            return make_nat<typename Mod::C>(src_cell, tgt_cell, [&](int q) {
                return mod.pow_mor(h_postcompose(mod.base, I, a1, q), X.mor[a2]);
            });
        });
}

template <class Mod>
struct DiagramIsoWitness {
    bool ok = false;
    std::string detail;
    NatTrans<typename Mod::C> canonical;  // between the (co)end and the diagram
};

/// Coreduction: the canonical map ∫^i CM(i,i) → M is an isomorphism.
template <class Mod>
DiagramIsoWitness<Mod> coreduction_check(const Mod& mod, const FiniteCategory& I,
                                         const Diagram<typename Mod::C>& M) {
    DiagramIsoWitness<Mod> w;
    FunctorCat<typename Mod::C> D(mod.cat, I);
    auto T = codifferential(mod, I, M);
    auto CE = coend_of(D, I, T);
    std::vector<NatTrans<typename Mod::C>> cowedge;
    for (int i = 0; i < I.n_objects; ++i) {
        auto cell = T.obj[i * I.n_objects + i];
        cowedge.push_back(make_nat<typename Mod::C>(cell, M, [&](int q) {
            std::vector<typename Mod::C::Mor> zf;
            for (int f : I.hom(i, q)) zf.push_back(M.mor[f]);
            return act_copower_cotuple(mod, static_cast<int>(I.hom(i, q).size()), M.obj[i], zf,
                                       M.obj[q]);
        }));
    }
    w.canonical = factor_coend(D, CE, M, cowedge);
    if (!D.is_iso(w.canonical))
        w.detail = "coend comparison map is not invertible";
    else
        w.ok = true;
    return w;
}

/// Reduction: the canonical map X → ∫_i DX(i,i) is an isomorphism.
template <class Mod>
DiagramIsoWitness<Mod> reduction_check(const Mod& mod, const FiniteCategory& I,
                                       const Diagram<typename Mod::C>& X) {
    DiagramIsoWitness<Mod> w;
    FunctorCat<typename Mod::C> D(mod.cat, I);
    auto T = differential(mod, I, X);
    auto E = end_of(D, I, T);
    std::vector<NatTrans<typename Mod::C>> wedge;
    for (int i = 0; i < I.n_objects; ++i) {
        auto cell = T.obj[i * I.n_objects + i];
        wedge.push_back(make_nat<typename Mod::C>(X, cell, [&](int q) {
            std::vector<typename Mod::C::Mor> zf;
            for (int f : I.hom(q, i)) zf.push_back(X.mor[f]);
            auto hexp = mod.base.copower(static_cast<int>(I.hom(q, i).size())).obj;
            auto eval_map = act_copower_cotuple(mod, static_cast<int>(I.hom(q, i).size()),
                                                X.obj[q], zf, X.obj[i]);
            return mod.t1(eval_map, hexp, X.obj[q], X.obj[i]);
        }));
    }
    w.canonical = factor_end(D, E, X, wedge);
    if (!D.is_iso(w.canonical))
        w.detail = "end comparison map is not invertible";
    else
        w.ok = true;
    return w;
}

// ---------------------------------------------------------------------------
// Two-variable adjunction ⊗ / hom_r / hom_l between M^I × C and C^I.

template <class Mod>
Diagram<typename Mod::C> l3_tensor(const Mod& mod, const FiniteCategory& I,
                                   const Diagram<typename Mod::M>& M,
                                   const typename Mod::C::Obj& c) {
    return make_diagram<typename Mod::C>(
        mod.cat, I, [&](int i) { return mod.act(M.obj[i], c); },
        [&](int f) { return mod.act_mor(M.mor[f], mod.cat.id(c)); });
}

template <class Mod>
Diagram<typename Mod::M> hom_r(const Mod& mod, const FiniteCategory& I,
                               const typename Mod::C::Obj& c,
                               const Diagram<typename Mod::C>& X) {
    return make_diagram<typename Mod::M>(
        mod.base, I, [&](int i) { return mod.map_obj(c, X.obj[i]); },
        [&](int f) { return mod.map_mor(mod.cat.id(c), X.mor[f]); });
}

/// hom_l(M, X) = ∫_i X_i^{M_i}, returned with its end data.
template <class Mod>
EndData<typename Mod::C> hom_l(const Mod& mod, const FiniteCategory& I,
                               const Diagram<typename Mod::M>& M,
                               const Diagram<typename Mod::C>& X) {
    int n = I.n_objects, na = I.n_arrows();
    FiniteCategory sq = product_category(opposite(I), I);
    auto T = make_diagram<typename Mod::C>(
        mod.cat, sq, [&](int qq) { return mod.pow(X.obj[qq % n], M.obj[qq / n]); },
        [&](int ab) { return mod.pow_mor(M.mor[ab / na], X.mor[ab % na]); });
    return end_of(mod.cat, I, T);
}

/// Induced map hom_l(M, X) → hom_l(M', X') for φ: M' → M and ψ: X → X'.
template <class Mod>
typename Mod::C::Mor hom_l_mor(const Mod& mod, const FiniteCategory& I,
                               const EndData<typename Mod::C>& src_end,
                               const EndData<typename Mod::C>& tgt_end,
                               const NatTrans<typename Mod::M>& phi,
                               const NatTrans<typename Mod::C>& psi) {
    std::vector<typename Mod::C::Mor> wedge;
    for (int i = 0; i < I.n_objects; ++i)
        wedge.push_back(
            mod.cat.compose(mod.pow_mor(phi.comp[i], psi.comp[i]), src_end.wedge[i]));
    return factor_end(mod.cat, tgt_end, src_end.obj, wedge);
}

template <class Mod>
struct L3Witness {
    bool ok = false;
    std::string detail;
};

/// Lemma-3-style chain: C^I(M⊗c, X) ≅ M^I(M, hom_r(c,X)) ≅ C(c, hom_l(M,X)).
template <class Mod>
L3Witness<Mod> verify_l3(const Mod& mod, const FiniteCategory& I,
                         const Diagram<typename Mod::M>& M, const typename Mod::C::Obj& c,
                         const Diagram<typename Mod::C>& X) {
    L3Witness<Mod> w;
    FunctorCat<typename Mod::M> DM(mod.base, I);
    FunctorCat<typename Mod::C> DC(mod.cat, I);
    auto mc = l3_tensor(mod, I, M, c);
    auto hr = hom_r(mod, I, c, X);
    auto hl = hom_l(mod, I, M, X);

    auto h0 = DC.hom_list(mc, X);
    auto h1 = DM.hom_list(M, hr);
    auto h2 = mod.cat.hom_list(c, hl.obj);

    auto u1 = [&](const NatTrans<typename Mod::C>& eta) {
        return make_nat<typename Mod::M>(
            M, hr, [&](int i) { return mod.t2(eta.comp[i], M.obj[i], c, X.obj[i]); });
    };
    auto u1_inv = [&](const NatTrans<typename Mod::M>& nu) {
        return make_nat<typename Mod::C>(
            mc, X, [&](int i) { return mod.t2_inv(nu.comp[i], M.obj[i], c, X.obj[i]); });
    };
    auto u2 = [&](const NatTrans<typename Mod::C>& eta) {
        std::vector<typename Mod::C::Mor> wedge;
        for (int i = 0; i < I.n_objects; ++i)
            wedge.push_back(mod.t1(eta.comp[i], M.obj[i], c, X.obj[i]));
        return factor_end(mod.cat, hl, c, wedge);
    };
    auto u2_inv = [&](const typename Mod::C::Mor& v) {
        return make_nat<typename Mod::C>(mc, X, [&](int i) {
            return mod.t1_inv(mod.cat.compose(hl.wedge[i], v), M.obj[i], c, X.obj[i]);
        });
    };

    auto r1 = check_bijection(DC, h0, DM, h1, u1, u1_inv);
    if (!r1.ok) {
        w.detail = "hom_r side: " + r1.detail;
        return w;
    }
    auto r2 = check_bijection(DC, h0, mod.cat, h2, u2, u2_inv);
    if (!r2.ok) {
        w.detail = "hom_l side: " + r2.detail;
        return w;
    }
    w.ok = true;
    return w;
}

// ---------------------------------------------------------------------------
// Pointwise closed-module adjunction (covers both the M-action on M^I and on
// C^I): C^I(m⊗X, Y) ≅ C^I(X, Y^m) ≅ M(m, map(X,Y)).

template <class Mod>
CheckResult verify_pointwise_adjunction(const PointwiseModule<Mod>& pm,
                                        const typename Mod::M::Obj& m,
                                        const Diagram<typename Mod::C>& X,
                                        const Diagram<typename Mod::C>& Y) {
    const auto& DC = pm.cat;
    auto h0 = DC.hom_list(pm.act(m, X), Y);
    auto h1 = DC.hom_list(X, pm.pow(Y, m));
    auto h2 = pm.base.hom_list(m, pm.map_obj(X, Y));

    auto r1 = check_bijection(
        DC, h0, DC, h1, [&](const auto& f) { return pm.t1(f, m, X, Y); },
        [&](const auto& g) { return pm.t1_inv(g, m, X, Y); });
    if (!r1.ok) return {false, "power side: " + r1.detail};
    auto r2 = check_bijection(
        DC, h0, pm.base, h2, [&](const auto& f) { return pm.t2(f, m, X, Y); },
        [&](const auto& u) { return pm.t2_inv(u, m, X, Y); });
    if (!r2.ok) return {false, "map side: " + r2.detail};
    return {true, ""};
}

// ---------------------------------------------------------------------------
// The pointwise action of M^I on C^I with its Hom and Map right adjoints.

template <class Mod>
Diagram<typename Mod::C> s5_tensor(const Mod& mod, const FiniteCategory& I,
                                   const Diagram<typename Mod::M>& M,
                                   const Diagram<typename Mod::C>& X) {
    return make_diagram<typename Mod::C>(
        mod.cat, I, [&](int i) { return mod.act(M.obj[i], X.obj[i]); },
        [&](int f) { return mod.act_mor(M.mor[f], X.mor[f]); });
}

template <class Mod>
NatTrans<typename Mod::C> s5_tensor_mor(const Mod& mod, const FiniteCategory& I,
                                        const NatTrans<typename Mod::M>& fm,
                                        const NatTrans<typename Mod::C>& fx) {
    return make_nat<typename Mod::C>(s5_tensor(mod, I, fm.src, fx.src),
                                     s5_tensor(mod, I, fm.tgt, fx.tgt),
                                     [&](int i) { return mod.act_mor(fm.comp[i], fx.comp[i]); });
}

/// Hom(M, Y)_i = hom_l(M ⊗ h_i, Y) = ∫_q Y_q^{M_q ⊗ h_i(q)}, kept with the
/// per-object end data for the transpositions.
template <class Mod>
struct S5Hom {
    Diagram<typename Mod::C> dia;
    std::vector<EndData<typename Mod::C>> ends;  // per index object
};

template <class Mod>
S5Hom<Mod> s5_hom(const Mod& mod, const FiniteCategory& I, const Diagram<typename Mod::M>& M,
                  const Diagram<typename Mod::C>& Y) {
    S5Hom<Mod> H;
    const auto& B = mod.base;
    int n = I.n_objects, na = I.n_arrows();
    FiniteCategory sq = product_category(opposite(I), I);
    auto exponent = [&](int i, int q) {
        return B.tensor_obj(M.obj[q],
                            B.copower(static_cast<int>(I.hom(i, q).size())).obj);
    };
    for (int i = 0; i < n; ++i) {
        auto hi = yoneda_lower(B, I, i);
        auto T = make_diagram<typename Mod::C>(
            mod.cat, sq,
            [&](int qq) { return mod.pow(Y.obj[qq % n], exponent(i, qq / n)); },
            [&](int ab) {
                return mod.pow_mor(B.tensor_mor(M.mor[ab / na], hi.mor[ab / na]), Y.mor[ab % na]);
            });
        H.ends.push_back(end_of(mod.cat, I, T));
    }
    H.dia = make_diagram<typename Mod::C>(
        mod.cat, I, [&](int i) { return H.ends[i].obj; },
        [&](int g) {
            int i = I.arrow_src[g], i2 = I.arrow_tgt[g];
            std::vector<typename Mod::C::Mor> wedge;
            for (int q = 0; q < n; ++q) {
                auto prec = B.tensor_mor(B.id(M.obj[q]), h_precompose(B, I, g, q));
                wedge.push_back(mod.cat.compose(mod.pow_mor(prec, mod.cat.id(Y.obj[q])),
                                                H.ends[i].wedge[q]));
            }
            return factor_end(mod.cat, H.ends[i2], H.ends[i].obj, wedge);
        });
    return H;
}

/// Map(X, Y)_i = map_{C^I}(h_i ⊗ X, Y) = ∫_q map_C(h_i(q) ⊗ X_q, Y_q).
template <class Mod>
struct S5Map {
    Diagram<typename Mod::M> dia;
    std::vector<EndData<typename Mod::M>> ends;
};

template <class Mod>
S5Map<Mod> s5_map(const Mod& mod, const FiniteCategory& I, const Diagram<typename Mod::C>& X,
                  const Diagram<typename Mod::C>& Y) {
    S5Map<Mod> W;
    const auto& B = mod.base;
    int n = I.n_objects, na = I.n_arrows();
    FiniteCategory sq = product_category(opposite(I), I);
    auto hx = [&](int i, int q) {
        return mod.act(B.copower(static_cast<int>(I.hom(i, q).size())).obj, X.obj[q]);
    };
    for (int i = 0; i < n; ++i) {
        auto hi = yoneda_lower(B, I, i);
        auto T = make_diagram<typename Mod::M>(
            B, sq, [&](int qq) { return mod.map_obj(hx(i, qq / n), Y.obj[qq % n]); },
            [&](int ab) {
                int a1 = ab / na, a2 = ab % na;
                return mod.map_mor(mod.act_mor(hi.mor[a1], X.mor[a1]), Y.mor[a2]);
            });
        W.ends.push_back(end_of(B, I, T));
    }
    W.dia = make_diagram<typename Mod::M>(
        B, I, [&](int i) { return W.ends[i].obj; },
        [&](int g) {
            int i = I.arrow_src[g], i2 = I.arrow_tgt[g];
            std::vector<typename Mod::M::Mor> wedge;
            for (int q = 0; q < n; ++q) {
                auto pre = mod.act_mor(h_precompose(B, I, g, q), mod.cat.id(X.obj[q]));
                wedge.push_back(
                    B.compose(mod.map_mor(pre, mod.cat.id(Y.obj[q])), W.ends[i].wedge[q]));
            }
            return factor_end(B, W.ends[i2], W.ends[i].obj, wedge);
        });
    return W;
}

/// Transpose η: M⊗X → Y (pointwise action) to X → Hom(M, Y).
template <class Mod>
NatTrans<typename Mod::C> p2_ta(const Mod& mod, const FiniteCategory& I,
                                const Diagram<typename Mod::M>& M,
                                const Diagram<typename Mod::C>& X,
                                const Diagram<typename Mod::C>& Y, const S5Hom<Mod>& H,
                                const NatTrans<typename Mod::C>& eta) {
    const auto& B = mod.base;
    const auto& C = mod.cat;
    return make_nat<typename Mod::C>(X, H.dia, [&](int i) {
        std::vector<typename Mod::C::Mor> wedge;
        for (int q = 0; q < I.n_objects; ++q) {
            int nh = static_cast<int>(I.hom(i, q).size());
            auto hobj = B.copower(nh).obj;
            std::vector<typename Mod::C::Mor> zf;
            for (int f : I.hom(i, q)) zf.push_back(X.mor[f]);
            auto wq = act_copower_cotuple(mod, nh, X.obj[i], zf, X.obj[q]);
            auto chi = C.compose(
                eta.comp[q],
                C.compose(mod.act_mor(B.id(M.obj[q]), wq),
                          mod.act_assoc(M.obj[q], hobj, X.obj[i])));
            wedge.push_back(mod.t1(chi, B.tensor_obj(M.obj[q], hobj), X.obj[i], Y.obj[q]));
        }
        return factor_end(C, H.ends[i], X.obj[i], wedge);
    });
}

template <class Mod>
NatTrans<typename Mod::C> p2_ta_inv(const Mod& mod, const FiniteCategory& I,
                                    const Diagram<typename Mod::M>& M,
                                    const Diagram<typename Mod::C>& X,
                                    const Diagram<typename Mod::C>& Y, const S5Hom<Mod>& H,
                                    const NatTrans<typename Mod::C>& u) {
    const auto& B = mod.base;
    const auto& C = mod.cat;
    return make_nat<typename Mod::C>(s5_tensor(mod, I, M, X), Y, [&](int q) {
        auto inj_id = B.copower(static_cast<int>(I.hom(q, q).size()))
                          .legs[hom_index(I, q, q, I.identity[q])];
        auto s_id = B.compose(B.tensor_mor(B.id(M.obj[q]), inj_id),
                              B.inverse(B.runit(M.obj[q])));
        auto pr = C.compose(mod.pow_mor(s_id, C.id(Y.obj[q])),
                            C.compose(H.ends[q].wedge[q], u.comp[q]));
        return mod.t1_inv(pr, M.obj[q], X.obj[q], Y.obj[q]);
    });
}

/// Transpose η: M⊗X → Y (pointwise action) to M → Map(X, Y).
template <class Mod>
NatTrans<typename Mod::M> p2_tb(const Mod& mod, const FiniteCategory& I,
                                const Diagram<typename Mod::M>& M,
                                const Diagram<typename Mod::C>& X,
                                const Diagram<typename Mod::C>& Y, const S5Map<Mod>& W,
                                const NatTrans<typename Mod::C>& eta) {
    const auto& B = mod.base;
    const auto& C = mod.cat;
    return make_nat<typename Mod::M>(M, W.dia, [&](int i) {
        std::vector<typename Mod::M::Mor> wedge;
        for (int q = 0; q < I.n_objects; ++q) {
            int nh = static_cast<int>(I.hom(i, q).size());
            auto cp = B.copower(nh);
            auto hxq = mod.act(cp.obj, X.obj[q]);
            std::vector<typename Mod::C::Mor> incls, outs;
            for (int k = 0; k < nh; ++k) {
                int f = I.hom(i, q)[k];
                incls.push_back(
                    mod.act_mor(B.id(M.obj[i]), mod.act_mor(cp.legs[k], C.id(X.obj[q]))));
                outs.push_back(C.compose(
                    eta.comp[q],
                    C.compose(mod.act_mor(M.mor[f], C.id(X.obj[q])),
                              mod.act_mor(B.id(M.obj[i]), mod.act_unit(X.obj[q])))));
            }
            auto xi = mediate_out(C, incls, mod.act(M.obj[i], hxq), outs, Y.obj[q]);
            wedge.push_back(mod.t2(xi, M.obj[i], hxq, Y.obj[q]));
        }
        return factor_end(B, W.ends[i], M.obj[i], wedge);
    });
}

template <class Mod>
NatTrans<typename Mod::C> p2_tb_inv(const Mod& mod, const FiniteCategory& I,
                                    const Diagram<typename Mod::M>& M,
                                    const Diagram<typename Mod::C>& X,
                                    const Diagram<typename Mod::C>& Y, const S5Map<Mod>& W,
                                    const NatTrans<typename Mod::M>& v) {
    const auto& B = mod.base;
    const auto& C = mod.cat;
    return make_nat<typename Mod::C>(s5_tensor(mod, I, M, X), Y, [&](int q) {
        auto cp = B.copower(static_cast<int>(I.hom(q, q).size()));
        auto inj_id = cp.legs[hom_index(I, q, q, I.identity[q])];
        auto hxq = mod.act(cp.obj, X.obj[q]);
        auto g = B.compose(W.ends[q].wedge[q], v.comp[q]);
        auto xi = mod.t2_inv(g, M.obj[q], hxq, Y.obj[q]);
        auto insert = C.compose(mod.act_mor(inj_id, C.id(X.obj[q])),
                                C.inverse(mod.act_unit(X.obj[q])));
        return C.compose(xi, mod.act_mor(B.id(M.obj[q]), insert));
    });
}

template <class Mod>
CheckResult verify_p2(const Mod& mod, const FiniteCategory& I, const Diagram<typename Mod::M>& M,
                      const Diagram<typename Mod::C>& X, const Diagram<typename Mod::C>& Y) {
    FunctorCat<typename Mod::M> DM(mod.base, I);
    FunctorCat<typename Mod::C> DC(mod.cat, I);
    auto H = s5_hom(mod, I, M, Y);
    auto W = s5_map(mod, I, X, Y);
    auto mx = s5_tensor(mod, I, M, X);
    auto h0 = DC.hom_list(mx, Y);
    auto h1 = DC.hom_list(X, H.dia);
    auto h2 = DM.hom_list(M, W.dia);

    auto r1 = check_bijection(
        DC, h0, DC, h1, [&](const auto& f) { return p2_ta(mod, I, M, X, Y, H, f); },
        [&](const auto& g) { return p2_ta_inv(mod, I, M, X, Y, H, g); });
    if (!r1.ok) return {false, "Hom side: " + r1.detail};
    auto r2 = check_bijection(
        DC, h0, DM, h2, [&](const auto& f) { return p2_tb(mod, I, M, X, Y, W, f); },
        [&](const auto& g) { return p2_tb_inv(mod, I, M, X, Y, W, g); });
    if (!r2.ok) return {false, "Map side: " + r2.detail};
    return {true, ""};
}

}  // namespace rcat
