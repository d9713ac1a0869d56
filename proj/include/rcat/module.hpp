#pragma once

#include "rcat/diagram.hpp"
#include "rcat/yoneda.hpp"

namespace rcat {

/// Closed-module interface (duck typed): a monoidal base M acting on a
/// category C with action ⊗, power (−)^m, enriched hom map_C, and the two
/// transpositions
///   t1: C(m⊗x, y) → C(x, y^m)      t2: C(m⊗x, y) → M(m, map_C(x, y))
/// given elementwise together with exact inverses.
///
/// SelfModule: C = M acting on itself; everything is the base closed
/// symmetric monoidal structure.
template <class B>
struct SelfModule {
    using M = B;
    using C = B;

    B base;
    B cat;

    explicit SelfModule(B b) : base(b), cat(b) {}

    using MObj = typename B::Obj;
    using MMor = typename B::Mor;
    using CObj = typename B::Obj;
    using CMor = typename B::Mor;

    CObj act(const MObj& m, const CObj& x) const { return base.tensor_obj(m, x); }
    CMor act_mor(const MMor& fm, const CMor& fx) const { return base.tensor_mor(fm, fx); }

    CObj pow(const CObj& x, const MObj& m) const { return base.pow_obj(x, m); }
    // fm: m' → m, fx: x → x'  gives  x^m → x'^{m'}
    CMor pow_mor(const MMor& fm, const CMor& fx) const { return base.pow_mor(fm, fx); }

    MObj map_obj(const CObj& x, const CObj& y) const { return base.pow_obj(y, x); }
    // fx: x' → x, fy: y → y'  gives  map(x,y) → map(x',y')
    MMor map_mor(const CMor& fx, const CMor& fy) const { return base.pow_mor(fx, fy); }

    CMor t1(const CMor& f, const MObj& m, const CObj& x, const CObj& y) const {
        return base.curry(base.compose(f, base.sym(x, m)), x, m, y);
    }
    CMor t1_inv(const CMor& g, const MObj& m, const CObj& x, const CObj& y) const {
        return base.compose(base.uncurry(g, x, m, y), base.sym(m, x));
    }
    MMor t2(const CMor& f, const MObj& m, const CObj& x, const CObj& y) const {
        return base.curry(f, m, x, y);
    }
    CMor t2_inv(const MMor& u, const MObj& m, const CObj& x, const CObj& y) const {
        return base.uncurry(u, m, x, y);
    }

    CMor act_unit(const CObj& x) const { return base.lunit(x); }
    CMor pow_unit(const CObj& x) const { return base.curry(base.runit(x), x, base.unit(), x); }
    CMor act_assoc(const MObj& m, const MObj& m2, const CObj& x) const {
        return base.assoc(m, m2, x);
    }
};

/// Lifts a closed module structure pointwise to diagrams: if M acts on C,
/// then M acts on C^J with (m⊗X)_j = m⊗X_j, (X^m)_j = X_j^m and
/// map(X,Y) = ∫_j map_C(X_j, Y_j). This single construction carries the
/// module structures on M^I (inner = self) and on C^I.
template <class Mod>
struct PointwiseModule {
    using InnerC = typename Mod::C;
    using M = typename Mod::M;
    using C = FunctorCat<InnerC>;

    Mod inner;
    M base;
    C cat;
    FiniteCategory shape;

    PointwiseModule(Mod in, FiniteCategory J)
        : inner(in), base(in.base), cat(in.cat, J), shape(std::move(J)) {}

    using MObj = typename M::Obj;
    using MMor = typename M::Mor;
    using CObj = typename C::Obj;
    using CMor = typename C::Mor;

    CObj act(const MObj& m, const CObj& X) const {
        return make_diagram<InnerC>(
            inner.cat, shape, [&](int j) { return inner.act(m, X.obj[j]); },
            [&](int f) { return inner.act_mor(base.id(m), X.mor[f]); });
    }
    CMor act_mor(const MMor& fm, const CMor& fx) const {
        return make_nat<InnerC>(act(base.src(fm), fx.src), act(base.tgt(fm), fx.tgt),
                                [&](int j) { return inner.act_mor(fm, fx.comp[j]); });
    }

    CObj pow(const CObj& X, const MObj& m) const {
        return make_diagram<InnerC>(
            inner.cat, shape, [&](int j) { return inner.pow(X.obj[j], m); },
            [&](int f) { return inner.pow_mor(base.id(m), X.mor[f]); });
    }
    CMor pow_mor(const MMor& fm, const CMor& fx) const {
        return make_nat<InnerC>(pow(fx.src, base.tgt(fm)), pow(fx.tgt, base.src(fm)),
                                [&](int j) { return inner.pow_mor(fm, fx.comp[j]); });
    }

    /// map(X, Y) = ∫_j map_C(X_j, Y_j), kept with its end data so the t2
    /// transposition can factor wedges through it.
    EndData<M> map_end(const CObj& X, const CObj& Y) const {
        FiniteCategory sq = product_category(opposite(shape), shape);
        int n = shape.n_objects, na = shape.n_arrows();
        auto T = make_diagram<M>(
            base, sq, [&](int jj) { return inner.map_obj(X.obj[jj / n], Y.obj[jj % n]); },
            [&](int ab) { return inner.map_mor(X.mor[ab / na], Y.mor[ab % na]); });
        return end_of(base, shape, T);
    }
    MObj map_obj(const CObj& X, const CObj& Y) const { return map_end(X, Y).obj; }
    MMor map_mor(const CMor& fx, const CMor& fy) const {
        auto e = map_end(fx.tgt, fy.src);
        auto e2 = map_end(fx.src, fy.tgt);
        std::vector<MMor> wedge;
        for (int j = 0; j < shape.n_objects; ++j)
            wedge.push_back(base.compose(inner.map_mor(fx.comp[j], fy.comp[j]), e.wedge[j]));
        return factor_end(base, e2, e.obj, wedge);
    }

    CMor t1(const CMor& f, const MObj& m, const CObj& X, const CObj& Y) const {
        return make_nat<InnerC>(X, pow(Y, m),
                                [&](int j) { return inner.t1(f.comp[j], m, X.obj[j], Y.obj[j]); });
    }
    CMor t1_inv(const CMor& g, const MObj& m, const CObj& X, const CObj& Y) const {
        return make_nat<InnerC>(act(m, X), Y, [&](int j) {
            return inner.t1_inv(g.comp[j], m, X.obj[j], Y.obj[j]);
        });
    }
    MMor t2(const CMor& f, const MObj& m, const CObj& X, const CObj& Y) const {
        auto e = map_end(X, Y);
        std::vector<MMor> wedge;
        for (int j = 0; j < shape.n_objects; ++j)
            wedge.push_back(inner.t2(f.comp[j], m, X.obj[j], Y.obj[j]));
        return factor_end(base, e, m, wedge);
    }
    CMor t2_inv(const MMor& u, const MObj& m, const CObj& X, const CObj& Y) const {
        auto e = map_end(X, Y);
        return make_nat<InnerC>(act(m, X), Y, [&](int j) {
            return inner.t2_inv(base.compose(e.wedge[j], u), m, X.obj[j], Y.obj[j]);
        });
    }

    CMor act_unit(const CObj& X) const {
        return make_nat<InnerC>(act(base.unit(), X), X,
                                [&](int j) { return inner.act_unit(X.obj[j]); });
    }
    CMor pow_unit(const CObj& X) const {
        return make_nat<InnerC>(X, pow(X, base.unit()),
                                [&](int j) { return inner.pow_unit(X.obj[j]); });
    }
    CMor act_assoc(const MObj& m, const MObj& m2, const CObj& X) const {
        return make_nat<InnerC>(act(base.tensor_obj(m, m2), X), act(m, act(m2, X)),
                                [&](int j) { return inner.act_assoc(m, m2, X.obj[j]); });
    }
};

/// Mediates a map out of an object B covered by a jointly-isomorphic family
/// incl_k: A_k → B (the coproduct comparison map must be invertible): returns
/// the unique B → Z restricting to outs_k on each A_k.
template <class C>
typename C::Mor mediate_out(const C& cat, const std::vector<typename C::Mor>& incls,
                            const typename C::Obj& b, const std::vector<typename C::Mor>& outs,
                            const typename C::Obj& z) {
    std::vector<typename C::Obj> srcs;
    for (const auto& m : incls) srcs.push_back(cat.src(m));
    auto cp = cat.coproduct(srcs);
    auto cover = cat.cotuple(cp, b, incls);
    if (!cat.is_iso(cover)) throw StructuralError("mediate_out: family is not jointly isomorphic");
    return cat.compose(cat.cotuple(cp, z, outs), cat.inverse(cover));
}

/// The canonical map h⊗x → z determined by a family z_f: x → z indexed by
/// the summands of h = ∐_S k: the f-summand acts by z_f after the unit
/// isomorphism. Used by every Yoneda-style (co)wedge.
template <class Mod>
typename Mod::C::Mor act_copower_cotuple(const Mod& mod, int n_summands,
                                         const typename Mod::C::Obj& x,
                                         const std::vector<typename Mod::C::Mor>& zf,
                                         const typename Mod::C::Obj& z) {
    auto cp = mod.base.copower(n_summands);
    std::vector<typename Mod::C::Mor> incls, outs;
    for (int k = 0; k < n_summands; ++k) {
        incls.push_back(mod.act_mor(cp.legs[k], mod.cat.id(x)));
        outs.push_back(mod.cat.compose(zf[k], mod.act_unit(x)));
    }
    auto hx = mod.act(cp.obj, x);
    return mediate_out(mod.cat, incls, hx, outs, z);
}

}  // namespace rcat
