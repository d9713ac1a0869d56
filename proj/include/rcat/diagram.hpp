#pragma once

#include <functional>
#include <vector>

#include "rcat/cat_data.hpp"
#include "rcat/core.hpp"
#include "rcat/fincat.hpp"
#include "rcat/gfp.hpp"

namespace rcat {

/// Functor from a finite shape category into Cat: one object per shape
/// object, one morphism per shape arrow (identities included).
template <class Cat>
struct Diagram {
    FiniteCategory shape;
    std::vector<typename Cat::Obj> obj;
    std::vector<typename Cat::Mor> mor;

    const typename Cat::Obj& at(int i) const { return obj[i]; }
    const typename Cat::Mor& arr(int a) const { return mor[a]; }
};

template <class Cat>
Diagram<Cat> make_diagram(const Cat& C, const FiniteCategory& shape,
                          const std::function<typename Cat::Obj(int)>& on_obj,
                          const std::function<typename Cat::Mor(int)>& on_arrow) {
    Diagram<Cat> d;
    d.shape = shape;
    for (int i = 0; i < shape.n_objects; ++i) d.obj.push_back(on_obj(i));
    for (int a = 0; a < shape.n_arrows(); ++a) {
        if (shape.is_identity(a))
            d.mor.push_back(C.id(d.obj[shape.arrow_src[a]]));
        else
            d.mor.push_back(on_arrow(a));
    }
    return d;
}

template <class Cat>
ValidationReport validate_diagram(const Cat& C, const Diagram<Cat>& d) {
    ValidationReport rep;
    const FiniteCategory& s = d.shape;
    if (static_cast<int>(d.obj.size()) != s.n_objects ||
        static_cast<int>(d.mor.size()) != s.n_arrows()) {
        rep.issues.push_back({"structural", "diagram size mismatch"});
        return rep;
    }
    for (int a = 0; a < s.n_arrows(); ++a) {
        if (!C.eq_obj(C.src(d.mor[a]), d.obj[s.arrow_src[a]]) ||
            !C.eq_obj(C.tgt(d.mor[a]), d.obj[s.arrow_tgt[a]])) {
            rep.issues.push_back({"structural", "arrow " + std::to_string(a) + " has wrong endpoints"});
            return rep;
        }
    }
    for (int i = 0; i < s.n_objects; ++i)
        if (!C.eq(d.mor[s.identity[i]], C.id(d.obj[i])))
            rep.issues.push_back({"axiom", "identity not preserved at object " + std::to_string(i)});
    for (int g = 0; g < s.n_arrows(); ++g)
        for (int f = 0; f < s.n_arrows(); ++f)
            if (s.composable(g, f) &&
                !C.eq(d.mor[s.compose(g, f)], C.compose(d.mor[g], d.mor[f])))
                rep.issues.push_back({"axiom", "composition not preserved at (" + std::to_string(g) +
                                                   "," + std::to_string(f) + ")"});
    return rep;
}

template <class Cat>
struct NatTrans {
    Diagram<Cat> src, tgt;
    std::vector<typename Cat::Mor> comp;  // per shape object

    const typename Cat::Mor& at(int i) const { return comp[i]; }
};

template <class Cat>
NatTrans<Cat> make_nat(const Diagram<Cat>& src, const Diagram<Cat>& tgt,
                       const std::function<typename Cat::Mor(int)>& component) {
    NatTrans<Cat> n;
    n.src = src;
    n.tgt = tgt;
    for (int i = 0; i < src.shape.n_objects; ++i) n.comp.push_back(component(i));
    return n;
}

template <class Cat>
ValidationReport validate_nat(const Cat& C, const NatTrans<Cat>& n) {
    ValidationReport rep;
    const FiniteCategory& s = n.src.shape;
    if (static_cast<int>(n.comp.size()) != s.n_objects) {
        rep.issues.push_back({"structural", "component count mismatch"});
        return rep;
    }
    for (int i = 0; i < s.n_objects; ++i)
        if (!C.eq_obj(C.src(n.comp[i]), n.src.obj[i]) || !C.eq_obj(C.tgt(n.comp[i]), n.tgt.obj[i])) {
            rep.issues.push_back({"structural", "component " + std::to_string(i) + " has wrong endpoints"});
            return rep;
        }
    for (int a = 0; a < s.n_arrows(); ++a) {
        if (s.is_identity(a)) continue;
        int i = s.arrow_src[a], j = s.arrow_tgt[a];
        if (!C.eq(C.compose(n.tgt.mor[a], n.comp[i]), C.compose(n.comp[j], n.src.mor[a])))
            rep.issues.push_back({"axiom", "naturality fails at arrow " + std::to_string(a)});
    }
    return rep;
}

/// The category of diagrams over a fixed finite shape, with everything
/// computed pointwise. Satisfies the same structural interface as the base,
/// so diagram categories nest: FunctorCat<FunctorCat<ChainCat>> is C^I for
/// C itself a diagram category.
template <class Inner>
class FunctorCat {
  public:
    static constexpr bool linear = Inner::linear;
    using Obj = Diagram<Inner>;
    using Mor = NatTrans<Inner>;

    Inner inner;
    FiniteCategory shape;
    int p = 0;
    unsigned long long cap = 1000000;

    FunctorCat(Inner in, FiniteCategory sh) : inner(std::move(in)), shape(std::move(sh)) {
        if constexpr (linear) p = inner.p;
    }

    Obj src(const Mor& m) const { return m.src; }
    Obj tgt(const Mor& m) const { return m.tgt; }

    bool eq_obj(const Obj& a, const Obj& b) const {
        for (int i = 0; i < shape.n_objects; ++i)
            if (!inner.eq_obj(a.obj[i], b.obj[i])) return false;
        for (int f = 0; f < shape.n_arrows(); ++f)
            if (!inner.eq(a.mor[f], b.mor[f])) return false;
        return true;
    }

    bool eq(const Mor& a, const Mor& b) const {
        for (int i = 0; i < shape.n_objects; ++i)
            if (!inner.eq(a.comp[i], b.comp[i])) return false;
        return true;
    }

    Mor id(const Obj& o) const {
        return make_nat<Inner>(o, o, [&](int i) { return inner.id(o.obj[i]); });
    }

    Mor compose(const Mor& g, const Mor& f) const {
        return make_nat<Inner>(f.src, g.tgt,
                               [&](int i) { return inner.compose(g.comp[i], f.comp[i]); });
    }

    bool is_iso(const Mor& m) const {
        for (int i = 0; i < shape.n_objects; ++i)
            if (!inner.is_iso(m.comp[i])) return false;
        return true;
    }

    Mor inverse(const Mor& m) const {
        return make_nat<Inner>(m.tgt, m.src, [&](int i) { return inner.inverse(m.comp[i]); });
    }

    Mor zero_mor(const Obj& a, const Obj& b) const
        requires(linear)
    {
        return make_nat<Inner>(a, b, [&](int i) { return inner.zero_mor(a.obj[i], b.obj[i]); });
    }

    Mor add(const Mor& a, const Mor& b) const
        requires(linear)
    {
        return make_nat<Inner>(a.src, a.tgt, [&](int i) { return inner.add(a.comp[i], b.comp[i]); });
    }

    Mor scale(const Mor& a, int s) const
        requires(linear)
    {
        return make_nat<Inner>(a.src, a.tgt, [&](int i) { return inner.scale(a.comp[i], s); });
    }

    std::vector<int> flatten(const Mor& m) const
        requires(linear)
    {
        std::vector<int> out;
        for (int i = 0; i < shape.n_objects; ++i) {
            auto v = inner.flatten(m.comp[i]);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }

    /// All natural transformations a ⇒ b. Set-like tier: enumerate component
    /// tuples and filter by naturality. Linear tier: kernel of the naturality
    /// system expressed in per-object hom bases.
    std::vector<Mor> hom_list(const Obj& a, const Obj& b) const {
        if constexpr (!linear) {
            std::vector<std::vector<typename Inner::Mor>> cands;
            unsigned long long total = 1;
            for (int i = 0; i < shape.n_objects; ++i) {
                cands.push_back(inner.hom_list(a.obj[i], b.obj[i]));
                total *= std::max<std::size_t>(cands.back().size(), 1);
                if (total > cap) throw ResourceError("hom_list: candidate count exceeds cap");
                if (cands.back().empty()) return {};
            }
            std::vector<Mor> out;
            std::vector<std::size_t> idx(shape.n_objects, 0);
            while (true) {
                Mor n;
                n.src = a;
                n.tgt = b;
                for (int i = 0; i < shape.n_objects; ++i) n.comp.push_back(cands[i][idx[i]]);
                bool natural = true;
                for (int f = 0; f < shape.n_arrows() && natural; ++f) {
                    if (shape.is_identity(f)) continue;
                    int i = shape.arrow_src[f], j = shape.arrow_tgt[f];
                    natural = inner.eq(inner.compose(b.mor[f], n.comp[i]),
                                       inner.compose(n.comp[j], a.mor[f]));
                }
                if (natural) out.push_back(n);
                int k = 0;
                for (; k < shape.n_objects; ++k) {
                    if (++idx[k] < cands[k].size()) break;
                    idx[k] = 0;
                }
                if (k == shape.n_objects) break;
            }
            return out;
        } else {
            std::vector<std::vector<typename Inner::Mor>> basis;
            std::vector<int> offset;
            int nvars = 0;
            for (int i = 0; i < shape.n_objects; ++i) {
                basis.push_back(inner.hom_list(a.obj[i], b.obj[i]));
                offset.push_back(nvars);
                nvars += static_cast<int>(basis.back().size());
            }
            // rows: flattened naturality defect per non-identity arrow
            std::vector<std::vector<int>> rows;
            for (int f = 0; f < shape.n_arrows(); ++f) {
                if (shape.is_identity(f)) continue;
                int i = shape.arrow_src[f], j = shape.arrow_tgt[f];
                std::size_t width = 0;
                std::vector<std::vector<int>> cols(nvars);
                for (std::size_t k = 0; k < basis[i].size(); ++k) {
                    cols[offset[i] + static_cast<int>(k)] =
                        inner.flatten(inner.compose(b.mor[f], basis[i][k]));
                    width = cols[offset[i] + static_cast<int>(k)].size();
                }
                for (std::size_t k = 0; k < basis[j].size(); ++k) {
                    auto v = inner.flatten(inner.compose(basis[j][k], a.mor[f]));
                    for (int& x : v) x = (p - x) % p;
                    cols[offset[j] + static_cast<int>(k)] = v;
                    width = v.size();
                }
                for (std::size_t r = 0; r < width; ++r) {
                    std::vector<int> row(nvars, 0);
                    for (int v = 0; v < nvars; ++v)
                        if (!cols[v].empty()) row[v] = cols[v][r];
                    rows.push_back(std::move(row));
                }
            }
            Mat sys(static_cast<int>(rows.size()), nvars, p);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (int c = 0; c < nvars; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
            Mat ker = sys.kernel();
            std::vector<Mor> out;
            for (int k = 0; k < ker.cols(); ++k) {
                Mor n = zero_mor(a, b);
                for (int i = 0; i < shape.n_objects; ++i)
                    for (std::size_t bidx = 0; bidx < basis[i].size(); ++bidx) {
                        int c = ker.at(offset[i] + static_cast<int>(bidx), k);
                        if (c != 0)
                            n.comp[i] = inner.add(n.comp[i], inner.scale(basis[i][bidx], c));
                    }
                out.push_back(n);
            }
            return out;
        }
    }

    unsigned long long hom_size(const Obj& a, const Obj& b) const {
        if constexpr (!linear) {
            return hom_list(a, b).size();
        } else {
            int d = static_cast<int>(hom_list(a, b).size());
            unsigned long long r = 1;
            for (int i = 0; i < d; ++i) {
                if (r > (~0ULL) / static_cast<unsigned long long>(p))
                    throw ResourceError("hom_size overflow");
                r *= static_cast<unsigned long long>(p);
            }
            return r;
        }
    }

    using Product = ProdData<Obj, Mor>;
    using Coproduct = CoprodData<Obj, Mor>;
    struct Equalizer {
        Obj obj;
        Mor incl;
        std::vector<typename Inner::Equalizer> points;
    };
    struct Coequalizer {
        Obj obj;
        Mor proj;
        std::vector<typename Inner::Coequalizer> points;
    };

    Obj constant(const typename Inner::Obj& c) const {
        return make_diagram<Inner>(inner, shape, [&](int) { return c; },
                                   [&](int) { return inner.id(c); });
    }

    Obj terminal() const { return constant(inner.terminal()); }
    Obj initial() const { return constant(inner.initial()); }

    Product product(const std::vector<Obj>& xs) const {
        std::vector<typename Inner::Product> pts;
        for (int i = 0; i < shape.n_objects; ++i) {
            std::vector<typename Inner::Obj> factors;
            for (const Obj& x : xs) factors.push_back(x.obj[i]);
            pts.push_back(inner.product(factors));
        }
        Product pr;
        pr.factors = xs;
        pr.obj = make_diagram<Inner>(
            inner, shape, [&](int i) { return pts[i].obj; },
            [&](int f) {
                int i = shape.arrow_src[f], j = shape.arrow_tgt[f];
                std::vector<typename Inner::Mor> legs;
                for (std::size_t k = 0; k < xs.size(); ++k)
                    legs.push_back(inner.compose(xs[k].mor[f], pts[i].legs[k]));
                return inner.tuple(pts[j], pts[i].obj, legs);
            });
        for (std::size_t k = 0; k < xs.size(); ++k)
            pr.legs.push_back(
                make_nat<Inner>(pr.obj, xs[k], [&](int i) { return pts[i].legs[k]; }));
        return pr;
    }

    Mor tuple(const Product& pr, const Obj& apex, const std::vector<Mor>& legs) const {
        std::vector<typename Inner::Product> pts;
        for (int i = 0; i < shape.n_objects; ++i) {
            std::vector<typename Inner::Obj> factors;
            for (const Obj& x : pr.factors) factors.push_back(x.obj[i]);
            pts.push_back(inner.product(factors));
        }
        return make_nat<Inner>(apex, pr.obj, [&](int i) {
            std::vector<typename Inner::Mor> ls;
            for (const Mor& l : legs) ls.push_back(l.comp[i]);
            return inner.tuple(pts[i], apex.obj[i], ls);
        });
    }

    Coproduct coproduct(const std::vector<Obj>& xs) const {
        std::vector<typename Inner::Coproduct> pts;
        for (int i = 0; i < shape.n_objects; ++i) {
            std::vector<typename Inner::Obj> factors;
            for (const Obj& x : xs) factors.push_back(x.obj[i]);
            pts.push_back(inner.coproduct(factors));
        }
        Coproduct cp;
        cp.factors = xs;
        cp.obj = make_diagram<Inner>(
            inner, shape, [&](int i) { return pts[i].obj; },
            [&](int f) {
                int i = shape.arrow_src[f], j = shape.arrow_tgt[f];
                std::vector<typename Inner::Mor> legs;
                for (std::size_t k = 0; k < xs.size(); ++k)
                    legs.push_back(inner.compose(pts[j].legs[k], xs[k].mor[f]));
                return inner.cotuple(pts[i], pts[j].obj, legs);
            });
        for (std::size_t k = 0; k < xs.size(); ++k)
            cp.legs.push_back(
                make_nat<Inner>(xs[k], cp.obj, [&](int i) { return pts[i].legs[k]; }));
        return cp;
    }

    Mor cotuple(const Coproduct& cp, const Obj& target, const std::vector<Mor>& legs) const {
        std::vector<typename Inner::Coproduct> pts;
        for (int i = 0; i < shape.n_objects; ++i) {
            std::vector<typename Inner::Obj> factors;
            for (const Obj& x : cp.factors) factors.push_back(x.obj[i]);
            pts.push_back(inner.coproduct(factors));
        }
        return make_nat<Inner>(cp.obj, target, [&](int i) {
            std::vector<typename Inner::Mor> ls;
            for (const Mor& l : legs) ls.push_back(l.comp[i]);
            return inner.cotuple(pts[i], target.obj[i], ls);
        });
    }

    Equalizer equalizer(const Mor& u, const Mor& v) const {
        Equalizer e;
        for (int i = 0; i < shape.n_objects; ++i)
            e.points.push_back(inner.equalizer(u.comp[i], v.comp[i]));
        e.obj = make_diagram<Inner>(
            inner, shape, [&](int i) { return e.points[i].obj; },
            [&](int f) {
                int i = shape.arrow_src[f], j = shape.arrow_tgt[f];
                return inner.factor_equalizer(e.points[j],
                                              inner.compose(u.src.mor[f], e.points[i].incl));
            });
        e.incl = make_nat<Inner>(e.obj, u.src, [&](int i) { return e.points[i].incl; });
        return e;
    }

    Mor factor_equalizer(const Equalizer& e, const Mor& w) const {
        return make_nat<Inner>(w.src, e.obj,
                               [&](int i) { return inner.factor_equalizer(e.points[i], w.comp[i]); });
    }

    Coequalizer coequalizer(const Mor& u, const Mor& v) const {
        Coequalizer c;
        for (int i = 0; i < shape.n_objects; ++i)
            c.points.push_back(inner.coequalizer(u.comp[i], v.comp[i]));
        c.obj = make_diagram<Inner>(
            inner, shape, [&](int i) { return c.points[i].obj; },
            [&](int f) {
                int i = shape.arrow_src[f], j = shape.arrow_tgt[f];
                return inner.factor_coequalizer(
                    c.points[i], inner.compose(c.points[j].proj, u.tgt.mor[f]));
            });
        c.proj = make_nat<Inner>(u.tgt, c.obj, [&](int i) { return c.points[i].proj; });
        return c;
    }

    Mor factor_coequalizer(const Coequalizer& c, const Mor& w) const {
        return make_nat<Inner>(c.obj, w.tgt,
                               [&](int i) { return inner.factor_coequalizer(c.points[i], w.comp[i]); });
    }

    // pointwise symmetric monoidal structure
    Obj unit() const { return constant(inner.unit()); }

    Obj tensor_obj(const Obj& a, const Obj& b) const {
        return make_diagram<Inner>(
            inner, shape, [&](int i) { return inner.tensor_obj(a.obj[i], b.obj[i]); },
            [&](int f) { return inner.tensor_mor(a.mor[f], b.mor[f]); });
    }

    Mor tensor_mor(const Mor& f, const Mor& g) const {
        return make_nat<Inner>(tensor_obj(f.src, g.src), tensor_obj(f.tgt, g.tgt),
                               [&](int i) { return inner.tensor_mor(f.comp[i], g.comp[i]); });
    }

    Mor sym(const Obj& a, const Obj& b) const {
        return make_nat<Inner>(tensor_obj(a, b), tensor_obj(b, a),
                               [&](int i) { return inner.sym(a.obj[i], b.obj[i]); });
    }

    Mor lunit(const Obj& a) const {
        return make_nat<Inner>(tensor_obj(unit(), a), a,
                               [&](int i) { return inner.lunit(a.obj[i]); });
    }

    Mor runit(const Obj& a) const {
        return make_nat<Inner>(tensor_obj(a, unit()), a,
                               [&](int i) { return inner.runit(a.obj[i]); });
    }

    Mor assoc(const Obj& a, const Obj& b, const Obj& c) const {
        return make_nat<Inner>(tensor_obj(tensor_obj(a, b), c), tensor_obj(a, tensor_obj(b, c)),
                               [&](int i) { return inner.assoc(a.obj[i], b.obj[i], c.obj[i]); });
    }

    Coproduct copower(int n) const { return coproduct(std::vector<Obj>(n, unit())); }
};

// ---------------------------------------------------------------------------
// Finite limits and colimits of a diagram, via products and equalizers.

template <class C>
struct LimitData {
    typename C::Obj obj;
    std::vector<typename C::Mor> legs;  // per shape object
    typename C::Product pr;
    typename C::Equalizer eq;
};

template <class C>
LimitData<C> finite_limit(const C& cat, const Diagram<C>& d) {
    LimitData<C> lim;
    lim.pr = cat.product(d.obj);
    std::vector<typename C::Obj> q_factors;
    std::vector<typename C::Mor> u_legs, v_legs;
    for (int f = 0; f < d.shape.n_arrows(); ++f) {
        if (d.shape.is_identity(f)) continue;
        int i = d.shape.arrow_src[f], j = d.shape.arrow_tgt[f];
        q_factors.push_back(d.obj[j]);
        u_legs.push_back(lim.pr.legs[j]);
        v_legs.push_back(cat.compose(d.mor[f], lim.pr.legs[i]));
    }
    auto q = cat.product(q_factors);
    auto u = cat.tuple(q, lim.pr.obj, u_legs);
    auto v = cat.tuple(q, lim.pr.obj, v_legs);
    lim.eq = cat.equalizer(u, v);
    lim.obj = lim.eq.obj;
    for (int i = 0; i < d.shape.n_objects; ++i)
        lim.legs.push_back(cat.compose(lim.pr.legs[i], lim.eq.incl));
    return lim;
}

template <class C>
typename C::Mor factor_limit(const C& cat, const LimitData<C>& lim, const typename C::Obj& apex,
                             const std::vector<typename C::Mor>& cone) {
    return cat.factor_equalizer(lim.eq, cat.tuple(lim.pr, apex, cone));
}

template <class C>
struct ColimitData {
    typename C::Obj obj;
    std::vector<typename C::Mor> legs;  // per shape object
    typename C::Coproduct cp;
    typename C::Coequalizer ce;
};

template <class C>
ColimitData<C> finite_colimit(const C& cat, const Diagram<C>& d) {
    ColimitData<C> col;
    col.cp = cat.coproduct(d.obj);
    std::vector<typename C::Obj> r_factors;
    std::vector<typename C::Mor> u_legs, v_legs;
    for (int f = 0; f < d.shape.n_arrows(); ++f) {
        if (d.shape.is_identity(f)) continue;
        int i = d.shape.arrow_src[f], j = d.shape.arrow_tgt[f];
        r_factors.push_back(d.obj[i]);
        u_legs.push_back(col.cp.legs[i]);
        v_legs.push_back(cat.compose(col.cp.legs[j], d.mor[f]));
    }
    auto r = cat.coproduct(r_factors);
    auto u = cat.cotuple(r, col.cp.obj, u_legs);
    auto v = cat.cotuple(r, col.cp.obj, v_legs);
    col.ce = cat.coequalizer(u, v);
    col.obj = col.ce.obj;
    for (int i = 0; i < d.shape.n_objects; ++i)
        col.legs.push_back(cat.compose(col.ce.proj, col.cp.legs[i]));
    return col;
}

template <class C>
typename C::Mor factor_colimit(const C& cat, const ColimitData<C>& col, const typename C::Obj& target,
                               const std::vector<typename C::Mor>& cocone) {
    return cat.factor_coequalizer(col.ce, cat.cotuple(col.cp, target, cocone));
}

// ---------------------------------------------------------------------------
// Ends and coends of a bifunctor I^op × I → C, presented as a diagram over
// product_category(opposite(I), I); object (i, j) sits at index i*n + j.

template <class C>
struct EndData {
    typename C::Obj obj;
    std::vector<typename C::Mor> wedge;  // per I-object: obj → T(i, i)
    typename C::Product pr;
    typename C::Equalizer eq;
};

template <class C>
EndData<C> end_of(const C& cat, const FiniteCategory& I, const Diagram<C>& T) {
    int n = I.n_objects, na = I.n_arrows();
    EndData<C> e;
    std::vector<typename C::Obj> diag;
    for (int i = 0; i < n; ++i) diag.push_back(T.obj[i * n + i]);
    e.pr = cat.product(diag);
    std::vector<typename C::Obj> q_factors;
    std::vector<typename C::Mor> u_legs, v_legs;
    for (int f = 0; f < na; ++f) {
        if (I.is_identity(f)) continue;
        int i = I.arrow_src[f], j = I.arrow_tgt[f];
        q_factors.push_back(T.obj[i * n + j]);
        // T(id_i, f): T(i,i) → T(i,j) and T(f, id_j): T(j,j) → T(i,j)
        u_legs.push_back(cat.compose(T.mor[I.identity[i] * na + f], e.pr.legs[i]));
        v_legs.push_back(cat.compose(T.mor[f * na + I.identity[j]], e.pr.legs[j]));
    }
    auto q = cat.product(q_factors);
    auto u = cat.tuple(q, e.pr.obj, u_legs);
    auto v = cat.tuple(q, e.pr.obj, v_legs);
    e.eq = cat.equalizer(u, v);
    e.obj = e.eq.obj;
    for (int i = 0; i < n; ++i) e.wedge.push_back(cat.compose(e.pr.legs[i], e.eq.incl));
    return e;
}

template <class C>
typename C::Mor factor_end(const C& cat, const EndData<C>& e, const typename C::Obj& apex,
                           const std::vector<typename C::Mor>& wedge) {
    return cat.factor_equalizer(e.eq, cat.tuple(e.pr, apex, wedge));
}

template <class C>
struct CoendData {
    typename C::Obj obj;
    std::vector<typename C::Mor> cowedge;  // per I-object: T(i, i) → obj
    typename C::Coproduct cp;
    typename C::Coequalizer ce;
};

template <class C>
CoendData<C> coend_of(const C& cat, const FiniteCategory& I, const Diagram<C>& T) {
    int n = I.n_objects, na = I.n_arrows();
    CoendData<C> e;
    std::vector<typename C::Obj> diag;
    for (int i = 0; i < n; ++i) diag.push_back(T.obj[i * n + i]);
    e.cp = cat.coproduct(diag);
    std::vector<typename C::Obj> r_factors;
    std::vector<typename C::Mor> u_legs, v_legs;
    for (int f = 0; f < na; ++f) {
        if (I.is_identity(f)) continue;
        int i = I.arrow_src[f], j = I.arrow_tgt[f];
        r_factors.push_back(T.obj[j * n + i]);
        // T(f, id_i): T(j,i) → T(i,i) and T(id_j, f): T(j,i) → T(j,j)
        u_legs.push_back(cat.compose(e.cp.legs[i], T.mor[f * na + I.identity[i]]));
        v_legs.push_back(cat.compose(e.cp.legs[j], T.mor[I.identity[j] * na + f]));
    }
    auto r = cat.coproduct(r_factors);
    auto u = cat.cotuple(r, e.cp.obj, u_legs);
    auto v = cat.cotuple(r, e.cp.obj, v_legs);
    e.ce = cat.coequalizer(u, v);
    e.obj = e.ce.obj;
    for (int i = 0; i < n; ++i) e.cowedge.push_back(cat.compose(e.ce.proj, e.cp.legs[i]));
    return e;
}

template <class C>
typename C::Mor factor_coend(const C& cat, const CoendData<C>& e, const typename C::Obj& target,
                             const std::vector<typename C::Mor>& cowedge) {
    return cat.factor_coequalizer(e.ce, cat.cotuple(e.cp, target, cowedge));
}

// ---------------------------------------------------------------------------
// Pushouts and pullbacks.

template <class C>
struct PushoutData {
    typename C::Obj obj;
    typename C::Mor leg_b, leg_c;  // from tgt(f), tgt(g)
    typename C::Coproduct cp;
    typename C::Coequalizer ce;
};

/// Pushout of B ← A → C along f: A→B, g: A→C.
template <class C>
PushoutData<C> pushout(const C& cat, const typename C::Mor& f, const typename C::Mor& g) {
    PushoutData<C> po;
    po.cp = cat.coproduct({cat.tgt(f), cat.tgt(g)});
    auto u = cat.compose(po.cp.legs[0], f);
    auto v = cat.compose(po.cp.legs[1], g);
    po.ce = cat.coequalizer(u, v);
    po.obj = po.ce.obj;
    po.leg_b = cat.compose(po.ce.proj, po.cp.legs[0]);
    po.leg_c = cat.compose(po.ce.proj, po.cp.legs[1]);
    return po;
}

template <class C>
typename C::Mor factor_pushout(const C& cat, const PushoutData<C>& po, const typename C::Obj& target,
                               const typename C::Mor& from_b, const typename C::Mor& from_c) {
    return cat.factor_coequalizer(po.ce, cat.cotuple(po.cp, target, {from_b, from_c}));
}

template <class C>
struct PullbackData {
    typename C::Obj obj;
    typename C::Mor leg_b, leg_c;  // to src(f), src(g)
    typename C::Product pr;
    typename C::Equalizer eq;
};

/// Pullback of B → A ← C along f: B→A, g: C→A.
template <class C>
PullbackData<C> pullback(const C& cat, const typename C::Mor& f, const typename C::Mor& g) {
    PullbackData<C> pb;
    pb.pr = cat.product({cat.src(f), cat.src(g)});
    auto u = cat.compose(f, pb.pr.legs[0]);
    auto v = cat.compose(g, pb.pr.legs[1]);
    pb.eq = cat.equalizer(u, v);
    pb.obj = pb.eq.obj;
    pb.leg_b = cat.compose(pb.pr.legs[0], pb.eq.incl);
    pb.leg_c = cat.compose(pb.pr.legs[1], pb.eq.incl);
    return pb;
}

template <class C>
typename C::Mor factor_pullback(const C& cat, const PullbackData<C>& pb, const typename C::Obj& apex,
                                const typename C::Mor& to_b, const typename C::Mor& to_c) {
    return cat.factor_equalizer(pb.eq, cat.tuple(pb.pr, apex, {to_b, to_c}));
}

}  // namespace rcat
