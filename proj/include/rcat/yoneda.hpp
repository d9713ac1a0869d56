#pragma once

#include "rcat/diagram.hpp"

namespace rcat {

/// Index of arrow f within hom(i, j); arrows listed in ascending index order.
inline int hom_index(const FiniteCategory& I, int i, int j, int f) {
    auto h = I.hom(i, j);
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] == f) return static_cast<int>(k);
    throw StructuralError("hom_index: arrow not in hom set");
}

/// Representable-type diagram h_i: j ↦ ∐_{I(i,j)} unit; an arrow g: j → j'
/// sends the f-summand identically onto the (g∘f)-summand.
template <class C>
Diagram<C> yoneda_lower(const C& cat, const FiniteCategory& I, int i) {
    return make_diagram<C>(
        cat, I,
        [&](int j) { return cat.copower(static_cast<int>(I.hom(i, j).size())).obj; },
        [&](int g) {
            int j = I.arrow_src[g], j2 = I.arrow_tgt[g];
            auto src_cp = cat.copower(static_cast<int>(I.hom(i, j).size()));
            auto tgt_cp = cat.copower(static_cast<int>(I.hom(i, j2).size()));
            std::vector<typename C::Mor> legs;
            for (int f : I.hom(i, j))
                legs.push_back(tgt_cp.legs[hom_index(I, i, j2, I.compose(g, f))]);
            return cat.cotuple(src_cp, tgt_cp.obj, legs);
        });
}

/// Contravariant representable h^i: j ↦ ∐_{I(j,i)} unit, presented as a
/// diagram over opposite(I). The opposite keeps arrow indices, so an
/// opposite-arrow g (originally j → j' in I) acts by f ↦ f∘g.
template <class C>
Diagram<C> yoneda_upper(const C& cat, const FiniteCategory& I, int i) {
    FiniteCategory op = opposite(I);
    return make_diagram<C>(
        cat, op,
        [&](int j) { return cat.copower(static_cast<int>(I.hom(j, i).size())).obj; },
        [&](int g) {
            int j = I.arrow_src[g], j2 = I.arrow_tgt[g];  // g: j → j2 in I; op sends j2 to j
            auto src_cp = cat.copower(static_cast<int>(I.hom(j2, i).size()));
            auto tgt_cp = cat.copower(static_cast<int>(I.hom(j, i).size()));
            std::vector<typename C::Mor> legs;
            for (int f : I.hom(j2, i))
                legs.push_back(tgt_cp.legs[hom_index(I, j, i, I.compose(f, g))]);
            return cat.cotuple(src_cp, tgt_cp.obj, legs);
        });
}

/// Tensor of a diagram with a constant object, pointwise.
template <class C>
Diagram<C> tensor_const(const C& cat, const Diagram<C>& d, const typename C::Obj& c) {
    return make_diagram<C>(
        cat, d.shape, [&](int j) { return cat.tensor_obj(d.obj[j], c); },
        [&](int f) { return cat.tensor_mor(d.mor[f], cat.id(c)); });
}

/// Free diagram ∐_k h_{i_k} ⊗ c_k; functorial by construction, and cofibrant
/// when every c_k is.
template <class C>
Diagram<C> free_diagram(const C& cat, const FiniteCategory& I,
                        const std::vector<std::pair<int, typename C::Obj>>& cells) {
    FunctorCat<C> D(cat, I);
    std::vector<Diagram<C>> summands;
    for (const auto& [i, c] : cells) summands.push_back(tensor_const(cat, yoneda_lower(cat, I, i), c));
    if (summands.empty()) return D.initial();
    return D.coproduct(summands).obj;
}

/// Cofree diagram ∏_k c_k^{h^{i_k}}: j ↦ ∏_k pow(c_k, ∐_{I(j, i_k)} unit).
template <class C>
Diagram<C> cofree_diagram(const C& cat, const FiniteCategory& I,
                          const std::vector<std::pair<int, typename C::Obj>>& cells) {
    auto point = [&](int j) {
        std::vector<typename C::Obj> factors;
        for (const auto& [i, c] : cells)
            factors.push_back(cat.pow_obj(c, cat.copower(static_cast<int>(I.hom(j, i).size())).obj));
        return cat.product(factors);
    };
    return make_diagram<C>(
        cat, I, [&](int j) { return point(j).obj; },
        [&](int g) {
            int j = I.arrow_src[g], j2 = I.arrow_tgt[g];
            auto src_pr = point(j), tgt_pr = point(j2);
            std::vector<typename C::Mor> legs;
            for (std::size_t k = 0; k < cells.size(); ++k) {
                const auto& [i, c] = cells[k];
                auto cpj = cat.copower(static_cast<int>(I.hom(j, i).size()));
                auto cpj2 = cat.copower(static_cast<int>(I.hom(j2, i).size()));
                // restriction along g: summand f ∈ I(j2, i) comes from f∘g ∈ I(j, i)
                std::vector<typename C::Mor> rl;
                for (int f : I.hom(j2, i))
                    rl.push_back(cpj.legs[hom_index(I, j, i, I.compose(f, g))]);
                auto restrict_g = cat.cotuple(cpj2, cpj.obj, rl);
                legs.push_back(cat.compose(cat.pow_mor(restrict_g, cat.id(c)), src_pr.legs[k]));
            }
            return cat.tuple(tgt_pr, src_pr.obj, legs);
        });
}

}  // namespace rcat
