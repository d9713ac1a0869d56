#pragma once

#include <functional>

#include "rcat/chain.hpp"
#include "rcat/core.hpp"
#include "rcat/finset.hpp"
#include "rcat/yoneda.hpp"

namespace rcat {

/// Random bounded complex with d∘d = 0 by construction: each differential is
/// sampled inside the kernel of the previous one.
inline ChainComplex random_complex(Rng& rng, int p, int max_span = 3, int max_dim = 3) {
    int lo = rng.below(3) - 1;
    int span = 1 + rng.below(max_span);
    std::vector<int> dims;
    for (int t = 0; t < span; ++t) dims.push_back(rng.below(max_dim + 1));
    std::vector<Mat> diffs;
    Mat prev(0, dims.empty() ? 0 : dims[0], p);
    for (int t = 0; t < span; ++t) {
        if (t == 0) {
            diffs.push_back(Mat(0, dims[0], p));
            prev = diffs.back();
            continue;
        }
        Mat ker = prev.cols() == 0 ? Mat::eye(dims[t - 1], p) : prev.kernel();
        Mat coef(ker.cols(), dims[t], p);
        for (int& v : coef.data()) v = rng.below(p);
        diffs.push_back(ker * coef);
        prev = diffs.back();
    }
    return make_complex(p, lo, dims, diffs);
}

/// Random element of the space of chain maps a→b (random basis combination).
inline ChainMap random_chain_map(const ChainCat& C, const ChainComplex& a, const ChainComplex& b,
                                 Rng& rng) {
    auto basis = C.hom_list(a, b);
    ChainMap f = C.zero_mor(a, b);
    for (const auto& e : basis) {
        int c = rng.below(C.p);
        if (c != 0) f = C.add(f, make_chain_map(a, b, [&](int n) { return e.comp(n).scaled(c); }));
    }
    return f;
}

/// Random free diagram ∐ h_i ⊗ c over the given shape. Functorial by
/// construction; c sampled with the provided object sampler.
template <class C>
Diagram<C> random_free_diagram(const C& cat, const FiniteCategory& I, Rng& rng,
                               const std::function<typename C::Obj(Rng&)>& rand_obj,
                               int max_cells = 2) {
    std::vector<std::pair<int, typename C::Obj>> cells;
    int n = 1 + rng.below(max_cells);
    for (int k = 0; k < n; ++k) cells.push_back({rng.below(I.n_objects), rand_obj(rng)});
    return free_diagram(cat, I, cells);
}

/// Random natural transformation, drawn from the full hom enumeration.
template <class Inner>
NatTrans<Inner> random_nat(const FunctorCat<Inner>& D, const Diagram<Inner>& a,
                           const Diagram<Inner>& b, Rng& rng) {
    auto homs = D.hom_list(a, b);
    if constexpr (FunctorCat<Inner>::linear) {
        auto f = D.zero_mor(a, b);
        for (const auto& e : homs) {
            int c = rng.below(D.p);
            if (c != 0) f = D.add(f, D.scale(e, c));
        }
        return f;
    } else {
        if (homs.empty()) throw StructuralError("random_nat: empty hom set");
        return homs[rng.below(static_cast<int>(homs.size()))];
    }
}

/// Random map in FinSet between the given sizes.
inline FinSetMor random_finset_map(Rng& rng, int src, int tgt) {
    FinSetMor m{src, tgt, std::vector<int>(src)};
    for (int& v : m.table) v = rng.below(tgt);
    return m;
}

}  // namespace rcat
