#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rcat/cat_data.hpp"
#include "rcat/core.hpp"
#include "rcat/gfp.hpp"

namespace rcat {

/// Bounded chain complex over GF(p). dims[t] is the dimension in degree
/// lo+t; d[t] is the differential out of degree lo+t (shape dims[t-1] x
/// dims[t]). d∘d = 0 always; dimensions outside the support are zero.
struct ChainComplex {
    int p = 2;
    int lo = 0;
    std::vector<int> dims;
    std::vector<Mat> d;

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    int dim(int n) const;
    Mat diff(int n) const;  // C_n -> C_{n-1}, zero-shaped outside support
    int total_dim() const;
    bool operator==(const ChainComplex& o) const;
    bool operator!=(const ChainComplex& o) const { return !(*this == o); }
};

/// Builds a complex from raw data, trimming zero-dimensional ends.
ChainComplex make_complex(int p, int lo, std::vector<int> dims, std::vector<Mat> diffs);
ChainComplex zero_complex(int p);
ChainComplex unit_complex(int p);  // k concentrated in degree 0
/// The acyclic disk: identity map from degree n to degree n-1.
ChainComplex disk_complex(int p, int n);

ValidationReport validate_complex(const ChainComplex& c);

struct ChainMap {
    ChainComplex src, tgt;
    int lo = 0;
    std::vector<Mat> comps;  // comps[t]: component in degree lo+t

    Mat comp(int n) const;  // tgt.dim(n) x src.dim(n)
    bool operator==(const ChainMap& o) const;
    bool operator!=(const ChainMap& o) const { return !(*this == o); }
};

ChainMap make_chain_map(const ChainComplex& src, const ChainComplex& tgt,
                        const std::function<Mat(int)>& component);

ValidationReport validate_chain_map(const ChainMap& f);

struct ChainFlags {
    bool cofibration = false;
    bool fibration = false;
    bool weak_equivalence = false;
    bool trivial_cofibration = false;
    bool trivial_fibration = false;
};

struct HomologyVector {
    int lo = 0;
    std::vector<int> dims;
    int dim(int n) const;
    bool operator==(const HomologyVector& o) const;
};

enum class FactKind { CofThenTrivFib, TrivCofThenFib };

/// Chain complexes over GF(p) as a bicomplete closed symmetric monoidal
/// model category: weak equivalences are quasi-isomorphisms, fibrations are
/// degreewise surjections, cofibrations are degreewise injections. Over a
/// field every model-structure predicate is a rank computation.
class ChainCat {
  public:
    static constexpr bool linear = true;
    using Obj = ChainComplex;
    using Mor = ChainMap;

    int p = 2;
    unsigned long long cap = 1000000;

    explicit ChainCat(int prime = 2) : p(prime) {}

    Obj src(const Mor& m) const { return m.src; }
    Obj tgt(const Mor& m) const { return m.tgt; }
    bool eq_obj(const Obj& a, const Obj& b) const { return a == b; }
    bool eq(const Mor& a, const Mor& b) const { return a == b; }

    Mor id(const Obj& o) const;
    Mor compose(const Mor& g, const Mor& f) const;
    Mor zero_mor(const Obj& a, const Obj& b) const;
    Mor add(const Mor& a, const Mor& b) const;
    Mor scale(const Mor& a, int s) const;
    bool is_iso(const Mor& m) const;
    Mor inverse(const Mor& m) const;

    /// Basis of the space of chain maps a→b (kernel of the d-commutation system).
    std::vector<Mor> hom_list(const Obj& a, const Obj& b) const;
    unsigned long long hom_size(const Obj& a, const Obj& b) const;  // p^dim
    int hom_dim(const Obj& a, const Obj& b) const;
    std::vector<int> flatten(const Mor& m) const;

    using Product = ProdData<Obj, Mor>;
    using Coproduct = CoprodData<Obj, Mor>;
    struct Equalizer {
        Obj obj;
        Mor incl;
    };
    struct Coequalizer {
        Obj obj;
        Mor proj;
        std::vector<std::pair<int, Mat>> proj_rinv;  // per degree right inverse
        Mat rinv(int n, int p) const;
    };

    Obj terminal() const { return zero_complex(p); }
    Obj initial() const { return zero_complex(p); }
    Product product(const std::vector<Obj>& xs) const;
    Mor tuple(const Product& pr, const Obj& apex, const std::vector<Mor>& legs) const;
    Coproduct coproduct(const std::vector<Obj>& xs) const;
    Mor cotuple(const Coproduct& c, const Obj& target, const std::vector<Mor>& legs) const;
    Equalizer equalizer(const Mor& u, const Mor& v) const;
    Mor factor_equalizer(const Equalizer& e, const Mor& w) const;
    Coequalizer coequalizer(const Mor& u, const Mor& v) const;
    Mor factor_coequalizer(const Coequalizer& c, const Mor& w) const;

    // closed symmetric monoidal structure
    Obj unit() const { return unit_complex(p); }
    Obj tensor_obj(const Obj& a, const Obj& b) const;
    Mor tensor_mor(const Mor& f, const Mor& g) const;
    Mor sym(const Obj& a, const Obj& b) const;  // Koszul sign (-1)^{|a||b|}
    Mor lunit(const Obj& a) const;              // k⊗a → a
    Mor runit(const Obj& a) const;              // a⊗k → a
    Mor assoc(const Obj& a, const Obj& b, const Obj& c) const;  // (a⊗b)⊗c → a⊗(b⊗c)

    /// Internal hom: pow(b, a)_n = ⊕_k Hom(a_k, b_{k+n}); differential
    /// δφ = d∘φ − (−1)^n φ∘d.
    Obj pow_obj(const Obj& b, const Obj& a) const;
    Mor pow_mor(const Mor& f, const Mor& g) const;  // f: a'→a, g: b→b'
    Mor curry(const Mor& f, const Obj& a, const Obj& b, const Obj& c) const;
    Mor uncurry(const Mor& g, const Obj& a, const Obj& b, const Obj& c) const;

    Coproduct copower(int n) const;

    HomologyVector homology(const Obj& a) const;
    bool quasi_iso(const Mor& f) const;
    ChainFlags classify(const Mor& f) const;
    std::pair<Mor, Mor> factorize(const Mor& f, FactKind kind) const;

    /// Corner map of the pushout of a⊗Y ← a⊗X → b⊗X into b⊗Y.
    Mor pushout_product(const Mor& f, const Mor& g) const;

    // block layout helpers for tensor/hom (offset of block within degree n)
    int tensor_block_offset(const Obj& a, const Obj& b, int n, int i) const;
    int hom_block_offset(const Obj& a, const Obj& b, int n, int k) const;
};

}  // namespace rcat
