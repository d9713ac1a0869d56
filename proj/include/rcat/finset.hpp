#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcat/cat_data.hpp"
#include "rcat/core.hpp"

namespace rcat {

/// Object of FinSet: elements are the indices 0..size-1.
struct FinSetObj {
    int size = 0;
    bool operator==(const FinSetObj& o) const { return size == o.size; }
};

struct FinSetMor {
    int src = 0, tgt = 0;          // sizes
    std::vector<int> table;        // length src, entries < tgt
    bool operator==(const FinSetMor& o) const {
        return src == o.src && tgt == o.tgt && table == o.table;
    }
};

/// The category of finite sets as a bicomplete cartesian closed symmetric
/// monoidal category. The monoidal structure is the cartesian product with
/// singleton unit; pairs (i, j) are encoded as i*size_b + j. The exhaustive
/// hom enumeration makes this the oracle tier for every set-level check.
class FinSetCat {
  public:
    static constexpr bool linear = false;
    using Obj = FinSetObj;
    using Mor = FinSetMor;

    unsigned long long cap = 1000000;

    Obj src(const Mor& m) const { return {m.src}; }
    Obj tgt(const Mor& m) const { return {m.tgt}; }
    bool eq_obj(const Obj& a, const Obj& b) const { return a.size == b.size; }
    bool eq(const Mor& a, const Mor& b) const { return a == b; }

    Mor id(const Obj& o) const;
    Mor compose(const Mor& g, const Mor& f) const;
    bool is_iso(const Mor& m) const;
    Mor inverse(const Mor& m) const;

    /// All size(b)^size(a) maps in lexicographic order of the encoded index.
    std::vector<Mor> hom_list(const Obj& a, const Obj& b) const;
    unsigned long long hom_size(const Obj& a, const Obj& b) const;

    // limits / colimits
    using Product = ProdData<Obj, Mor>;
    using Coproduct = CoprodData<Obj, Mor>;
    struct Equalizer {
        Obj obj;
        Mor incl;
        std::vector<int> members;  // ascending element indices of the subset
    };
    struct Coequalizer {
        Obj obj;
        Mor proj;
        std::vector<int> reps;  // minimal representative per class
    };

    Obj terminal() const { return {1}; }
    Obj initial() const { return {0}; }
    Product product(const std::vector<Obj>& xs) const;
    Mor tuple(const Product& p, const Obj& apex, const std::vector<Mor>& legs) const;
    Coproduct coproduct(const std::vector<Obj>& xs) const;
    Mor cotuple(const Coproduct& c, const Obj& target, const std::vector<Mor>& legs) const;
    Equalizer equalizer(const Mor& u, const Mor& v) const;
    Mor factor_equalizer(const Equalizer& e, const Mor& w) const;
    Coequalizer coequalizer(const Mor& u, const Mor& v) const;
    Mor factor_coequalizer(const Coequalizer& c, const Mor& w) const;

    // closed symmetric monoidal structure (cartesian)
    Obj unit() const { return {1}; }
    Obj tensor_obj(const Obj& a, const Obj& b) const { return {a.size * b.size}; }
    Mor tensor_mor(const Mor& f, const Mor& g) const;
    Mor sym(const Obj& a, const Obj& b) const;
    Mor lunit(const Obj& a) const { return id(a); }  // strict: 1×a == a elementwise
    Mor runit(const Obj& a) const { return id(a); }
    Mor assoc(const Obj& a, const Obj& b, const Obj& c) const { return id({a.size * b.size * c.size}); }

    /// pow(b, a) = b^a, maps a→b; encoding e = Σ table[x]·|b|^x.
    Obj pow_obj(const Obj& b, const Obj& a) const;
    Mor pow_mor(const Mor& f, const Mor& g) const;  // pow(b,a) -> pow(b',a') for f:a'→a, g:b→b'
    Mor curry(const Mor& f, const Obj& a, const Obj& b, const Obj& c) const;    // f: a⊗b→c  ⇒  a→pow(c,b)
    Mor uncurry(const Mor& g, const Obj& a, const Obj& b, const Obj& c) const;  // g: a→pow(c,b) ⇒ a⊗b→c
    Mor eval(const Obj& a, const Obj& b) const;  // pow(b,a)⊗a → b

    Coproduct copower(int n) const;  // n-fold coproduct of the unit

    int decode_pow(int elt, int x, int base_size) const;  // value of function elt at x
    int encode_pow(const std::vector<int>& table, int base_size) const;
};

}  // namespace rcat
