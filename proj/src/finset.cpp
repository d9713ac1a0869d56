#include "rcat/finset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace rcat {

namespace {

unsigned long long checked_pow(unsigned long long b, unsigned long long e,
                               unsigned long long cap) {
    unsigned long long r = 1;
    for (unsigned long long i = 0; i < e; ++i) {
        if (b != 0 && r > cap / (b == 0 ? 1 : b)) throw ResourceError("hom count exceeds cap");
        r *= b;
        if (r > cap) throw ResourceError("hom count exceeds cap");
    }
    return r;
}

}  // namespace

FinSetMor FinSetCat::id(const Obj& o) const {
    Mor m{o.size, o.size, std::vector<int>(o.size)};
    std::iota(m.table.begin(), m.table.end(), 0);
    return m;
}

FinSetMor FinSetCat::compose(const Mor& g, const Mor& f) const {
    if (f.tgt != g.src) throw StructuralError("FinSet compose: mismatch");
    Mor m{f.src, g.tgt, std::vector<int>(f.src)};
    for (int i = 0; i < f.src; ++i) m.table[i] = g.table[f.table[i]];
    return m;
}

bool FinSetCat::is_iso(const Mor& m) const {
    if (m.src != m.tgt) return false;
    std::vector<bool> hit(m.tgt, false);
    for (int v : m.table) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

FinSetMor FinSetCat::inverse(const Mor& m) const {
    if (!is_iso(m)) throw StructuralError("FinSet inverse: not a bijection");
    Mor r{m.tgt, m.src, std::vector<int>(m.tgt)};
    for (int i = 0; i < m.src; ++i) r.table[m.table[i]] = i;
    return r;
}

unsigned long long FinSetCat::hom_size(const Obj& a, const Obj& b) const {
    if (a.size == 0) return 1;
    if (b.size == 0) return 0;
    unsigned long long r = 1;
    for (int i = 0; i < a.size; ++i) {
        if (r > (~0ULL) / static_cast<unsigned long long>(b.size))
            throw ResourceError("hom_size overflow");
        r *= static_cast<unsigned long long>(b.size);
    }
    return r;
}

std::vector<FinSetMor> FinSetCat::hom_list(const Obj& a, const Obj& b) const {
    if (b.size == 0 && a.size > 0) return {};
    unsigned long long n = checked_pow(static_cast<unsigned long long>(b.size),
                                       static_cast<unsigned long long>(a.size), cap);
    std::vector<Mor> out;
    out.reserve(n);
    Mor m{a.size, b.size, std::vector<int>(a.size, 0)};
    for (unsigned long long e = 0; e < n; ++e) {
        out.push_back(m);
        // odometer, position 0 least significant (lexicographic in encoded index)
        for (int i = 0; i < a.size; ++i) {
            if (++m.table[i] < b.size) break;
            m.table[i] = 0;
        }
    }
    return out;
}

FinSetCat::Product FinSetCat::product(const std::vector<Obj>& xs) const {
    Product p;
    p.factors = xs;
    unsigned long long total = 1;
    for (const Obj& x : xs) {
        total *= static_cast<unsigned long long>(x.size);
        if (total > cap) throw ResourceError("product size exceeds cap");
    }
    p.obj = {static_cast<int>(total)};
    // mixed radix, last factor fastest
    std::vector<unsigned long long> strides(xs.size(), 1);
    for (int k = static_cast<int>(xs.size()) - 2; k >= 0; --k)
        strides[k] = strides[k + 1] * xs[k + 1].size;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        Mor leg{p.obj.size, xs[k].size, std::vector<int>(p.obj.size)};
        for (int e = 0; e < p.obj.size; ++e)
            leg.table[e] = static_cast<int>((e / strides[k]) % (xs[k].size == 0 ? 1 : xs[k].size));
        p.legs.push_back(leg);
    }
    return p;
}

FinSetMor FinSetCat::tuple(const Product& p, const Obj& apex, const std::vector<Mor>& legs) const {
    if (legs.size() != p.factors.size()) throw StructuralError("tuple: wrong leg count");
    std::vector<unsigned long long> strides(p.factors.size(), 1);
    for (int k = static_cast<int>(p.factors.size()) - 2; k >= 0; --k)
        strides[k] = strides[k + 1] * p.factors[k + 1].size;
    Mor m{apex.size, p.obj.size, std::vector<int>(apex.size, 0)};
    for (int x = 0; x < apex.size; ++x) {
        unsigned long long e = 0;
        for (std::size_t k = 0; k < legs.size(); ++k)
            e += static_cast<unsigned long long>(legs[k].table[x]) * strides[k];
        m.table[x] = static_cast<int>(e);
    }
    return m;
}

FinSetCat::Coproduct FinSetCat::coproduct(const std::vector<Obj>& xs) const {
    Coproduct c;
    c.factors = xs;
    int total = 0;
    for (const Obj& x : xs) total += x.size;
    c.obj = {total};
    int off = 0;
    for (const Obj& x : xs) {
        Mor inj{x.size, total, std::vector<int>(x.size)};
        for (int i = 0; i < x.size; ++i) inj.table[i] = off + i;
        c.legs.push_back(inj);
        off += x.size;
    }
    return c;
}

FinSetMor FinSetCat::cotuple(const Coproduct& c, const Obj& target,
                             const std::vector<Mor>& legs) const {
    if (legs.size() != c.factors.size()) throw StructuralError("cotuple: wrong leg count");
    Mor m{c.obj.size, target.size, std::vector<int>(c.obj.size, 0)};
    int off = 0;
    for (std::size_t k = 0; k < legs.size(); ++k) {
        for (int i = 0; i < c.factors[k].size; ++i) m.table[off + i] = legs[k].table[i];
        off += c.factors[k].size;
    }
    return m;
}

FinSetCat::Equalizer FinSetCat::equalizer(const Mor& u, const Mor& v) const {
    if (u.src != v.src || u.tgt != v.tgt) throw StructuralError("equalizer: parallel pair expected");
    Equalizer e;
    for (int x = 0; x < u.src; ++x)
        if (u.table[x] == v.table[x]) e.members.push_back(x);
    e.obj = {static_cast<int>(e.members.size())};
    e.incl = {e.obj.size, u.src, e.members};
    return e;
}

FinSetMor FinSetCat::factor_equalizer(const Equalizer& e, const Mor& w) const {
    Mor m{w.src, e.obj.size, std::vector<int>(w.src)};
    for (int x = 0; x < w.src; ++x) {
        auto it = std::lower_bound(e.members.begin(), e.members.end(), w.table[x]);
        if (it == e.members.end() || *it != w.table[x])
            throw StructuralError("factor_equalizer: map does not land in the equalizer");
        m.table[x] = static_cast<int>(it - e.members.begin());
    }
    return m;
}

FinSetCat::Coequalizer FinSetCat::coequalizer(const Mor& u, const Mor& v) const {
    if (u.src != v.src || u.tgt != v.tgt) throw StructuralError("coequalizer: parallel pair expected");
    // union-find over target elements; classes ordered by minimal representative
    std::vector<int> parent(u.tgt);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < u.src; ++x) {
        int a = find(u.table[x]), b = find(v.table[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Coequalizer c;
    std::vector<int> class_of(u.tgt, -1);
    for (int y = 0; y < u.tgt; ++y) {
        int r = find(y);
        if (class_of[r] < 0) {
            class_of[r] = static_cast<int>(c.reps.size());
            c.reps.push_back(r);
        }
        class_of[y] = class_of[r];
    }
    c.obj = {static_cast<int>(c.reps.size())};
    c.proj = {u.tgt, c.obj.size, class_of};
    return c;
}

FinSetMor FinSetCat::factor_coequalizer(const Coequalizer& c, const Mor& w) const {
    Mor m{c.obj.size, w.tgt, std::vector<int>(c.obj.size)};
    for (int q = 0; q < c.obj.size; ++q) m.table[q] = w.table[c.reps[q]];
    // consistency: w must be constant on classes
    for (int y = 0; y < w.src; ++y)
        if (w.table[y] != m.table[c.proj.table[y]])
            throw StructuralError("factor_coequalizer: map not constant on classes");
    return m;
}

FinSetMor FinSetCat::tensor_mor(const Mor& f, const Mor& g) const {
    Mor m{f.src * g.src, f.tgt * g.tgt, std::vector<int>(f.src * g.src)};
    for (int i = 0; i < f.src; ++i)
        for (int j = 0; j < g.src; ++j)
            m.table[i * g.src + j] = f.table[i] * g.tgt + g.table[j];
    return m;
}

FinSetMor FinSetCat::sym(const Obj& a, const Obj& b) const {
    Mor m{a.size * b.size, a.size * b.size, std::vector<int>(a.size * b.size)};
    for (int i = 0; i < a.size; ++i)
        for (int j = 0; j < b.size; ++j) m.table[i * b.size + j] = j * a.size + i;
    return m;
}

FinSetObj FinSetCat::pow_obj(const Obj& b, const Obj& a) const {
    unsigned long long n = checked_pow(static_cast<unsigned long long>(b.size),
                                       static_cast<unsigned long long>(a.size), cap);
    if (a.size == 0) return {1};
    return {static_cast<int>(n)};
}

int FinSetCat::decode_pow(int elt, int x, int base_size) const {
    int e = elt;
    for (int i = 0; i < x; ++i) e /= base_size;
    return e % base_size;
}

int FinSetCat::encode_pow(const std::vector<int>& table, int base_size) const {
    int e = 0;
    unsigned long long stride = 1;
    for (int v : table) {
        e += static_cast<int>(v * stride);
        stride *= static_cast<unsigned long long>(base_size);
    }
    return e;
}

FinSetMor FinSetCat::pow_mor(const Mor& f, const Mor& g) const {
    // f: a'→a, g: b→b'  gives  pow(b,a) → pow(b',a'), φ ↦ g∘φ∘f
    Obj a{f.tgt}, ap{f.src}, b{g.src}, bp{g.tgt};
    Obj P = pow_obj(b, a), Q = pow_obj(bp, ap);
    Mor m{P.size, Q.size, std::vector<int>(P.size)};
    for (int e = 0; e < P.size; ++e) {
        std::vector<int> table(ap.size);
        for (int x = 0; x < ap.size; ++x)
            table[x] = g.table[decode_pow(e, f.table[x], b.size)];
        m.table[e] = encode_pow(table, bp.size);
    }
    return m;
}

FinSetMor FinSetCat::curry(const Mor& f, const Obj& a, const Obj& b, const Obj& c) const {
    if (f.src != a.size * b.size || f.tgt != c.size) throw StructuralError("curry: shape mismatch");
    Obj P = pow_obj(c, b);
    Mor m{a.size, P.size, std::vector<int>(a.size)};
    for (int x = 0; x < a.size; ++x) {
        std::vector<int> table(b.size);
        for (int y = 0; y < b.size; ++y) table[y] = f.table[x * b.size + y];
        m.table[x] = encode_pow(table, c.size);
    }
    return m;
}

FinSetMor FinSetCat::uncurry(const Mor& g, const Obj& a, const Obj& b, const Obj& c) const {
    Mor m{a.size * b.size, c.size, std::vector<int>(a.size * b.size)};
    for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < b.size; ++y)
            m.table[x * b.size + y] = decode_pow(g.table[x], y, c.size);
    return m;
}

FinSetMor FinSetCat::eval(const Obj& a, const Obj& b) const {
    Obj P = pow_obj(b, a);
    return uncurry(id(P), P, a, b);
}

FinSetCat::Coproduct FinSetCat::copower(int n) const {
    return coproduct(std::vector<Obj>(n, unit()));
}

}  // namespace rcat
