#include "rcat/fincat.hpp"

#include <algorithm>

namespace rcat {

int FiniteCategory::compose(int g, int f) const {
    if (g < 0 || g >= n_arrows() || f < 0 || f >= n_arrows())
        throw StructuralError("compose: arrow index out of range");
    if (!composable(g, f)) throw StructuralError("compose: not composable");
    int r = comp[g][f];
    if (r < 0) throw StructuralError("compose: missing table entry");
    return r;
}

bool FiniteCategory::is_identity(int a) const {
    for (int i = 0; i < n_objects; ++i)
        if (identity[i] == a) return true;
    return false;
}

std::vector<int> FiniteCategory::hom(int i, int j) const {
    std::vector<int> out;
    for (int a = 0; a < n_arrows(); ++a)
        if (arrow_src[a] == i && arrow_tgt[a] == j) out.push_back(a);
    return out;
}

ValidationReport validate_category(const FiniteCategory& c) {
    ValidationReport rep;
    auto structural = [&](const std::string& d) {
        rep.issues.push_back({"structural", d});
    };
    int na = c.n_arrows();
    if (static_cast<int>(c.arrow_tgt.size()) != na)
        structural("arrow_src/arrow_tgt length mismatch");
    if (static_cast<int>(c.identity.size()) != c.n_objects)
        structural("identity list length != object count");
    if (static_cast<int>(c.comp.size()) != na)
        structural("composition table row count != arrow count");
    for (const auto& row : c.comp)
        if (static_cast<int>(row.size()) != na) structural("composition table row length != arrow count");
    for (int a = 0; a < na && rep.ok(); ++a)
        if (c.arrow_src[a] < 0 || c.arrow_src[a] >= c.n_objects ||
            c.arrow_tgt[a] < 0 || c.arrow_tgt[a] >= c.n_objects)
            structural("arrow " + std::to_string(a) + " has out-of-range endpoint");
    for (int i = 0; i < c.n_objects && rep.ok(); ++i) {
        int e = c.identity[i];
        if (e < 0 || e >= na) {
            structural("identity of object " + std::to_string(i) + " out of range");
        } else if (c.arrow_src[e] != i || c.arrow_tgt[e] != i) {
            structural("identity of object " + std::to_string(i) + " is not an endo-arrow");
        }
    }
    if (!rep.ok()) return rep;

    for (int g = 0; g < na; ++g)
        for (int f = 0; f < na; ++f) {
            int r = c.comp[g][f];
            if (!c.composable(g, f)) {
                if (r != -1)
                    rep.issues.push_back({"composition",
                                          "entry set for non-composable pair (" + std::to_string(g) +
                                              "," + std::to_string(f) + ")"});
                continue;
            }
            if (r < 0) {
                rep.issues.push_back({"composition",
                                      "missing composite for (" + std::to_string(g) + "," +
                                          std::to_string(f) + ")"});
                continue;
            }
            if (r >= na) {
                rep.issues.push_back({"structural", "composite index out of range"});
                continue;
            }
            if (c.arrow_src[r] != c.arrow_src[f] || c.arrow_tgt[r] != c.arrow_tgt[g])
                rep.issues.push_back({"composition",
                                      "composite of (" + std::to_string(g) + "," + std::to_string(f) +
                                          ") has wrong endpoints"});
        }
    for (int i = 0; i < c.n_objects; ++i) {
        int e = c.identity[i];
        for (int f = 0; f < na; ++f) {
            if (c.arrow_tgt[f] == i && c.comp[e][f] != f)
                rep.issues.push_back({"identity",
                                      "id_" + std::to_string(i) + " ∘ " + std::to_string(f) +
                                          " != " + std::to_string(f)});
            if (c.arrow_src[f] == i && c.comp[f][e] != f)
                rep.issues.push_back({"identity",
                                      std::to_string(f) + " ∘ id_" + std::to_string(i) +
                                          " != " + std::to_string(f)});
        }
    }
    for (int h = 0; h < na; ++h)
        for (int g = 0; g < na; ++g) {
            if (!c.composable(h, g)) continue;
            for (int f = 0; f < na; ++f) {
                if (!c.composable(g, f)) continue;
                int hg = c.comp[h][g], gf = c.comp[g][f];
                if (hg < 0 || gf < 0) continue;  // reported above
                if (c.comp[hg][f] != c.comp[h][gf])
                    rep.issues.push_back({"associativity",
                                          "(" + std::to_string(h) + "∘" + std::to_string(g) + ")∘" +
                                              std::to_string(f) + " != " + std::to_string(h) + "∘(" +
                                              std::to_string(g) + "∘" + std::to_string(f) + ")"});
            }
        }
    return rep;
}

FiniteCategory opposite(const FiniteCategory& c) {
    FiniteCategory o = c;
    std::swap(o.arrow_src, o.arrow_tgt);
    int na = c.n_arrows();
    for (int g = 0; g < na; ++g)
        for (int f = 0; f < na; ++f) o.comp[g][f] = c.comp[f][g];
    return o;
}

FiniteCategory product_category(const FiniteCategory& c, const FiniteCategory& d) {
    FiniteCategory p;
    p.n_objects = c.n_objects * d.n_objects;
    int na = c.n_arrows(), nb = d.n_arrows();
    p.arrow_src.resize(na * nb);
    p.arrow_tgt.resize(na * nb);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) {
            int idx = a * nb + b;
            p.arrow_src[idx] = c.arrow_src[a] * d.n_objects + d.arrow_src[b];
            p.arrow_tgt[idx] = c.arrow_tgt[a] * d.n_objects + d.arrow_tgt[b];
        }
    p.identity.resize(p.n_objects);
    for (int i = 0; i < c.n_objects; ++i)
        for (int j = 0; j < d.n_objects; ++j)
            p.identity[i * d.n_objects + j] = c.identity[i] * nb + d.identity[j];
    p.comp.assign(na * nb, std::vector<int>(na * nb, -1));
    for (int g1 = 0; g1 < na; ++g1)
        for (int g2 = 0; g2 < nb; ++g2)
            for (int f1 = 0; f1 < na; ++f1)
                for (int f2 = 0; f2 < nb; ++f2) {
                    if (!c.composable(g1, f1) || !d.composable(g2, f2)) continue;
                    p.comp[g1 * nb + g2][f1 * nb + f2] =
                        c.comp[g1][f1] * nb + d.comp[g2][f2];
                }
    return p;
}

FiniteCategory terminal_category() {
    FiniteCategory c;
    c.n_objects = 1;
    c.arrow_src = {0};
    c.arrow_tgt = {0};
    c.identity = {0};
    c.comp = {{0}};
    return c;
}

bool ReedyStructure::in_plus(int a) const {
    return std::find(plus_arrows.begin(), plus_arrows.end(), a) != plus_arrows.end();
}

bool ReedyStructure::in_minus(int a) const {
    return std::find(minus_arrows.begin(), minus_arrows.end(), a) != minus_arrows.end();
}

std::vector<ReedyFactorization> reedy_factorizations(const ReedyStructure& r, int arrow) {
    const FiniteCategory& c = r.base;
    std::vector<ReedyFactorization> out;
    for (int fm = 0; fm < c.n_arrows(); ++fm) {
        if (!(r.in_minus(fm) || c.is_identity(fm))) continue;
        if (c.arrow_src[fm] != c.arrow_src[arrow]) continue;
        for (int fp = 0; fp < c.n_arrows(); ++fp) {
            if (!(r.in_plus(fp) || c.is_identity(fp))) continue;
            if (!c.composable(fp, fm)) continue;
            if (c.arrow_tgt[fp] != c.arrow_tgt[arrow]) continue;
            if (c.comp[fp][fm] == arrow) out.push_back({fm, fp});
        }
    }
    return out;
}

ValidationReport validate_reedy(const ReedyStructure& r) {
    ValidationReport rep;
    const FiniteCategory& c = r.base;
    if (static_cast<int>(r.degree.size()) != c.n_objects) {
        rep.issues.push_back({"structural", "degree function does not cover all objects"});
        return rep;
    }
    for (int d : r.degree)
        if (d < 0) {
            rep.issues.push_back({"structural", "negative degree"});
            return rep;
        }
    for (int a : r.plus_arrows) {
        if (a < 0 || a >= c.n_arrows()) {
            rep.issues.push_back({"structural", "plus arrow index out of range"});
            return rep;
        }
        if (c.is_identity(a))
            rep.issues.push_back({"reedy", "identity arrow listed in plus"});
        else if (r.degree[c.arrow_tgt[a]] <= r.degree[c.arrow_src[a]])
            rep.issues.push_back({"reedy", "plus arrow " + std::to_string(a) + " does not raise degree"});
    }
    for (int a : r.minus_arrows) {
        if (a < 0 || a >= c.n_arrows()) {
            rep.issues.push_back({"structural", "minus arrow index out of range"});
            return rep;
        }
        if (c.is_identity(a))
            rep.issues.push_back({"reedy", "identity arrow listed in minus"});
        else if (r.degree[c.arrow_tgt[a]] >= r.degree[c.arrow_src[a]])
            rep.issues.push_back({"reedy", "minus arrow " + std::to_string(a) + " does not lower degree"});
    }
    // closure under composition
    auto closed = [&](const std::vector<int>& arrows, const char* name) {
        for (int g : arrows)
            for (int f : arrows) {
                if (!c.composable(g, f)) continue;
                int gf = c.comp[g][f];
                bool in = std::find(arrows.begin(), arrows.end(), gf) != arrows.end() ||
                          c.is_identity(gf);
                if (!in)
                    rep.issues.push_back({"reedy", std::string(name) + " not closed under composition at (" +
                                                       std::to_string(g) + "," + std::to_string(f) + ")"});
            }
    };
    closed(r.plus_arrows, "plus");
    closed(r.minus_arrows, "minus");
    for (int a = 0; a < c.n_arrows(); ++a) {
        auto facts = reedy_factorizations(r, a);
        if (facts.size() != 1)
            rep.issues.push_back({"factorization",
                                  "arrow " + std::to_string(a) + " has " +
                                      std::to_string(facts.size()) + " minus-then-plus factorizations"});
    }
    return rep;
}

bool is_direct(const ReedyStructure& r) { return r.minus_arrows.empty(); }

ReedyStructure opposite(const ReedyStructure& r) {
    ReedyStructure o;
    o.base = opposite(r.base);
    o.degree = r.degree;
    o.plus_arrows = r.minus_arrows;
    o.minus_arrows = r.plus_arrows;
    return o;
}

namespace {

FiniteCategory make_category(int n_obj, std::vector<std::pair<int, int>> non_id_arrows,
                             const std::vector<std::vector<int>>& composites) {
    // arrows: identities first (arrow i = id_i), then non-identities in order
    FiniteCategory c;
    c.n_objects = n_obj;
    for (int i = 0; i < n_obj; ++i) {
        c.arrow_src.push_back(i);
        c.arrow_tgt.push_back(i);
        c.identity.push_back(i);
    }
    for (auto [s, t] : non_id_arrows) {
        c.arrow_src.push_back(s);
        c.arrow_tgt.push_back(t);
    }
    int na = c.n_arrows();
    c.comp.assign(na, std::vector<int>(na, -1));
    for (int g = 0; g < na; ++g)
        for (int f = 0; f < na; ++f) {
            if (!c.composable(g, f)) continue;
            if (c.is_identity(g)) c.comp[g][f] = f;
            else if (c.is_identity(f)) c.comp[g][f] = g;
        }
    for (const auto& e : composites) c.comp[e[0]][e[1]] = e[2];
    return c;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"terminal", "arrow", "composable_pair", "parallel_pair", "span", "cospan", "square"};
}

ReedyStructure builtin_reedy(const std::string& name) {
    ReedyStructure r;
    if (name == "terminal") {
        r.base = terminal_category();
        r.degree = {0};
    } else if (name == "arrow") {
        // 0 → 1; arrow index 2
        r.base = make_category(2, {{0, 1}}, {});
        r.degree = {0, 1};
        r.plus_arrows = {2};
    } else if (name == "composable_pair") {
        // 0 →3 1 →4 2, composite 5 = 4∘3
        r.base = make_category(3, {{0, 1}, {1, 2}, {0, 2}}, {{4, 3, 5}});
        r.degree = {0, 1, 2};
        r.plus_arrows = {3, 4, 5};
    } else if (name == "parallel_pair") {
        r.base = make_category(2, {{0, 1}, {0, 1}}, {});
        r.degree = {0, 1};
        r.plus_arrows = {2, 3};
    } else if (name == "span") {
        // 1 ←3 0 →4 2, inverse category
        r.base = make_category(3, {{0, 1}, {0, 2}}, {});
        r.degree = {1, 0, 0};
        r.minus_arrows = {3, 4};
    } else if (name == "cospan") {
        // 1 →3 0 ←4 2, direct category
        r.base = make_category(3, {{1, 0}, {2, 0}}, {});
        r.degree = {1, 0, 0};
        r.plus_arrows = {3, 4};
    } else if (name == "square") {
        // 0→1→3, 0→2→3, commuting; diagonal 8 = 6∘4 = 7∘5
        r.base = make_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}},
                               {{6, 4, 8}, {7, 5, 8}});
        r.degree = {0, 1, 1, 2};
        r.plus_arrows = {4, 5, 6, 7, 8};
    } else {
        throw StructuralError("unknown builtin category: " + name);
    }
    return r;
}

}  // namespace rcat
