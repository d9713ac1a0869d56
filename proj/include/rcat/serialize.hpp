#pragma once

#include <json.hpp>

#include "rcat/chain.hpp"
#include "rcat/diagram.hpp"
#include "rcat/fincat.hpp"
#include "rcat/finset.hpp"

namespace rcat {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// GF(p) matrices and chain data.

inline Json to_json(const Mat& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    std::vector<int> entries(m.data().begin(), m.data().end());
    j["entries"] = entries;  // row-major
    return j;
}

inline Mat mat_from_json(const Json& j, int p) {
    Mat m(j.at("rows").get<int>(), j.at("cols").get<int>(), p);
    auto entries = j.at("entries").get<std::vector<int>>();
    if (entries.size() != m.data().size()) throw StructuralError("matrix entry count mismatch");
    for (std::size_t k = 0; k < entries.size(); ++k)
        m.data()[k] = ((entries[k] % p) + p) % p;
    return m;
}

inline Json to_json(const ChainComplex& c) {
    Json j;
    j["p"] = c.p;
    j["lo"] = c.lo;
    j["dims"] = c.dims;
    Json d = Json::array();
    for (const Mat& m : c.d) d.push_back(to_json(m));
    j["d"] = d;
    return j;
}

inline ChainComplex complex_from_json(const Json& j) {
    int p = j.at("p").get<int>();
    auto dims = j.at("dims").get<std::vector<int>>();
    std::vector<Mat> diffs;
    for (const Json& m : j.at("d")) diffs.push_back(mat_from_json(m, p));
    return make_complex(p, j.at("lo").get<int>(), dims, diffs);
}

inline Json to_json(const ChainMap& f) {
    Json j;
    j["src"] = to_json(f.src);
    j["tgt"] = to_json(f.tgt);
    j["lo"] = f.lo;
    Json comps = Json::array();
    for (const Mat& m : f.comps) comps.push_back(to_json(m));
    j["comps"] = comps;
    return j;
}

inline ChainMap chain_map_from_json(const Json& j) {
    ChainMap f;
    f.src = complex_from_json(j.at("src"));
    f.tgt = complex_from_json(j.at("tgt"));
    f.lo = j.at("lo").get<int>();
    for (const Json& m : j.at("comps")) f.comps.push_back(mat_from_json(m, f.src.p));
    return f;
}

// ---------------------------------------------------------------------------
// FinSet data.

inline Json to_json(const FinSetObj& o) { return Json{{"size", o.size}}; }

inline FinSetObj finset_obj_from_json(const Json& j) {
    return FinSetObj{j.at("size").get<int>()};
}

inline Json to_json(const FinSetMor& f) {
    Json j;
    j["src"] = f.src;
    j["tgt"] = f.tgt;
    j["table"] = f.table;
    return j;
}

inline FinSetMor finset_mor_from_json(const Json& j) {
    return FinSetMor{j.at("src").get<int>(), j.at("tgt").get<int>(),
                     j.at("table").get<std::vector<int>>()};
}

// ---------------------------------------------------------------------------
// Index categories.

inline Json to_json(const FiniteCategory& c) {
    Json j;
    j["n_objects"] = c.n_objects;
    j["arrow_src"] = c.arrow_src;
    j["arrow_tgt"] = c.arrow_tgt;
    j["identity"] = c.identity;
    j["comp"] = c.comp;
    return j;
}

inline FiniteCategory category_from_json(const Json& j) {
    FiniteCategory c;
    c.n_objects = j.at("n_objects").get<int>();
    c.arrow_src = j.at("arrow_src").get<std::vector<int>>();
    c.arrow_tgt = j.at("arrow_tgt").get<std::vector<int>>();
    c.identity = j.at("identity").get<std::vector<int>>();
    c.comp = j.at("comp").get<std::vector<std::vector<int>>>();
    return c;
}

inline Json to_json(const ReedyStructure& r) {
    Json j;
    j["base"] = to_json(r.base);
    j["degree"] = r.degree;
    j["plus_arrows"] = r.plus_arrows;
    j["minus_arrows"] = r.minus_arrows;
    return j;
}

inline ReedyStructure reedy_from_json(const Json& j) {
    ReedyStructure r;
    r.base = category_from_json(j.at("base"));
    r.degree = j.at("degree").get<std::vector<int>>();
    r.plus_arrows = j.at("plus_arrows").get<std::vector<int>>();
    r.minus_arrows = j.at("minus_arrows").get<std::vector<int>>();
    return r;
}

// ---------------------------------------------------------------------------
// Diagrams and transformations (witness serialization).

template <class C>
Json to_json(const Diagram<C>& d) {
    Json j;
    Json objs = Json::array(), mors = Json::array();
    for (const auto& o : d.obj) objs.push_back(to_json(o));
    for (const auto& m : d.mor) mors.push_back(to_json(m));
    j["obj"] = objs;
    j["mor"] = mors;
    return j;
}

template <class C>
Json to_json(const NatTrans<C>& n) {
    Json j;
    j["src"] = to_json(n.src);
    j["tgt"] = to_json(n.tgt);
    Json comps = Json::array();
    for (const auto& c : n.comp) comps.push_back(to_json(c));
    j["comp"] = comps;
    return j;
}

}  // namespace rcat
