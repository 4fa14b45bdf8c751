#include "equikh/serialize.hpp"

namespace equikh {

using nlohmann::json;

json to_json(const FreeComplex& c) {
    json j;
    j["schema"] = kSchemaComplex;
    json gens = json::array();
    for (const Gen& g : c.gens) {
        json e;
        e["h"] = g.h;
        e["q"] = g.q;
        if (g.k2) e["k2"] = g.k2;
        gens.push_back(e);
    }
    j["generators"] = gens;
    json diff = json::array();
    for (uint32_t s = 0; s < c.size(); ++s)
        for (const Term& t : c.diff[s])
            diff.push_back(json{{"from", s}, {"to", t.gen}, {"e", t.exp}});
    j["differential"] = diff;
    if (!c.endos.empty()) {
        json endos;
        for (auto& [name, m] : c.endos) {
            json entries = json::array();
            for (uint32_t s = 0; s < m.size(); ++s)
                for (const Term& t : m[s])
                    entries.push_back(json{{"from", s}, {"to", t.gen}, {"e", t.exp}});
            endos[name] = entries;
        }
        j["endos"] = endos;
    }
    return j;
}

FreeComplex complex_from_json(const json& j) {
    if (j.value("schema", "") != kSchemaComplex)
        throw ComplexError("unexpected complex schema");
    FreeComplex c;
    for (const json& e : j.at("generators"))
        c.add_gen(e.at("h").get<int>(), e.at("q").get<int>(), e.value("k2", 0));
    for (const json& e : j.at("differential"))
        c.add_diff(e.at("from").get<uint32_t>(), e.at("to").get<uint32_t>(),
                   e.at("e").get<uint16_t>());
    if (j.contains("endos"))
        for (auto& [name, entries] : j.at("endos").items()) {
            c.endos[name].resize(c.size());
            for (const json& e : entries)
                c.add_endo_term(name, e.at("from").get<uint32_t>(), e.at("to").get<uint32_t>(),
                                e.at("e").get<uint16_t>());
        }
    c.validate();
    return c;
}

json to_json(const ModulePresentation& p) {
    json j;
    j["schema"] = kSchemaPresentation;
    json f = json::array();
    for (const Gen& g : p.free_gens) f.push_back(json{{"h", g.h}, {"q", g.q}});
    j["free"] = f;
    json t = json::array();
    for (auto& [g, k] : p.torsion_gens)
        t.push_back(json{{"h", g.h}, {"q", g.q}, {"order", k}});
    j["torsion"] = t;
    return j;
}

json to_json(const SqGrid& g) {
    json rows = json::array();
    for (auto& [ab, v] : g.value) {
        json row;
        row["A"] = ab.first;
        if (ab.second == kInfinity) row["B"] = "inf";
        else row["B"] = ab.second;
        row["s_q"] = v;
        rows.push_back(row);
    }
    return rows;
}

std::string dump_deterministic(const json& j) {
    return j.dump(2); // nlohmann objects iterate in sorted key order
}

} // namespace equikh
