#include "gsrs/report.hpp"

namespace gsrs {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QComplex& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

Json to_json(const GaussianInt& g) { return Json::array({g.re.get_str(), g.im.get_str()}); }

Json to_json(const Cycle& c) {
    Json out = Json::array();
    for (const auto& z : c.elements()) out.push_back(to_json(z));
    return out;
}

Json to_json(const HalfPlane& h) {
    // a x + b y + c >= 0, or > 0 when strict
    return {{"a", to_json(h.a)}, {"b", to_json(h.b)}, {"c", to_json(h.c)}, {"strict", h.strict}};
}

Json to_json(const Cell& c) {
    static const char* kinds[] = {"empty", "point", "segment", "polygon"};
    Json out;
    out["kind"] = kinds[static_cast<int>(c.kind())];
    Json v = Json::array();
    for (const auto& p : c.vertices()) v.push_back(to_json(p));
    out["vertices"] = std::move(v);
    out["edge_solid"] = c.edge_solid();
    out["vertex_member"] = c.vertex_member();
    Json h = Json::array();
    for (const auto& hp : c.constraints()) h.push_back(to_json(hp));
    out["constraints"] = std::move(h);
    return out;
}

Json to_json(const FamilyInstance& inst) {
    return {{"family", inst.family}, {"n", inst.n}, {"m", inst.m}, {"name", to_string(inst)}};
}

Json to_json(const Bracket& b, int digits) {
    return {{"low", to_decimal(b.low, digits, false)},
            {"high", to_decimal(b.high, digits, true)},
            {"width", to_decimal(b.high - b.low, digits, true)}};
}

std::string to_string(DiskRelation r) {
    switch (r) {
        case DiskRelation::Inside: return "inside";
        case DiskRelation::Outside: return "outside";
        case DiskRelation::Meets: return "meets";
    }
    return "?";
}

Json to_json(const CoverageReport& r) {
    Json res = Json::array();
    std::size_t open = 0;
    for (const auto& x : r.residuals) {
        if (x.relation == DiskRelation::Outside) continue;
        ++open;
        Json cell = to_json(x.cell);
        cell["disk"] = to_string(x.relation);
        res.push_back(std::move(cell));
    }
    return {{"sector", r.sector},
            {"instances_used", r.instances_used},
            {"residuals_outside_disk", r.residuals.size() - open},
            {"residuals_in_disk", std::move(res)},
            {"verdict", r.covered ? "Covered" : "Failed"}};
}

Json to_json(const TileReport& r) {
    static const char* verdicts[] = {"Covered", "Budget", "Failed"};
    Json tiles = Json::array();
    for (const auto& t : r.tiles) {
        tiles.push_back({{"parameter", to_json(t.parameter)},
                         {"finite", t.finite},
                         {"witnesses", t.witnesses},
                         {"cell", to_json(t.cell)}});
    }
    Json unc = Json::array();
    for (const auto& c : r.uncovered) unc.push_back(to_json(c));
    return {{"tiles", std::move(tiles)}, {"uncovered", std::move(unc)},
            {"verdict", verdicts[static_cast<int>(r.verdict)]}};
}

}  // namespace gsrs
