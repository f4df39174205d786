#include "bcov/json_io.hpp"

namespace bcov {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ParseError(what);
}

int get_int(const Json& j, const char* key) {
    require(j.contains(key) && j[key].is_number_integer(),
            std::string("expected integer field '") + key + "'");
    return j[key].get<int>();
}

std::string get_str(const Json& j, const char* key) {
    require(j.contains(key) && j[key].is_string(), std::string("expected string field '") + key + "'");
    return j[key].get<std::string>();
}

}  // namespace

Json link_to_json(const LabeledLink& link) {
    Json j;
    j["degree"] = link.degree();
    j["components"] = Json::array();
    for (const auto& comp : link.components()) {
        Json jc;
        jc["orientation"] = comp.reversed ? "-" : "+";
        if (comp.framing) jc["framing"] = *comp.framing;
        if (comp.dotted) jc["dotted"] = true;
        j["components"].push_back(jc);
    }
    j["arcs"] = Json::array();
    for (const auto& arc : link.arcs()) {
        Json ja;
        ja["component"] = arc.component;
        ja["label"] = arc.label.to_string();
        j["arcs"].push_back(ja);
    }
    j["crossings"] = Json::array();
    for (const auto& c : link.crossings()) {
        Json jc;
        jc["over"] = c.over;
        jc["under_in"] = c.under_in;
        jc["under_out"] = c.under_out;
        jc["sign"] = c.sign == CrossSign::positive ? "+" : "-";
        j["crossings"].push_back(jc);
    }
    return j;
}

LabeledLink link_from_json(const Json& j) {
    require(j.is_object(), "link JSON must be an object");
    int degree = get_int(j, "degree");
    std::vector<Component> components;
    require(j.contains("components") && j["components"].is_array(), "missing components array");
    for (const auto& jc : j["components"]) {
        Component comp;
        std::string orient = get_str(jc, "orientation");
        require(orient == "+" || orient == "-", "component orientation must be + or -");
        comp.reversed = orient == "-";
        if (jc.contains("framing")) comp.framing = get_int(jc, "framing");
        if (jc.contains("dotted")) {
            require(jc["dotted"].is_boolean(), "dotted must be boolean");
            comp.dotted = jc["dotted"].get<bool>();
        }
        components.push_back(comp);
    }
    std::vector<Arc> arcs;
    require(j.contains("arcs") && j["arcs"].is_array(), "missing arcs array");
    for (const auto& ja : j["arcs"])
        arcs.push_back(Arc{get_int(ja, "component"), Perm::parse(get_str(ja, "label"), degree)});
    std::vector<Crossing> crossings;
    require(j.contains("crossings") && j["crossings"].is_array(), "missing crossings array");
    for (const auto& jc : j["crossings"]) {
        Crossing c;
        c.over = get_int(jc, "over");
        c.under_in = get_int(jc, "under_in");
        c.under_out = get_int(jc, "under_out");
        std::string sign = get_str(jc, "sign");
        require(sign == "+" || sign == "-", "crossing sign must be + or -");
        c.sign = sign == "+" ? CrossSign::positive : CrossSign::negative;
        crossings.push_back(c);
    }
    return LabeledLink::build(degree, std::move(components), std::move(arcs), std::move(crossings));
}

Json validity_to_json(const ValidityReport& report) {
    Json j;
    j["valid"] = report.valid;
    j["violations"] = Json::array();
    for (const auto& v : report.violations) {
        Json jv;
        jv["crossing"] = v.crossing;
        jv["expected"] = v.expected.to_string();
        jv["found"] = v.found.to_string();
        j["violations"].push_back(jv);
    }
    j["simple"] = report.simple;
    j["transitive"] = report.transitive;
    return j;
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace bcov
