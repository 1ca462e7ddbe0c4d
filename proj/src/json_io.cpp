#include "ltorus/json_io.hpp"

#include "ltorus/errors.hpp"

namespace ltorus {

namespace {

json int_to_json(const Int& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected integer coefficient");
}

}  // namespace

json to_json(const ZPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"z", e}, {"c", int_to_json(c)}});
    return {{"terms", terms}};
}

json to_json(const AZPoly& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back({{"a", k.first}, {"z", k.second}, {"c", int_to_json(c)}});
    return {{"terms", terms}};
}

json to_json(const SkeinElement& s) {
    json terms = json::array();
    for (const auto& [lambda, p] : s.terms()) {
        for (const auto& [k, c] : p.terms()) {
            json t = {{"a", k.first}, {"z", k.second}, {"c", int_to_json(c)}};
            if (!lambda.empty()) t["partition"] = lambda.parts();
            terms.push_back(t);
        }
    }
    return {{"terms", terms}};
}

ZPoly zpoly_from_json(const json& j) {
    ZPoly p;
    for (const auto& t : j.at("terms"))
        p += ZPoly::monomial(t.value("z", 0), int_from_json(t.at("c")));
    return p;
}

AZPoly azpoly_from_json(const json& j) {
    AZPoly p;
    for (const auto& t : j.at("terms"))
        p += AZPoly::monomial(t.value("a", 0), t.value("z", 0), int_from_json(t.at("c")));
    return p;
}

SkeinElement skein_from_json(const json& j) {
    SkeinElement s;
    for (const auto& t : j.at("terms")) {
        Partition lambda(t.value("partition", std::vector<int>{}));
        s += SkeinElement::basis(lambda,
                                 AZPoly::monomial(t.value("a", 0), t.value("z", 0),
                                                  int_from_json(t.at("c"))));
    }
    return s;
}

json to_json(const FrontDiagram& d, const std::optional<Orientation>& o,
             const std::optional<MaslovPotential>& mu) {
    json events = json::array();
    for (const FrontEvent& e : d.events) {
        const char* ty = e.type == FrontEventType::Cross     ? "cross"
                         : e.type == FrontEventType::LeftCusp ? "left_cusp"
                                                              : "right_cusp";
        events.push_back({{"type", ty}, {"k", e.k}});
    }
    json j = {{"seam_strands", d.seam_strands}, {"events", events}};
    if (o) {
        json comps = json::array();
        for (bool r : o->rightward) comps.push_back(r ? "+" : "-");
        j["orientation"] = {{"components", comps}};
    }
    if (mu) {
        j["maslov"] = {{"p", mu->p}, {"seam_values", mu->value.empty() ? std::vector<int>{}
                                                                       : mu->value.back()}};
    }
    return j;
}

FrontInput front_from_json(const json& j) {
    FrontInput in;
    in.diagram.seam_strands = j.at("seam_strands").get<int>();
    for (const auto& e : j.at("events")) {
        std::string ty = e.at("type").get<std::string>();
        FrontEventType t;
        if (ty == "cross") t = FrontEventType::Cross;
        else if (ty == "left_cusp") t = FrontEventType::LeftCusp;
        else if (ty == "right_cusp") t = FrontEventType::RightCusp;
        else throw ParseError("unknown event type " + ty);
        in.diagram.events.push_back({t, e.at("k").get<int>()});
    }
    if (j.contains("orientation")) {
        Orientation o;
        for (const auto& c : j.at("orientation").at("components")) {
            std::string s = c.get<std::string>();
            if (s != "+" && s != "-") throw ParseError("orientation flags must be + or -");
            o.rightward.push_back(s == "+");
        }
        in.orientation = o;
    }
    if (j.contains("maslov")) {
        in.maslov_p = j.at("maslov").at("p").get<int>();
        if (j.at("maslov").contains("seam_values"))
            in.maslov_seam_values = j.at("maslov").at("seam_values").get<std::vector<int>>();
    }
    return in;
}

json to_json(const SmoothDiagram& d) {
    json events = json::array();
    for (const SmoothEvent& e : d.events) {
        if (e.type == SmoothEvent::Type::Cross) {
            events.push_back({{"type", "cross"},
                              {"k", e.k},
                              {"over", e.over == OverStrand::Descending ? "descending" : "ascending"}});
        } else {
            events.push_back({{"type", e.type == SmoothEvent::Type::Cup ? "cup" : "cap"}, {"k", e.k}});
        }
    }
    return {{"seam_strands", d.seam_strands}, {"events", events}};
}

SmoothDiagram smooth_from_json(const json& j) {
    SmoothDiagram d;
    d.seam_strands = j.at("seam_strands").get<int>();
    for (const auto& e : j.at("events")) {
        std::string ty = e.at("type").get<std::string>();
        SmoothEvent ev{SmoothEvent::Type::Cross, e.at("k").get<int>(), OverStrand::Descending};
        if (ty == "cup") ev.type = SmoothEvent::Type::Cup;
        else if (ty == "cap") ev.type = SmoothEvent::Type::Cap;
        else if (ty == "cross") {
            std::string over = e.value("over", "descending");
            if (over == "ascending") ev.over = OverStrand::Ascending;
            else if (over != "descending") throw ParseError("over must be descending or ascending");
        } else {
            throw ParseError("unknown event type " + ty);
        }
        d.events.push_back(ev);
    }
    return d;
}

json ruling_to_json(const FrontDiagram& d, const Ruling& r) {
    const Involution& seed = r.rho.back();
    return {{"seed", seed.img}, {"switches", r.switches}, {"j", r.j(d)}};
}

json to_json(const Dga& g) {
    json gens = json::array();
    for (size_t id = 0; id < g.gens.size(); ++id) {
        const DgaGenerator& gen = g.gens[id];
        json diff = json::array();
        for (const Word& w : g.diff[id].words) {
            json word = json::array();
            for (int gid : w) word.push_back(g.gens[gid].name());
            diff.push_back(word);
        }
        const char* kind = gen.kind == DgaGenerator::Kind::X          ? "x"
                           : gen.kind == DgaGenerator::Kind::Y        ? "y"
                           : gen.kind == DgaGenerator::Kind::Crossing ? "crossing"
                                                                      : "right_cusp";
        json jg = {{"name", gen.name()}, {"kind", kind}, {"degree", gen.degree},
                   {"differential", diff}};
        if (gen.kind == DgaGenerator::Kind::X || gen.kind == DgaGenerator::Kind::Y) {
            jg["m"] = gen.m;
            jg["i"] = gen.i;
            jg["j"] = gen.j;
        } else {
            jg["event"] = gen.event;
        }
        gens.push_back(jg);
    }
    return {{"p", g.p}, {"splashes", g.splashes}, {"generators", gens}};
}

json augmentation_to_json(const Dga& g, const Augmentation& eps) {
    json j = json::object();
    for (size_t id = 0; id < g.gens.size(); ++id) j[g.gens[id].name()] = int(eps.value[id]);
    return j;
}

std::map<std::pair<Partition, Partition>, ZPoly> homfly_coeff_from_json(const json& j) {
    std::map<std::pair<Partition, Partition>, ZPoly> out;
    for (const auto& t : j.at("terms")) {
        Partition pos(t.value("pos", std::vector<int>{}));
        Partition neg(t.value("neg", std::vector<int>{}));
        out[{pos, neg}] += zpoly_from_json(t.at("poly"));
    }
    return out;
}

}  // namespace ltorus
