#include "ltorus/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ltorus/closed_form.hpp"
#include "ltorus/errors.hpp"
#include "ltorus/json_io.hpp"

namespace ltorus {

namespace {

struct CommonOpts {
    std::string input = "-";
    bool as_json = false;
    long long budget = 1'000'000;
    int p = 1;
    bool generalized = false;
    int limit = 22;
    int max_strands = 16;
    std::uint64_t seed = 1;
};

FrontInput load_front(const CommonOpts& o, std::istream& in) {
    json j;
    if (o.input == "-") {
        in >> j;
    } else {
        std::ifstream f(o.input);
        if (!f) throw Error("cannot open " + o.input);
        f >> j;
    }
    return front_from_json(j);
}

Orientation pick_orientation(const FrontInput& in) {
    if (in.orientation) {
        if (static_cast<int>(in.orientation->rightward.size()) != component_count(in.diagram))
            throw Error("orientation flag count does not match the component count");
        return *in.orientation;
    }
    return default_orientation(in.diagram);
}

MaslovPotential pick_potential(const FrontInput& in, int p) {
    auto mu = maslov(in.diagram, p,
                     in.maslov_p && *in.maslov_p == p ? in.maslov_seam_values : std::nullopt);
    if (!mu) throw Error("no Z/" + std::to_string(p) + " Maslov potential exists");
    return *mu;
}

int cmd_validate(const CommonOpts& o, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    Validation v = validate(fi.diagram);
    if (o.as_json) {
        out << json{{"ok", v.ok}, {"strand_table", v.strand_table}, {"message", v.message}}.dump()
            << "\n";
    } else if (v.ok) {
        out << "valid; N(m):";
        for (int n : v.strand_table) out << " " << n;
        out << "\n";
    } else {
        out << "invalid: " << v.message << "\n";
    }
    return v.ok ? 0 : 1;
}

int cmd_invariants(const CommonOpts& o, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    require_valid(fi.diagram);
    Orientation ori = pick_orientation(fi);
    ComponentMap cm = components(fi.diagram);
    int w = writhe(fi.diagram, ori);
    int cusps = cusp_events(fi.diagram);
    if (o.as_json) {
        json comps = json::array();
        for (int c = 0; c < cm.count; ++c)
            comps.push_back({{"rotation_twice", rotation(fi.diagram, ori, c).twice},
                             {"winding", cm.winding(c, ori)}});
        out << json{{"tb", tb(fi.diagram, ori)},
                    {"writhe", w},
                    {"cusps", cusps},
                    {"components", comps}}
                   .dump()
            << "\n";
        return 0;
    }
    out << "tb = " << tb(fi.diagram, ori) << "\n";
    out << "writhe = " << w << ", cusps = " << cusps << "\n";
    for (int c = 0; c < cm.count; ++c)
        out << "component " << c << ": rotation = " << rotation(fi.diagram, ori, c).str()
            << ", winding = " << cm.winding(c, ori) << "\n";
    return 0;
}

int cmd_rulings(const CommonOpts& o, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    require_valid(fi.diagram);
    MaslovPotential mu = pick_potential(fi, o.p);
    auto rulings = enumerate_rulings(fi.diagram, o.generalized, o.p, mu, o.max_strands);
    ZPoly poly;
    for (const Ruling& r : rulings) poly += ZPoly::monomial(r.j(fi.diagram));
    if (o.as_json) {
        json jr = json::array();
        for (const Ruling& r : rulings) jr.push_back(ruling_to_json(fi.diagram, r));
        out << json{{"count", rulings.size()},
                    {"polynomial", to_json(poly)},
                    {"rulings", jr}}
                   .dump()
            << "\n";
        return 0;
    }
    for (const Ruling& r : rulings) out << ruling_to_json(fi.diagram, r).dump() << "\n";
    out << "count = " << rulings.size() << "\n";
    out << "R^" << o.p << (o.generalized ? " (generalized)" : "") << " = " << poly.str() << "\n";
    return 0;
}

int cmd_kauffman(const CommonOpts& o, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    require_valid(fi.diagram);
    Orientation ori = pick_orientation(fi);
    SkeinElement d = kauffman_D(from_front(fi.diagram), {o.budget});
    SkeinElement f = kauffman_F(fi.diagram, ori, {o.budget});
    if (o.as_json) {
        out << json{{"D", to_json(d)}, {"F", to_json(f)}}.dump() << "\n";
        return 0;
    }
    out << "D = " << d.str() << "\n";
    out << "F = " << f.str() << "\n";
    return 0;
}

int cmd_spec(const CommonOpts& o, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    require_valid(fi.diagram);
    Orientation ori = pick_orientation(fi);
    SkeinElement f = kauffman_F(fi.diagram, ori, {o.budget});
    AZPoly fhat = psi(f);
    ZPoly r1 = fhat.coeff_a(-tb(fi.diagram, ori));
    if (o.as_json) {
        out << json{{"F_hat", to_json(fhat)}, {"ruling_polynomial", to_json(r1)}}.dump() << "\n";
        return 0;
    }
    out << "F_hat = " << fhat.str() << "\n";
    out << "R^1 (coefficient of a^" << -tb(fi.diagram, ori) << ") = " << r1.str() << "\n";
    return 0;
}

int cmd_sharp(const CommonOpts& o, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    require_valid(fi.diagram);
    Orientation ori = pick_orientation(fi);
    Sharpness s = sharpness(fi.diagram, ori, {o.budget});
    if (o.as_json) {
        json j = {{"sharp", s.sharp}, {"tb", s.tb}, {"bound", s.bound}};
        if (s.certificate) j["certificate"] = s.certificate->parts();
        out << j.dump() << "\n";
        return 0;
    }
    out << "tb = " << s.tb << ", -deg_a F = " << s.bound << "\n";
    out << (s.sharp ? "sharp" : "not_sharp");
    if (s.certificate) out << ", certificate lambda = " << s.certificate->str();
    out << "\n";
    return 0;
}

int cmd_dga(const CommonOpts& o, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    require_valid(fi.diagram);
    Dga g = build_dga(fi.diagram, pick_potential(fi, o.p));
    StructureReport rep = check_structure(g);
    if (o.as_json) {
        json j = to_json(g);
        j["structure_ok"] = rep.ok;
        if (!rep.ok) j["structure_offender"] = rep.offender;
        out << j.dump() << "\n";
    } else {
        out << "generators = " << g.gens.size() << ", p = " << g.p << "\n";
        for (size_t id = 0; id < g.gens.size(); ++id) {
            out << g.gens[id].name() << " (deg " << g.gens[id].degree << "): d -> ";
            if (g.diff[id].is_zero()) out << "0";
            bool first = true;
            for (const Word& w : g.diff[id].words) {
                if (!first) out << " + ";
                first = false;
                if (w.empty()) out << "1";
                for (size_t l = 0; l < w.size(); ++l)
                    out << (l ? "*" : "") << g.gens[w[l]].name();
            }
            out << "\n";
        }
        out << "structure check: " << (rep.ok ? "ok" : "FAILED at " + rep.offender) << "\n";
    }
    if (!rep.ok) throw Error("structure check failed: " + rep.offender + ": " + rep.reason);
    return 0;
}

int cmd_augment(const CommonOpts& o, const std::string& mode, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    require_valid(fi.diagram);
    MaslovPotential mu = pick_potential(fi, o.p);
    Dga g = build_dga(fi.diagram, mu);
    if (mode == "brute") {
        auto all = brute_force_augmentations(g, o.p, o.limit);
        if (o.as_json) {
            json ja = json::array();
            for (const Augmentation& a : all) ja.push_back(augmentation_to_json(g, a));
            out << json{{"count", all.size()}, {"augmentations", ja}}.dump() << "\n";
        } else {
            out << "augmentations: " << all.size() << "\n";
        }
        return 0;
    }
    auto rulings = enumerate_rulings(fi.diagram, true, o.p, mu, o.max_strands);
    if (rulings.empty()) {
        out << (o.as_json ? "{\"count\":0}" : "no generalized normal ruling; nothing to construct")
            << "\n";
        return 0;
    }
    Augmentation eps = augmentation_from_gnr(g, rulings.front());
    if (mode == "construct") {
        out << augmentation_to_json(g, eps).dump() << "\n";
        return 0;
    }
    // extract: round-trip through the Barannikov pairing
    Ruling back = gnr_from_augmentation(g, eps);
    bool same = back.rho.size() == rulings.front().rho.size();
    for (size_t m = 0; same && m < back.rho.size(); ++m)
        same = back.rho[m] == rulings.front().rho[m];
    json j = {{"augmentation", augmentation_to_json(g, eps)},
              {"extracted", ruling_to_json(fi.diagram, back)},
              {"round_trip", same}};
    out << (o.as_json ? j.dump() : std::string("round trip ") + (same ? "ok" : "FAILED")) << "\n";
    return same ? 0 : 3;
}

int cmd_equivalence(const CommonOpts& o, std::istream& in, std::ostream& out) {
    FrontInput fi = load_front(o, in);
    require_valid(fi.diagram);
    Orientation ori = pick_orientation(fi);
    Sharpness s = sharpness(fi.diagram, ori, {o.budget});
    MaslovPotential mu1 = pick_potential(fi, 1);
    bool gnr = has_ruling(fi.diagram, true, 1, mu1, o.max_strands);
    Dga g = build_dga(fi.diagram, mu1);
    bool aug_known = count_free_generators(g, 1) <= o.limit;
    bool aug = aug_known && has_augmentation(g, 1, o.limit);

    bool consistent = (s.sharp == gnr) && (!aug_known || aug == gnr);
    json j = {{"sharp", s.sharp},
              {"gnr", gnr},
              {"augmentation", aug_known ? json(aug) : json(nullptr)},
              {"consistent", consistent}};
    if (o.as_json) {
        out << j.dump() << "\n";
    } else {
        out << "tb estimate sharp: " << (s.sharp ? "yes" : "no") << "\n";
        out << "generalized normal ruling: " << (gnr ? "yes" : "no") << "\n";
        out << "augmentation (p=1): " << (aug_known ? (aug ? "yes" : "no") : "skipped") << "\n";
        out << "verdict: " << (consistent ? "consistent" : "VIOLATION") << "\n";
    }
    return consistent ? 0 : 3;
}

int cmd_gen(const std::string& what, const std::string& arg, const CommonOpts& o,
            std::ostream& out) {
    FrontDiagram d;
    if (what == "A") {
        std::vector<int> parts;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
        d = a_lambda(Partition(parts));
    } else if (what == "basic") {
        d = basic_front(std::stoi(arg));
    } else if (what == "unknot") {
        d = FrontDiagram{0, {{FrontEventType::LeftCusp, 1}, {FrontEventType::RightCusp, 1}}};
    } else if (what == "random") {
        d = random_front(o.seed, o.limit);
    } else {
        throw Error("unknown generator " + what + " (expected A, basic, unknot or random)");
    }
    out << to_json(d).dump() << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Legendrian solid-torus link invariants"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string mode = "brute";
    std::string gen_what, gen_arg;

    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("input", o.input, "diagram JSON file, or - for stdin");
        cmd->add_flag("--json", o.as_json, "machine-readable output");
        cmd->add_option("--budget", o.budget, "skein recursion node limit");
        cmd->add_option("--p", o.p, "grading modulus");
        cmd->add_flag("--generalized", o.generalized, "allow fixed-point strands");
        cmd->add_option("--limit", o.limit, "brute-force generator limit / random size");
        cmd->add_option("--max-strands", o.max_strands, "ruling enumeration strand bound");
        cmd->add_option("--seed", o.seed, "random seed");
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a diagram, print N(m)");
    add_common(validate_cmd);
    CLI::App* invariants_cmd = app.add_subcommand("invariants", "tb, rotation, writhe");
    add_common(invariants_cmd);
    CLI::App* rulings_cmd = app.add_subcommand("rulings", "enumerate rulings, ruling polynomial");
    add_common(rulings_cmd);
    CLI::App* kauffman_cmd = app.add_subcommand("kauffman", "skein invariant D and F");
    add_common(kauffman_cmd);
    CLI::App* spec_cmd = app.add_subcommand("spec", "specialization and recovered R^1");
    add_common(spec_cmd);
    CLI::App* sharp_cmd = app.add_subcommand("sharp", "tb estimate sharpness and certificate");
    add_common(sharp_cmd);
    CLI::App* dga_cmd = app.add_subcommand("dga", "build the DGA, check d^2 = 0");
    add_common(dga_cmd);
    CLI::App* augment_cmd = app.add_subcommand("augment", "augmentation construction/search");
    add_common(augment_cmd);
    augment_cmd->add_option("--mode", mode, "brute | construct | extract")
        ->check(CLI::IsMember({"brute", "construct", "extract"}));
    CLI::App* equiv_cmd = app.add_subcommand("equivalence", "sharpness / ruling / augmentation");
    add_common(equiv_cmd);
    CLI::App* gen_cmd = app.add_subcommand("gen", "emit basic fronts and products");
    gen_cmd->add_option("what", gen_what, "A | basic | unknot | random")->required();
    gen_cmd->add_option("arg", gen_arg, "partition (e.g. 3,2,1) or winding");
    add_common(gen_cmd, false);

    std::vector<const char*> argv;
    argv.push_back("ltorus");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(o, in, out);
        if (invariants_cmd->parsed()) return cmd_invariants(o, in, out);
        if (rulings_cmd->parsed()) return cmd_rulings(o, in, out);
        if (kauffman_cmd->parsed()) return cmd_kauffman(o, in, out);
        if (spec_cmd->parsed()) return cmd_spec(o, in, out);
        if (sharp_cmd->parsed()) return cmd_sharp(o, in, out);
        if (dga_cmd->parsed()) return cmd_dga(o, in, out);
        if (augment_cmd->parsed()) return cmd_augment(o, mode, in, out);
        if (equiv_cmd->parsed()) return cmd_equivalence(o, in, out);
        if (gen_cmd->parsed()) return cmd_gen(gen_what, gen_arg, o, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const StrandLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace ltorus
