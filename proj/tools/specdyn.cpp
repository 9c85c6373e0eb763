// Command-line surface: point classification, orbit traces, Julia-slice
// rendering, fixed-point reports, Koopman oracle sweeps and the
// verification suite. Every subcommand is a thin shell over the library.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "specdyn/classification.hpp"
#include "specdyn/dihedral.hpp"
#include "specdyn/grigorchuk.hpp"
#include "specdyn/indeterminacy.hpp"
#include "specdyn/json_io.hpp"
#include "specdyn/koopman.hpp"
#include "specdyn/render.hpp"
#include "specdyn/spectrum.hpp"
#include "specdyn/verify.hpp"

namespace {

using namespace specdyn;

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOFailureError("cannot open '" + path + "'");
    out << body;
}

void emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty())
        std::cout << body << "\n";
    else
        write_text_file(out_path, body + "\n");
}

struct CommonOpts {
    std::string point;
    int max_iter = 100;
    double tol = 1e-10;
    std::string format = "text";
    std::string out;
};

int cmd_classify(const CommonOpts& opt) {
    const Point3 p = normalize(parse_affine3(opt.point));
    const Classification c = classify_point(p, opt.max_iter, opt.tol);
    const SpectrumVerdict sv = spectrum_membership(p, opt.tol);
    if (opt.format == "json") {
        json j = to_json(c);
        j["point"] = format_projective(p);
        j["spectrum"] = to_json(sv);
        emit(j.dump(2), opt.out);
    } else {
        std::string body = "point:   " + format_projective(p) + "\nverdict: " + to_string(c.kind);
        if (c.x_param) body += " (x = " + std::to_string(*c.x_param) + ")";
        if (c.step) body += " (orbit hits I1 at step " + std::to_string(*c.step) + ")";
        if (c.limit) body += "\nlimit:   " + format_projective(*c.limit);
        emit(body, opt.out);
    }
    return 0;
}

int cmd_orbit(const CommonOpts& opt, int steps, bool raw) {
    const Affine3 z = parse_affine3(opt.point);
    const OrbitTrace trace = iterate_F(z, steps, !raw);
    if (opt.format == "json") {
        json j;
        j["renormalized"] = trace.renormalized;
        if (trace.terminated_at_indeterminacy)
            j["terminated_at_indeterminacy"] = *trace.terminated_at_indeterminacy;
        json pts = json::array();
        for (const auto& p : trace.points) pts.push_back(format_affine(p));
        j["points"] = pts;
        emit(j.dump(2), opt.out);
    } else {
        emit(orbit_to_csv(trace), opt.out);
    }
    return 0;
}

int cmd_render(const RenderConfig& cfg, const std::string& out, const std::string& mode) {
    RenderConfig c = cfg;
    if (mode == "classification") c.mode = RenderMode::classification;
    else if (mode == "escape_time") c.mode = RenderMode::escape_time;
    else if (mode == "arg_f") c.mode = RenderMode::arg_f;
    else throw InvalidConfigError("unknown render mode '" + mode + "'");
    const ImageBuffer img = render_slice(c);
    write_ppm(img, out);
    std::fprintf(stderr, "wrote %dx%d PPM to %s\n", img.width, img.height, out.c_str());
    return 0;
}

int cmd_fixed_points(const std::string& map, const std::string& domain, const CommonOpts& opt) {
    const Domain d = domain == "projective" ? Domain::projective : Domain::affine;
    FixedPointReport rep;
    if (map == "F") {
        rep = fixed_points_F(d);
    } else if (map == "G") {
        rep = fixed_points_G({cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(0.5, 0.0)}, d);
    } else {
        throw InvalidConfigError("map must be F or G");
    }
    if (opt.format == "json") {
        emit(to_json(rep).dump(2), opt.out);
    } else {
        std::string body;
        for (const auto& rec : rep.records) {
            body += rec.label + ": type=" + to_string(rec.type) +
                    " residual=" + std::to_string(rec.residual) + " eigenvalues=";
            for (const auto& mu : rec.eigenvalues) body += format_complex(mu) + " ";
            body += "\n";
        }
        for (const auto& fam : rep.families)
            body += "family " + fam.name + ": " + fam.constraint + "\n";
        emit(body, opt.out);
    }
    return 0;
}

int cmd_koopman(const std::string& group, int level, const std::vector<double>& weights,
                const std::string& op, double z0, const CommonOpts& opt) {
    const LevelRep rep =
        group == "grigorchuk" ? build_grigorchuk_level(level) : build_dihedral_level(level);
    if (op == "eigenvalues") {
        std::vector<double> w = weights;
        if (w.empty()) w.assign(rep.perms.size(), 1.0);
        const std::vector<double> eig = pencil_eigenvalues(rep, w);
        if (opt.format == "json") {
            json j;
            j["level"] = level;
            j["eigenvalues"] = eig;
            emit(j.dump(2), opt.out);
        } else {
            emit(eigenvalues_to_csv(eig), opt.out);
        }
    } else if (op == "minsv") {
        std::vector<cplx> z;
        z.push_back(cplx(z0, 0.0));
        for (double w : weights) z.push_back(cplx(w, 0.0));
        if (z.size() != rep.perms.size() + 1)
            throw InvalidConfigError("need one weight per generator");
        const double sv = min_singular_value(rep, z);
        emit(opt.format == "json" ? json{{"min_singular_value", sv}}.dump(2)
                                  : std::to_string(sv),
             opt.out);
    } else if (op == "params") {
        if (weights.size() != 2) throw InvalidConfigError("params needs weights z1 z2");
        const std::vector<double> xs = empirical_spectrum_params(rep, weights[0], weights[1]);
        if (opt.format == "json") {
            json j;
            j["x_params"] = xs;
            emit(j.dump(2), opt.out);
        } else {
            emit(eigenvalues_to_csv(xs), opt.out);
        }
    } else if (op == "export") {
        emit(to_json(rep).dump(2), opt.out);
    } else {
        throw InvalidConfigError("koopman op must be eigenvalues, minsv, params or export");
    }
    return 0;
}

int cmd_grigorchuk(const CommonOpts& opt, bool j_facts, int probe) {
    if (probe > 0) {
        const ConjectureProbe pr = probe_conjecture(probe, 200);
        json j;
        j["heuristic"] = "samples of X(p(A_pi)) iterated under G; numerical evidence only, "
                         "asserts nothing about the conjecture";
        j["samples"] = pr.samples;
        j["non_convergent"] = pr.non_convergent;
        j["max_late_oscillation"] = pr.max_oscillation;
        emit(opt.format == "json" ? j.dump(2)
                                  : "heuristic probe: " + std::to_string(pr.non_convergent) + "/" +
                                        std::to_string(pr.samples) +
                                        " orbits show no convergence (max late swing " +
                                        std::to_string(pr.max_oscillation) + ")",
             opt.out);
        return 0;
    }
    const Affine5 z = parse_affine5(opt.point);
    if (j_facts) {
        const JOrbitFacts facts = J_orbit_facts(z);
        json j;
        j["image_in_spectrum"] = facts.image_in_spectrum;
        j["second_image_zero"] = facts.second_image_zero;
        emit(opt.format == "json"
                 ? j.dump(2)
                 : std::string("G(z) in spectrum: ") + (facts.image_in_spectrum ? "yes" : "no") +
                       ", G(G(z)) = 0: " + (facts.second_image_zero ? "yes" : "no"),
             opt.out);
        return 0;
    }
    const Classification c = classify_GM(normalize(z), opt.max_iter, opt.tol);
    if (opt.format == "json") {
        json j = to_json(c);
        j["point"] = format_projective(normalize(z));
        j["dihedral_preimage"] = format_projective(normalize(invert_X(z)));
        emit(j.dump(2), opt.out);
    } else {
        emit("verdict on M: " + to_string(c.kind), opt.out);
    }
    return 0;
}

int cmd_hecke(int level, const CommonOpts& opt) {
    const auto intervals = pencil_spectrum_in_zeta(1.0, 1.0, 2.0);
    json j;
    j["intervals"] = json::array();
    std::string text = "Hecke operator spectrum: ";
    for (const auto& iv : intervals) {
        j["intervals"].push_back({iv.lo, iv.hi});
        text += "[" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "] ";
    }
    if (level > 0) {
        const LevelRep rep = build_grigorchuk_level(level);
        const std::vector<double> eig = pencil_eigenvalues(rep, {1.0, 1.0, 1.0, 1.0});
        bool inside = true;
        for (double v : eig) {
            bool ok = false;
            for (const auto& iv : intervals)
                if (v >= iv.lo - 1e-8 && v <= iv.hi + 1e-8) ok = true;
            if (!ok) inside = false;
        }
        j["level"] = level;
        j["level_min"] = eig.front();
        j["level_max"] = eig.back();
        j["level_inside"] = inside;
        text += inside ? "(level-" + std::to_string(level) + " oracle agrees)"
                       : "(LEVEL ORACLE DISAGREES)";
        if (!inside) {
            emit(opt.format == "json" ? j.dump(2) : text, opt.out);
            return 1;
        }
    }
    emit(opt.format == "json" ? j.dump(2) : text, opt.out);
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites, const CommonOpts& opt) {
    const std::vector<CheckResult> results = run_checks(suites);
    bool all = true;
    json j;
    j["results"] = json::array();
    std::string text;
    for (const CheckResult& r : results) {
        all = all && r.pass;
        j["results"].push_back({{"name", r.name},
                                {"criterion", r.criterion},
                                {"pass", r.pass},
                                {"detail", r.detail},
                                {"seconds", r.seconds}});
        char line[640];
        std::snprintf(line, sizeof line, "[%s] %-4s %-20s (%.2fs) %s\n",
                      r.pass ? "PASS" : "FAIL", r.criterion.c_str(), r.name.c_str(), r.seconds,
                      r.detail.c_str());
        text += line;
    }
    j["all_pass"] = all;
    if (opt.format == "json") emit(j.dump(2), opt.out);
    else emit(text, opt.out);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral dynamics of self-similar groups: the dihedral map F, the "
                 "Grigorchuk map G, their Julia sets, and finite-level Koopman oracles"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    CommonOpts opt;
    app.add_option("--max-iter", opt.max_iter, "iteration budget")->capture_default_str();
    app.add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
    app.add_option("--format", opt.format, "output format: text|json")->capture_default_str();
    app.add_option("--out", opt.out, "write output to this path");

    auto* classify = app.add_subcommand("classify", "Julia/Fatou classification of a P^2 point");
    classify->add_option("--point", opt.point, "point, e.g. \"2,1,1\" or \"[1:1:3]\"")->required();

    auto* orbit = app.add_subcommand("orbit", "forward orbit of F as CSV or JSON");
    orbit->add_option("--point", opt.point)->required();
    int steps = 20;
    bool raw = false;
    orbit->add_option("--steps", steps, "number of forward steps")->capture_default_str();
    orbit->add_flag("--raw", raw, "skip per-step pivot renormalization");

    auto* render = app.add_subcommand("render", "render a Julia slice to binary PPM");
    RenderConfig cfg;
    std::string mode = "classification";
    std::string render_out = "slice.ppm";
    render->add_option("--chart", cfg.chart, "coordinate pinned to 1")->capture_default_str();
    render->add_option("--x-min", cfg.x_min)->capture_default_str();
    render->add_option("--x-max", cfg.x_max)->capture_default_str();
    render->add_option("--y-min", cfg.y_min)->capture_default_str();
    render->add_option("--y-max", cfg.y_max)->capture_default_str();
    render->add_option("--resolution", cfg.resolution, "pixels per axis")->capture_default_str();
    render->add_option("--mode", mode, "classification|escape_time|arg_f")->capture_default_str();
    render->add_option("--max-iter", cfg.max_iter)->capture_default_str();
    render->add_option("--out", render_out, "output PPM path")->capture_default_str();

    auto* fixed = app.add_subcommand("fixed-points", "fixed-point report for F or G");
    std::string map = "F", domain = "affine";
    fixed->add_option("--map", map, "F|G")->capture_default_str();
    fixed->add_option("--domain", domain, "affine|projective")->capture_default_str();

    auto* koopman = app.add_subcommand("koopman", "finite-level Koopman representation oracle");
    std::string group = "dihedral", kop = "eigenvalues";
    int level = 8;
    double z0 = 0.0;
    std::vector<double> weights;
    koopman->add_option("--group", group, "dihedral|grigorchuk")->capture_default_str();
    koopman->add_option("--level", level, "tree level")->capture_default_str();
    koopman->add_option("--weights", weights, "one real weight per generator");
    koopman->add_option("--z0", z0, "identity coefficient (minsv)")->capture_default_str();
    koopman->add_option("--op", kop, "eigenvalues|minsv|params|export")->capture_default_str();

    auto* grig = app.add_subcommand("grigorchuk", "slice classification, J facts, conjecture probe");
    bool j_facts = false;
    int probe = 0;
    grig->add_option("--point", opt.point, "5-component point");
    grig->add_flag("--j-facts", j_facts, "verify the alpha=0 orbit facts for the point");
    grig->add_option("--probe-conjecture", probe, "sample count for the heuristic probe");

    auto* verify = app.add_subcommand("verify", "run acceptance checks");
    std::vector<std::string> suites;
    verify->add_option("suites", suites, "named checks (default: all)");

    auto* hecke = app.add_subcommand("hecke", "Hecke operator spectrum preset");
    int hecke_level = 0;
    hecke->add_option("--level", hecke_level, "cross-check against this tree level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(opt);
        if (orbit->parsed()) return cmd_orbit(opt, steps, raw);
        if (render->parsed()) return cmd_render(cfg, render_out, mode);
        if (fixed->parsed()) return cmd_fixed_points(map, domain, opt);
        if (koopman->parsed()) return cmd_koopman(group, level, weights, kop, z0, opt);
        if (grig->parsed()) return cmd_grigorchuk(opt, j_facts, probe);
        if (verify->parsed()) return cmd_verify(suites, opt);
        if (hecke->parsed()) return cmd_hecke(hecke_level, opt);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const DimensionMismatchError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const InvalidConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
    return 2;
}
