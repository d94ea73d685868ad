// k3cox: curve classes, cones, cohomology and Cox-ring generator degrees
// for Mori dream K3 surfaces of Picard number three.

#include "k3cox/coxgen.hpp"
#include "k3cox/db.hpp"
#include "k3cox/minimal.hpp"
#include "k3cox/negcurves.hpp"
#include "k3cox/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <set>

using namespace k3cox;

namespace {

struct Options {
    std::string lattice;
    std::string input;
    int jobs = 1;
    double timeout_seconds = 0;
    bool no_l1 = false;
    bool emit_witnesses = false;
    std::string format = "text";
};

LatticeRecord load_record(const Options& opt) {
    if (!opt.lattice.empty() && !opt.input.empty())
        throw input_error("give either --lattice or --input, not both");
    if (!opt.lattice.empty()) {
        auto rec = find_bundled(opt.lattice);
        if (!rec) throw input_error("unknown lattice name: " + opt.lattice);
        return *rec;
    }
    if (!opt.input.empty()) return parse_record_file(opt.input);
    throw input_error("one of --lattice or --input is required");
}

std::optional<std::chrono::steady_clock::time_point> deadline_of(const Options& opt) {
    if (opt.timeout_seconds <= 0) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::milliseconds(static_cast<long>(opt.timeout_seconds * 1000));
}

void run_curves(const LatticeRecord& rec, RunReport& rep) {
    Lattice l(rec.gram);
    rep.curves = find_neg_curves(l);
    rep.provenance = "computed";
}

void run_cones(const LatticeRecord& rec, const K3Surface& s, RunReport& rep) {
    (void)rec;
    rep.curves = s.neg();
    rep.eff_rays = s.eff_cone().rays;
    rep.beff = s.beff();
    rep.nef_rays = s.nef_cone().rays;
    rep.bnef = s.bnef();
}

void run_generators(const LatticeRecord& rec, const K3Surface& s, const Options& opt,
                    RunReport& rep) {
    if (rec.stored_answer) {
        rep.provenance = "stored";
        rep.degrees = rec.expected_generators;
        sort_classes(rep.degrees);
        std::set<IVec, LexLess> curves(s.neg().begin(), s.neg().end());
        for (const IVec& d : rep.degrees) {
            DegreeVerdict v;
            v.degree = d;
            v.tier = curves.count(d) ? Tier::NegCurve : Tier::HilbertBasis;
            v.kept = true;
            v.stored = true;
            rep.verdicts.push_back(std::move(v));
        }
        return;
    }
    GeneratorOptions gopts;
    gopts.jobs = opt.jobs;
    gopts.apply_l1 = !opt.no_l1;
    gopts.deadline = deadline_of(opt);
    GeneratorReport gr = generators(s, rec.involutions, gopts);
    rep.verdicts = std::move(gr.verdicts);
    rep.degrees = std::move(gr.degrees);
}

void run_minimality(const LatticeRecord& rec, const K3Surface& s, const Options& opt,
                    RunReport& rep) {
    if (rep.degrees.empty()) run_generators(rec, s, opt, rep);
    std::set<IVec, LexLess> curves(s.neg().begin(), s.neg().end());
    std::set<IVec, LexLess> starred;
    for (size_t i = 0; i < rec.expected_generators.size(); ++i)
        if (rec.generator_starred[i]) starred.insert(rec.expected_generators[i]);

    auto deadline = deadline_of(opt);
    for (const IVec& d : rep.degrees) {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw compute_error("minimality: timeout");
        MinimalityResult m;
        m.degree = d;
        m.starred = starred.count(d) > 0;
        if (curves.count(d)) {
            m.curve = true;
            m.status = "curve-class";
            m.reason = "-";
        } else {
            auto [ok, ev] = is_minimal_degree(s, d, rep.degrees);
            m.status = ok ? "necessary" : "inconclusive";
            switch (ev.kind) {
                case MinimalityEvidence::Kind::NoWritings: m.reason = "no-writings"; break;
                case MinimalityEvidence::Kind::BaseCurve:
                    m.reason = "base-curve";
                    if (!ev.b1.empty()) m.witness = {ev.b1.front()};
                    break;
                case MinimalityEvidence::Kind::CurvePair:
                    m.reason = "curve-pair";
                    if (!ev.b2.empty()) m.witness = {ev.b2.front().first, ev.b2.front().second};
                    break;
                case MinimalityEvidence::Kind::CurveTriple:
                    m.reason = "curve-triple";
                    if (!ev.b3.empty())
                        m.witness = {ev.b3.front()[0], ev.b3.front()[1], ev.b3.front()[2]};
                    break;
                case MinimalityEvidence::Kind::RayGenerator:
                    m.reason = "ray-degree-three";
                    m.witness = ev.ray_witness;
                    break;
                case MinimalityEvidence::Kind::Inconclusive: m.reason = "-"; break;
            }
        }
        rep.minimality.push_back(std::move(m));
    }
}

void diff_lists(const std::string& what, const std::vector<IVec>& computed,
                const std::vector<IVec>& expected, std::vector<std::string>& out) {
    std::set<IVec, LexLess> comp(computed.begin(), computed.end());
    std::set<IVec, LexLess> exp(expected.begin(), expected.end());
    for (const IVec& v : exp)
        if (!comp.count(v)) out.push_back(what + ": missing " + class_to_text(v));
    for (const IVec& v : comp)
        if (!exp.count(v)) out.push_back(what + ": unexpected " + class_to_text(v));
}

void run_verify(const LatticeRecord& rec, const K3Surface& s, const Options& opt,
                RunReport& rep) {
    if (rec.expected_beff.empty() && rec.expected_bnef.empty() &&
        rec.expected_generators.empty()) {
        rep.mismatches.push_back("record carries no expected data to verify against");
        rep.verified = false;
        return;
    }
    if (rep.bnef.empty()) run_cones(rec, s, rep);
    if (rep.degrees.empty()) run_generators(rec, s, opt, rep);

    diff_lists("BEff", rep.beff, rec.expected_beff, rep.mismatches);
    diff_lists("N", rep.nef_rays, rec.expected_n, rep.mismatches);
    diff_lists("BNef", rep.bnef, rec.expected_bnef, rep.mismatches);

    std::set<IVec, LexLess> exp(rec.expected_generators.begin(),
                                rec.expected_generators.end());
    std::set<IVec, LexLess> unresolved;
    for (const DegreeVerdict& v : rep.verdicts)
        if (v.kept && v.l1_unresolved) unresolved.insert(v.degree);
    std::set<IVec, LexLess> got(rep.degrees.begin(), rep.degrees.end());
    for (const IVec& v : rec.expected_generators)
        if (!got.count(v)) rep.mismatches.push_back("generators: missing " + class_to_text(v));
    for (const IVec& v : rep.degrees) {
        if (exp.count(v)) continue;
        if (unresolved.count(v)) continue;  // flagged 3A degrees are tolerated
        rep.mismatches.push_back("generators: unexpected " + class_to_text(v));
    }
    rep.verified = rep.mismatches.empty();
}

int dispatch(const std::string& sub, const Options& opt) {
    auto started = std::chrono::steady_clock::now();
    LatticeRecord rec = load_record(opt);
    validate_record(rec);

    RunReport rep;
    rep.lattice_name = rec.name;
    rep.subcommand = sub;
    rep.provenance = rec.stored_answer ? "stored" : "computed";

    if (rec.neg_curves.empty()) {
        Lattice l(rec.gram);
        rec.neg_curves = find_neg_curves(l);
        rep.provenance = "computed";
    }
    K3Surface surf(Lattice(rec.gram), rec.neg_curves);

    if (sub == "curves") {
        run_curves(rec, rep);
    } else if (sub == "cones") {
        run_cones(rec, surf, rep);
    } else if (sub == "generators") {
        run_generators(rec, surf, opt, rep);
    } else if (sub == "minimality") {
        run_minimality(rec, surf, opt, rep);
    } else if (sub == "verify") {
        run_verify(rec, surf, opt, rep);
    } else if (sub == "all") {
        run_curves(rec, rep);
        run_cones(rec, surf, rep);
        run_generators(rec, surf, opt, rep);
        run_minimality(rec, surf, opt, rep);
        run_verify(rec, surf, opt, rep);
    }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();

    if (opt.format == "structured")
        std::cout << serialize_report(rep, opt.emit_witnesses);
    else
        std::cout << format_report_text(rep, opt.emit_witnesses);

    if ((sub == "verify" || sub == "all") && !rep.verified) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cox-ring generator degrees of Mori dream K3 surfaces of Picard number 3"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--lattice", opt.lattice, "bundled lattice name, e.g. S_1 or S_{4,1,1}");
    app.add_option("--input", opt.input, "lattice description file");
    app.add_option("--jobs", opt.jobs, "parallel candidate evaluation threads");
    app.add_option("--timeout", opt.timeout_seconds, "wall-clock limit in seconds");
    app.add_flag("--no-l1", opt.no_l1, "skip involution-based elimination of 3A degrees");
    app.add_flag("--emit-witnesses", opt.emit_witnesses, "include witness classes in output");
    app.add_option("--format", opt.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    for (const char* name : {"curves", "cones", "generators", "minimality", "verify", "all"})
        app.add_subcommand(name)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string sub = app.get_subcommands().front()->get_name();
    try {
        return dispatch(sub, opt);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const compute_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
