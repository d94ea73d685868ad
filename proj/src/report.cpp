#include "k3cox/report.hpp"

#include <sstream>

namespace k3cox {

std::string class_to_text(const IVec& v) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

IVec class_from_text(const std::string& s, Eigen::Index rank) {
    std::vector<Int> entries;
    std::string tok;
    for (char c : s) {
        if (c == '-' || (c >= '0' && c <= '9')) {
            tok.push_back(c);
        } else if (!tok.empty()) {
            entries.push_back(Int(tok));
            tok.clear();
        }
    }
    if (!tok.empty()) entries.push_back(Int(tok));
    if (rank >= 0 && static_cast<Eigen::Index>(entries.size()) != rank)
        throw input_error("class text has wrong length: " + s);
    IVec v(static_cast<Eigen::Index>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) v[static_cast<Eigen::Index>(i)] = entries[i];
    return v;
}

namespace {

void emit_classes(std::ostringstream& os, const std::string& key,
                  const std::vector<IVec>& vs) {
    os << key << " " << vs.size() << "\n";
    for (const IVec& v : vs) os << class_to_text(v) << "\n";
}

std::string verdict_line(const DegreeVerdict& v, bool emit_witnesses) {
    std::ostringstream os;
    os << class_to_text(v.degree) << " tier=" << tier_name(v.tier)
       << " status=" << (v.kept ? "kept" : "eliminated");
    if (!v.kept) os << " test=" << v.eliminated_by;
    if (v.l1_unresolved) os << " l1-unresolved";
    if (v.stored) os << " stored";
    if (emit_witnesses && !v.witness.empty()) {
        os << " witness=";
        for (size_t i = 0; i < v.witness.size(); ++i) {
            if (i) os << '+';
            os << class_to_text(v.witness[i]);
        }
    }
    return os.str();
}

}  // namespace

std::string serialize_report(const RunReport& r, bool emit_witnesses) {
    std::ostringstream os;
    os << "report k3cox 1\n";
    os << "lattice " << r.lattice_name << "\n";
    os << "subcommand " << r.subcommand << "\n";
    os << "provenance " << r.provenance << "\n";
    os << "elapsed_ms " << r.elapsed_ms << "\n";
    emit_classes(os, "curves", r.curves);
    emit_classes(os, "eff_rays", r.eff_rays);
    emit_classes(os, "beff", r.beff);
    emit_classes(os, "nef_rays", r.nef_rays);
    emit_classes(os, "bnef", r.bnef);
    os << "verdicts " << r.verdicts.size() << "\n";
    for (const DegreeVerdict& v : r.verdicts) os << verdict_line(v, emit_witnesses) << "\n";
    emit_classes(os, "degrees", r.degrees);
    os << "minimality " << r.minimality.size() << "\n";
    for (const MinimalityResult& m : r.minimality) {
        os << class_to_text(m.degree) << " status=" << m.status << " reason=" << m.reason
           << (m.starred ? " starred" : "");
        if (emit_witnesses && !m.witness.empty()) {
            os << " witness=";
            for (size_t i = 0; i < m.witness.size(); ++i) {
                if (i) os << '+';
                os << class_to_text(m.witness[i]);
            }
        }
        os << "\n";
    }
    os << "mismatches " << r.mismatches.size() << "\n";
    for (const std::string& m : r.mismatches) os << m << "\n";
    os << "verified " << (r.verified ? 1 : 0) << "\n";
    os << "end\n";
    return os.str();
}

RunReport parse_report(const std::string& text) {
    RunReport r;
    std::istringstream in(text);
    std::string line;

    auto fail = [](const std::string& why) -> RunReport {
        throw input_error("report parse: " + why);
    };

    if (!std::getline(in, line) || line.rfind("report k3cox", 0) != 0)
        return fail("missing header");

    auto read_classes = [&](size_t count) {
        std::vector<IVec> vs;
        for (size_t i = 0; i < count; ++i) {
            if (!std::getline(in, line)) throw input_error("report parse: truncated classes");
            vs.push_back(class_from_text(line, -1));
        }
        return vs;
    };

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "end") break;
        if (key == "lattice") {
            ls >> r.lattice_name;
        } else if (key == "subcommand") {
            ls >> r.subcommand;
        } else if (key == "provenance") {
            ls >> r.provenance;
        } else if (key == "elapsed_ms") {
            ls >> r.elapsed_ms;
        } else if (key == "curves" || key == "eff_rays" || key == "beff" ||
                   key == "nef_rays" || key == "bnef" || key == "degrees") {
            size_t count;
            ls >> count;
            auto vs = read_classes(count);
            if (key == "curves") r.curves = std::move(vs);
            else if (key == "eff_rays") r.eff_rays = std::move(vs);
            else if (key == "beff") r.beff = std::move(vs);
            else if (key == "nef_rays") r.nef_rays = std::move(vs);
            else if (key == "bnef") r.bnef = std::move(vs);
            else r.degrees = std::move(vs);
        } else if (key == "verdicts") {
            size_t count;
            ls >> count;
            for (size_t i = 0; i < count; ++i) {
                if (!std::getline(in, line)) return fail("truncated verdicts");
                DegreeVerdict v;
                std::istringstream vs(line);
                std::string tok;
                vs >> tok;
                v.degree = class_from_text(tok, -1);
                while (vs >> tok) {
                    if (tok.rfind("tier=", 0) == 0) {
                        std::string t = tok.substr(5);
                        if (t == "neg-curve") v.tier = Tier::NegCurve;
                        else if (t == "hb") v.tier = Tier::HilbertBasis;
                        else if (t == "sum2") v.tier = Tier::Sum2;
                        else if (t == "sum3") v.tier = Tier::Sum3;
                        else v.tier = Tier::Special2FF;
                    } else if (tok == "status=kept") {
                        v.kept = true;
                    } else if (tok == "status=eliminated") {
                        v.kept = false;
                    } else if (tok.rfind("test=", 0) == 0) {
                        v.eliminated_by = std::stoi(tok.substr(5));
                    } else if (tok == "l1-unresolved") {
                        v.l1_unresolved = true;
                    } else if (tok == "stored") {
                        v.stored = true;
                    } else if (tok.rfind("witness=", 0) == 0) {
                        std::string w = tok.substr(8);
                        size_t pos = 0;
                        while (pos < w.size()) {
                            size_t close = w.find(')', pos);
                            if (close == std::string::npos) break;
                            v.witness.push_back(
                                class_from_text(w.substr(pos, close - pos + 1), -1));
                            pos = close + 1;
                            if (pos < w.size() && w[pos] == '+') ++pos;
                        }
                    }
                }
                r.verdicts.push_back(std::move(v));
            }
        } else if (key == "minimality") {
            size_t count;
            ls >> count;
            for (size_t i = 0; i < count; ++i) {
                if (!std::getline(in, line)) return fail("truncated minimality");
                MinimalityResult m;
                std::istringstream ms(line);
                std::string tok;
                ms >> tok;
                m.degree = class_from_text(tok, -1);
                while (ms >> tok) {
                    if (tok.rfind("status=", 0) == 0) m.status = tok.substr(7);
                    else if (tok.rfind("reason=", 0) == 0) m.reason = tok.substr(7);
                    else if (tok == "starred") m.starred = true;
                    else if (tok.rfind("witness=", 0) == 0) {
                        std::string w = tok.substr(8);
                        size_t pos = 0;
                        while (pos < w.size()) {
                            size_t close = w.find(')', pos);
                            if (close == std::string::npos) break;
                            m.witness.push_back(
                                class_from_text(w.substr(pos, close - pos + 1), -1));
                            pos = close + 1;
                            if (pos < w.size() && w[pos] == '+') ++pos;
                        }
                    }
                }
                m.curve = (m.status == "curve-class");
                r.minimality.push_back(std::move(m));
            }
        } else if (key == "mismatches") {
            size_t count;
            ls >> count;
            for (size_t i = 0; i < count; ++i) {
                if (!std::getline(in, line)) return fail("truncated mismatches");
                r.mismatches.push_back(line);
            }
        } else if (key == "verified") {
            int flag;
            ls >> flag;
            r.verified = (flag == 1);
        } else {
            return fail("unknown key " + key);
        }
    }
    return r;
}

std::string format_report_text(const RunReport& r, bool emit_witnesses) {
    std::ostringstream os;
    os << "lattice " << r.lattice_name << " (" << r.provenance << ")\n";
    auto section = [&](const char* title, const std::vector<IVec>& vs) {
        if (vs.empty()) return;
        os << title << " [" << vs.size() << "]:";
        for (const IVec& v : vs) os << ' ' << class_to_text(v);
        os << "\n";
    };
    section("E(X)      ", r.curves);
    section("BEff(X)   ", r.beff);
    section("N(X)      ", r.nef_rays);
    section("BNef(X)   ", r.bnef);
    if (!r.verdicts.empty()) {
        size_t kept = 0;
        for (const auto& v : r.verdicts) kept += v.kept;
        os << "candidates " << r.verdicts.size() << ", kept " << kept << "\n";
        for (const auto& v : r.verdicts)
            if (v.l1_unresolved || (emit_witnesses && !v.kept))
                os << "  " << verdict_line(v, emit_witnesses) << "\n";
    }
    section("degrees   ", r.degrees);
    if (!r.minimality.empty()) {
        os << "minimality:\n";
        for (const auto& m : r.minimality) {
            os << "  " << class_to_text(m.degree) << " " << m.status;
            if (m.status != "curve-class") os << " (" << m.reason << ")";
            if (m.starred) os << " [starred]";
            os << "\n";
        }
    }
    if (r.subcommand == "verify" || r.subcommand == "all") {
        if (r.mismatches.empty()) {
            os << "verify: OK\n";
        } else {
            os << "verify: MISMATCH\n";
            for (const std::string& m : r.mismatches) os << "  " << m << "\n";
        }
    }
    os << "elapsed " << r.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace k3cox
