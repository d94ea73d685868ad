#pragma once

#include "k3cox/coxgen.hpp"
#include "k3cox/db.hpp"
#include "k3cox/minimal.hpp"

#include <cstdint>
#include <string>

namespace k3cox {

struct MinimalityResult {
    IVec degree;
    bool starred = false;
    bool curve = false;
    std::string status;  // necessary | inconclusive | curve-class
    std::string reason;  // no-writings | base-curve | curve-pair | curve-triple | -
    std::vector<IVec> witness;
};

/// One invocation's worth of results, serialized deterministically.
struct RunReport {
    std::string lattice_name;
    std::string subcommand;
    std::string provenance;  // computed | stored
    std::vector<IVec> curves;
    std::vector<IVec> eff_rays;
    std::vector<IVec> beff;
    std::vector<IVec> nef_rays;
    std::vector<IVec> bnef;
    std::vector<DegreeVerdict> verdicts;
    std::vector<IVec> degrees;
    std::vector<MinimalityResult> minimality;
    std::vector<std::string> mismatches;  // verify diffs, empty on success
    bool verified = false;                // verify ran and matched
    std::int64_t elapsed_ms = 0;
};

/// Key/value structured text, classes as comma-separated integers in
/// parentheses, all lists sorted. Parsing its own output is the identity.
std::string serialize_report(const RunReport& r, bool emit_witnesses);
RunReport parse_report(const std::string& text);

/// Human-oriented rendering of the same content.
std::string format_report_text(const RunReport& r, bool emit_witnesses);

std::string class_to_text(const IVec& v);
IVec class_from_text(const std::string& s, Eigen::Index rank);

}  // namespace k3cox
