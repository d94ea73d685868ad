#pragma once

#include "k3cox/lattice.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace k3cox {

/// One bundled lattice: the Gram matrix, its curve classes, the expected
/// cone and generator data it is verified against, and optional covering
/// involutions for the 3A eliminations.
struct LatticeRecord {
    std::string name;
    IMat gram;
    std::vector<IVec> neg_curves;
    std::vector<IVec> expected_beff;
    std::vector<IVec> expected_n;     // extreme rays of the nef cone
    std::vector<IVec> expected_bnef;
    std::vector<IVec> expected_generators;
    std::vector<bool> generator_starred;  // aligned with expected_generators
    std::vector<IMat> involutions;
    bool stored_answer = false;  // generator set recorded from prior work
    std::string note;
};

/// The 26 bundled rank-3 records, in the published order.
const std::vector<LatticeRecord>& bundled_lattices();

/// Lookup by name; alias forms like S_4,1,1 and S4,1,1 are accepted.
std::optional<LatticeRecord> find_bundled(const std::string& name);

/// Parse records from the line-oriented text format. For user files only
/// the name, rank and Gram matrix sections are required.
std::vector<LatticeRecord> parse_records(std::istream& in);
LatticeRecord parse_record_file(const std::string& path);

std::string serialize_record(const LatticeRecord& rec);

/// Basic structural checks: symmetry, signature, curve squares.
void validate_record(const LatticeRecord& rec);

/// The raw text of the bundled database (generated from the table data).
extern const char* const bundled_database_text;

}  // namespace k3cox
