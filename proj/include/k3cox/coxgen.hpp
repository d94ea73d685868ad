#pragma once

#include "k3cox/linsys.hpp"

#include <array>
#include <chrono>
#include <optional>

namespace k3cox {

/// How a candidate degree entered the pipeline.
enum class Tier { NegCurve, HilbertBasis, Sum2, Sum3, Special2FF };

std::string tier_name(Tier t);

struct DegreeVerdict {
    IVec degree;
    Tier tier = Tier::HilbertBasis;
    bool kept = true;
    int eliminated_by = 0;        // test number 1..6, 7 = covering involution
    std::vector<IVec> witness;    // classes reproducing the elimination
    bool l1_unresolved = false;   // 3A with A^2 = 2 kept without involution data
    bool stored = false;          // taken from the stored answer, not computed
};

/// The four witness pools behind tests 1-4.
struct TSets {
    std::vector<std::pair<IVec, IVec>> t1;       // A.B = 0, A = B only for isotropic nef A
    std::vector<std::array<IVec, 3>> t2;         // 3-subsets with at least one nef member
    std::vector<std::pair<IVec, IVec>> t3;       // ordered Ottem pairs
    std::vector<IVec> t4;                        // multiples killed by ray arguments
};

TSets t_sets(const K3Surface& s);

/// Pairs of distinct elliptic classes with pairing 2; each contributes the
/// exceptional candidate degree 2(F + F').
std::vector<std::pair<IVec, IVec>> special_pairs(const K3Surface& s);

/// All sums of 1..3 Hilbert-basis elements of the nef cone (with repetition)
/// plus the special 2(F+F') degrees, deduplicated and sorted.
std::vector<IVec> candidate_degrees(const K3Surface& s);

/// Standalone forms of the six tests; each returns the verdict for one
/// candidate degree. D must be nef, effective and nonzero.
DegreeVerdict test1(const K3Surface& s, const IVec& d);
DegreeVerdict test2(const K3Surface& s, const IVec& d);
DegreeVerdict test3(const K3Surface& s, const IVec& d);
DegreeVerdict test4(const K3Surface& s, const IVec& d);
DegreeVerdict test5(const K3Surface& s, const IVec& d);
DegreeVerdict test6(const K3Surface& s, const IVec& d);

struct GeneratorOptions {
    int jobs = 1;
    bool apply_l1 = true;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct GeneratorReport {
    std::vector<DegreeVerdict> verdicts;  // every candidate, sorted by degree
    std::vector<IVec> degrees;            // the kept set, sorted
    bool stored = false;                  // true when the answer is database data
};

/// The generator-degree pipeline: curve classes plus every candidate that
/// survives the applicable tests, with covering-involution elimination of
/// 3A degrees (A^2 = 2) when involution data is supplied.
GeneratorReport generators(const K3Surface& s, const std::vector<IMat>& involutions,
                           const GeneratorOptions& opts = {});

}  // namespace k3cox
