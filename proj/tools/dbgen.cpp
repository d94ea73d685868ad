// Regenerates the bundled lattice database (src/db_data.cpp).
//
// The raw inputs below are the published tables for the 26 rank-3 lattices:
// curve classes, Hilbert-basis extras, nef extreme rays, nef Hilbert bases
// where listed, and the generator-degree index specifications. The tool
// recomputes every derived list with the library, cross-checks it against
// the raw data, resolves the index references, attaches covering
// involutions where a surviving 3A degree requires one, and prints the
// database text. Discrepancies are reported on stderr.

#include "k3cox/coxgen.hpp"
#include "k3cox/db.hpp"
#include "k3cox/minimal.hpp"

#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace k3cox;

namespace {

std::vector<IVec> classes(const std::string& text) {
    std::vector<IVec> out;
    std::vector<Int> cur;
    std::string tok;
    auto flush_tok = [&] {
        if (!tok.empty()) {
            cur.push_back(Int(tok));
            tok.clear();
        }
    };
    for (char c : text) {
        if (c == '(') {
            cur.clear();
        } else if (c == ',') {
            flush_tok();
        } else if (c == ')') {
            flush_tok();
            IVec v(static_cast<Eigen::Index>(cur.size()));
            for (size_t i = 0; i < cur.size(); ++i) v[static_cast<Eigen::Index>(i)] = cur[i];
            out.push_back(std::move(v));
        } else if (c == '-' || (c >= '0' && c <= '9')) {
            tok.push_back(c);
        }
    }
    return out;
}

IMat gram_direct(std::initializer_list<long> entries) { return mat_of(3, 3, entries); }

// ambient form of the classification's e1, e2, e3
const IMat kBaseForm = mat_of(3, 3, {-2, 0, 1, 0, -2, 2, 1, 2, -2});

IMat gram_from_basis(std::initializer_list<long> basis_rows) {
    IMat b = mat_of(3, 3, basis_rows);
    return b * kBaseForm * b.transpose();
}

IMat gram_a2_plus(long d) { return mat_of(3, 3, {d, 0, 0, 0, -2, 1, 0, 1, -2}); }

struct GenSpec {
    bool beff_only = false;
    bool all_bnef = false;
    std::vector<std::pair<int, bool>> bnef_idx;            // 1-based, starred
    std::vector<std::tuple<int, int, bool>> pair_sums;     // BNef[i]+BNef[j]
    std::vector<std::pair<int, bool>> triples;             // 3*BNef[i]
    std::vector<std::pair<std::array<int, 3>, bool>> sum3; // BNef[i]+BNef[j]+BNef[k]
};

struct RawRow {
    std::string name;
    IMat gram;
    std::string ex;          // E(X) as printed
    std::string beff_extra;  // classes beyond E(X) in the effective basis
    std::string nx;          // nef extreme rays as printed
    std::string bnef;        // nef Hilbert basis as printed, empty if derived
    GenSpec gen;
    bool stored = false;
    std::string note;
    // square-2 classes whose covering involution is stored even when the
    // Koszul tests already dispose of the 3A degree
    std::string extra_involutions;
};

GenSpec spec_all() {
    GenSpec g;
    g.all_bnef = true;
    return g;
}

GenSpec spec_idx(std::vector<std::pair<int, bool>> idx) {
    GenSpec g;
    g.bnef_idx = std::move(idx);
    return g;
}

std::vector<std::pair<int, bool>> plain(std::initializer_list<int> idx) {
    std::vector<std::pair<int, bool>> out;
    for (int i : idx) out.emplace_back(i, false);
    return out;
}

std::vector<RawRow> raw_rows() {
    std::vector<RawRow> rows;

    {
        RawRow r;
        r.name = "S_1";
        r.gram = gram_direct({6, 0, 0, 0, -2, 0, 0, 0, -2});
        r.ex = "(0,1,0),(0,0,1),(1,-2,0),(1,0,-2),(2,-3,-2),(2,-2,-3)";
        r.beff_extra = "(1,-1,-1)";
        r.nx = "(1,0,0),(2,-3,0),(2,0,-3),(4,-6,-3),(4,-3,-6),(5,-6,-6)";
        r.bnef =
            "(1,-1,-1),(1,-1,0),(1,0,-1),(1,0,0),(2,-3,-1),(2,-3,0),(2,-1,-3),(2,0,-3),"
            "(3,-4,-3),(3,-3,-4),(4,-6,-3),(4,-3,-6),(5,-6,-6)";
        r.gen.beff_only = true;
        r.extra_involutions = "(1,-1,-1)";  // the double-plane covering involution
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_2";
        r.gram = gram_a2_plus(36);
        r.ex = "(0,1,0),(0,0,1),(1,-5,-3),(1,-3,-5),(2,-9,-8),(2,-8,-9)";
        r.beff_extra = "(1,-4,-4)";
        r.nx = "(1,0,0),(5,-24,-12),(5,-12,-24),(13,-60,-48),(13,-48,-60),(17,-72,-72)";
        r.bnef =
            "(1,-4,-4),(1,-4,-3),(1,-4,-2),(1,-3,-4),(1,-3,-3),(1,-3,-2),"
            "(1,-2,-4),(1,-2,-3),(1,-2,-2),(1,-2,-1),(1,-1,-2),(1,-1,-1),(1,0,0),"
            "(2,-9,-7),(2,-9,-6),(2,-9,-5),(2,-7,-9),(2,-6,-9),(2,-5,-9),(3,-14,-10),"
            "(3,-14,-9),(3,-14,-8),(3,-14,-7),(3,-13,-12),(3,-12,-13),(3,-10,-14),"
            "(3,-9,-14),(3,-8,-14),(3,-7,-14),(4,-19,-11),(4,-19,-10),(4,-18,-15),"
            "(4,-15,-18),(4,-11,-19),(4,-10,-19),(5,-24,-12),(5,-23,-18),(5,-22,-20),"
            "(5,-21,-21),(5,-20,-22),(5,-18,-23),(5,-12,-24),(6,-27,-23),(6,-23,-27),"
            "(7,-32,-26),(7,-30,-29),(7,-29,-30),(7,-26,-32),(8,-37,-29),(8,-29,-37),"
            "(9,-41,-34),(9,-38,-38),(9,-34,-41),(10,-46,-37),(10,-37,-46),(11,-47,-46),"
            "(11,-46,-47),(13,-60,-48),(13,-55,-55),(13,-48,-60),(17,-72,-72)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_3";
        r.gram = gram_a2_plus(12);
        r.ex = "(0,1,0),(0,0,1),(1,-3,-2),(1,-2,-3)";
        r.nx = "(1,0,0),(3,-8,-4),(3,-4,-8),(5,-12,-12)";
        r.bnef =
            "(1,-2,-2),(1,-2,-1),(1,-1,-2),(1,-1,-1),(1,0,0),(2,-5,-4),(2,-5,-3),"
            "(2,-4,-5),(2,-3,-5),(3,-8,-4),(3,-7,-7),(3,-4,-8),(5,-12,-12)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_4";
        r.gram = gram_direct({6, 0, -1, 0, -2, 1, -1, 1, -2});
        r.ex = "(0,1,0),(0,-1,-1),(1,-1,1),(2,1,3)";
        r.nx = "(3,-1,-2),(7,-9,2),(13,9,18),(17,1,22)";
        r.bnef =
            "(1,-1,0),(1,0,0),(1,0,1),(2,-2,1),(2,-1,-1),(2,1,2),(3,-1,-2),(3,-1,3),"
            "(3,1,4),(3,2,4),(4,-5,1),(4,0,5),(7,-9,2),(8,5,11),(10,1,13),(13,9,18),(17,1,22)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_5";
        r.gram = gram_a2_plus(4);
        r.ex = "(0,1,0),(1,-1,-2),(0,0,1),(1,-2,-1)";
        r.nx = "(1,0,0),(3,-4,-4),(3,-4,-2),(3,-2,-4)";
        r.bnef =
            "(1,-1,-1),(1,0,0),(2,-2,-1),(2,-1,-2),(3,-4,-4),(3,-4,-3),(3,-4,-2),"
            "(3,-3,-4),(3,-2,-4)";
        r.gen = spec_idx(plain({1, 2, 5}));
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_6";
        r.gram = gram_direct({14, 0, -1, 0, -2, 1, -1, 1, -2});
        r.ex = "(0,-1,0),(0,0,-1),(1,3,1),(2,3,5),(2,5,4),(3,6,7)";
        r.beff_extra = "(1,2,2)";
        r.nx = "(3,-1,-2),(5,13,4),(17,31,40),(19,23,46),(25,65,42),(41,89,90)";
        r.bnef =
            "(1,0,0),(1,1,0),(1,1,1),(1,1,2),(1,2,1),(1,2,2),(2,0,-1),(2,4,1),"
            "(2,5,2),(2,5,3),(3,-1,-2),(3,4,7),(3,5,7),(3,7,2),(3,7,6),(4,8,9),"
            "(4,10,3),(4,10,7),(5,6,12),(5,7,12),(5,13,4),(5,13,5),(5,13,6),(5,13,7),"
            "(5,13,8),(6,11,14),(6,13,13),(7,18,12),(8,13,19),(9,19,20),(11,19,26),"
            "(11,22,25),(11,24,24),(12,15,29),(13,25,30),(14,25,33),(15,28,35),"
            "(15,39,25),(17,31,40),(19,23,46),(25,54,55),(25,65,42),(41,89,90)";
        r.gen = spec_idx({{1, false}, {2, false}, {3, false}, {4, false}, {5, false},
                          {6, false}, {7, false}, {10, false}, {11, true}, {12, false},
                          {13, false}, {15, false}, {16, false}, {18, false}, {19, false},
                          {20, false}, {25, false}, {27, false}, {28, false}, {30, false},
                          {33, false}, {34, false}, {38, false}, {40, true}, {41, false},
                          {42, true}, {43, true}});
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S'_{4,1,2}";
        r.gram = gram_from_basis({2, 0, 1, 0, 1, 0, 0, 0, 2});
        r.ex = "(0,1,0),(2,3,1),(0,1,1),(2,3,2)";
        r.beff_extra = "(1,2,1)";
        r.nx = "(0,2,1),(2,4,1),(2,4,3),(4,6,3)";
        r.bnef = "(0,2,1),(1,2,1),(1,3,1),(1,3,2),(2,4,1),(2,4,3),(3,5,2),(3,5,3),(4,6,3)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{4,1,1}";
        r.gram = gram_from_basis({4, 0, 0, 0, 1, 0, 0, 0, 1});
        r.ex = "(0,1,0),(0,0,1),(1,3,4)";
        r.nx = "(0,1,1),(1,3,5),(1,4,4)";
        r.bnef = "(0,1,1),(1,3,5),(1,4,4),(1,4,5)";
        r.gen = spec_all();
        r.note = "generator row printed as 'E. BNef', recorded as the union E, BNef";
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{5,1,1}";
        r.gram = gram_from_basis({5, 0, 0, 0, 1, 0, 0, 0, 1});
        r.ex = "(0,1,0),(0,0,1),(1,4,5),(4,15,24)";
        r.nx = "(0,1,1),(1,5,5),(4,15,25),(5,19,29)";
        r.bnef =
            "(0,1,1),(1,4,6),(1,5,5),(1,5,6),(2,8,13),(3,12,17),(4,15,25),(5,19,29),(5,19,30)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{6,1,1}";
        r.gram = gram_from_basis({6, 0, 0, 0, 1, 0, 0, 0, 1});
        r.ex = "(0,0,1),(1,5,6),(2,9,14),(0,1,0)";
        r.nx = "(0,1,1),(1,6,6),(2,9,15),(3,14,20)";
        r.bnef =
            "(0,1,1),(1,5,7),(1,5,8),(1,6,6),(1,6,7),(2,9,15),(2,10,13),(3,14,20),(3,14,21)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{7,1,1}";
        r.gram = gram_from_basis({7, 0, 0, 0, 1, 0, 0, 0, 1});
        r.ex = "(0,0,1),(1,6,7),(0,1,0),(3,16,24),(4,21,34),(6,33,46)";
        r.beff_extra = "(2,11,16)";
        r.nx = "(0,1,1),(1,7,7),(4,21,35),(7,37,58),(7,39,53),(9,49,70)";
        r.bnef =
            "(0,1,1),(1,6,8),(1,6,9),(1,7,7),(1,7,8),(2,11,16),(2,11,17),(2,11,18),"
            "(2,12,15),(3,16,25),(3,16,26),(3,17,23),(4,21,35),(4,22,31),(4,23,30),"
            "(5,27,40),(5,28,38),(6,32,49),(7,37,58),(7,37,59),(7,38,55),(7,39,53),"
            "(8,43,64),(9,49,70),(10,55,77)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{8,1,1}";
        r.gram = gram_from_basis({8, 0, 0, 0, 1, 0, 0, 0, 1});
        r.ex = "(0,0,1),(1,6,9),(1,7,8),(0,1,0)";
        r.nx = "(0,1,1),(1,6,10),(1,8,8),(2,13,17)";
        r.bnef =
            "(0,1,1),(1,6,10),(1,7,9),(1,7,10),(1,8,8),(1,8,9),(2,13,17),(2,13,18),(2,14,17)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{10,1,1}";
        r.gram = gram_from_basis({10, 0, 0, 0, 1, 0, 0, 0, 1});
        r.ex =
            "(1,9,10),(4,32,43),(0,0,1),(3,23,34),(2,15,24),(6,47,66),(4,33,42),(0,1,0)";
        r.beff_extra = "(1,8,11)";
        r.nx =
            "(0,1,1),(1,10,10),(2,15,25),(5,38,58),(5,42,52),(8,65,85),(9,70,100),"
            "(10,79,109)";
        r.bnef =
            "(0,1,1),(1,8,11),(1,8,12),(1,8,13),(1,9,11),(1,10,10),(1,10,11),(2,15,25),"
            "(2,17,21),(3,23,35),(3,26,31),(4,31,45),(5,38,58),(5,38,59),(5,40,54),"
            "(5,41,53),(5,42,52),(7,54,79),(7,55,77),(8,65,85),(9,70,100),(9,72,97),"
            "(9,74,95),(10,79,109),(13,102,143)";
        r.gen = spec_all();
        r.gen.triples = {{2, false}};
        r.gen.pair_sums = {{2, 1, true},  {2, 6, true},  {2, 8, true},  {2, 13, true},
                           {2, 17, true}, {2, 20, true}, {2, 21, true}, {2, 24, true}};
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{12,1,1}";
        r.gram = gram_from_basis({12, 0, 0, 0, 1, 0, 0, 0, 1});
        r.ex = "(0,1,0),(1,9,14),(2,19,26),(0,0,1),(1,11,12),(2,20,25)";
        r.beff_extra = "(1,10,13)";
        r.nx = "(0,1,1),(1,9,15),(1,12,12),(3,28,40),(3,31,37),(4,39,51)";
        r.bnef =
            "(0,1,1),(1,9,15),(1,10,13),(1,10,14),(1,10,15),(1,11,13),(1,12,12),"
            "(1,12,13),(2,19,27),(2,21,25),(3,28,40),(3,28,41),(3,29,39),(3,30,38),"
            "(3,31,37),(3,32,37),(4,39,51),(5,48,65),(5,50,63)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,2,1}";
        r.gram = gram_from_basis({1, 0, 0, 0, 2, 0, 0, 0, 1});
        r.ex = "(1,0,0),(0,0,1),(0,1,1)";
        r.nx = "(0,1,2),(4,3,8),(4,5,8)";
        r.bnef = "(0,1,2),(1,1,2),(2,2,5),(2,3,5),(4,3,8),(4,5,8)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,3,1}";
        r.gram = gram_from_basis({1, 0, 0, 0, 3, 0, 0, 0, 1});
        r.ex = "(1,0,0),(0,0,1),(0,1,2)";
        r.nx = "(0,1,3),(1,1,2),(2,1,4)";
        r.bnef = "(0,1,3),(1,1,2),(1,1,3),(2,1,4)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,4,1}";
        r.gram = gram_from_basis({1, 0, 0, 0, 4, 0, 0, 0, 1});
        r.ex = "(1,0,0),(0,1,3),(0,0,1),(3,3,8)";
        r.nx = "(0,1,4),(4,3,8),(8,3,16),(24,29,80)";
        r.bnef =
            "(0,1,4),(1,1,3),(1,1,4),(2,1,4),(2,1,5),(2,3,9),(3,2,6),(4,3,8),(4,4,11),"
            "(4,5,14),(5,2,10),(7,8,22),(8,3,16),(14,17,47),(24,29,80)";
        r.gen = spec_idx({{1, false}, {2, false}, {3, false}, {4, false}, {5, false},
                          {6, false}, {7, false}, {8, false}, {9, false}, {10, false},
                          {11, false}, {12, false}, {13, true}, {14, false}, {15, true}});
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,5,1}";
        r.gram = gram_from_basis({1, 0, 0, 0, 5, 0, 0, 0, 1});
        r.ex = "(1,0,0),(0,1,4),(0,0,1),(4,3,10),(5,6,21),(16,16,55)";
        r.beff_extra = "(2,2,7)";
        r.nx = "(0,1,5),(5,3,10),(5,7,25),(10,3,20),(20,19,65),(190,197,680)";
        r.bnef =
            "(0,1,5),(1,1,4),(1,1,5),(1,2,8),(2,1,4),(2,1,5),(2,1,6),(2,2,7),(2,3,11),"
            "(3,1,6),(3,2,7),(5,3,10),(5,7,25),(6,2,13),(6,5,17),(7,8,28),(9,9,31),"
            "(10,3,20),(13,12,41),(14,15,52),(20,19,65),(25,25,86),(30,31,107),"
            "(46,47,162),(51,53,183),(118,122,421),(190,197,680)";
        {
            std::vector<std::pair<int, bool>> idx;
            for (int i = 1; i <= 27; ++i) idx.emplace_back(i, i == 18 || i == 27);
            r.gen = spec_idx(idx);
        }
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,6,1}";
        r.gram = gram_from_basis({1, 0, 0, 0, 6, 0, 0, 0, 1});
        r.ex = "(1,0,0),(1,1,4),(0,0,1),(0,1,5)";
        r.nx = "(0,1,6),(2,1,4),(4,1,8),(4,7,32)";
        r.bnef =
            "(0,1,6),(1,1,5),(1,1,6),(1,2,10),(2,1,4),(2,1,5),(2,1,6),(2,1,7),(2,2,9),"
            "(2,3,14),(2,4,19),(3,1,6),(3,1,7),(3,4,18),(3,5,23),(4,1,8),(4,7,32)";
        r.gen = spec_all();
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,9,1}";
        r.gram = gram_from_basis({1, 0, 0, 0, 9, 0, 0, 0, 1});
        r.ex =
            "(2,1,6),(0,1,8),(0,0,1),(1,0,0),(4,5,34),(3,6,43),(7,6,39),(5,8,56),(8,8,53)";
        r.beff_extra = "(1,1,7),(2,3,21),(3,3,20)";
        r.nx =
            "(0,1,9),(3,1,6),(3,7,51),(6,1,12),(9,7,45),(9,13,90),(12,13,87),"
            "(42,73,516),(78,73,480)";
        r.bnef =
            "(0,1,9),(1,1,7),(1,1,8),(1,1,9),(1,2,15),(1,3,23),(2,1,7),(2,1,8),"
            "(2,1,9),(2,1,10),(2,3,21),(2,4,29),(2,5,37),(3,1,6),(3,1,7),(3,1,8),"
            "(3,1,9),(3,1,10),(3,2,13),(3,3,20),(3,7,51),(4,1,8),(4,1,9),(4,1,10),"
            "(4,1,11),(5,1,10),(5,1,11),(5,3,19),(5,4,26),(5,9,64),(6,1,12),(6,8,55),"
            "(7,5,32),(7,8,54),(7,11,77),(8,15,107),(9,7,45),(9,13,90),(10,9,59),"
            "(10,13,89),(10,17,120),(11,11,73),(11,13,88),(12,13,87),(12,19,133),"
            "(13,23,163),(15,25,176),(16,29,206),(17,15,98),(18,17,112),(18,31,219),"
            "(19,19,126),(20,33,232),(21,37,262),(23,39,275),(25,23,151),(26,25,165),"
            "(26,45,318),(29,51,361),(31,53,374),(32,29,190),(33,31,204),(34,33,218),"
            "(34,59,417),(40,37,243),(41,39,257),(42,73,516),(48,45,296),(55,51,335),"
            "(56,53,349),(63,59,388),(78,73,480)";
        r.gen = spec_all();
        r.gen.pair_sums = {{11, 20, true}, {11, 34, true}, {11, 43, true},
                           {2, 11, true},  {2, 12, true},  {2, 13, true},
                           {2, 20, true},  {2, 29, true},  {2, 33, true}};
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,1,1}";
        r.gram = gram_from_basis({1, 0, 0, 0, 1, 0, 0, 0, 1});
        r.ex = "(-1,0,0),(0,1,0),(1,0,1)";
        r.nx = "(1,1,1),(1,2,2),(2,3,4)";
        r.bnef = "(1,1,1),(1,2,2),(2,3,4)";
        r.gen = spec_idx(plain({1, 3}));
        r.gen.pair_sums = {{2, 3, false}};
        r.stored = true;
        r.note = "elliptic fibration with a section; generator set recorded from prior work";
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,1,2}";
        r.gram = gram_from_basis({1, 0, 0, 0, 1, 0, 0, 0, 2});
        r.ex = "(0,-1,-1),(1,2,2),(0,3,2)";
        r.nx = "(0,2,1),(1,1,1),(1,4,3)";
        r.bnef = "(0,2,1),(1,1,1),(1,4,3)";
        r.gen = spec_idx(plain({1, 2}));
        r.gen.sum3 = {{{1, 2, 3}, false}};
        r.stored = true;
        r.note = "two fibrations meeting twice; generator set recorded from prior work";
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,1,3}";
        r.gram = gram_from_basis({1, 0, 0, 0, 1, 0, 0, 0, 3});
        r.ex = "(0,-2,-1),(1,6,3),(2,3,2),(0,5,2)";
        r.nx = "(0,3,1),(3,9,5),(3,24,11),(6,12,7)";
        r.bnef =
            "(0,3,1),(1,4,2),(1,9,4),(2,6,3),(3,7,4),(3,9,5),(3,14,7),(3,19,9),"
            "(3,24,11),(4,9,5),(6,12,7)";
        r.gen = spec_idx(plain({1, 2, 6}));
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,1,4}";
        r.gram = gram_from_basis({1, 0, 0, 0, 1, 0, 0, 0, 4});
        r.ex = "(0,-3,-1),(1,2,1),(0,7,2),(1,12,4)";
        r.nx = "(0,4,1),(2,8,3),(2,14,5),(2,28,9)";
        r.bnef =
            "(0,4,1),(1,6,2),(1,9,3),(1,16,5),(2,8,3),(2,11,4),(2,14,5),(2,21,7),(2,28,9)";
        r.gen = spec_idx(plain({1, 3, 7}));
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,1,6}";
        r.gram = gram_from_basis({1, 0, 0, 0, 1, 0, 0, 0, 6});
        r.ex = "(0,5,1),(2,3,1),(3,16,4),(1,0,0),(4,15,4),(0,1,0)";
        r.beff_extra = "(1,4,1)";
        r.nx = "(0,6,1),(3,3,1),(3,6,1),(3,21,5),(6,18,5),(15,66,17)";
        r.bnef =
            "(0,6,1),(1,4,1),(1,5,1),(1,6,1),(1,9,2),(2,4,1),(2,5,1),(2,6,1),(3,3,1),"
            "(3,4,1),(3,5,1),(3,6,1),(3,7,2),(3,21,5),(4,20,5),(5,19,5),(6,18,5),"
            "(7,36,9),(8,35,9),(9,34,9),(11,51,13),(12,50,13),(15,66,17)";
        r.gen = spec_idx(plain({1, 2, 3, 5, 6, 9, 13, 14, 15, 16, 17}));
        rows.push_back(std::move(r));
    }
    {
        RawRow r;
        r.name = "S_{1,1,8}";
        r.gram = gram_from_basis({1, 0, 0, 0, 1, 0, 0, 0, 8});
        r.ex =
            "(3,4,1),(1,0,0),(4,9,2),(0,1,0),(4,15,3),(0,7,1),(3,16,3),(1,12,2)";
        r.beff_extra = "(1,6,1),(2,5,1),(2,11,2),(3,10,2)";
        r.nx =
            "(0,8,1),(4,4,1),(4,8,1),(4,28,5),(4,56,9),(8,24,5),(20,40,9),(20,88,17)";
        r.bnef =
            "(0,8,1),(1,6,1),(1,7,1),(1,8,1),(1,13,2),(1,20,3),(2,5,1),"
            "(2,6,1),(2,7,1),(2,8,1),(2,11,2),(2,18,3),(2,25,4),(2,32,5),(3,5,1),"
            "(3,6,1),(3,7,1),(3,8,1),(3,10,2),(3,23,4),(3,30,5),(3,37,6),(3,44,7),"
            "(4,4,1),(4,5,1),(4,6,1),(4,7,1),(4,8,1),(4,28,5),(4,35,6),(4,42,7),"
            "(4,49,8),(4,56,9),(5,9,2),(5,27,5),(6,14,3),(6,26,5),(7,19,4),(7,25,5),"
            "(8,13,3),(8,24,5),(8,43,8),(9,18,4),(9,42,8),(10,23,5),(10,41,8),"
            "(11,28,6),(11,40,8),(12,22,5),(12,58,11),(13,27,6),(13,57,11),(14,32,7),"
            "(14,56,11),(16,31,7),(16,73,14),(17,36,8),(17,72,14),(20,40,9),(20,88,17)";
        r.gen = spec_idx(plain({1, 2, 3, 5, 7, 11, 15, 19, 20, 24, 29, 34, 35, 38, 39, 41}));
        r.gen.pair_sums = {{2, 7, true}, {2, 11, true}, {2, 19, true},
                           {19, 7, true}, {19, 11, true}};
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string fmt(const IVec& v) { return to_string(v); }

// reflection-type involution fixing a: x -> -x + (x.a) a, for a of square 2
IMat covering_involution(const Lattice& l, const IVec& a) {
    const Eigen::Index n = l.rank();
    IMat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        IVec e = IVec::Zero(n);
        e[i] = 1;
        IVec img = -e + l.pairing(e, a) * a;
        m.row(i) = img.transpose();
    }
    return m;
}

int failures = 0;

void complain(const std::string& msg) {
    std::cerr << "FAIL " << msg << "\n";
    ++failures;
}

void check_list(const std::string& what, std::vector<IVec> computed,
                std::vector<IVec> printed, bool allow_missing_printed) {
    sort_classes(computed);
    sort_classes(printed);
    std::set<IVec, LexLess> comp(computed.begin(), computed.end());
    std::set<IVec, LexLess> prin(printed.begin(), printed.end());
    for (const IVec& v : prin)
        if (!comp.count(v)) complain(what + ": printed class " + fmt(v) + " not computed");
    for (const IVec& v : comp)
        if (!prin.count(v)) {
            if (allow_missing_printed)
                std::cerr << "NOTE " << what << ": computed class " << fmt(v)
                          << " absent from the printed list\n";
            else
                complain(what + ": computed class " + fmt(v) + " not printed");
        }
}

}  // namespace

int main(int argc, char** argv) {
    bool run_minimality = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--minimality") == 0) run_minimality = true;

    std::ostringstream db;
    db << "# Bundled rank-3 lattice database: Gram matrices, curve classes and\n";
    db << "# the verified cone / generator data for the 26 families.\n";

    int row_number = 0;
    for (const RawRow& raw : raw_rows()) {
        ++row_number;
        std::cerr << "=== " << row_number << " " << raw.name << "\n";
        LatticeRecord rec;
        rec.name = raw.name;
        rec.gram = raw.gram;
        rec.neg_curves = classes(raw.ex);
        rec.stored_answer = raw.stored;
        rec.note = raw.note;

        Lattice lat(rec.gram);
        for (const IVec& c : rec.neg_curves)
            if (lat.square(c) != -2)
                complain(raw.name + ": curve " + fmt(c) + " has square " + lat.square(c).str());

        K3Surface surf(Lattice(rec.gram), rec.neg_curves);

        // effective-cone Hilbert basis vs printed E(X) + extras
        std::vector<IVec> beff_printed = classes(raw.ex);
        for (IVec& v : classes(raw.beff_extra)) beff_printed.push_back(std::move(v));
        check_list(raw.name + " BEff", surf.beff(), beff_printed, false);
        rec.expected_beff = surf.beff();

        check_list(raw.name + " N(X)", surf.nef_cone().rays, classes(raw.nx), false);
        rec.expected_n = surf.nef_cone().rays;

        std::vector<IVec> bnef_printed = classes(raw.bnef);
        {
            // the two large rows lost a few entries in extraction; accept
            // computed superset entries there but report them
            bool lossy = (raw.name == "S_2" || raw.name == "S_{1,9,1}");
            check_list(raw.name + " BNef", surf.bnef(), bnef_printed, lossy);
            // printed order must agree with the computed lexicographic order
            std::set<IVec, LexLess> prin(bnef_printed.begin(), bnef_printed.end());
            std::vector<IVec> filtered;
            for (const IVec& v : surf.bnef())
                if (prin.count(v)) filtered.push_back(v);
            if (filtered != bnef_printed)
                complain(raw.name + ": printed BNef is not in lexicographic order");
        }
        rec.expected_bnef = surf.bnef();

        // resolve the generator-degree specification against the computed basis
        const auto& hb = surf.bnef();
        auto hb_at = [&](int idx1) -> const IVec& {
            if (idx1 < 1 || idx1 > static_cast<int>(hb.size()))
                throw input_error(raw.name + ": BNef index out of range");
            return hb[static_cast<size_t>(idx1 - 1)];
        };
        std::map<IVec, bool, LexLess> expected;  // degree -> starred
        for (const IVec& c : surf.neg()) expected[c] = false;
        if (raw.gen.beff_only)
            for (const IVec& v : surf.beff()) expected[v] = false;
        if (raw.gen.all_bnef)
            for (const IVec& v : hb) expected[v] = false;
        for (const auto& [idx, star] : raw.gen.bnef_idx) expected[hb_at(idx)] = star;
        for (const auto& [i, j, star] : raw.gen.pair_sums)
            expected[IVec(hb_at(i) + hb_at(j))] = star;
        for (const auto& [i, star] : raw.gen.triples) expected[IVec(3 * hb_at(i))] = star;
        for (const auto& [t, star] : raw.gen.sum3)
            expected[IVec(hb_at(t[0]) + hb_at(t[1]) + hb_at(t[2]))] = star;

        for (const auto& [deg, star] : expected) {
            rec.expected_generators.push_back(deg);
            rec.generator_starred.push_back(star);
        }

        for (const IVec& a : classes(raw.extra_involutions)) {
            if (lat.square(a) != 2) {
                complain(raw.name + ": stored involution class must have square 2");
                continue;
            }
            IMat iota = covering_involution(lat, a);
            if (!is_isometry(lat, iota) ||
                IMat(iota * iota) != IMat(IMat::Identity(3, 3)) ||
                apply_isometry(iota, a) != a)
                complain(raw.name + ": derived involution fails validation");
            rec.involutions.push_back(iota);
        }

        // run the pipeline and reconcile, deriving involutions as needed
        if (!raw.stored) {
            GeneratorOptions opts;
            opts.jobs = 8;
            GeneratorReport rep = generators(surf, {}, opts);
            std::set<IVec, LexLess> expset;
            for (const auto& [deg, star] : expected) expset.insert(deg);

            for (const DegreeVerdict& v : rep.verdicts) {
                if (v.kept && !expset.count(v.degree)) {
                    if (v.l1_unresolved) {
                        IVec a = v.degree;
                        for (Eigen::Index i = 0; i < a.size(); ++i) a[i] /= 3;
                        IMat iota = covering_involution(lat, a);
                        bool works = false;
                        for (const IVec& e : surf.neg())
                            works |= lemma_l1_eliminates(surf, a, e, iota);
                        if (works) {
                            rec.involutions.push_back(iota);
                            std::cerr << "NOTE " << raw.name
                                      << ": involution attached for 3A degree "
                                      << fmt(v.degree) << "\n";
                        } else {
                            complain(raw.name + ": kept degree " + fmt(v.degree) +
                                     " is 3A but no involution eliminates it");
                        }
                    } else {
                        complain(raw.name + ": pipeline keeps unexpected degree " +
                                 fmt(v.degree) + " tier " + tier_name(v.tier));
                    }
                }
                if (!v.kept && expset.count(v.degree) && !v.stored)
                    complain(raw.name + ": pipeline eliminates expected degree " +
                             fmt(v.degree) + " by test " + std::to_string(v.eliminated_by));
            }
            if (!rec.involutions.empty()) {
                GeneratorReport rerun = generators(surf, rec.involutions, opts);
                std::vector<IVec> expected_sorted;
                for (const auto& [deg, star] : expected) expected_sorted.push_back(deg);
                sort_classes(expected_sorted);
                if (rerun.degrees != expected_sorted)
                    complain(raw.name + ": degree set still differs after the involution pass");
            }
        }

        if (run_minimality && !raw.stored) {
            std::vector<IVec> g;
            for (const auto& [deg, star] : expected) g.push_back(deg);
            std::set<IVec, LexLess> curveset(surf.neg().begin(), surf.neg().end());
            for (const auto& [deg, star] : expected) {
                if (star || curveset.count(deg)) continue;
                auto [ok, ev] = is_minimal_degree(surf, deg, g);
                if (!ok)
                    complain(raw.name + ": unstarred degree " + fmt(deg) +
                             " not certified minimal (" +
                             std::to_string(ev.writing_count) + " writings)");
            }
        }

        db << "\n" << serialize_record(rec);
    }

    if (failures) {
        std::cerr << failures << " failures\n";
        return 1;
    }
    std::cout << "// Generated by tools/dbgen.cpp; do not edit by hand.\n";
    std::cout << "#include \"k3cox/db.hpp\"\n\n";
    std::cout << "namespace k3cox {\n\n";
    std::cout << "const char* const bundled_database_text = R\"DBTEXT(\n";
    std::cout << db.str();
    std::cout << ")DBTEXT\";\n\n";
    std::cout << "}  // namespace k3cox\n";
    return 0;
}
