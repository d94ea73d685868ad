#include "k3cox/db.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace k3cox {

namespace {

std::string normalize_name(const std::string& name) {
    std::string out;
    for (char c : name)
        if (c != '_' && c != '{' && c != '}' && c != ' ') out.push_back(c);
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

Int parse_int(const std::string& t) {
    try {
        return Int(t);
    } catch (const std::exception&) {
        throw input_error("parse: bad integer '" + t + "'");
    }
}

}  // namespace

std::vector<LatticeRecord> parse_records(std::istream& in) {
    std::vector<LatticeRecord> out;
    std::optional<LatticeRecord> cur;
    Eigen::Index rank = 0;
    std::string line;

    auto next_data_line = [&](std::string& target) -> bool {
        while (std::getline(in, target)) {
            auto hash = target.find('#');
            if (hash != std::string::npos) target.erase(hash);
            if (!tokens(target).empty()) return true;
        }
        return false;
    };

    auto read_classes = [&](size_t count) {
        std::vector<IVec> vs;
        for (size_t i = 0; i < count; ++i) {
            std::string data;
            if (!next_data_line(data)) throw input_error("parse: unexpected end of class list");
            auto ts = tokens(data);
            if (static_cast<Eigen::Index>(ts.size()) != rank)
                throw input_error("parse: class row has wrong length: " + data);
            IVec v(rank);
            for (Eigen::Index j = 0; j < rank; ++j) v[j] = parse_int(ts[j]);
            vs.push_back(std::move(v));
        }
        return vs;
    };

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto ts = tokens(line);
        if (ts.empty()) continue;
        const std::string& key = ts[0];

        if (key == "lattice") {
            if (cur) throw input_error("parse: nested lattice block");
            if (ts.size() < 2) throw input_error("parse: lattice needs a name");
            cur = LatticeRecord{};
            cur->name = ts[1];
            rank = 0;
        } else if (!cur) {
            throw input_error("parse: content outside a lattice block: " + line);
        } else if (key == "rank") {
            rank = static_cast<Eigen::Index>(parse_int(ts.at(1)).convert_to<long>());
            if (rank <= 0) throw input_error("parse: rank must be positive");
        } else if (key == "gram") {
            if (rank == 0) throw input_error("parse: rank must precede gram");
            cur->gram.resize(rank, rank);
            for (Eigen::Index i = 0; i < rank; ++i) {
                std::string data;
                if (!next_data_line(data)) throw input_error("parse: truncated gram matrix");
                auto row = tokens(data);
                if (static_cast<Eigen::Index>(row.size()) != rank)
                    throw input_error("parse: gram row has wrong length");
                for (Eigen::Index j = 0; j < rank; ++j) cur->gram(i, j) = parse_int(row[j]);
            }
        } else if (key == "curves") {
            cur->neg_curves = read_classes(std::stoul(ts.at(1)));
        } else if (key == "beff") {
            cur->expected_beff = read_classes(std::stoul(ts.at(1)));
        } else if (key == "nx") {
            cur->expected_n = read_classes(std::stoul(ts.at(1)));
        } else if (key == "bnef") {
            cur->expected_bnef = read_classes(std::stoul(ts.at(1)));
        } else if (key == "generators") {
            size_t count = std::stoul(ts.at(1));
            for (size_t i = 0; i < count; ++i) {
                std::string data;
                if (!next_data_line(data)) throw input_error("parse: truncated generator list");
                auto row = tokens(data);
                if (static_cast<Eigen::Index>(row.size()) != rank + 1)
                    throw input_error("parse: generator row needs rank entries plus a flag");
                IVec v(rank);
                for (Eigen::Index j = 0; j < rank; ++j) v[j] = parse_int(row[j]);
                cur->expected_generators.push_back(std::move(v));
                if (row.back() == "*") cur->generator_starred.push_back(true);
                else if (row.back() == ".") cur->generator_starred.push_back(false);
                else throw input_error("parse: generator flag must be '*' or '.'");
            }
        } else if (key == "involutions") {
            size_t count = std::stoul(ts.at(1));
            for (size_t i = 0; i < count; ++i) {
                std::string data;
                if (!next_data_line(data)) throw input_error("parse: truncated involution");
                auto row = tokens(data);
                if (static_cast<Eigen::Index>(row.size()) != rank * rank)
                    throw input_error("parse: involution needs rank*rank entries");
                IMat m(rank, rank);
                for (Eigen::Index k = 0; k < rank * rank; ++k)
                    m(k / rank, k % rank) = parse_int(row[k]);
                cur->involutions.push_back(std::move(m));
            }
        } else if (key == "stored") {
            cur->stored_answer = (ts.at(1) == "1");
        } else if (key == "note") {
            auto pos = line.find("note");
            cur->note = line.substr(pos + 5);
        } else if (key == "end") {
            if (cur->gram.rows() == 0) throw input_error("parse: record without gram matrix");
            out.push_back(std::move(*cur));
            cur.reset();
        } else {
            throw input_error("parse: unknown key '" + key + "'");
        }
    }
    if (cur) throw input_error("parse: unterminated lattice block");
    return out;
}

LatticeRecord parse_record_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    auto records = parse_records(in);
    if (records.size() != 1)
        throw input_error("input file must contain exactly one lattice record");
    validate_record(records.front());
    return records.front();
}

std::string serialize_record(const LatticeRecord& rec) {
    std::ostringstream os;
    const Eigen::Index n = rec.gram.rows();
    os << "lattice " << rec.name << "\n";
    os << "rank " << n << "\n";
    os << "gram\n";
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) os << (j ? " " : "") << rec.gram(i, j);
        os << "\n";
    }
    auto emit = [&](const char* key, const std::vector<IVec>& vs) {
        if (vs.empty()) return;
        os << key << " " << vs.size() << "\n";
        for (const IVec& v : vs) {
            for (Eigen::Index j = 0; j < n; ++j) os << (j ? " " : "") << v[j];
            os << "\n";
        }
    };
    emit("curves", rec.neg_curves);
    emit("beff", rec.expected_beff);
    emit("nx", rec.expected_n);
    emit("bnef", rec.expected_bnef);
    if (!rec.expected_generators.empty()) {
        os << "generators " << rec.expected_generators.size() << "\n";
        for (size_t i = 0; i < rec.expected_generators.size(); ++i) {
            const IVec& v = rec.expected_generators[i];
            for (Eigen::Index j = 0; j < n; ++j) os << v[j] << " ";
            os << (rec.generator_starred[i] ? "*" : ".") << "\n";
        }
    }
    if (!rec.involutions.empty()) {
        os << "involutions " << rec.involutions.size() << "\n";
        for (const IMat& m : rec.involutions) {
            for (Eigen::Index k = 0; k < n * n; ++k)
                os << (k ? " " : "") << m(k / n, k % n);
            os << "\n";
        }
    }
    if (rec.stored_answer) os << "stored 1\n";
    if (!rec.note.empty()) os << "note " << rec.note << "\n";
    os << "end\n";
    return os.str();
}

void validate_record(const LatticeRecord& rec) {
    Lattice l(rec.gram);  // checks symmetry, nondegeneracy, signature
    for (const IVec& c : rec.neg_curves)
        if (l.square(c) != -2)
            throw input_error("record " + rec.name + ": curve " + to_string(c) +
                              " has square " + l.square(c).str());
    if (!rec.generator_starred.empty() &&
        rec.generator_starred.size() != rec.expected_generators.size())
        throw input_error("record " + rec.name + ": star flags misaligned");
}

const std::vector<LatticeRecord>& bundled_lattices() {
    static const std::vector<LatticeRecord> records = [] {
        std::istringstream is(bundled_database_text);
        auto recs = parse_records(is);
        for (const auto& r : recs) validate_record(r);
        return recs;
    }();
    return records;
}

std::optional<LatticeRecord> find_bundled(const std::string& name) {
    std::string want = normalize_name(name);
    for (const LatticeRecord& rec : bundled_lattices())
        if (normalize_name(rec.name) == want) return rec;
    return std::nullopt;
}

}  // namespace k3cox
