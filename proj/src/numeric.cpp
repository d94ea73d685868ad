#include "k3cox/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace k3cox {

Int content(const IVec& v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = igcd(g, v[i]);
    return g;
}

IVec primitive(const IVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IVec w = v;
    for (Eigen::Index i = 0; i < w.size(); ++i) w[i] /= g;
    return w;
}

Int floor_add_sqrt(const Rat& mu, const Rat& r) {
    if (r < 0) throw invariant_error("floor_add_sqrt: negative radicand");
    // k <= mu + sqrt(r)  <=>  k - mu <= 0, or (k - mu)^2 <= r
    auto ok = [&](const Int& k) {
        Rat d = Rat(k) - mu;
        return d <= 0 || d * d <= r;
    };
    Int k = rat_floor(mu) + boost::multiprecision::sqrt(rat_ceil(r)) + 2;
    while (!ok(k)) --k;
    return k;
}

Int ceil_sub_sqrt(const Rat& mu, const Rat& r) {
    return -floor_add_sqrt(-mu, r);
}

bool lex_less(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

void sort_classes(std::vector<IVec>& vs) {
    std::sort(vs.begin(), vs.end(), LexLess{});
}

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const IMat& m) {
    std::ostringstream os;
    os << '[';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
    }
    os << ']';
    return os.str();
}

IVec vec_of(std::initializer_list<long> entries) {
    IVec v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long e : entries) v[i++] = e;
    return v;
}

IMat mat_of(Eigen::Index rows, Eigen::Index cols, std::initializer_list<long> entries) {
    if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
        throw input_error("mat_of: entry count mismatch");
    IMat m(rows, cols);
    Eigen::Index i = 0;
    for (long e : entries) {
        m(i / cols, i % cols) = e;
        ++i;
    }
    return m;
}

}  // namespace k3cox
