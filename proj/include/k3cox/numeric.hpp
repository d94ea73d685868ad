#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace k3cox {

// et_off: plain value semantics, required for safe use as Eigen scalars
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};
/// Malformed caller input: dimension mismatch, parse failure, unknown name.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};
/// A mathematical invariant required by an operation does not hold.
struct invariant_error : error {
    explicit invariant_error(const std::string& what) : error(what) {}
};
/// Resource caps: iteration limits, unbounded enumeration, timeout.
struct compute_error : error {
    explicit compute_error(const std::string& what) : error(what) {}
};

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int ilcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(num(q), den(q)); }
inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

/// gcd of the entries of v (nonnegative; 0 for the zero vector).
Int content(const IVec& v);

/// v divided by the gcd of its entries; the zero vector stays zero.
IVec primitive(const IVec& v);

/// floor(mu + sqrt(r)) for rational mu and rational r >= 0, exactly.
Int floor_add_sqrt(const Rat& mu, const Rat& r);
/// ceil(mu - sqrt(r)) for rational mu and rational r >= 0, exactly.
Int ceil_sub_sqrt(const Rat& mu, const Rat& r);

bool lex_less(const IVec& a, const IVec& b);

struct LexLess {
    bool operator()(const IVec& a, const IVec& b) const { return lex_less(a, b); }
};

void sort_classes(std::vector<IVec>& vs);

std::string to_string(const IVec& v);
std::string to_string(const IMat& m);

IVec vec_of(std::initializer_list<long> entries);
IMat mat_of(Eigen::Index rows, Eigen::Index cols, std::initializer_list<long> entries);

struct IVecHash {
    std::size_t operator()(const IVec& v) const {
        std::size_t h = static_cast<std::size_t>(v.size());
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            std::size_t x = std::hash<Int>{}(v[i]);
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
struct IVecEq {
    bool operator()(const IVec& a, const IVec& b) const {
        return a.size() == b.size() && a == b;
    }
};

}  // namespace k3cox
