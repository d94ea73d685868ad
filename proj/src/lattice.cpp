#include "k3cox/lattice.hpp"

namespace k3cox {

Lattice::Lattice(IMat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
        throw input_error("lattice: gram matrix must be square and nonempty");
    if (gram_ != IMat(gram_.transpose()))
        throw input_error("lattice: gram matrix not symmetric");
    if (det(gram_) == 0)
        throw invariant_error("lattice: degenerate form");
    diagonalize(*this);  // validates the signature
}

Int Lattice::pairing(const IVec& u, const IVec& v) const {
    if (u.size() != rank() || v.size() != rank())
        throw input_error("pairing: dimension mismatch");
    return (u.transpose() * gram_ * v)(0, 0);
}

IVec Lattice::form_dual(const IVec& v) const {
    if (v.size() != rank()) throw input_error("form_dual: dimension mismatch");
    return gram_ * v;
}

Diagonalization diagonalize(const Lattice& l) {
    const Eigen::Index n = l.rank();
    QMat m = l.gram().cast<Rat>();
    QMat b = QMat::Identity(n, n);

    auto add_row_sym = [&](Eigen::Index dst, Eigen::Index src, const Rat& c) {
        // basis change e_dst += c * e_src, applied symmetrically to the form
        m.row(dst) += c * m.row(src);
        m.col(dst) += c * m.col(src);
        b.row(dst) += c * b.row(src);
    };
    auto swap_sym = [&](Eigen::Index i, Eigen::Index j) {
        m.row(i).swap(m.row(j));
        m.col(i).swap(m.col(j));
        b.row(i).swap(b.row(j));
    };

    for (Eigen::Index k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index p = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (m(i, i) != 0) { p = i; break; }
            if (p >= 0) {
                swap_sym(k, p);
            } else {
                // all remaining diagonal entries vanish; mix u -> u + v
                Eigen::Index q = -1;
                for (Eigen::Index i = k + 1; i < n; ++i)
                    if (m(k, i) != 0) { q = i; break; }
                if (q < 0) throw invariant_error("diagonalize: degenerate form");
                add_row_sym(k, q, 1);  // new square is 2*m(k,q) != 0
            }
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            add_row_sym(i, k, -m(i, k) / m(k, k));
        }
    }

    // move the unique positive entry first
    int positives = 0;
    Eigen::Index pos = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (m(i, i) > 0) { ++positives; pos = i; }
        if (m(i, i) == 0) throw invariant_error("diagonalize: degenerate form");
    }
    if (positives != 1)
        throw invariant_error("diagonalize: signature is not (1, n-1)");
    if (pos != 0) {
        swap_sym(0, pos);
    }

    // clear denominators row by row (rescaling rows keeps the form diagonal)
    IMat bi(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Int scale = 1;
        for (Eigen::Index j = 0; j < n; ++j) scale = ilcm(scale, den(b(i, j)));
        IVec row(n);
        for (Eigen::Index j = 0; j < n; ++j) row[j] = num(b(i, j) * scale);
        row = primitive(row);
        bi.row(i) = row.transpose();
    }
    IMat d = bi * l.gram() * bi.transpose();
    Diagonalization out;
    out.b = std::move(bi);
    out.dg = d.cast<Rat>();
    return out;
}

bool is_isometry(const Lattice& l, const IMat& m) {
    if (m.rows() != l.rank() || m.cols() != l.rank())
        throw input_error("is_isometry: dimension mismatch");
    return IMat(m * l.gram() * m.transpose()) == l.gram();
}

IVec apply_isometry(const IMat& m, const IVec& v) {
    if (m.rows() != v.size()) throw input_error("apply_isometry: dimension mismatch");
    return m.transpose() * v;
}

}  // namespace k3cox
