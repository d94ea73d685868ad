#include "k3cox/linalg.hpp"

#include <functional>

namespace k3cox {

namespace {

// Fraction-free Bareiss elimination.
Int det_bareiss(IMat m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            Eigen::Index p = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            m.row(k).swap(m.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

}  // namespace

Int det(const IMat& m) {
    if (m.rows() != m.cols()) throw input_error("det: matrix not square");
    return det_bareiss(m);
}

Rat det(const QMat& m) {
    if (m.rows() != m.cols()) throw input_error("det: matrix not square");
    QMat a = m;
    const Eigen::Index n = a.rows();
    Rat d = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p = -1;
        for (Eigen::Index i = k; i < n; ++i)
            if (a(i, k) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != k) { a.row(k).swap(a.row(p)); d = -d; }
        d *= a(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            Rat f = a(i, k) / a(k, k);
            for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

int rank(const QMat& m) {
    QMat a = m;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    int r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        a.row(r).swap(a.row(p));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

int rank(const IMat& m) { return rank(QMat(m.cast<Rat>())); }

QMat inverse(const QMat& m) {
    if (m.rows() != m.cols()) throw input_error("inverse: matrix not square");
    const Eigen::Index n = m.rows();
    QMat a = m;
    QMat inv = QMat::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p = -1;
        for (Eigen::Index i = k; i < n; ++i)
            if (a(i, k) != 0) { p = i; break; }
        if (p < 0) throw invariant_error("inverse: singular matrix");
        a.row(k).swap(a.row(p));
        inv.row(k).swap(inv.row(p));
        Rat piv = a(k, k);
        for (Eigen::Index j = 0; j < n; ++j) { a(k, j) /= piv; inv(k, j) /= piv; }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IMat adjugate(const IMat& m) {
    if (m.rows() != m.cols()) throw input_error("adjugate: matrix not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return IMat(0, 0);
    if (n == 1) {
        IMat a(1, 1);
        a(0, 0) = 1;
        return a;
    }
    IMat adj(n, n);
    IMat minor(n - 1, n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            Eigen::Index mi = 0;
            for (Eigen::Index r = 0; r < n; ++r) {
                if (r == i) continue;
                Eigen::Index mj = 0;
                for (Eigen::Index c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mi, mj) = m(r, c);
                    ++mj;
                }
                ++mi;
            }
            Int cof = det_bareiss(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
        }
    }
    return adj;
}

QVec solve(const QMat& a, const QVec& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw input_error("solve: dimension mismatch");
    return inverse(a) * b;
}

Smith smith_normal_form(const IMat& a) {
    const Eigen::Index m = a.rows(), n = a.cols();
    Smith r{IMat::Identity(m, m), a, IMat::Identity(n, n), IMat::Identity(n, n)};
    IMat& u = r.u;
    IMat& s = r.s;
    IMat& v = r.v;
    IMat& vinv = r.vinv;

    auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
        s.row(i).swap(s.row(j));
        u.col(i).swap(u.col(j));
    };
    auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
        s.col(i).swap(s.col(j));
        v.row(i).swap(v.row(j));
        vinv.col(i).swap(vinv.col(j));
    };
    auto add_row = [&](Eigen::Index dst, Eigen::Index src, const Int& c) {
        // s.row(dst) += c * s.row(src)
        for (Eigen::Index j = 0; j < n; ++j) s(dst, j) += c * s(src, j);
        for (Eigen::Index i = 0; i < m; ++i) u(i, src) -= c * u(i, dst);
    };
    auto add_col = [&](Eigen::Index dst, Eigen::Index src, const Int& c) {
        for (Eigen::Index i = 0; i < m; ++i) s(i, dst) += c * s(i, src);
        for (Eigen::Index j = 0; j < n; ++j) v(src, j) -= c * v(dst, j);
        for (Eigen::Index i = 0; i < n; ++i) vinv(i, dst) += c * vinv(i, src);
    };
    auto negate_row = [&](Eigen::Index i) {
        s.row(i) = -s.row(i);
        u.col(i) = -u.col(i);
    };

    const Eigen::Index steps = std::min(m, n);
    for (Eigen::Index k = 0; k < steps; ++k) {
        // pivot: entry of least absolute value in the trailing block
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = k; i < m; ++i)
            for (Eigen::Index j = k; j < n; ++j)
                if (s(i, j) != 0 &&
                    (pi < 0 || abs(s(i, j)) < abs(s(pi, pj)))) { pi = i; pj = j; }
        if (pi < 0) break;
        if (pi != k) swap_rows(k, pi);
        if (pj != k) swap_cols(k, pj);

        for (;;) {
            bool clean = true;
            for (Eigen::Index i = k + 1; i < m; ++i) {
                if (s(i, k) == 0) continue;
                Int q = floor_div(s(i, k), s(k, k));
                add_row(i, k, -q);
                if (s(i, k) != 0) { swap_rows(k, i); clean = false; }
            }
            for (Eigen::Index j = k + 1; j < n; ++j) {
                if (s(k, j) == 0) continue;
                Int q = floor_div(s(k, j), s(k, k));
                add_col(j, k, -q);
                if (s(k, j) != 0) { swap_cols(k, j); clean = false; }
            }
            if (!clean) continue;
            bool col_clear = true, row_clear = true;
            for (Eigen::Index i = k + 1; i < m; ++i) col_clear &= (s(i, k) == 0);
            for (Eigen::Index j = k + 1; j < n; ++j) row_clear &= (s(k, j) == 0);
            if (!col_clear || !row_clear) continue;
            // enforce divisibility of the trailing block by the pivot
            Eigen::Index bi = -1;
            for (Eigen::Index i = k + 1; i < m && bi < 0; ++i)
                for (Eigen::Index j = k + 1; j < n; ++j)
                    if (s(i, j) % s(k, k) != 0) { bi = i; break; }
            if (bi < 0) break;
            add_row(k, bi, 1);
        }
        if (s(k, k) < 0) negate_row(k);
    }
    return r;
}

IMat kernel_basis(const IMat& a) {
    Smith f = smith_normal_form(a);
    const Eigen::Index n = a.cols();
    Eigen::Index r = 0;
    while (r < std::min(a.rows(), n) && f.s(r, r) != 0) ++r;
    IMat k(n, n - r);
    for (Eigen::Index j = r; j < n; ++j) k.col(j - r) = f.vinv.col(j);
    return k;
}

IMat saturated_span_basis(const IMat& a) {
    Smith f = smith_normal_form(a);
    Eigen::Index r = 0;
    while (r < std::min(a.rows(), a.cols()) && f.s(r, r) != 0) ++r;
    IMat b(a.rows(), r);
    for (Eigen::Index j = 0; j < r; ++j) b.col(j) = f.u.col(j);
    return b;
}

std::optional<AffineLattice> solve_dot_equation(const IVec& a, const Int& m) {
    const Eigen::Index n = a.size();
    IMat row(1, n);
    row.row(0) = a.transpose();
    Smith f = smith_normal_form(row);
    Int g = f.s(0, 0);
    Int mm = f.u(0, 0) * m;  // u is 1x1, entries +-1
    if (g == 0) {
        if (m != 0) return std::nullopt;
        return AffineLattice{IVec::Zero(n), IMat::Identity(n, n)};
    }
    if (mm % g != 0) return std::nullopt;
    AffineLattice sol;
    sol.particular = f.vinv.col(0) * (mm / g);
    sol.kernel.resize(n, n - 1);
    for (Eigen::Index j = 1; j < n; ++j) sol.kernel.col(j - 1) = f.vinv.col(j);
    return sol;
}

bool is_positive_definite(const QMat& g) {
    QMat a = g;
    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (a(k, k) <= 0) return false;
        for (Eigen::Index i = k + 1; i < n; ++i) {
            Rat f = a(i, k) / a(k, k);
            for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

bool is_positive_semidefinite(const QMat& g) {
    QMat a = g;
    std::vector<Eigen::Index> active(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) active[i] = i;
    while (!active.empty()) {
        Eigen::Index piv = -1;
        for (Eigen::Index i : active) {
            if (a(i, i) < 0) return false;
            if (a(i, i) > 0 && piv < 0) piv = i;
        }
        if (piv < 0) {
            // zero diagonal: semidefinite iff the whole active block vanishes
            for (Eigen::Index i : active)
                for (Eigen::Index j : active)
                    if (a(i, j) != 0) return false;
            return true;
        }
        for (Eigen::Index i : active) {
            if (i == piv) continue;
            Rat f = a(i, piv) / a(piv, piv);
            for (Eigen::Index j : active)
                if (j != piv) a(i, j) -= f * a(piv, j);
        }
        std::erase(active, piv);
    }
    return true;
}

std::vector<IVec> enumerate_quadric(const QMat& g, const QVec& b, const Rat& c,
                                    const Rat& value) {
    const Eigen::Index n = g.rows();
    std::vector<IVec> out;
    if (n == 0) {
        if (c == value) out.push_back(IVec(0));
        return out;
    }
    QMat a = -g;
    if (!is_positive_definite(a))
        throw invariant_error("enumerate_quadric: form not negative definite");
    QMat ainv = inverse(a);
    QVec mu = ainv * b;
    Rat t = c - value + (b.transpose() * ainv * b)(0, 0);
    if (t < 0) return out;

    std::vector<Int> lo(n), hi(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Rat rad = t * ainv(i, i);
        lo[i] = ceil_sub_sqrt(mu[i], rad);
        hi[i] = floor_add_sqrt(mu[i], rad);
    }
    IVec x(n);
    auto q_of = [&](const IVec& y) {
        QVec yr = y.cast<Rat>();
        return Rat((yr.transpose() * g * yr)(0, 0) + 2 * b.dot(yr) + c);
    };
    std::function<void(Eigen::Index)> rec = [&](Eigen::Index i) {
        if (i == n) {
            if (q_of(x) == value) out.push_back(x);
            return;
        }
        for (Int xi = lo[i]; xi <= hi[i]; ++xi) {
            x[i] = xi;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace k3cox
