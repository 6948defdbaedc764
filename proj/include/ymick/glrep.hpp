#pragma once

#include <vector>

#include "ymick/error.hpp"
#include "ymick/grassmann.hpp"
#include "ymick/qmatrix.hpp"
#include "ymick/rational.hpp"

namespace ymick {

// A finite-dimensional gl_k-module given by the matrices of the E_ab.
struct GLRep {
    int k = 0;
    int dim = 0;
    std::vector<QMatrix> mats;

    GLRep(int k_, int dim_) : k(k_), dim(dim_), mats(k_ * k_, QMatrix(dim_, dim_)) {
        if (k_ < 1 || dim_ < 1) throw DimensionMismatch("GLRep: empty module");
    }

    const QMatrix& E(int a, int b) const {
        if (a < 1 || a > k || b < 1 || b > k)
            throw IndexOutOfRange("GLRep::E: index outside 1..k");
        return mats[(a - 1) * k + (b - 1)];
    }

    void set_E(int a, int b, QMatrix mat) {
        if (a < 1 || a > k || b < 1 || b > k)
            throw IndexOutOfRange("GLRep::set_E: index outside 1..k");
        if (mat.rows != dim || mat.cols != dim)
            throw DimensionMismatch("GLRep::set_E: matrix is not dim x dim");
        mats[(a - 1) * k + (b - 1)] = std::move(mat);
    }
};

// Checks [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb on all quadruples.
inline void validate_glrep(const GLRep& rep) {
    for (int a = 1; a <= rep.k; ++a)
        for (int b = 1; b <= rep.k; ++b)
            for (int c = 1; c <= rep.k; ++c)
                for (int d = 1; d <= rep.k; ++d) {
                    QMatrix lhs = qm_sub(qm_mul(rep.E(a, b), rep.E(c, d)),
                                         qm_mul(rep.E(c, d), rep.E(a, b)));
                    QMatrix rhs(rep.dim, rep.dim);
                    if (b == c) rhs = qm_add(rhs, rep.E(a, d));
                    if (d == a) rhs = qm_sub(rhs, rep.E(c, b));
                    if (!(lhs == rhs))
                        throw NotARepresentation(
                            "bracket fails at E_" + std::to_string(a) + std::to_string(b) +
                            ", E_" + std::to_string(c) + std::to_string(d));
                }
}

inline GLRep natural_glrep(int k) {
    GLRep rep(k, k);
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) {
            QMatrix mat(k, k);
            mat.set(a - 1, b - 1, Rational(1));
            rep.set_E(a, b, std::move(mat));
        }
    return rep;
}

// One-dimensional gl_1-module where E_11 acts by t.
inline GLRep scalar_gl1_rep(const Rational& t) {
    GLRep rep(1, 1);
    QMatrix mat(1, 1);
    mat.set(0, 0, t);
    rep.set_E(1, 1, std::move(mat));
    return rep;
}

// Two-dimensional gl_1-module where E_11 acts by a Jordan block at t.
inline GLRep jordan_gl1_rep(const Rational& t) {
    GLRep rep(1, 2);
    QMatrix mat(2, 2);
    mat.set(0, 0, t);
    mat.set(0, 1, Rational(1));
    mat.set(1, 1, t);
    rep.set_E(1, 1, std::move(mat));
    return rep;
}

// gl_m acting on the Grassmann algebra G(C^m x C^l) through gamma.
inline GLRep gamma_glrep(int m, int l) {
    GAlg alg(m, l);
    GLRep rep(m, static_cast<int>(alg.dim_mask()));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            rep.set_E(a, b, operator_matrix(alg, gamma(alg, a, b)));
    return rep;
}

// gl_n acting on the Grassmann algebra G(C^m x C^n) through gln_op.
inline GLRep gln_glrep(int m, int n) {
    GAlg alg(m, n);
    GLRep rep(n, static_cast<int>(alg.dim_mask()));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            rep.set_E(i, j, operator_matrix(alg, gln_op(alg, i, j)));
    return rep;
}

}  // namespace ymick
