#pragma once
#include <complex>
#include <functional>
#include <vector>

namespace meinardus {

using Cplx = std::complex<double>;

enum class ZetaMethod { DirectSum, MellinBarnes };

struct ZetaEval {
    Cplx value;
    double err_estimate = 0;  // tail + quadrature bound
    ZetaMethod method = ZetaMethod::DirectSum;
};

// zeta_so5(s) = 6^s sum_{m,n>=1} (m n (m+n) (m+2n))^{-s};  Re s > 1/2.
ZetaEval zeta_so5_direct(Cplx s, double tol = 1e-10, unsigned threads = 1);

// Mordell–Tornheim double zeta, direct sum in the convergent region.
ZetaEval zeta_mt2(Cplx s1, Cplx s2, Cplx s3, double tol = 1e-10, unsigned threads = 1);

// su3 Witten zeta 2^s sum (j k (j+k))^{-s} = 2^s zeta_MT,2(s,s,s); Re s > 2/3.
ZetaEval zeta_su3_direct(Cplx s, double tol = 1e-10, unsigned threads = 1);

// Mellin–Barnes continuation of zeta_MT,2(s1, s2, s3): closed Gamma/zeta term,
// finite m-sum (m < M), and the vertical-line integral on Re w = M - eps.
ZetaEval zeta_mt2_continued_general(Cplx s1, Cplx s2, Cplx s3, int M = 4,
                                    double eps = 0.5, double tol = 1e-10);

// specialization zeta_MT,2(s, s-z, 2s+z) used by the so5 continuation
ZetaEval zeta_mt2_continued(Cplx s, Cplx z, int M = 4, double eps = 0.5,
                            double tol = 1e-10);

// Continuation of zeta_so5 past Re s = 1/2: k-sum of continued MT values plus
// a vertical-line z-integral on Re z = K - eps.  Valid for Re s > (1-K+eps)/3,
// away from the poles; s = 0 is handled by a symmetric limit.
ZetaEval zeta_so5_continued(Cplx s, int K = 3, double eps = 0.5, double tol = 1e-8);

// Richardson (Neville) extrapolation of (s-s0) g(s0+h) over the h grid.
double residue_extract(const std::function<double(double)>& g, double s0,
                       const std::vector<double>& h_grid, double* err_proxy = nullptr);

// default geometric grid {h0 * 2^-j}
std::vector<double> residue_grid(double h0 = 0.2, int points = 4);

// numeric estimate of zeta_so5'(0) (cached); feeds the SO5 preset L0prime
double zeta_so5_deriv0();
// companion value zeta_so5(0) from the same limit (-> 3/8)
double zeta_so5_zero();

// polygonal zeta Z_{P_k}(s) = sum_n P_k(n)^{-s}, Re s > 1/2
ZetaEval zeta_Pk(Cplx s, int k, double tol = 1e-10);

// numerically derived analytic data for the su3 preset
struct Su3Analytic {
    double res_2_3 = 0;   // residue of L at 2/3 (direct sum + extrapolation)
    double res_1_2 = 0;   // residue at 1/2 (continuation + extrapolation)
    double L0 = 0;        // L(0)
    double L0prime = 0;   // L'(0)
};
const Su3Analytic& su3_analytic();

// continuation of the su3 Witten zeta (2^s * continued MT at (s,s,s))
ZetaEval zeta_su3_continued(Cplx s, int M = 4, double eps = 0.5, double tol = 1e-8);

} // namespace meinardus
