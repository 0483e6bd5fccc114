#pragma once

#include <vector>

#include "ffhyp/gauss.hpp"

namespace ffh {

enum class Variant { Star, Greene, Katz };

// One hypergeometric instance.  Star/Greene: |top| = |bottom| + 1.
// Katz: arbitrary (n, m) lists with argument t in F_q*.
struct HypSpec {
    Variant variant;
    std::vector<MultChar> top;
    std::vector<MultChar> bottom;
    FqElem arg;
};

// x = +-1 and bottom_j = top_0 * bar(top_j) for all j.
bool well_poised(const FieldCtx& F, const HypSpec& spec);

// The star function: (1/(q-1)) sum over chi of
//   prod_i g(A_i chi)/g(A_i) * prod_j g(bar(B_j chi))/g(bar B_j)
//   * g(bar chi) * chi(-1)^{n+1} chi(x).
CycNum f_star(const GaussTable& t, const std::vector<MultChar>& top,
              const std::vector<MultChar>& bottom, const FqElem& x);

// Greene's binomial: B(-1)/q * J(A, bar B).
CycNum greene_binom(const GaussTable& t, const MultChar& A, const MultChar& B);

// Greene's function: q/(q-1) sum over chi of
//   binom(A_0 chi, chi) prod_i binom(A_i chi, B_i chi) chi(x).
CycNum f_greene(const GaussTable& t, const std::vector<MultChar>& top,
                const std::vector<MultChar>& bottom, const FqElem& x);

// Katz's hypergeometric sum in its Fourier-inverted character-sum form:
//   (1/(q-1)) sum over chi of bar chi(t) prod_i g(A_i chi)
//   prod_j g(bar(B_j chi)) (B_j chi)(-1).   Throws ZeroArgument for t = 0.
CycNum f_katz(const GaussTable& t, const std::vector<MultChar>& top,
              const std::vector<MultChar>& bottom, const FqElem& arg);

// Direct lattice-point evaluation of Katz's sum over
//   V(t,n,m) = { x_i, y_j in F_q* : x_1...x_n = t y_1...y_m };
// O(q^{n+m-1}) enumeration, retained as a small-q oracle.
CycNum katz_vsum(const GaussTable& t, const std::vector<MultChar>& top,
                 const std::vector<MultChar>& bottom, const FqElem& arg);

CycNum eval_spec(const GaussTable& t, const HypSpec& spec);

// Star <-> Greene relation: generic form when A_0 != eps and A_i != B_i for
// all i; exceptional form when additionally A_n = B_n != eps; every other
// coincidence pattern carries no claim and is reported Uncovered.
struct StarGreeneReport {
    enum class Status { Match, Mismatch, Uncovered };
    Status status;
    CycNum lhs;
    CycNum rhs;
};

StarGreeneReport relate_star_greene(const GaussTable& t,
                                    const std::vector<MultChar>& top,
                                    const std::vector<MultChar>& bottom,
                                    const FqElem& x);

}  // namespace ffh
