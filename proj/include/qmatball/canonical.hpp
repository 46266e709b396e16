#pragma once

#include "qmatball/isotypic.hpp"

namespace qmb {

/// Recursively defined lowering elements of the first sl_n factor
/// (generator indices 1..n-1 of U_q sl_{2n}); F_jj = 1.
UWord build_Fmj(int m, int j);
/// Companion normalization with F_mj = q^{j-m-1} G_mj.
UWord build_Gmj(int m, int j);
/// Mirror family S_rt (S_tt = 1); plain generator indices as printed.
UWord build_Srt(int r, int t);

/// Cartan factor products. Indices are the H-ranges of the first factor.
UWord K_factor(int j, int p, int r);        // K(j,p,r)
UWord K_minus_factor(int j, int p, int r);  // K_-(j,p,r)
UWord L_factor(int j, int p, int r);        // L(j,p,r)
UWord L_minus_factor(int j, int p, int r);  // L_-(j,p,r)

/// Eigenvalue of K_-(j,p,r) on v^h_k (from the weight alone).
Scalar kminus_eigenvalue(int n, int j, int p, int r, const Signature& k, int twist_d = 0);

/// Second-factor Cartan eigenvalue of L_-(j,p,r)^{(2)} on v^h_k.
Scalar lminus_second_eigenvalue(int n, int j, int p, int r, const Signature& k);

/// The n^2 spanning elements of p_q^+ (seed E_n) or p_q^- (seed K_n F_n),
/// indexed by (row a, column b) of the matrix entry they model.
std::vector<std::vector<UWord>> pq_basis(bool plus, int n);

/// Unsigned adjoint chains: row chain from m, column chain down to j (plus),
/// and the mirrored lowering chains (minus).
UWord raising_word(int n, int m, int j);
UWord lowering_word(int n, int l, int m);

/// One verified identity instance.
struct LemmaCheck {
    std::string id;
    std::vector<int> indices;
    bool pass;
    std::string note;
};

/// Operator-level verification of the canonical-element identities on a
/// window (z-degree <= maxdeg, det powers <= maxdet) plus the highest-vector
/// family; n is the matrix size.
std::vector<LemmaCheck> lemma_checks(int n, int maxdeg, int maxdet);

/// Minor-exchange polynomial identity (the straightening law used by the
/// G-family evaluation), checked verbatim for the given (m,k,j).
bool minor_exchange_identity(int n, int m, int k, int j);

}  // namespace qmb
