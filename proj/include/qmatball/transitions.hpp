#pragma once

#include "qmatball/canonical.hpp"

namespace qmb {

/// Result of assembling P_{target} . pi(p_q^{+-}) on a component.
struct TransitionMap {
    Signature source, target;
    int j{0};
    bool up{true};
    bool zero{false};           // identically zero (target signature not dominant)
    CoordMatrix matrix;         // rows: target coords; cols: (entry, source basis vec)
    bool factor_ok{false};      // matrix == bracket * q-power-free-in-u remainder
    Scalar bracket;             // the [beta-k_j+j-1]_q (resp. [alpha+k_j+n-j]_q) factor
    bool remainder_nonzero{false};
};

/// Up transition V_k -> V_{k+e_j} under the symbolic twisted action; checks
/// the factorization claim entry-wise.
TransitionMap up_map(int n, int d, const Signature& k, int j, const WindowDecomposition& dec);
TransitionMap down_map(int n, int d, const Signature& k, int j, const WindowDecomposition& dec);

/// Exact evaluation of the alternating word sum that computes the raising
/// scalar on v^h_k, compared against the closed form
/// q^{-beta-n/2+k_j+j} [beta-k_j+j-1]_q kappa_-(j,1,j-1).
struct RaisingScalarReport {
    Signature k;
    int j{0};
    bool proportional{false};  // word sum lands on the v^h_{k+e_j} line
    bool matches{false};       // equals the closed form under the fixed basis normalization
    Scalar computed;           // includes the normalization constant
    Scalar closed_form;
    std::string note;
};

RaisingScalarReport raising_scalar(int n, int d, const Signature& k, int j);

/// Signature lattice with transition edges at a concrete parameter point.
struct Lattice {
    int n{0};
    int bound{0};
    std::vector<Signature> nodes;
    // edges as (node index, j, up?) -> node index
    struct Edge {
        std::size_t from, to;
        int j;
        bool up;
    };
    std::vector<Edge> edges;

    std::optional<std::size_t> index_of(const Signature& k) const;
};

Lattice lattice(int n, const ParameterPoint& alpha, const ParameterPoint& beta, int bound);

/// Conjunction of half-space/equality constraints on signature entries.
struct SignaturePredicate {
    struct Atom {
        int index;  // 1-based coordinate k_index
        int rel;    // -1: <=, 0: ==, +1: >=
        long bound;
    };
    std::string name;
    std::vector<Atom> atoms;

    bool contains(const Signature& k) const;
    std::string str() const;
};

struct StructureReport {
    int n{0};
    ParameterPoint alpha, beta;
    bool irreducible{false};
    int case_label{0};  // 0 = non-integral parameters, otherwise 1..4
    bool finite_dim{false};
    bool direct_sum{false};
    std::vector<SignaturePredicate> simples;
    // hyperplane positions: L_j^+ : k_j = beta+j-1; L_j^- : k_j = -alpha-n+j
    std::vector<std::pair<long, long>> hyperplanes;  // (plus, minus) per j, valid when integral
    bool partner_has_finite_dim{false};              // the (-n-beta,-n-alpha) partner
};

/// Reducibility / submodule classification for alpha - beta in Z.
StructureReport classify_structure(int n, const ParameterPoint& alpha, const ParameterPoint& beta);

/// All submodules visible on a window: intersections of the cut predicates,
/// deduplicated by window membership and verified closed under lattice edges.
std::vector<SignaturePredicate> submodule_enumerate(const StructureReport& rep, int bound);

}  // namespace qmb
