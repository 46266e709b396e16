#pragma once

#include "qmatball/qmatrix.hpp"

namespace qmb {

using CoordVector = std::vector<Scalar>;
using CoordMatrix = std::vector<CoordVector>;  // row-major

struct DependentBasis : std::domain_error {
    DependentBasis() : std::domain_error("coords_in_span: basis is linearly dependent") {}
};

/// Exact kernel basis via fraction-field Gaussian elimination with
/// deterministic pivoting (first nonzero column, top row first).
std::vector<CoordVector> kernel(const CoordMatrix& m);

/// Exact rank.
std::size_t rank(CoordMatrix m);

/// Solve sum x_i basis[i] = v; nullopt when v is not in the span.
std::optional<CoordVector> coords_in_span(const CoordVector& v, const std::vector<CoordVector>& basis);

/// Incremental row-echelon container for independence tests.
class EchelonSpan {
  public:
    /// Returns true (and absorbs) when v was independent of the span so far.
    bool insert(CoordVector v);
    std::size_t dim() const { return rows_.size(); }
    /// Residual of v after reduction (zero iff v lies in the span).
    CoordVector reduce(CoordVector v) const;

  private:
    std::vector<CoordVector> rows_;          // echelonized, pivot scaled to 1
    std::vector<std::size_t> pivots_;
};

/// Assigns coordinates to localized vectors over a fixed monomial frame:
/// everything is raised to a common det power and indexed by normal monomials.
class Coordinatizer {
  public:
    Coordinatizer(int n, int common_dpow) : n_(n), dpow_(common_dpow) {}

    int common_dpow() const { return dpow_; }
    std::size_t dim() const { return index_.size(); }

    /// Registers the monomials of x (raised to the common power).
    void absorb(const LocalizedVector& x);

    CoordVector coords(const LocalizedVector& x) const;
    LocalizedVector vector(const CoordVector& c) const;

  private:
    int n_;
    int dpow_;
    std::map<Monom, std::size_t> index_;
    std::vector<Monom> monoms_;
};

}  // namespace qmb
