#pragma once

#include "homleib/matrix.hpp"

#include <optional>
#include <vector>

namespace homleib {

using QMatrix = Matrix<Rational>;
using QVec = Vec<Rational>;

struct RrefResult {
    QMatrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivotCols;
};

// A subspace of Q^ambientDim. The basis is stored column-wise and is
// canonical: basis vectors are the nonzero rows of the RREF of the
// transposed generating set.
struct Subspace {
    std::size_t ambientDim = 0;
    QMatrix basis; // ambientDim x dim, columns are basis vectors

    std::size_t dim() const { return basis.cols; }
};

RrefResult rref(const QMatrix &m);

// Canonical basis of {v : m v = 0}, parameterized by the free columns of
// the RREF in ascending order.
Subspace nullspaceBasis(const QMatrix &m);

// Canonical subspace spanned by a set of column vectors.
Subspace spanOfColumns(const QMatrix &generators, std::size_t ambientDim);

// Column space of m as a canonical subspace.
Subspace columnSpace(const QMatrix &m);

// One solution of m x = rhs: pivot-variable particular solution with free
// variables set to zero. Empty when the system is inconsistent.
std::optional<QVec> solve(const QMatrix &m, const QVec &rhs);

// Simultaneous solve for every column of rhs; empty when any column is
// inconsistent.
std::optional<QMatrix> solveMulti(const QMatrix &m, const QMatrix &rhs);

bool subspaceContains(const Subspace &s, const QVec &v);

// dim z - dim b; requires b to be contained in z.
std::size_t quotientDim(const Subspace &z, const Subspace &b);

} // namespace homleib
