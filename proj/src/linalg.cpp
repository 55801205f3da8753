#include "homleib/linalg.hpp"

#include <stdexcept>

namespace homleib {

RrefResult rref(const QMatrix &m) {
    RrefResult res;
    res.rref = m;
    QMatrix &a = res.rref;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols && lead < a.rows; ++col) {
        std::size_t piv = lead;
        while (piv < a.rows && a.at(piv, col) == 0)
            ++piv;
        if (piv == a.rows)
            continue;
        if (piv != lead)
            for (std::size_t c = 0; c < a.cols; ++c)
                std::swap(a.at(piv, c), a.at(lead, c));
        Rational inv = Rational(1) / a.at(lead, col);
        for (std::size_t c = col; c < a.cols; ++c)
            a.at(lead, c) *= inv;
        for (std::size_t r = 0; r < a.rows; ++r) {
            if (r == lead || a.at(r, col) == 0)
                continue;
            Rational factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols; ++c)
                a.at(r, c) -= factor * a.at(lead, c);
        }
        res.pivotCols.push_back(col);
        ++lead;
    }
    res.rank = res.pivotCols.size();
    return res;
}

Subspace nullspaceBasis(const QMatrix &m) {
    RrefResult r = rref(m);
    Subspace s;
    s.ambientDim = m.cols;
    std::vector<std::size_t> freeCols;
    {
        std::size_t p = 0;
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (p < r.pivotCols.size() && r.pivotCols[p] == c)
                ++p;
            else
                freeCols.push_back(c);
        }
    }
    s.basis = QMatrix(m.cols, freeCols.size());
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
        std::size_t fc = freeCols[k];
        s.basis.at(fc, k) = 1;
        for (std::size_t p = 0; p < r.pivotCols.size(); ++p)
            s.basis.at(r.pivotCols[p], k) = -r.rref.at(p, fc);
    }
    return s;
}

Subspace spanOfColumns(const QMatrix &generators, std::size_t ambientDim) {
    // Canonicalize: RREF of the transposed generators, keep nonzero rows.
    RrefResult r = rref(generators.transposed());
    Subspace s;
    s.ambientDim = ambientDim;
    s.basis = QMatrix(ambientDim, r.rank);
    for (std::size_t k = 0; k < r.rank; ++k)
        for (std::size_t c = 0; c < ambientDim; ++c)
            s.basis.at(c, k) = r.rref.at(k, c);
    return s;
}

Subspace columnSpace(const QMatrix &m) { return spanOfColumns(m, m.rows); }

std::optional<QVec> solve(const QMatrix &m, const QVec &rhs) {
    if (rhs.size() != m.rows)
        throw InputError("solve: rhs length does not match row count");
    QMatrix aug(m.rows, m.cols + 1);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = rhs[r];
    }
    RrefResult rr = rref(aug);
    for (std::size_t p = 0; p < rr.pivotCols.size(); ++p)
        if (rr.pivotCols[p] == m.cols)
            return std::nullopt; // pivot in the rhs column: inconsistent
    QVec x(m.cols, Rational(0));
    for (std::size_t p = 0; p < rr.pivotCols.size(); ++p)
        x[rr.pivotCols[p]] = rr.rref.at(p, m.cols);
    return x;
}

std::optional<QMatrix> solveMulti(const QMatrix &m, const QMatrix &rhs) {
    if (rhs.rows != m.rows)
        throw InputError("solveMulti: rhs row count mismatch");
    QMatrix aug(m.rows, m.cols + rhs.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c)
            aug.at(r, c) = m.at(r, c);
        for (std::size_t c = 0; c < rhs.cols; ++c)
            aug.at(r, m.cols + c) = rhs.at(r, c);
    }
    RrefResult rr = rref(aug);
    for (std::size_t p = 0; p < rr.pivotCols.size(); ++p)
        if (rr.pivotCols[p] >= m.cols)
            return std::nullopt;
    QMatrix x(m.cols, rhs.cols);
    for (std::size_t p = 0; p < rr.pivotCols.size(); ++p)
        for (std::size_t c = 0; c < rhs.cols; ++c)
            x.at(rr.pivotCols[p], c) = rr.rref.at(p, m.cols + c);
    return x;
}

bool subspaceContains(const Subspace &s, const QVec &v) {
    return solve(s.basis, v).has_value();
}

std::size_t quotientDim(const Subspace &z, const Subspace &b) {
    if (z.ambientDim != b.ambientDim)
        throw InputError("quotientDim: ambient dimension mismatch");
    for (std::size_t k = 0; k < b.dim(); ++k)
        if (!subspaceContains(z, b.basis.column(k)))
            throw std::logic_error(
                "quotientDim: coboundary space not contained in cocycle space");
    return z.dim() - b.dim();
}

} // namespace homleib
