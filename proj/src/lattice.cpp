#include "schubert/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

int columns_of(const IntMatrix& m) { return m.empty() ? 0 : int(m[0].size()); }

void check_rectangular(const IntMatrix& m) {
    for (const IntVector& row : m)
        if (int(row.size()) != columns_of(m))
            throw std::invalid_argument("ragged integer matrix");
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
    check_rectangular(rows);
    int cols = columns_of(rows);
    int top = 0;  // rows above are finished, pivot columns increasing
    for (int c = 0; c < cols && top < int(rows.size()); ++c) {
        // Clear column c below row top with gcd row operations.
        for (int r = top + 1; r < int(rows.size()); ++r) {
            while (rows[r][c] != 0) {
                if (rows[top][c] == 0 ||
                    abs(rows[r][c]) < abs(rows[top][c]))
                    std::swap(rows[top], rows[r]);
                if (rows[r][c] == 0) break;
                Int q = rows[r][c] / rows[top][c];
                for (int k = c; k < cols; ++k) rows[r][k] -= q * rows[top][k];
            }
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0)
            for (int k = c; k < cols; ++k) rows[top][k] = -rows[top][k];
        // Reduce the entries above the pivot into [0, pivot).
        for (int r = 0; r < top; ++r) {
            Int q = rows[r][c] / rows[top][c];
            if (rows[r][c] - q * rows[top][c] < 0) q -= 1;
            if (q != 0)
                for (int k = c; k < cols; ++k) rows[r][k] -= q * rows[top][k];
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

IntVector hermite_reduce(const IntMatrix& hnf, IntVector v) {
    if (!hnf.empty() && v.size() != hnf[0].size())
        throw std::invalid_argument("vector length mismatch");
    int cols = int(v.size());
    for (const IntVector& row : hnf) {
        int c = 0;
        while (c < cols && row[c] == 0) ++c;
        if (c == cols || v[c] == 0) continue;
        Int q = v[c] / row[c];
        for (int k = c; k < cols; ++k) v[k] -= q * row[k];
    }
    return v;
}

bool lattice_contains(const IntMatrix& hnf, const IntVector& v) {
    IntVector r = hermite_reduce(hnf, v);
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

IntVector express_in_basis(const IntMatrix& hnf, const IntVector& v) {
    if (!hnf.empty() && v.size() != hnf[0].size())
        throw std::invalid_argument("vector length mismatch");
    int cols = int(v.size());
    IntVector coords(hnf.size(), 0), rest = v;
    for (size_t i = 0; i < hnf.size(); ++i) {
        int c = 0;
        while (c < cols && hnf[i][c] == 0) ++c;
        if (c == cols) continue;
        if (rest[c] % hnf[i][c] != 0) throw std::logic_error("vector outside the lattice");
        Int q = rest[c] / hnf[i][c];
        coords[i] = q;
        for (int k = c; k < cols; ++k) rest[k] -= q * hnf[i][k];
    }
    for (const Int& x : rest)
        if (x != 0) throw std::logic_error("vector outside the lattice");
    return coords;
}

std::vector<Int> smith_invariant_factors(IntMatrix m) {
    check_rectangular(m);
    int nrows = int(m.size()), ncols = columns_of(m);
    std::vector<Int> diag;
    int t = 0;
    while (true) {
        // Find a nonzero entry in the remaining block.
        int pr = -1, pc = -1;
        for (int r = t; r < nrows && pr < 0; ++r)
            for (int c = t; c < ncols; ++c)
                if (m[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        std::swap(m[t], m[pr]);
        for (int r = t; r < nrows; ++r) std::swap(m[r][t], m[r][pc]);
        // Alternate row and column elimination until both are clear.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int r = t + 1; r < nrows; ++r)
                while (m[r][t] != 0) {
                    if (abs(m[r][t]) < abs(m[t][t])) std::swap(m[t], m[r]);
                    if (m[r][t] == 0) break;
                    Int q = m[r][t] / m[t][t];
                    for (int k = t; k < ncols; ++k) m[r][k] -= q * m[t][k];
                }
            for (int c = t + 1; c < ncols; ++c)
                while (m[t][c] != 0) {
                    if (abs(m[t][c]) < abs(m[t][t])) {
                        for (int r = t; r < nrows; ++r) std::swap(m[r][t], m[r][c]);
                        dirty = true;  // column swap may repopulate column t
                    }
                    if (m[t][c] == 0) break;
                    Int q = m[t][c] / m[t][t];
                    for (int r = t; r < nrows; ++r) m[r][c] -= q * m[r][t];
                }
            for (int r = t + 1; r < nrows; ++r)
                if (m[r][t] != 0) dirty = true;
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    // Enforce divisibility d_i | d_{i+1} by gcd/lcm exchanges.
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i + 1] % diag[i] != 0) {
                Int g = gcd(diag[i], diag[i + 1]);
                diag[i + 1] = diag[i] / g * diag[i + 1];
                diag[i] = g;
                changed = true;
            }
    }
    return diag;
}

}  // namespace schubert
