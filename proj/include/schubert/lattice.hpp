#ifndef SCHUBERT_LATTICE_HPP
#define SCHUBERT_LATTICE_HPP

#include <vector>

#include "schubert/numeric.hpp"

namespace schubert {

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

/* Canonical basis of the integer row span: row-style Hermite form with
 * strictly increasing pivot columns, positive pivots, entries above each
 * pivot reduced into [0, pivot).  Zero rows dropped, so two matrices span
 * the same lattice iff their forms are equal. */
IntMatrix hermite_normal_form(IntMatrix rows);

/* Reduce v by the rows of a Hermite form; v lies in the lattice iff the
 * remainder is zero. */
IntVector hermite_reduce(const IntMatrix& hnf, IntVector v);
bool lattice_contains(const IntMatrix& hnf, const IntVector& v);

/* Integer coordinates of v in the Hermite basis; throws std::logic_error
 * when v is outside the lattice. */
IntVector express_in_basis(const IntMatrix& hnf, const IntVector& v);

/* Nonzero invariant factors d_1 | d_2 | ... | d_r of the matrix, r its
 * rank.  The cokernel of the row span in Z^cols is
 * Z^(cols - r) + sum_i Z/d_i. */
std::vector<Int> smith_invariant_factors(IntMatrix m);

}  // namespace schubert

#endif
