#ifndef SCHUBERT_NUMERIC_HPP
#define SCHUBERT_NUMERIC_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

/* All arithmetic in this library is exact: arbitrary-precision integers for
 * lattice work, rationals for divided differences in general type. */
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int binomial(int n, int k);

/* Coefficient list of the Gaussian polynomial [m choose k]_q, constant term
 * first; size k*(m-k)+1. */
std::vector<Int> gaussian_binomial(int m, int k);

}  // namespace schubert

#endif
