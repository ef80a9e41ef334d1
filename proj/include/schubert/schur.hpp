#ifndef SCHUBERT_SCHUR_HPP
#define SCHUBERT_SCHUR_HPP

#include <map>
#include <string>
#include <vector>

#include "schubert/partitions.hpp"
#include "schubert/polynomials.hpp"

namespace schubert {

/* Integer combination of Schur functions; canonical: no zero coefficients. */
using SchurVector = std::map<Partition, long long, PartitionOrder>;

SchurVector schur_unit(const Partition& lambda);  // s_lambda
void add_to(SchurVector& v, const Partition& lambda, long long c);
SchurVector schur_sum(const SchurVector& a, const SchurVector& b);
SchurVector schur_scale(const SchurVector& v, long long c);
std::string schur_str(const SchurVector& v);  // "s[2] - 2*s[1,1]"; zero prints "0"

/* Multiply by e_k (kind 'e', adds vertical k-strips) or h_k (kind 'h',
 * adds horizontal k-strips).  Linear in v. */
SchurVector pieri(char kind, int k, const SchurVector& v);

/* Image in Lambda/I_{r,n-r}: drop every term outside the r x (n-r) box. */
SchurVector project_quotient(const SchurVector& v, int r, int n);

/* One term of an h-expansion: coef * h_{f1} h_{f2} ... with factors weakly
 * decreasing and >= 1; an empty factor list is the constant 1. */
struct HMonomial {
    long long coef;
    std::vector<int> factors;
};

/* Expansion of det(h_{lambda_i - i + j}), like-terms collected. */
std::vector<HMonomial> jacobi_trudi(const Partition& lambda);
SchurVector expand_h_product(const std::vector<int>& factors);
/* Re-expands the determinant through iterated h-multiplication and compares
 * with s_lambda. */
bool jacobi_trudi_verify(const Partition& lambda);

/* s_{(nu,1^k)} = sum_{l=0}^{k} (-1)^l e_{k-l} sum_lambda s_lambda, the inner
 * sum over horizontal l-strips on nu staying within the first l(nu) rows.
 * Without the row restriction the identity is false already at nu=(1), k=1. */
bool hook_identity_check(const Partition& nu, int k);

/* s_mu = sum_{m=1}^{k} (-1)^{k-m} h_{mu_m+k-i-m} s_{mu^(m)} where k is the
 * length of column i+1; requires k > i. */
bool column_identity_check(const Partition& mu, int i);

/* Ring involution s_lambda -> s_{lambda'}. */
SchurVector omega(const SchurVector& v);

/* Schur polynomial s_lambda(x_1..x_r); zero when lambda has more than r rows. */
ExactPolynomial schur_in_variables(const Partition& lambda, int r);

/* Product in Lambda, computed by expanding the left factor through
 * Jacobi-Trudi and applying iterated h-multiplication to the right. */
SchurVector schur_product(const SchurVector& a, const SchurVector& b);

}  // namespace schubert

#endif
