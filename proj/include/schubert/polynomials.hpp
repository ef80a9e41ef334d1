#ifndef SCHUBERT_POLYNOMIALS_HPP
#define SCHUBERT_POLYNOMIALS_HPP

#include <map>
#include <string>
#include <vector>

#include "schubert/coxeter.hpp"
#include "schubert/numeric.hpp"
#include "schubert/permutations.hpp"

namespace schubert {

/* Sparse polynomial in variables x1..x_vars with exact rational coefficients,
 * keyed by exponent vector.  Zero coefficients are never stored, so equality
 * is map equality. */
class ExactPolynomial {
public:
    explicit ExactPolynomial(int vars = 0) : vars_(vars) {}
    static ExactPolynomial constant(int vars, const Rat& c);
    static ExactPolynomial variable(int vars, int i);  // x_i, 1-based
    static ExactPolynomial monomial(const std::vector<int>& exps, const Rat& c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    Rat coefficient(const std::vector<int>& exps) const;
    Rat constant_term() const;
    int degree() const;  // total degree, -1 for the zero polynomial
    bool is_homogeneous() const;
    ExactPolynomial homogeneous_component(int d) const;

    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const Rat& c) const;
    bool operator==(const ExactPolynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const ExactPolynomial& o) const { return !(*this == o); }

    // Terms sorted by degree, then lexicographically, leading first.
    std::string str() const;

    void add_term(const std::vector<int>& exps, const Rat& c);

private:
    int vars_;
    std::map<std::vector<int>, Rat> terms_;
};

/* Variable substitution x_k -> sign(w_k) x_{|w_k|}.  A left action:
 * act(u*v, f) = act(u, act(v, f)). */
ExactPolynomial act(const ExactPolynomial& f, const Permutation& w);
ExactPolynomial act(const CoxeterGroup& G, const ExactPolynomial& f, const SignedWord& w);

/* (f - s(f))/alpha_s by synthetic division along a variable of alpha_s, with
 * a zero-remainder assertion; the difference is always exactly divisible. */
ExactPolynomial divided_difference(const ExactPolynomial& f, int i);  // alpha = x_i - x_{i+1}
ExactPolynomial divided_difference(const CoxeterGroup& G, const ExactPolynomial& f, int i);
ExactPolynomial demazure(const ExactPolynomial& f, int i);  // pi_i(f) = d_i(x_i f)

// Composition along a word, leftmost operator applied last.
ExactPolynomial apply_word(const ExactPolynomial& f, const std::vector<int>& word);
ExactPolynomial apply_word(const CoxeterGroup& G, const ExactPolynomial& f,
                           const std::vector<int>& word);

// d_{w^-1 w0} applied to x^delta; integer coefficients.
ExactPolynomial schubert_polynomial(const Permutation& w);

// (1/|W|) prod of the positive roots, and its divided-difference images.
ExactPolynomial hiller_longest(const CoxeterGroup& G);
ExactPolynomial hiller_schubert(const CoxeterGroup& G, const SignedWord& w);

using SchubertExpansion = std::map<Permutation, Rat>;
using GeneralExpansion = std::map<SignedWord, Rat>;

/* Coefficients c_w with f = sum c_w S_w modulo the invariant ideal; c_w is
 * the constant term of d_w f, computed along the length-sorted group with one
 * divided difference per element. */
SchubertExpansion coinvariant_expand(const ExactPolynomial& f, int n);
GeneralExpansion coinvariant_expand(const CoxeterGroup& G, const ExactPolynomial& f);

// Constant term of d_w(S_u S_v); zero when lengths do not add.
Rat structure_constant(const Permutation& u, const Permutation& v, const Permutation& w);
Rat structure_constant(const CoxeterGroup& G, const SignedWord& u, const SignedWord& v,
                       const SignedWord& w);

/* Coset sparsity of the structure constants: for u in W^J and x, x' in W_J
 * with l(x) = l(x'), checks c_{u,x}^{u x'} = 1 exactly when x = x'. */
bool verify_sparsity(const Permutation& u, const Permutation& x, const Permutation& xp,
                     const std::vector<int>& J);

}  // namespace schubert

#endif
