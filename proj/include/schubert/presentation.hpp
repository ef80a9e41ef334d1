#ifndef SCHUBERT_PRESENTATION_HPP
#define SCHUBERT_PRESENTATION_HPP

#include <map>
#include <string>
#include <vector>

#include "schubert/coxeter.hpp"
#include "schubert/lattice.hpp"
#include "schubert/permutations.hpp"
#include "schubert/polynomials.hpp"
#include "schubert/schur.hpp"

namespace schubert {

/* Parameters of a bigrassmannian permutation and of the rectangle it cuts
 * out: v has the unique descent r, its inverse the unique descent s, the
 * first non-fixed position is t, and v sends t to s+1.  The attached
 * rectangle is i^j inside the r x (n-r) box, with strip bounds a, b. */
struct BigrassmannianData {
    int r = 0, s = 0, t = 0, n = 0;
    int i = 0, j = 0, a = 0, b = 0;
};

BigrassmannianData bigrassmannian_data(const Permutation& v);

enum class GenVariant { full, one, two };
GenVariant parse_variant(const std::string& name);

/* Shape interval for the ideal attached to v: full is every shape between
 * i^j and the box; one caps at ((i+a)^b, i^{j-b}); two caps at (i^j, b^a). */
std::vector<Partition> gen_set(const Permutation& v, GenVariant variant);

/* Grassmannian elements u with Des(u) = Des(v) and u >= v for some
 * essential v; their classes generate the vanishing ideal of w. */
std::vector<Permutation> gen_set_Iw_grassmannian(const Permutation& w);

/* One Schur-polynomial generator s_shape(x_1..x_descent). */
struct SchurGenerator {
    Partition shape;
    int descent = 0;
    bool operator==(const SchurGenerator& o) const = default;
};

/* Concatenation of gen_set(v, one) over essential v, tagged by descent. */
std::vector<SchurGenerator> gen_set_Iw_schur(const Permutation& w);

/* Integer spans, degree by degree, of an ideal inside the rectangle
 * quotient; rows are Hermite bases in the Schur coordinates of shapes. */
struct GradedLattice {
    int r = 0, n = 0;
    std::vector<std::vector<Partition>> shapes;  // per degree: column labels
    std::vector<IntMatrix> basis;                // per degree: Hermite rows
    bool operator==(const GradedLattice& o) const = default;
};

/* Closure of homogeneous generators under multiplication by every h_k
 * (kind 'h', the default) or every e_k (kind 'e', as a cross-check),
 * projected to the r x (n-r) box, through degree up_to (default: the full
 * box size r(n-r), past which the quotient vanishes). */
GradedLattice ideal_graded_span(const std::vector<SchurVector>& gens, int r, int n,
                                int up_to = -1, char kind = 'h');

/* The span of gen_set(v, variant) equals the span of
 * {s_mu : rectangle(v) inside mu inside box} in every degree. */
bool verify_ideal_equality(const Permutation& v, GenVariant variant);

struct GeneratorReport {
    std::vector<int> counts;                // minimal generator count per degree
    int total = 0;
    std::vector<std::vector<Int>> torsion;  // per degree: invariant factors > 1
    bool torsion_free = true;
    bool input_minimal = false;  // input degree profile matches the minimal one
};

/* Graded Nakayama over the integers: in each degree, the cokernel of
 * (sum_k h_k * M_{d-k}) inside M_d via Smith normal form. */
GeneratorReport minimal_generators(const std::vector<SchurVector>& gens, int r, int n);

/* Sizes and degree generating functions of variants one and two: both of
 * size binom(a+b, a) with degree polynomial q^(ij) * [a+b choose a]_q. */
bool degree_genfun_check(const Permutation& v);

struct ConjectureReport {
    int bigrassmannians_checked = 0;
    std::vector<std::string> failures;
    bool all_minimal() const { return failures.empty(); }
};

/* For every bigrassmannian with descent r <= r_max and n-r <= k_max:
 * variants one and two are minimal generating sets with the predicted
 * degree profile and no torsion. */
ConjectureReport verify_minimality_conjecture(int r_max, int k_max);

/* When t = s the rectangle is one column wide and variant two consists of
 * the single-column shapes 1^m for m = r-s+1 .. r-s+1+a. */
bool verify_inclusion_case(const Permutation& v);

struct ParabolicReport {
    Permutation w_max;
    std::vector<Permutation> essential;  // E(w_max)
    bool descents_avoid_parabolic = false;
    bool generators_invariant = false;
    bool pass() const { return descents_avoid_parabolic && generators_invariant; }
};

/* Every essential element of w_max has its descent outside J, so every
 * generator class is W_J-invariant (checked through the operators). */
ParabolicReport verify_parabolic(const Permutation& w, const std::vector<int>& J);

/* Degree-one multiplication in the quotient by the symmetric polynomials:
 * x_p times the class of u expands over single transposition moves that
 * raise the length by one, with sign +1 for moves across positions p < j
 * and -1 for moves across i < p. */
std::map<Permutation, int> times_x(int p, const Permutation& u);

/* The grassmannian generators span the vanishing ideal of w inside the
 * coinvariant algebra: closure under degree-one multiplication matches
 * the span of the classes of {u : u not<= w} in every degree. */
bool verify_Iw_generates(const Permutation& w);
bool verify_Iw_generates_general(const CoxeterGroup& G, const SignedWord& w);

struct SweepReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/* The two checks above for every group element at once, sharing the
 * degree-one multiplication table. */
SweepReport verify_Iw_generates_sweep(int n);
SweepReport verify_Iw_generates_general_sweep(const CoxeterGroup& G);

/* Graded Nakayama for the vanishing ideal of w inside the coinvariant
 * algebra, seeded with the Schur-polynomial generating set; throws if that
 * set fails to span the ideal. */
GeneratorReport minimal_generators_Iw(const Permutation& w);

}  // namespace schubert

#endif
