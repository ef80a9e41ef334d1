#ifndef SCHUBERT_PERMUTATIONS_HPP
#define SCHUBERT_PERMUTATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "schubert/partitions.hpp"

namespace schubert {

/* Permutation of {1..n} in one-line notation.  Simple reflections are indexed
 * 1..n-1 and act on positions under right multiplication: w*s_i swaps the
 * entries at positions i, i+1. */
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    static Permutation longest(int n);  // w0 = n n-1 ... 1
    static Permutation parse(const std::string& text);

    int n() const { return int(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }  // 1-based
    const std::vector<int>& word() const { return word_; }
    std::string str() const;  // digit string for n <= 9, else comma-separated

    int length() const;                 // inversion count
    std::vector<int> descents() const;  // {i : w_i > w_{i+1}}
    Permutation inverse() const;
    Permutation operator*(const Permutation& v) const;  // (u*v)(i) = u(v(i))
    Permutation right_s(int i) const;                   // w * s_i
    Permutation left_s(int i) const;                    // s_i * w
    std::vector<int> reduced_word() const;

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator!=(const Permutation& o) const { return word_ != o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

  private:
    std::vector<int> word_;
};

/* t_{r,s}(w) = |{w_1..w_r} meet {1..s}|: the Schubert condition C_{r,s,t}
 * "dim(V_r meet C^s) >= t" holds on the variety of w iff t_{r,s}(w) >= t. */
int rank_function(const Permutation& w, int r, int s);

/* Bruhat order via the rank-function criterion:
 * u <= w iff t_{r,s}(u) >= t_{r,s}(w) for all r, s. */
bool bruhat_leq(const Permutation& u, const Permutation& w);

struct GrassmannianClass {
    bool grassmannian = false;    // |Des| <= 1
    bool bigrassmannian = false;  // both w and w^{-1} grassmannian
    std::optional<int> descent_index;
};
GrassmannianClass classify_grassmannian(const Permutation& v);

/* Parameters of a non-identity bigrassmannian: 1 <= t <= r,s <= n, t > r+s-n.
 * v_{r,s,t,n} is the minimal permutation violating C_{r,s,t}. */
struct RankTriple {
    int r = 0, s = 0, t = 0;
    bool operator==(const RankTriple& o) const { return r == o.r && s == o.s && t == o.t; }
};

/* The four-block word (1..t-1, s+1..s+r-t+1, t..s, s+r-t+2..n). */
Permutation make_bigrassmannian(const RankTriple& rt, int n);
/* Recover (r,s,t) from a non-identity bigrassmannian: r, s the descents of v
 * and v^{-1}, t the position of the value s+1. */
RankTriple bigrassmannian_params(const Permutation& v);

std::vector<Permutation> all_permutations(int n);  // lexicographic order
/* Non-identity bigrassmannians of S_n, ordered by (r,s,t). */
std::vector<Permutation> all_bigrassmannians(int n);

/* Bruhat-minimal elements of {u : u not<= w}, ordered by (r,s,t).  Enumerates
 * the O(n^3) bigrassmannians only: every minimal non-below element is
 * bigrassmannian, and a bigrassmannian minimal among the non-below
 * bigrassmannians is minimal among all non-below elements (any strictly
 * smaller non-below u would contain a minimal, hence bigrassmannian, witness
 * below v). */
std::vector<Permutation> essential_set(const Permutation& w);

/* The unique w with E(w) = {v}: Bruhat maximum of {u : v not<= u}, brute
 * force with a uniqueness check.  n <= 8. */
Permutation dissector_complement_max(const Permutation& v);
/* Closed-form candidate for the same element, four descending blocks
 * (n..n-r+t+1, s..s-t+1, n-r+t..s+1, s-t..1); the third block steps by -1.
 * Cross-checked against dissector_complement_max in the tests. */
Permutation dissector_complement_formula(const RankTriple& rt, int n);

/* Cell of the Fulton diagram built with hooks weakly below and weakly to the
 * LEFT of each x (mirrored convention, so |D(w)| = l(w0 w)).  An essential
 * cell is a bubble with no bubble directly below or directly to its left;
 * t counts the diagram bubbles weakly above it in its column. */
struct FultonCell {
    int row = 0, col = 0, t = 0;
    bool operator==(const FultonCell& o) const { return row == o.row && col == o.col && t == o.t; }
};
std::vector<std::vector<bool>> fulton_diagram(const Permutation& w);
int fulton_diagram_size(const Permutation& w);
/* Essential cells in (row, col) order; cell (r, s+1) corresponds to the
 * bigrassmannian v_{r,s,t,n}, and the image set equals essential_set(w). */
std::vector<FultonCell> fulton_essential(const Permutation& w);
Permutation fulton_cell_bigrassmannian(const FultonCell& cell, int n);

/* Parabolic factorization w = u*x with u in W^J (no descents in J), x in W_J,
 * lengths adding; w_min/w_max are the Bruhat extremes of the coset w W_J. */
struct CosetFactorization {
    Permutation u, x, w_min, w_max;
};
CosetFactorization parabolic_cosets(const Permutation& w, const std::vector<int>& J);
Permutation longest_in_parabolic(int n, const std::vector<int>& J);  // w0(J)
std::vector<Permutation> parabolic_subgroup(int n, const std::vector<int>& J);
std::vector<Permutation> min_length_reps(int n, const std::vector<int>& J);  // W^J

/* For w with Des(w) <= {s_r}: lambda = (w_r - r, ..., w_2 - 2, w_1 - 1). */
Partition grassmannian_to_partition(const Permutation& w, int r);

/* Inverse of the above: the unique w in S_n with Des(w) <= {s_r} and
 * w_k = lambda_{r-k+1} + k for k <= r.  Needs lambda inside r x (n-r). */
Permutation partition_to_grassmannian(const Partition& lambda, int r, int n);

bool contains_pattern(const Permutation& w, const Permutation& pattern);
struct PatternClass {
    bool defined_by_inclusions = false;  // avoids 4231, 35142, 42513, 351624
    bool smooth = false;                 // avoids 3412, 4231
};
PatternClass pattern_class(const Permutation& w);

}  // namespace schubert

#endif
