#ifndef SCHUBERT_COXETER_HPP
#define SCHUBERT_COXETER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schubert {

/* Element of a finite reflection group of type A, B or D, stored as a signed
 * one-line word: position i holds sign(w_i) * |w_i| meaning e_i -> sign(w_i)
 * e_{|w_i|}.  Type A words are unsigned permutations of 1..rank+1; type B
 * words carry arbitrary signs; type D words have an even number of negative
 * entries. */
using SignedWord = std::vector<int>;

struct CoxeterScanReport {
    char type;
    int rank;
    int elements_scanned;
    std::vector<std::string> violations;  // formatted offenders, expected empty
};

/* Root data and Bruhat order for one crystallographic group.  Roots live in
 * Z^dim with dim = rank+1 for type A (sum-zero roots e_i - e_j) and dim =
 * rank otherwise.  A root is positive when its first nonzero coordinate is
 * positive; length and descents are computed from root inversions, which is
 * the definition and avoids any window-statistic convention. */
class CoxeterGroup {
public:
    // Supported ranks: A 1..7, B 1..4, D exactly 4; |W| is capped at 50000.
    CoxeterGroup(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    int dim() const { return dim_; }
    long long order() const { return long(elements_.size()); }

    const std::vector<std::vector<int>>& simple_roots() const { return simple_roots_; }
    const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }

    // All elements, sorted by (length, word); identity first, w0 last.
    const std::vector<SignedWord>& elements() const { return elements_; }
    int element_index(const SignedWord& w) const;
    SignedWord identity_element() const { return identity_; }
    SignedWord longest_element() const { return elements_.back(); }

    SignedWord simple(int i) const;  // s_i as a signed word, i = 1..rank
    SignedWord multiply(const SignedWord& u, const SignedWord& v) const;
    SignedWord inverse_element(const SignedWord& w) const;

    std::vector<int> root_image(const SignedWord& w, const std::vector<int>& root) const;
    int length(const SignedWord& w) const;  // positive roots sent negative
    std::vector<int> right_descents(const SignedWord& w) const;
    std::vector<int> left_descents(const SignedWord& w) const;
    std::vector<int> reduced_word(const SignedWord& w) const;

    /* Lifting recursion: for s with sw < w, u <= w iff (su <= sw when
     * su < u) else u <= sw.  One descending branch, so each call is
     * O(length * dim) with no table. */
    bool bruhat_leq(const SignedWord& u, const SignedWord& w) const;

    /* Bruhat-minimal elements of {u : u not<= w}, via the full order matrix;
     * groups beyond the matrix budget are refused. */
    std::vector<SignedWord> essential_set(const SignedWord& w) const;

    bool is_bigrassmannian(const SignedWord& w) const;  // <=1 descent on each side
    std::vector<SignedWord> bigrassmannian_elements() const;  // non-identity ones

    /* Elements that are not the join of their strict lower order ideal,
     * computed from the order matrix alone.  Identity is excluded (it is the
     * empty join). */
    std::vector<SignedWord> join_irreducibles() const;

    // For every w, checks that every essential element is bigrassmannian.
    CoxeterScanReport scan_essential_bigrassmannian() const;

    std::string format(const SignedWord& w) const;  // e.g. "2 -1 3"
    SignedWord parse_element(const std::string& text) const;

private:
    char type_;
    int rank_;
    int dim_;
    SignedWord identity_;
    std::vector<std::vector<int>> simple_roots_;
    std::vector<std::vector<int>> positive_roots_;
    std::vector<SignedWord> elements_;
    std::vector<int> lengths_;  // parallel to elements_
    std::map<SignedWord, int> index_;

    // Lazy full order matrix: below_[w] bit u set iff u <= w; above_ is the
    // transpose.  Built only for |W| within the matrix budget.
    mutable std::vector<std::vector<uint64_t>> below_, above_;

    void build_roots();
    void enumerate();
    void validate_word(const SignedWord& w) const;
    SignedWord right_mult_simple(const SignedWord& w, int i) const;
    bool root_negative(const SignedWord& w, const std::vector<int>& root) const;
    bool right_descent_fast(const SignedWord& w, int i) const;
    void left_mult_inplace(SignedWord& w, int i) const;
    void right_mult_inplace(SignedWord& w, int i) const;
    void ensure_order_matrix() const;
    bool matrix_bit(const std::vector<uint64_t>& row, int i) const {
        return (row[i / 64] >> (i % 64)) & 1;
    }
};

}  // namespace schubert

#endif
