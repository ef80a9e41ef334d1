#include "schubert/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

constexpr long kGroupBudget = 50000;   // refuse to enumerate beyond this
constexpr long kMatrixBudget = 2000;   // refuse the full order matrix beyond this

int sgn(int x) { return x < 0 ? -1 : 1; }

bool vector_positive(const std::vector<int>& v) {
    for (int c : v)
        if (c != 0) return c > 0;
    throw std::logic_error("zero vector is not a root");
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

CoxeterGroup::CoxeterGroup(char type, int rank) : type_(type), rank_(rank) {
    switch (type) {
        case 'A':
            if (rank < 1 || rank > 7) throw std::invalid_argument("type A supports rank 1..7");
            dim_ = rank + 1;
            break;
        case 'B':
            if (rank < 1 || rank > 4) throw std::invalid_argument("type B supports rank 1..4");
            dim_ = rank;
            break;
        case 'D':
            if (rank != 4) throw std::invalid_argument("type D supports rank 4 only");
            dim_ = rank;
            break;
        default:
            throw std::invalid_argument("unsupported Coxeter type");
    }
    identity_.resize(dim_);
    std::iota(identity_.begin(), identity_.end(), 1);
    build_roots();
    enumerate();
}

void CoxeterGroup::build_roots() {
    auto unit = [&](int i, int c) {
        std::vector<int> v(dim_, 0);
        v[i - 1] = c;
        return v;
    };
    auto pair_root = [&](int i, int j, int cj) {
        std::vector<int> v(dim_, 0);
        v[i - 1] = 1;
        v[j - 1] = cj;
        return v;
    };
    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j) positive_roots_.push_back(pair_root(i, j, -1));
    if (type_ == 'B' || type_ == 'D')
        for (int i = 1; i <= dim_; ++i)
            for (int j = i + 1; j <= dim_; ++j) positive_roots_.push_back(pair_root(i, j, 1));
    if (type_ == 'B')
        for (int i = 1; i <= dim_; ++i) positive_roots_.push_back(unit(i, 1));

    for (int i = 1; i < dim_; ++i) simple_roots_.push_back(pair_root(i, i + 1, -1));
    if (type_ == 'B') simple_roots_.push_back(unit(dim_, 1));
    if (type_ == 'D') simple_roots_.push_back(pair_root(dim_ - 1, dim_, 1));
    if (int(simple_roots_.size()) != rank_) throw std::logic_error("simple root count");
}

SignedWord CoxeterGroup::simple(int i) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("simple reflection index");
    SignedWord s = identity_;
    if (type_ == 'A' || i < rank_) {
        std::swap(s[i - 1], s[i]);
    } else if (type_ == 'B') {
        s[dim_ - 1] = -s[dim_ - 1];
    } else {  // type D, reflection in e_{n-1} + e_n
        s[dim_ - 2] = -dim_;
        s[dim_ - 1] = -(dim_ - 1);
    }
    return s;
}

SignedWord CoxeterGroup::right_mult_simple(const SignedWord& w, int i) const {
    SignedWord r = w;
    if (type_ == 'A' || i < rank_) {
        std::swap(r[i - 1], r[i]);
    } else if (type_ == 'B') {
        r[dim_ - 1] = -r[dim_ - 1];
    } else {
        std::swap(r[dim_ - 2], r[dim_ - 1]);
        r[dim_ - 2] = -r[dim_ - 2];
        r[dim_ - 1] = -r[dim_ - 1];
    }
    return r;
}

SignedWord CoxeterGroup::multiply(const SignedWord& u, const SignedWord& v) const {
    validate_word(u);
    validate_word(v);
    SignedWord r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = sgn(v[i]) * u[std::abs(v[i]) - 1];
    return r;
}

SignedWord CoxeterGroup::inverse_element(const SignedWord& w) const {
    validate_word(w);
    SignedWord r(dim_);
    for (int i = 0; i < dim_; ++i) r[std::abs(w[i]) - 1] = sgn(w[i]) * (i + 1);
    return r;
}

std::vector<int> CoxeterGroup::root_image(const SignedWord& w, const std::vector<int>& root) const {
    std::vector<int> out(dim_, 0);
    for (int i = 0; i < dim_; ++i)
        if (root[i] != 0) out[std::abs(w[i]) - 1] += sgn(w[i]) * root[i];
    return out;
}

bool CoxeterGroup::root_negative(const SignedWord& w, const std::vector<int>& root) const {
    return !vector_positive(root_image(w, root));
}

int CoxeterGroup::length(const SignedWord& w) const {
    validate_word(w);
    int len = 0;
    for (const auto& beta : positive_roots_)
        if (root_negative(w, beta)) ++len;
    return len;
}

std::vector<int> CoxeterGroup::right_descents(const SignedWord& w) const {
    std::vector<int> des;
    for (int i = 1; i <= rank_; ++i)
        if (root_negative(w, simple_roots_[i - 1])) des.push_back(i);
    return des;
}

std::vector<int> CoxeterGroup::left_descents(const SignedWord& w) const {
    return right_descents(inverse_element(w));
}

std::vector<int> CoxeterGroup::reduced_word(const SignedWord& w) const {
    SignedWord cur = w;
    std::vector<int> word;
    for (;;) {
        std::vector<int> des = right_descents(cur);
        if (des.empty()) break;
        word.push_back(des.front());
        cur = right_mult_simple(cur, des.front());
    }
    if (cur != identity_) throw std::logic_error("descent-free non-identity element");
    std::reverse(word.begin(), word.end());
    return word;
}

/* Allocation-free right-descent test; matches root_negative on the simple
 * roots (the first nonzero coordinate of w(alpha_i) sits at the smaller
 * absolute entry).  Cross-checked against the root computation in the tests. */
bool CoxeterGroup::right_descent_fast(const SignedWord& w, int i) const {
    if (type_ == 'A' || i < rank_) {
        int a = w[i - 1], b = w[i];
        return std::abs(a) < std::abs(b) ? a < 0 : b > 0;
    }
    if (type_ == 'B') return w[dim_ - 1] < 0;
    int a = w[dim_ - 2], b = w[dim_ - 1];
    return std::abs(a) < std::abs(b) ? a < 0 : b < 0;
}

void CoxeterGroup::left_mult_inplace(SignedWord& w, int i) const {
    if (type_ == 'A' || i < rank_) {
        for (int& x : w) {
            int a = std::abs(x);
            if (a == i) x = sgn(x) * (i + 1);
            else if (a == i + 1) x = sgn(x) * i;
        }
    } else if (type_ == 'B') {
        for (int& x : w)
            if (std::abs(x) == dim_) x = -x;
    } else {
        for (int& x : w) {
            int a = std::abs(x);
            if (a == dim_ - 1) x = -sgn(x) * dim_;
            else if (a == dim_) x = -sgn(x) * (dim_ - 1);
        }
    }
}

void CoxeterGroup::right_mult_inplace(SignedWord& w, int i) const {
    if (type_ == 'A' || i < rank_) {
        std::swap(w[i - 1], w[i]);
    } else if (type_ == 'B') {
        w[dim_ - 1] = -w[dim_ - 1];
    } else {
        std::swap(w[dim_ - 2], w[dim_ - 1]);
        w[dim_ - 2] = -w[dim_ - 2];
        w[dim_ - 1] = -w[dim_ - 1];
    }
}

bool CoxeterGroup::bruhat_leq(const SignedWord& u, const SignedWord& w) const {
    SignedWord U = u, Uinv = inverse_element(u);
    SignedWord W = w, Winv = inverse_element(w);
    for (;;) {
        if (W == identity_) return U == identity_;
        // Left descent of W = right descent of its inverse.
        int s = 0;
        for (int i = 1; i <= rank_; ++i)
            if (right_descent_fast(Winv, i)) {
                s = i;
                break;
            }
        if (right_descent_fast(Uinv, s)) {
            left_mult_inplace(U, s);
            right_mult_inplace(Uinv, s);
        }
        left_mult_inplace(W, s);
        right_mult_inplace(Winv, s);
    }
}

void CoxeterGroup::enumerate() {
    long long expected = 0;
    switch (type_) {
        case 'A': expected = factorial(rank_ + 1); break;
        case 'B': expected = factorial(rank_) << rank_; break;
        case 'D': expected = factorial(rank_) << (rank_ - 1); break;
    }
    if (expected > kGroupBudget) throw std::invalid_argument("group order exceeds budget");

    std::map<SignedWord, int> seen;
    std::deque<std::pair<SignedWord, int>> queue;
    seen[identity_] = 0;
    queue.emplace_back(identity_, 0);
    std::vector<std::pair<int, SignedWord>> found;
    while (!queue.empty()) {
        auto [w, len] = queue.front();
        queue.pop_front();
        found.emplace_back(len, w);
        for (int i = 1; i <= rank_; ++i) {
            SignedWord next = right_mult_simple(w, i);
            if (seen.emplace(next, len + 1).second) queue.emplace_back(next, len + 1);
        }
    }
    if (static_cast<long long>(found.size()) != expected)
        throw std::logic_error("group order mismatch");

    std::sort(found.begin(), found.end());
    for (int i = 0; i < int(found.size()); ++i) {
        elements_.push_back(found[i].second);
        lengths_.push_back(found[i].first);
        index_[found[i].second] = i;
    }
    if (lengths_.back() != int(positive_roots_.size()) ||
        lengths_[elements_.size() - 2] == lengths_.back())
        throw std::logic_error("longest element is not unique");
}

void CoxeterGroup::validate_word(const SignedWord& w) const {
    if (int(w.size()) != dim_) throw std::invalid_argument("word length");
    std::vector<bool> hit(dim_, false);
    int negatives = 0;
    for (int x : w) {
        int a = std::abs(x);
        if (a < 1 || a > dim_ || hit[a - 1]) throw std::invalid_argument("not a signed permutation");
        hit[a - 1] = true;
        if (x < 0) ++negatives;
    }
    if (type_ == 'A' && negatives > 0) throw std::invalid_argument("type A words are unsigned");
    if (type_ == 'D' && negatives % 2 != 0)
        throw std::invalid_argument("type D words have an even number of signs");
}

int CoxeterGroup::element_index(const SignedWord& w) const {
    validate_word(w);
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("not a group element");
    return it->second;
}

void CoxeterGroup::ensure_order_matrix() const {
    if (!below_.empty()) return;
    long N = long(elements_.size());
    if (N > kMatrixBudget) throw std::runtime_error("group exceeds the order-matrix budget");
    int words = int((N + 63) / 64);
    below_.assign(N, std::vector<uint64_t>(words, 0));
    above_.assign(N, std::vector<uint64_t>(words, 0));
    for (int wi = 0; wi < N; ++wi)
        for (int ui = 0; ui < N; ++ui) {
            if (lengths_[ui] > lengths_[wi]) continue;
            if (bruhat_leq(elements_[ui], elements_[wi])) {
                below_[wi][ui / 64] |= uint64_t(1) << (ui % 64);
                above_[ui][wi / 64] |= uint64_t(1) << (wi % 64);
            }
        }
}

std::vector<SignedWord> CoxeterGroup::essential_set(const SignedWord& w) const {
    ensure_order_matrix();
    int wi = element_index(w);
    int N = int(elements_.size());
    std::vector<SignedWord> out;
    for (int ui = 0; ui < N; ++ui) {
        if (matrix_bit(below_[wi], ui)) continue;
        // Minimal outside the interval: nothing else weakly below is outside.
        int outside_below = 0;
        for (int b = 0; b < int(below_[ui].size()); ++b)
            outside_below += __builtin_popcountll(below_[ui][b] & ~below_[wi][b]);
        if (outside_below == 1) out.push_back(elements_[ui]);
    }
    return out;
}

bool CoxeterGroup::is_bigrassmannian(const SignedWord& w) const {
    return right_descents(w).size() <= 1 && left_descents(w).size() <= 1;
}

std::vector<SignedWord> CoxeterGroup::bigrassmannian_elements() const {
    std::vector<SignedWord> out;
    for (int i = 1; i < int(elements_.size()); ++i)
        if (is_bigrassmannian(elements_[i])) out.push_back(elements_[i]);
    return out;
}

std::vector<SignedWord> CoxeterGroup::join_irreducibles() const {
    ensure_order_matrix();
    int N = int(elements_.size());
    int words = int(below_[0].size());
    std::vector<SignedWord> out;
    for (int a = 1; a < N; ++a) {
        // Upper bounds of the strict lower ideal of a.
        std::vector<uint64_t> ub(words, ~uint64_t(0));
        for (int x = 0; x < N; ++x)
            if (x != a && matrix_bit(below_[a], x))
                for (int b = 0; b < words; ++b) ub[b] &= above_[x][b];
        for (int i = N; i < words * 64; ++i) ub[i / 64] &= ~(uint64_t(1) << (i % 64));
        // a is the join of that ideal iff every upper bound lies above a.
        bool is_min = true;
        for (int b = 0; b < words && is_min; ++b)
            if (ub[b] & ~above_[a][b]) is_min = false;
        if (!is_min) out.push_back(elements_[a]);
    }
    return out;
}

CoxeterScanReport CoxeterGroup::scan_essential_bigrassmannian() const {
    CoxeterScanReport report{type_, rank_, int(elements_.size()), {}};
    for (const SignedWord& w : elements_)
        for (const SignedWord& v : essential_set(w))
            if (!is_bigrassmannian(v))
                report.violations.push_back("w = " + format(w) + " has essential element " +
                                            format(v) + " with more than one descent");
    return report;
}

std::string CoxeterGroup::format(const SignedWord& w) const {
    std::ostringstream out;
    for (int i = 0; i < int(w.size()); ++i) {
        if (i) out << ' ';
        out << w[i];
    }
    return out.str();
}

SignedWord CoxeterGroup::parse_element(const std::string& text) const {
    std::istringstream in(text);
    SignedWord w;
    int x;
    while (in >> x) w.push_back(x);
    validate_word(w);
    return w;
}

}  // namespace schubert
