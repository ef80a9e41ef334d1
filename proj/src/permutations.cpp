#include "schubert/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubert {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > n() || seen[v - 1])
            throw std::invalid_argument("Permutation: word is not a bijection of {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos < text.size()) {
            size_t comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            w.push_back(std::stoi(text.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("Permutation::parse: bad digit");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::string Permutation::str() const {
    std::string out;
    for (int i = 0; i < n(); ++i) {
        if (n() > 9 && i > 0) out += ",";
        out += std::to_string(word_[i]);
    }
    return out;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> des;
    for (int i = 1; i < n(); ++i)
        if (word_[i - 1] > word_[i]) des.push_back(i);
    return des;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(n());
    for (int i = 0; i < n(); ++i) w[word_[i] - 1] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& v) const {
    if (n() != v.n()) throw std::invalid_argument("Permutation product: size mismatch");
    std::vector<int> w(n());
    for (int i = 0; i < n(); ++i) w[i] = word_[v.word_[i] - 1];
    return Permutation(std::move(w));
}

Permutation Permutation::right_s(int i) const {
    if (i < 1 || i >= n()) throw std::invalid_argument("right_s: index out of range");
    std::vector<int> w = word_;
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w));
}

Permutation Permutation::left_s(int i) const {
    if (i < 1 || i >= n()) throw std::invalid_argument("left_s: index out of range");
    std::vector<int> w = word_;
    for (int& v : w) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return Permutation(std::move(w));
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i < w.n(); ++i) {
            if (w(i) > w(i + 1)) {
                word.push_back(i);
                w = w.right_s(i);
                moved = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

int rank_function(const Permutation& w, int r, int s) {
    if (r < 1 || r > w.n() || s < 1 || s > w.n())
        throw std::invalid_argument("rank_function: indices out of range");
    int count = 0;
    for (int i = 1; i <= r; ++i)
        if (w(i) <= s) ++count;
    return count;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    int n = u.n();
    if (n != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
    // Rolling row of the rank matrix: tu[s] = t_{r,s}(u) for the current r.
    std::vector<int> tu(n + 1, 0), tw(n + 1, 0);
    for (int r = 1; r < n; ++r) {
        for (int s = u(r); s <= n; ++s) ++tu[s];
        for (int s = w(r); s <= n; ++s) ++tw[s];
        for (int s = 1; s < n; ++s)
            if (tu[s] < tw[s]) return false;
    }
    return true;
}

GrassmannianClass classify_grassmannian(const Permutation& v) {
    GrassmannianClass out;
    std::vector<int> des = v.descents();
    out.grassmannian = des.size() <= 1;
    if (des.size() == 1) out.descent_index = des[0];
    out.bigrassmannian = out.grassmannian && v.inverse().descents().size() <= 1;
    return out;
}

static void check_rank_triple(const RankTriple& rt, int n) {
    if (!(1 <= rt.t && rt.t <= rt.r && rt.t <= rt.s && rt.r <= n && rt.s <= n &&
          rt.t > rt.r + rt.s - n))
        throw std::invalid_argument("RankTriple: need 1 <= t <= r,s <= n and t > r+s-n");
}

Permutation make_bigrassmannian(const RankTriple& rt, int n) {
    check_rank_triple(rt, n);
    std::vector<int> w;
    w.reserve(n);
    for (int v = 1; v <= rt.t - 1; ++v) w.push_back(v);
    for (int v = rt.s + 1; v <= rt.s + rt.r - rt.t + 1; ++v) w.push_back(v);
    for (int v = rt.t; v <= rt.s; ++v) w.push_back(v);
    for (int v = rt.s + rt.r - rt.t + 2; v <= n; ++v) w.push_back(v);
    return Permutation(std::move(w));
}

RankTriple bigrassmannian_params(const Permutation& v) {
    GrassmannianClass cls = classify_grassmannian(v);
    if (!cls.bigrassmannian || !cls.descent_index)
        throw std::invalid_argument("bigrassmannian_params: not a non-identity bigrassmannian");
    RankTriple rt;
    rt.r = *cls.descent_index;
    rt.s = v.inverse().descents()[0];
    rt.t = v.inverse()(rt.s + 1);  // position of the value s+1
    if (make_bigrassmannian(rt, v.n()) != v)
        throw std::logic_error("bigrassmannian_params: parameter recovery failed");
    return rt;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Permutation> all_bigrassmannians(int n) {
    std::vector<Permutation> out;
    for (int r = 1; r < n; ++r)
        for (int s = 1; s < n; ++s)
            for (int t = std::max(1, r + s - n + 1); t <= std::min(r, s); ++t)
                out.push_back(make_bigrassmannian({r, s, t}, n));
    return out;
}

std::vector<Permutation> essential_set(const Permutation& w) {
    std::vector<Permutation> candidates;
    for (const Permutation& v : all_bigrassmannians(w.n()))
        if (!bruhat_leq(v, w)) candidates.push_back(v);
    std::vector<Permutation> minimal;
    for (const Permutation& v : candidates) {
        bool is_min = true;
        for (const Permutation& c : candidates)
            if (c != v && bruhat_leq(c, v)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(v);
    }
    return minimal;  // already (r,s,t)-ordered by construction
}

Permutation dissector_complement_max(const Permutation& v) {
    int n = v.n();
    if (n > 8) throw std::invalid_argument("dissector_complement_max: brute force capped at n = 8");
    if (!classify_grassmannian(v).bigrassmannian || v == Permutation::identity(n))
        throw std::invalid_argument("dissector_complement_max: need a non-identity bigrassmannian");
    std::vector<Permutation> not_above;
    for (const Permutation& u : all_permutations(n))
        if (!bruhat_leq(v, u)) not_above.push_back(u);
    int top = -1;
    for (const Permutation& u : not_above) top = std::max(top, u.length());
    std::vector<Permutation> longest;
    for (const Permutation& u : not_above)
        if (u.length() == top) longest.push_back(u);
    if (longest.size() != 1)
        throw std::logic_error("dissector_complement_max: maximum is not unique");
    for (const Permutation& u : not_above)
        if (!bruhat_leq(u, longest[0]))
            throw std::logic_error("dissector_complement_max: maximum does not dominate");
    return longest[0];
}

Permutation dissector_complement_formula(const RankTriple& rt, int n) {
    check_rank_triple(rt, n);
    std::vector<int> w;
    w.reserve(n);
    for (int v = n; v >= n - rt.r + rt.t + 1; --v) w.push_back(v);
    for (int v = rt.s; v >= rt.s - rt.t + 1; --v) w.push_back(v);
    for (int v = n - rt.r + rt.t; v >= rt.s + 1; --v) w.push_back(v);
    for (int v = rt.s - rt.t; v >= 1; --v) w.push_back(v);
    return Permutation(std::move(w));
}

std::vector<std::vector<bool>> fulton_diagram(const Permutation& w) {
    int n = w.n();
    std::vector<std::vector<bool>> bubble(n, std::vector<bool>(n, true));
    for (int i = 1; i <= n; ++i) {
        int j = w(i);
        for (int ii = i; ii <= n; ++ii) bubble[ii - 1][j - 1] = false;  // weakly below
        for (int jj = 1; jj <= j; ++jj) bubble[i - 1][jj - 1] = false;  // weakly left
    }
    return bubble;
}

int fulton_diagram_size(const Permutation& w) {
    int count = 0;
    for (const auto& row : fulton_diagram(w))
        for (bool b : row) count += b;
    return count;
}

std::vector<FultonCell> fulton_essential(const Permutation& w) {
    int n = w.n();
    std::vector<std::vector<bool>> bubble = fulton_diagram(w);
    std::vector<FultonCell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!bubble[i - 1][j - 1]) continue;
            bool below = i < n && bubble[i][j - 1];
            bool left = j > 1 && bubble[i - 1][j - 2];
            if (below || left) continue;
            int t = 0;
            for (int ii = 1; ii <= i; ++ii) t += bubble[ii - 1][j - 1];
            cells.push_back({i, j, t});
        }
    return cells;  // (row, col) order by construction
}

Permutation fulton_cell_bigrassmannian(const FultonCell& cell, int n) {
    return make_bigrassmannian({cell.row, cell.col - 1, cell.t}, n);
}

static void check_reflection_subset(int n, const std::vector<int>& J) {
    for (int j : J)
        if (j < 1 || j >= n) throw std::invalid_argument("parabolic: J must be a subset of {1..n-1}");
}

CosetFactorization parabolic_cosets(const Permutation& w, const std::vector<int>& J) {
    int n = w.n();
    check_reflection_subset(n, J);
    std::vector<bool> in_J(n, false);
    for (int j : J) in_J[j] = true;
    Permutation u = w, x = Permutation::identity(n);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i < n; ++i) {
            if (in_J[i] && u(i) > u(i + 1)) {
                u = u.right_s(i);
                x = Permutation::identity(n).right_s(i) * x;
                moved = true;
                break;
            }
        }
    }
    Permutation w0J = longest_in_parabolic(n, J);
    return {u, x, u, u * w0J};
}

Permutation longest_in_parabolic(int n, const std::vector<int>& J) {
    check_reflection_subset(n, J);
    std::vector<bool> in_J(n, false);
    for (int j : J) in_J[j] = true;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    // Reverse each maximal run of consecutive indices in J (block on positions a..b+1).
    int i = 1;
    while (i < n) {
        if (!in_J[i]) {
            ++i;
            continue;
        }
        int a = i;
        while (i < n && in_J[i]) ++i;
        std::reverse(w.begin() + (a - 1), w.begin() + i);
    }
    return Permutation(std::move(w));
}

std::vector<Permutation> parabolic_subgroup(int n, const std::vector<int>& J) {
    Permutation w0J = longest_in_parabolic(n, J);
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(n))
        if (bruhat_leq(w, w0J)) out.push_back(w);
    return out;
}

std::vector<Permutation> min_length_reps(int n, const std::vector<int>& J) {
    check_reflection_subset(n, J);
    std::vector<bool> in_J(n, false);
    for (int j : J) in_J[j] = true;
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(n)) {
        bool ok = true;
        for (int d : w.descents())
            if (in_J[d]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

Partition grassmannian_to_partition(const Permutation& w, int r) {
    if (r < 1 || r >= w.n()) throw std::invalid_argument("grassmannian_to_partition: bad descent");
    std::vector<int> des = w.descents();
    if (!(des.empty() || (des.size() == 1 && des[0] == r)))
        throw std::invalid_argument("grassmannian_to_partition: w is not r-grassmannian");
    std::vector<int> parts;
    for (int k = r; k >= 1; --k) parts.push_back(w(k) - k);
    return Partition(std::move(parts));
}

Permutation partition_to_grassmannian(const Partition& lambda, int r, int n) {
    if (r < 1 || r >= n) throw std::invalid_argument("partition_to_grassmannian: bad descent");
    if (!lambda.fits_in_box(r, n - r))
        throw std::invalid_argument("partition_to_grassmannian: shape outside the box");
    std::vector<int> word(n, 0);
    std::vector<bool> used(n + 1, false);
    for (int k = 1; k <= r; ++k) {
        word[k - 1] = lambda.part(r - k + 1) + k;
        used[word[k - 1]] = true;
    }
    int next = 1;
    for (int k = r + 1; k <= n; ++k) {
        while (used[next]) ++next;
        word[k - 1] = next;
        used[next] = true;
    }
    return Permutation(std::move(word));
}

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
    int n = w.n(), k = pattern.n();
    if (k > n) return false;
    std::vector<int> idx(k);
    // Iterate over k-subsets of positions in lexicographic order.
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool match = true;
        for (int a = 0; a < k && match; ++a)
            for (int b = a + 1; b < k && match; ++b)
                if ((w.word()[idx[a]] < w.word()[idx[b]]) != (pattern.word()[a] < pattern.word()[b]))
                    match = false;
        if (match) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
}

PatternClass pattern_class(const Permutation& w) {
    auto avoids_all = [&](const std::vector<std::string>& patterns) {
        for (const std::string& p : patterns)
            if (contains_pattern(w, Permutation::parse(p))) return false;
        return true;
    };
    PatternClass out;
    out.defined_by_inclusions = avoids_all({"4231", "35142", "42513", "351624"});
    out.smooth = avoids_all({"3412", "4231"});
    return out;
}

}  // namespace schubert
