#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "schubert/permutations.hpp"

using namespace schubert;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

/* Independent Bruhat oracle: the lower interval of w is the set of products
 * of all subsequences of one fixed reduced word of w. */
std::set<Permutation> subword_closure(const Permutation& w) {
    std::set<Permutation> below{Permutation::identity(w.n())};
    for (int i : w.reduced_word()) {
        std::set<Permutation> next = below;
        for (const Permutation& p : below) next.insert(p.right_s(i));
        below = std::move(next);
    }
    return below;
}

/* Bit-matrix of the full Bruhat order on S_n; row w = indices of {u : u <= w}. */
struct OrderMatrix {
    std::vector<Permutation> perms;
    std::map<Permutation, int> index;
    int words_per_row;
    std::vector<std::vector<uint64_t>> below;

    explicit OrderMatrix(int n) : perms(all_permutations(n)) {
        int N = int(perms.size());
        for (int i = 0; i < N; ++i) index[perms[i]] = i;
        words_per_row = (N + 63) / 64;
        below.assign(N, std::vector<uint64_t>(words_per_row, 0));
        for (int wi = 0; wi < N; ++wi)
            for (int ui = 0; ui < N; ++ui)
                if (bruhat_leq(perms[ui], perms[wi]))
                    below[wi][ui / 64] |= uint64_t(1) << (ui % 64);
    }
    bool leq(int ui, int wi) const { return (below[wi][ui / 64] >> (ui % 64)) & 1; }
};

/* Brute-force essential set: minimal elements of the complement of the lower
 * interval, scanning the whole group. */
std::set<Permutation> brute_essential(const OrderMatrix& M, int wi) {
    int N = int(M.perms.size());
    std::vector<uint64_t> outside(M.words_per_row, 0);
    for (int u = 0; u < N; ++u)
        if (!M.leq(u, wi)) outside[u / 64] |= uint64_t(1) << (u % 64);
    std::set<Permutation> minimal;
    for (int u = 0; u < N; ++u) {
        if (M.leq(u, wi)) continue;
        // u is minimal iff the only non-below element weakly below it is u itself.
        int popcount = 0;
        for (int b = 0; b < M.words_per_row; ++b)
            popcount += __builtin_popcountll(outside[b] & M.below[u][b]);
        if (popcount == 1) minimal.insert(M.perms[u]);
    }
    return minimal;
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) {
    return std::set<Permutation>(v.begin(), v.end());
}

}  // namespace

TEST_SUITE("permutations") {

TEST_CASE("one-line basics") {
    Permutation w = P("425163");
    CHECK(w.length() == 7);
    CHECK(w.descents() == std::vector<int>{1, 3, 5});
    CHECK(w.inverse() * w == Permutation::identity(6));
    CHECK(Permutation::identity(5).length() == 0);
    CHECK(Permutation::identity(5).descents().empty());
    CHECK(Permutation::longest(6).length() == 15);
    CHECK_THROWS(Permutation({1, 1, 2}));
    CHECK_THROWS(Permutation({0, 1}));
}

TEST_CASE("serialization") {
    CHECK(P("425163").str() == "425163");
    CHECK(P("3,1,2") == P("312"));
    Permutation big = Permutation::parse("10,2,3,4,5,6,7,8,9,1");
    CHECK(big.n() == 10);
    CHECK(big.str() == "10,2,3,4,5,6,7,8,9,1");
    CHECK(Permutation::parse(big.str()) == big);
    CHECK_THROWS(Permutation::parse("4250"));
}

TEST_CASE("products and reduced words") {
    CHECK(P("312") * P("231") == Permutation::identity(3));
    CHECK(P("213").right_s(2) == P("231"));
    CHECK(P("213").left_s(2) == P("312"));
    for (const Permutation& w : all_permutations(5)) {
        std::vector<int> word = w.reduced_word();
        CHECK(int(word.size()) == w.length());
        Permutation prod = Permutation::identity(5);
        for (int i : word) prod = prod.right_s(i);
        CHECK(prod == w);
    }
}

TEST_CASE("rank function") {
    CHECK(rank_function(P("425163"), 2, 4) == 2);
    CHECK(rank_function(P("425163"), 2, 2) == 1);
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s)
            CHECK(rank_function(Permutation::identity(4), r, s) == std::min(r, s));
    CHECK_THROWS(rank_function(P("321"), 0, 1));
    CHECK_THROWS(rank_function(P("321"), 1, 4));
}

TEST_CASE("bruhat comparison: pinned values") {
    CHECK(!bruhat_leq(P("1324"), P("1243")));
    CHECK(bruhat_leq(P("132"), P("231")));
    for (const Permutation& w : all_permutations(4)) {
        CHECK(bruhat_leq(Permutation::identity(4), w));
        CHECK(bruhat_leq(w, w));
        CHECK(bruhat_leq(w, Permutation::longest(4)));
    }
}

TEST_CASE("bruhat comparison agrees with the subword oracle, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<Permutation> perms = all_permutations(n);
        for (const Permutation& w : perms) {
            std::set<Permutation> below = subword_closure(w);
            for (const Permutation& u : perms)
                CHECK(bruhat_leq(u, w) == (below.count(u) > 0));
        }
    }
}

TEST_CASE("grassmannian classification") {
    GrassmannianClass c = classify_grassmannian(P("341256"));
    CHECK(c.grassmannian);
    CHECK(c.bigrassmannian);
    CHECK(c.descent_index == 2);
    GrassmannianClass id = classify_grassmannian(Permutation::identity(4));
    CHECK(id.grassmannian);
    CHECK(id.bigrassmannian);
    CHECK(!id.descent_index.has_value());
    CHECK(!classify_grassmannian(P("321")).grassmannian);
    // 2413 is grassmannian but its inverse 3142 has two descents.
    CHECK(classify_grassmannian(P("2413")).grassmannian);
    CHECK(!classify_grassmannian(P("2413")).bigrassmannian);
}

TEST_CASE("bigrassmannian construction: pinned words") {
    CHECK(make_bigrassmannian({2, 2, 1}, 6) == P("341256"));
    CHECK(make_bigrassmannian({2, 4, 2}, 6) == P("152346"));
    CHECK(make_bigrassmannian({4, 2, 2}, 6) == P("134526"));
    CHECK(make_bigrassmannian({4, 5, 4}, 6) == P("123645"));
    CHECK(make_bigrassmannian({2, 2, 2}, 4) == P("1324"));
    CHECK(make_bigrassmannian({3, 3, 3}, 4) == P("1243"));
    CHECK_THROWS(make_bigrassmannian({2, 3, 1}, 4));  // t must exceed r+s-n
    CHECK_THROWS(make_bigrassmannian({2, 2, 3}, 6));
}

TEST_CASE("bigrassmannian postconditions and rank criterion, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<Permutation> perms = all_permutations(n);
        std::set<Permutation> seen;
        for (int r = 1; r < n; ++r)
            for (int s = 1; s < n; ++s)
                for (int t = std::max(1, r + s - n + 1); t <= std::min(r, s); ++t) {
                    Permutation v = make_bigrassmannian({r, s, t}, n);
                    CHECK(v.descents() == std::vector<int>{r});
                    CHECK(v.inverse().descents() == std::vector<int>{s});
                    CHECK(v(t) == s + 1);
                    CHECK(rank_function(v, r, s) == t - 1);
                    RankTriple back = bigrassmannian_params(v);
                    CHECK(back == RankTriple{r, s, t});
                    CHECK(seen.insert(v).second);  // distinct parameters, distinct words
                    // v encodes the failure of C_{r,s,t}: v not<= w iff t_{r,s}(w) >= t.
                    for (const Permutation& w : perms)
                        CHECK((rank_function(w, r, s) >= t) == !bruhat_leq(v, w));
                }
        // Completeness: the parametrized family is exactly the set of
        // non-identity bigrassmannians.
        std::set<Permutation> listed = as_set(all_bigrassmannians(n));
        CHECK(listed == seen);
        std::set<Permutation> direct;
        for (const Permutation& w : perms)
            if (classify_grassmannian(w).bigrassmannian && w != Permutation::identity(n))
                direct.insert(w);
        CHECK(listed == direct);
    }
}

TEST_CASE("essential set: pinned values") {
    CHECK(essential_set(P("425163")) ==
          std::vector<Permutation>{P("341256"), P("152346"), P("134526"), P("123645")});
    CHECK(essential_set(P("1243")) == std::vector<Permutation>{P("2134"), P("1324")});
    CHECK(essential_set(P("23541")) == std::vector<Permutation>{P("31245"), P("14235")});
    CHECK(essential_set(Permutation::longest(5)).empty());
    // E(identity) consists of the atoms s_1..s_{n-1}.
    std::set<Permutation> atoms;
    for (int i = 1; i < 5; ++i) atoms.insert(Permutation::identity(5).right_s(i));
    CHECK(as_set(essential_set(Permutation::identity(5))) == atoms);
}

TEST_CASE("essential set equals brute-force minimal non-below set, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        OrderMatrix M(n);
        for (int wi = 0; wi < int(M.perms.size()); ++wi) {
            std::vector<Permutation> fast = essential_set(M.perms[wi]);
            CHECK(as_set(fast) == brute_essential(M, wi));
            for (const Permutation& v : fast) CHECK(classify_grassmannian(v).bigrassmannian);
        }
    }
}

TEST_CASE("complement maximum of a bigrassmannian") {
    CHECK(dissector_complement_max(P("2134")) == P("1432"));
    CHECK(dissector_complement_max(P("21")) == P("12"));
    CHECK(dissector_complement_max(P("1324")) == P("2143"));
    CHECK(dissector_complement_max(P("3412")) == P("4231"));
    // 321 is not bigrassmannian; its complement has two maximal elements.
    CHECK_THROWS(dissector_complement_max(P("321")));
}

TEST_CASE("complement maximum: dissector property, closed form, E(w)={v}, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<Permutation> perms = all_permutations(n);
        for (const Permutation& v : all_bigrassmannians(n)) {
            Permutation w = dissector_complement_max(v);
            CHECK(w == dissector_complement_formula(bigrassmannian_params(v), n));
            CHECK(essential_set(w) == std::vector<Permutation>{v});
            // The group splits as (filter above v) disjoint-union (ideal below w).
            for (const Permutation& u : perms)
                CHECK(bruhat_leq(v, u) != bruhat_leq(u, w));
        }
    }
}

TEST_CASE("fulton diagram: pinned example") {
    Permutation w = P("425163");
    CHECK(fulton_diagram_size(w) == (Permutation::longest(6) * w).length());
    std::vector<FultonCell> cells = fulton_essential(w);
    CHECK(cells == std::vector<FultonCell>{{2, 3, 1}, {2, 5, 2}, {4, 3, 2}, {4, 6, 4}});
    std::vector<Permutation> image;
    for (const FultonCell& c : cells) image.push_back(fulton_cell_bigrassmannian(c, 6));
    CHECK(image == std::vector<Permutation>{P("341256"), P("152346"), P("134526"), P("123645")});
}

TEST_CASE("fulton diagram: degenerate cases") {
    CHECK(fulton_diagram_size(Permutation::longest(5)) == 0);
    CHECK(fulton_essential(Permutation::longest(5)).empty());
    for (int n = 2; n <= 6; ++n) {
        CHECK(fulton_diagram_size(Permutation::identity(n)) == n * (n - 1) / 2);
        CHECK(int(fulton_essential(Permutation::identity(n)).size()) == n - 1);
    }
}

TEST_CASE("fulton essential cells biject onto the essential set, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const Permutation& w : all_permutations(n)) {
            CHECK(fulton_diagram_size(w) == (Permutation::longest(n) * w).length());
            std::vector<Permutation> image;
            for (const FultonCell& c : fulton_essential(w))
                image.push_back(fulton_cell_bigrassmannian(c, n));
            CHECK(image == essential_set(w));  // same (row,col) = (r,s+1) order
        }
}

TEST_CASE("parabolic factorization: pinned values") {
    CosetFactorization f = parabolic_cosets(P("312"), {1});
    CHECK(f.u == P("132"));
    CHECK(f.x == P("213"));
    CosetFactorization g = parabolic_cosets(P("213"), {2});
    CHECK(g.w_max == P("231"));
    CHECK(g.w_min == P("213"));
    CosetFactorization h = parabolic_cosets(P("4231"), {});
    CHECK(h.u == P("4231"));
    CHECK(h.x == Permutation::identity(4));
    CHECK(longest_in_parabolic(4, {1, 3}) == P("2143"));
    CHECK(longest_in_parabolic(5, {1, 2}) == P("32145"));
}

TEST_CASE("parabolic factorization: exhaustive properties, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> gens(n - 1);
        for (int i = 1; i < n; ++i) gens[i - 1] = i;
        for (uint32_t mask = 0; mask < (uint32_t(1) << (n - 1)); ++mask) {
            std::vector<int> J;
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) J.push_back(i);
            std::set<Permutation> WJ = as_set(parabolic_subgroup(n, J));
            std::set<Permutation> reps = as_set(min_length_reps(n, J));
            for (const Permutation& w : all_permutations(n)) {
                CosetFactorization f = parabolic_cosets(w, J);
                CHECK(f.u * f.x == w);
                CHECK(f.u.length() + f.x.length() == w.length());
                CHECK(reps.count(f.u) == 1);
                CHECK(WJ.count(f.x) == 1);
                CHECK(f.w_max == f.u * longest_in_parabolic(n, J));
                // Bruhat comparison against a coset is representative-free on W^J.
                for (const Permutation& u : reps)
                    CHECK(bruhat_leq(u, f.w_max) == bruhat_leq(u, f.w_min));
            }
        }
    }
}

TEST_CASE("grassmannian permutation to partition") {
    CHECK(grassmannian_to_partition(P("1324"), 2) == Partition({1}));
    CHECK(grassmannian_to_partition(P("341256"), 2) == Partition({2, 2}));
    CHECK(grassmannian_to_partition(Permutation::identity(5), 3) == Partition());
    CHECK(grassmannian_to_partition(P("2413"), 2) == Partition({2, 1}));
    CHECK_THROWS(grassmannian_to_partition(P("1324"), 3));
    CHECK_THROWS(grassmannian_to_partition(P("321"), 1));
    // lambda determines the r-grassmannian permutation: check the box bound
    // and round trip over all grassmannians in S_6.
    for (const Permutation& w : all_permutations(6)) {
        std::vector<int> des = w.descents();
        if (des.size() > 1) continue;
        for (int r = 1; r < 6; ++r) {
            if (des.size() == 1 && des[0] != r) continue;
            Partition lam = grassmannian_to_partition(w, r);
            CHECK(lam.fits_in_box(r, 6 - r));
            CHECK(lam.size() == w.length());
        }
    }
}

TEST_CASE("pattern classes") {
    CHECK(contains_pattern(P("4231"), P("4231")));
    CHECK(!contains_pattern(P("1234"), P("21")));
    CHECK(contains_pattern(P("35142"), P("3412")));
    PatternClass a = pattern_class(P("4231"));
    CHECK(!a.defined_by_inclusions);
    CHECK(!a.smooth);
    PatternClass b = pattern_class(P("1234"));
    CHECK(b.defined_by_inclusions);
    CHECK(b.smooth);
    PatternClass c = pattern_class(P("3412"));
    CHECK(c.defined_by_inclusions);
    CHECK(!c.smooth);
    PatternClass d = pattern_class(P("35142"));
    CHECK(!d.defined_by_inclusions);
    CHECK(!d.smooth);  // 35142 contains 3412
    // Smoothness implies defined-by-inclusions on all of S_6 (the smooth
    // pattern list is a subset of the inclusions list plus 3412, and 35142,
    // 42513, 351624 each contain 3412).
    for (const Permutation& w : all_permutations(6)) {
        PatternClass pc = pattern_class(w);
        if (pc.smooth) CHECK(pc.defined_by_inclusions);
    }
}

}  // TEST_SUITE
