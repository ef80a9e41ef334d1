#include <doctest.h>

#include <random>
#include <vector>

#include "schubert/lattice.hpp"

using namespace schubert;

namespace {

IntMatrix M(std::vector<std::vector<int>> rows) {
    IntMatrix out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

IntVector V(std::vector<int> v) { return IntVector(v.begin(), v.end()); }

Int det(const IntMatrix& m) {
    int n = int(m.size());
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int total = 0;
    for (int c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        IntMatrix minor;
        for (int r = 1; r < n; ++r) {
            IntVector row;
            for (int k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Int term = m[0][c] * det(minor);
        total += c % 2 == 0 ? term : -term;
    }
    return total;
}

// Random integer row operations: these preserve the row lattice.
void shuffle_rows(IntMatrix& m, std::mt19937& gen) {
    if (m.size() < 2) return;
    std::uniform_int_distribution<int> pick(0, int(m.size()) - 1), coef(-3, 3);
    for (int step = 0; step < 30; ++step) {
        int a = pick(gen), b = pick(gen);
        if (a == b) {
            for (Int& x : m[a]) x = -x;
            continue;
        }
        Int c = coef(gen);
        for (size_t k = 0; k < m[a].size(); ++k) m[a][k] += c * m[b][k];
    }
}

IntMatrix random_matrix(std::mt19937& gen, int rows, int cols) {
    std::uniform_int_distribution<int> entry(-5, 5);
    IntMatrix m(rows, IntVector(cols));
    for (auto& r : m)
        for (Int& x : r) x = entry(gen);
    return m;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("hermite form: pinned values") {
    CHECK(hermite_normal_form(M({{2, 4}, {6, 8}})) == M({{2, 0}, {0, 4}}));
    CHECK(hermite_normal_form(M({{1, 0}, {0, 1}})) == M({{1, 0}, {0, 1}}));
    CHECK(hermite_normal_form(M({{0, 0}, {0, 0}})).empty());
    CHECK(hermite_normal_form(M({{-3}})) == M({{3}}));
    CHECK(hermite_normal_form(M({{0, 5}, {3, 1}})) == M({{3, 1}, {0, 5}}));
    // Dependent rows collapse.
    CHECK(hermite_normal_form(M({{1, 2}, {2, 4}, {3, 6}})) == M({{1, 2}}));
    CHECK(hermite_normal_form(IntMatrix{}).empty());
    CHECK_THROWS(hermite_normal_form(M({{1, 2}, {1}})));
}

TEST_CASE("hermite form is a lattice invariant") {
    std::mt19937 gen(777);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(gen, 3 + trial % 3, 4);
        IntMatrix reference = hermite_normal_form(m);
        IntMatrix other = m;
        shuffle_rows(other, gen);
        CHECK(hermite_normal_form(other) == reference);
        // Pivot data: increasing pivot columns, positive pivots, reduced
        // entries above.
        int last = -1;
        for (size_t r = 0; r < reference.size(); ++r) {
            int c = 0;
            while (reference[r][c] == 0) ++c;
            CHECK(c > last);
            last = c;
            CHECK(reference[r][c] > 0);
            for (size_t rr = 0; rr < r; ++rr) {
                CHECK(reference[rr][c] >= 0);
                CHECK(reference[rr][c] < reference[r][c]);
            }
        }
    }
}

TEST_CASE("membership and coordinates") {
    IntMatrix basis = hermite_normal_form(M({{2, 0, 1}, {0, 3, 1}}));
    CHECK(lattice_contains(basis, V({2, 0, 1})));
    CHECK(lattice_contains(basis, V({2, 3, 2})));
    CHECK(lattice_contains(basis, V({-2, 3, 0})));
    CHECK(!lattice_contains(basis, V({1, 0, 0})));
    CHECK(!lattice_contains(basis, V({0, 0, 1})));
    CHECK(lattice_contains(basis, V({0, 0, 0})));
    std::mt19937 gen(4242);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = hermite_normal_form(random_matrix(gen, 3, 5));
        IntVector v(5, 0);
        IntVector expect;
        for (const IntVector& row : m) {
            Int c = coef(gen);
            expect.push_back(c);
            for (int k = 0; k < 5; ++k) v[k] += c * row[k];
        }
        CHECK(lattice_contains(m, v));
        CHECK(express_in_basis(m, v) == expect);
        if (!m.empty()) {
            IntVector off = v;
            off[4] += 1;
            if (!lattice_contains(m, off)) CHECK_THROWS(express_in_basis(m, off));
        }
    }
}

TEST_CASE("smith invariant factors: pinned values") {
    CHECK(smith_invariant_factors(M({{2, 0}, {0, 4}})) == std::vector<Int>{2, 4});
    CHECK(smith_invariant_factors(M({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
    CHECK(smith_invariant_factors(M({{2, 4}, {6, 8}})) == std::vector<Int>{2, 4});
    CHECK(smith_invariant_factors(M({{1, 2}, {3, 4}})) == std::vector<Int>{1, 2});
    CHECK(smith_invariant_factors(M({{0, 0}, {0, 0}})).empty());
    CHECK(smith_invariant_factors(M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
          std::vector<Int>{1, 1, 1});
    CHECK(smith_invariant_factors(M({{6}})) == std::vector<Int>{6});
    CHECK(smith_invariant_factors(M({{4, 2}})) == std::vector<Int>{2});
}

TEST_CASE("smith form properties") {
    std::mt19937 gen(5150);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(gen, 3, 3);
        std::vector<Int> f = smith_invariant_factors(m);
        for (size_t i = 0; i + 1 < f.size(); ++i) {
            CHECK(f[i] > 0);
            CHECK(f[i + 1] % f[i] == 0);
        }
        Int d = det(m);
        if (d != 0) {
            REQUIRE(f.size() == 3);
            CHECK(f[0] * f[1] * f[2] == abs(d));
        } else {
            CHECK(f.size() < 3);
        }
        // Row operations and transposition both preserve the factors.
        IntMatrix other = m;
        shuffle_rows(other, gen);
        CHECK(smith_invariant_factors(other) == f);
        IntMatrix t(3, IntVector(3));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t[c][r] = m[r][c];
        CHECK(smith_invariant_factors(t) == f);
    }
}

}  // TEST_SUITE
