#include <doctest.h>

#include <algorithm>

#include "schubert/numeric.hpp"
#include "schubert/partitions.hpp"

using namespace schubert;

namespace {
std::vector<std::string> strs(const std::vector<Partition>& v) {
    std::vector<std::string> out;
    for (const Partition& p : v) out.push_back(p.str());
    return out;
}
}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("construction and serialization") {
    CHECK(Partition({2, 2, 1}).str() == "[2,2,1]");
    CHECK(Partition({3, 1, 0, 0}).str() == "[3,1]");
    CHECK(Partition().str() == "[]");
    CHECK(Partition::parse("[2,2,1]") == Partition({2, 2, 1}));
    CHECK(Partition::parse("2,2,1") == Partition({2, 2, 1}));
    CHECK(Partition::parse("[]") == Partition());
    CHECK(Partition({4, 2, 1}).size() == 7);
    CHECK(Partition({4, 2, 1}).rows() == 3);
    CHECK(Partition({4, 2, 1}).part(2) == 2);
    CHECK(Partition({4, 2, 1}).part(9) == 0);
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("conjugate is an involution and transposes the diagram") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    CHECK(Partition({1, 1, 1}).conjugate() == Partition({3}));
    for (const Partition& p : partitions_of(8)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
    }
}

TEST_CASE("containment and boxes") {
    CHECK(Partition({2, 2}).contains(Partition({1})));
    CHECK(!Partition({1, 1, 1}).contains(Partition({2})));
    CHECK(Partition({2, 2}).fits_in_box(2, 2));
    CHECK(!Partition({3}).fits_in_box(2, 2));
    CHECK(!Partition({1, 1, 1}).fits_in_box(2, 4));
    CHECK(Partition::rectangle(2, 3) == Partition({3, 3}));
    CHECK(Partition::rectangle(0, 5) == Partition());
}

TEST_CASE("canonical order: by degree, then dominance-refining lex") {
    CHECK(canonical_less(Partition({1}), Partition({2})));
    CHECK(canonical_less(Partition({2}), Partition({1, 1})));
    CHECK(canonical_less(Partition({3, 1}), Partition({2, 2})));
    CHECK(!canonical_less(Partition({2, 2}), Partition({3, 1})));
    // Within one degree, a dominance-greater shape always sorts first.
    for (const Partition& a : partitions_of(7))
        for (const Partition& b : partitions_of(7))
            if (a != b && dominates(a, b)) CHECK(canonical_less(a, b));
}

TEST_CASE("enumeration") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of_in_box(4, 2, 2).size() == 1);  // only [2,2]
    CHECK(partitions_of_in_box(3, 2, 2) == std::vector<Partition>{Partition({2, 1})});
    CHECK(shape_interval(Partition({1}), Partition({2, 2})).size() == 5);
    CHECK(strs(shape_interval(Partition({1}), Partition({2, 2}))) ==
          std::vector<std::string>{"[1]", "[2]", "[1,1]", "[2,1]", "[2,2]"});
    CHECK(shape_interval(Partition({2}), Partition({1, 1})).empty());
    CHECK(shape_interval(Partition(), Partition()) == std::vector<Partition>{Partition()});
}

TEST_CASE("strip additions") {
    CHECK(strs(add_vertical_strips(Partition({1}), 1)) ==
          std::vector<std::string>{"[2]", "[1,1]"});
    CHECK(strs(add_horizontal_strips(Partition({1, 1}), 2)) ==
          std::vector<std::string>{"[3,1]", "[2,1,1]"});
    CHECK(add_horizontal_strips(Partition({2, 1}), 0) == std::vector<Partition>{Partition({2, 1})});
    // A horizontal strip on nu never has two boxes in one column: verify via
    // conjugates against the vertical version.
    for (const Partition& nu : partitions_of(5))
        for (int k = 0; k <= 3; ++k) {
            auto horiz = add_horizontal_strips(nu, k);
            auto vert = add_vertical_strips(nu.conjugate(), k);
            std::vector<Partition> conj;
            for (const Partition& lam : horiz) conj.push_back(lam.conjugate());
            std::sort(conj.begin(), conj.end(), canonical_less);
            CHECK(conj == vert);
        }
}

TEST_CASE("binomials and gaussian binomials") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(2, 1) == 2);
    CHECK(binomial(1, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(gaussian_binomial(2, 1) == std::vector<Int>{1, 1});
    CHECK(gaussian_binomial(4, 2) == std::vector<Int>{1, 1, 2, 1, 1});
    CHECK(gaussian_binomial(5, 0) == std::vector<Int>{1});
    // Specialization q = 1 recovers the binomial coefficient.
    for (int m = 0; m <= 9; ++m)
        for (int k = 0; k <= m; ++k) {
            Int total = 0;
            for (const Int& c : gaussian_binomial(m, k)) total += c;
            CHECK(total == binomial(m, k));
        }
    // Degree-d coefficient counts partitions of d inside a k x (m-k) box.
    auto g = gaussian_binomial(7, 3);
    for (int d = 0; d < int(g.size()); ++d)
        CHECK(g[d] == Int(partitions_of_in_box(d, 3, 4).size()));
}

}  // TEST_SUITE
