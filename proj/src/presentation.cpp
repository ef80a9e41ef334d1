#include "schubert/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

/* Column labels for one degree of the box quotient. */
std::vector<Partition> box_shapes(int d, int r, int n) {
    return partitions_of_in_box(d, r, n - r);
}

IntVector coordinates(const SchurVector& v, const std::vector<Partition>& shapes) {
    std::map<Partition, int, PartitionOrder> index;
    for (size_t k = 0; k < shapes.size(); ++k) index.emplace(shapes[k], int(k));
    IntVector row(shapes.size(), 0);
    for (const auto& [p, c] : v) {
        auto it = index.find(p);
        if (it == index.end()) throw std::logic_error("shape outside the quotient box");
        row[it->second] = c;
    }
    return row;
}

SchurVector from_coordinates(const IntVector& row, const std::vector<Partition>& shapes) {
    SchurVector out;
    for (size_t k = 0; k < shapes.size(); ++k)
        if (row[k] != 0) out.emplace(shapes[k], static_cast<long long>(row[k]));
    return out;
}

int homogeneous_degree(const SchurVector& v) {
    int d = -1;
    for (const auto& [p, c] : v) {
        if (d < 0) d = p.size();
        else if (p.size() != d)
            throw std::invalid_argument("ideal generators must be homogeneous");
    }
    return d;  // -1 for the zero vector
}

}  // namespace

BigrassmannianData bigrassmannian_data(const Permutation& v) {
    RankTriple rt = bigrassmannian_params(v);  // throws unless bigrassmannian
    BigrassmannianData d;
    d.r = rt.r;
    d.s = rt.s;
    d.t = rt.t;
    d.n = v.n();
    d.i = d.s - d.t + 1;
    d.j = d.r - d.t + 1;
    d.a = std::min(d.n - d.r - d.i, d.r - d.j);
    d.b = std::min(d.i, d.j);
    return d;
}

GenVariant parse_variant(const std::string& name) {
    if (name == "full") return GenVariant::full;
    if (name == "one") return GenVariant::one;
    if (name == "two") return GenVariant::two;
    throw std::invalid_argument("unknown generating-set variant: " + name);
}

std::vector<Partition> gen_set(const Permutation& v, GenVariant variant) {
    BigrassmannianData d = bigrassmannian_data(v);
    Partition lo = Partition::rectangle(d.j, d.i);
    Partition hi;
    switch (variant) {
        case GenVariant::full:
            hi = Partition::rectangle(d.r, d.n - d.r);
            break;
        case GenVariant::one: {
            std::vector<int> parts(d.b, d.i + d.a);
            parts.insert(parts.end(), d.j - d.b, d.i);
            hi = Partition(parts);
            break;
        }
        case GenVariant::two: {
            std::vector<int> parts(d.j, d.i);
            parts.insert(parts.end(), d.a, d.b);
            hi = Partition(parts);
            break;
        }
    }
    return shape_interval(lo, hi);
}

std::vector<Permutation> gen_set_Iw_grassmannian(const Permutation& w) {
    int n = w.n();
    std::vector<Permutation> essential = essential_set(w);
    std::vector<Permutation> out;
    for (const Permutation& u : all_permutations(n)) {
        if (u.descents().size() != 1) continue;
        for (const Permutation& v : essential) {
            if (u.descents() != v.descents()) continue;
            if (!bruhat_leq(v, u)) continue;
            out.push_back(u);
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const Permutation& x, const Permutation& y) {
        if (x.length() != y.length()) return x.length() < y.length();
        return x.word() < y.word();
    });
    return out;
}

std::vector<SchurGenerator> gen_set_Iw_schur(const Permutation& w) {
    std::vector<SchurGenerator> out;
    for (const Permutation& v : essential_set(w)) {
        BigrassmannianData d = bigrassmannian_data(v);
        for (const Partition& p : gen_set(v, GenVariant::one)) out.push_back({p, d.r});
    }
    return out;
}

GradedLattice ideal_graded_span(const std::vector<SchurVector>& gens, int r, int n,
                                int up_to, char kind) {
    if (r < 1 || r >= n) throw std::invalid_argument("ideal_graded_span needs 1 <= r < n");
    if (kind != 'h' && kind != 'e')
        throw std::invalid_argument("ideal_graded_span closure kind must be 'h' or 'e'");
    int top = r * (n - r);
    if (up_to < 0) up_to = top;
    if (up_to > top) throw std::invalid_argument("degree budget exceeded");

    GradedLattice L;
    L.r = r;
    L.n = n;
    L.shapes.resize(up_to + 1);
    L.basis.resize(up_to + 1);
    // Degree-indexed generators; reject anything outside the quotient.
    std::vector<std::vector<SchurVector>> by_degree(up_to + 1);
    for (const SchurVector& g : gens) {
        int d = homogeneous_degree(g);
        if (d < 0) continue;
        for (const auto& [p, c] : g)
            if (!p.fits_in_box(r, n - r))
                throw std::invalid_argument("generator outside the quotient box");
        if (d <= up_to) by_degree[d].push_back(g);
    }
    std::vector<std::vector<SchurVector>> reduced(up_to + 1);
    for (int d = 0; d <= up_to; ++d) {
        L.shapes[d] = box_shapes(d, r, n);
        IntMatrix rows;
        for (const SchurVector& g : by_degree[d]) rows.push_back(coordinates(g, L.shapes[d]));
        for (int k = 1; k <= d; ++k)
            for (const SchurVector& m : reduced[d - k]) {
                SchurVector grown = project_quotient(pieri(kind, k, m), r, n);
                if (!grown.empty()) rows.push_back(coordinates(grown, L.shapes[d]));
            }
        L.basis[d] = hermite_normal_form(rows);
        for (const IntVector& row : L.basis[d])
            reduced[d].push_back(from_coordinates(row, L.shapes[d]));
    }
    return L;
}

bool verify_ideal_equality(const Permutation& v, GenVariant variant) {
    BigrassmannianData d = bigrassmannian_data(v);
    std::vector<SchurVector> gens;
    for (const Partition& p : gen_set(v, variant)) gens.push_back(schur_unit(p));
    GradedLattice span = ideal_graded_span(gens, d.r, d.n);

    Partition rect = Partition::rectangle(d.j, d.i);
    GradedLattice target;
    target.r = d.r;
    target.n = d.n;
    int top = d.r * (d.n - d.r);
    target.shapes.resize(top + 1);
    target.basis.resize(top + 1);
    for (int deg = 0; deg <= top; ++deg) {
        target.shapes[deg] = box_shapes(deg, d.r, d.n);
        IntMatrix rows;
        for (const Partition& mu : target.shapes[deg])
            if (mu.contains(rect)) rows.push_back(coordinates(schur_unit(mu), target.shapes[deg]));
        target.basis[deg] = hermite_normal_form(rows);
    }
    return span == target;
}

GeneratorReport minimal_generators(const std::vector<SchurVector>& gens, int r, int n) {
    GradedLattice M = ideal_graded_span(gens, r, n);
    int top = r * (n - r);
    GeneratorReport report;
    report.counts.assign(top + 1, 0);
    report.torsion.assign(top + 1, {});
    for (int d = 0; d <= top; ++d) {
        const IntMatrix& basis = M.basis[d];
        if (basis.empty()) continue;
        // Rows of the positive-degree part, in coordinates of this basis.
        IntMatrix sub;
        for (int k = 1; k <= d; ++k)
            for (const IntVector& row : M.basis[d - k]) {
                SchurVector grown =
                    project_quotient(pieri('h', k, from_coordinates(row, M.shapes[d - k])), r, n);
                if (grown.empty()) continue;
                sub.push_back(express_in_basis(basis, coordinates(grown, M.shapes[d])));
            }
        std::vector<Int> factors = smith_invariant_factors(sub);
        int rank = int(factors.size());
        int free_part = int(basis.size()) - rank;
        std::vector<Int> nontrivial;
        for (const Int& f : factors)
            if (f > 1) nontrivial.push_back(f);
        report.counts[d] = free_part + int(nontrivial.size());
        report.torsion[d] = nontrivial;
        if (!nontrivial.empty()) report.torsion_free = false;
    }
    for (int c : report.counts) report.total += c;
    std::vector<int> input_profile(top + 1, 0);
    for (const SchurVector& g : gens) {
        int d = homogeneous_degree(g);
        if (d >= 0 && d <= top) ++input_profile[d];
    }
    report.input_minimal = input_profile == report.counts;
    return report;
}

bool degree_genfun_check(const Permutation& v) {
    BigrassmannianData d = bigrassmannian_data(v);
    Int expected_size = binomial(d.a + d.b, d.a);
    std::vector<Int> gauss = gaussian_binomial(d.a + d.b, d.a);
    std::vector<Int> expected_poly(d.i * d.j, 0);  // shift by q^(ij)
    expected_poly.insert(expected_poly.end(), gauss.begin(), gauss.end());
    for (GenVariant variant : {GenVariant::one, GenVariant::two}) {
        std::vector<Partition> set = gen_set(v, variant);
        if (Int(set.size()) != expected_size) return false;
        std::vector<Int> poly;
        for (const Partition& p : set) {
            if (int(poly.size()) <= p.size()) poly.resize(p.size() + 1, 0);
            poly[p.size()] += 1;
        }
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
        std::vector<Int> want = expected_poly;
        while (!want.empty() && want.back() == 0) want.pop_back();
        if (poly != want) return false;
    }
    return true;
}

ConjectureReport verify_minimality_conjecture(int r_max, int k_max) {
    if (r_max < 1 || k_max < 1)
        throw std::invalid_argument("conjecture sweep needs positive bounds");
    ConjectureReport report;
    for (int r = 1; r <= r_max; ++r)
        for (int k = 1; k <= k_max; ++k) {
            int n = r + k;
            for (int s = 1; s <= n - 1; ++s)
                for (int t = std::max(1, r + s - n + 1); t <= std::min(r, s); ++t) {
                    Permutation v = make_bigrassmannian({r, s, t}, n);
                    ++report.bigrassmannians_checked;
                    BigrassmannianData d = bigrassmannian_data(v);
                    if (!degree_genfun_check(v)) {
                        report.failures.push_back("degree profile off for " + v.str());
                        continue;
                    }
                    for (GenVariant variant : {GenVariant::one, GenVariant::two}) {
                        std::vector<SchurVector> gens;
                        for (const Partition& p : gen_set(v, variant))
                            gens.push_back(schur_unit(p));
                        GeneratorReport rep = minimal_generators(gens, d.r, d.n);
                        std::ostringstream label;
                        label << v.str() << " variant "
                              << (variant == GenVariant::one ? "one" : "two");
                        if (!rep.torsion_free)
                            report.failures.push_back("torsion in " + label.str());
                        if (!rep.input_minimal)
                            report.failures.push_back("redundant generator in " + label.str());
                        if (Int(rep.total) != binomial(d.a + d.b, d.a))
                            report.failures.push_back("wrong total for " + label.str());
                    }
                }
        }
    return report;
}

bool verify_inclusion_case(const Permutation& v) {
    BigrassmannianData d = bigrassmannian_data(v);
    if (d.t != d.s) throw std::invalid_argument("inclusion case requires t = s");
    std::vector<Partition> expected;
    for (int m = d.j; m <= d.j + d.a; ++m)
        expected.push_back(Partition(std::vector<int>(m, 1)));
    std::sort(expected.begin(), expected.end(), canonical_less);
    std::vector<Partition> actual = gen_set(v, GenVariant::two);
    std::sort(actual.begin(), actual.end(), canonical_less);
    return actual == expected;
}

ParabolicReport verify_parabolic(const Permutation& w, const std::vector<int>& J) {
    CosetFactorization coset = parabolic_cosets(w, J);
    ParabolicReport report;
    report.w_max = coset.w_max;
    report.essential = essential_set(coset.w_max);
    report.descents_avoid_parabolic = true;
    for (const Permutation& v : report.essential)
        for (int s : v.descents())
            if (std::find(J.begin(), J.end(), s) != J.end())
                report.descents_avoid_parabolic = false;
    report.generators_invariant = true;
    for (const Permutation& u : gen_set_Iw_grassmannian(coset.w_max)) {
        ExactPolynomial f = schubert_polynomial(u);
        for (int s : J)
            if (!divided_difference(f, s).is_zero()) report.generators_invariant = false;
    }
    return report;
}

std::map<Permutation, int> times_x(int p, const Permutation& u) {
    int n = u.n();
    if (p < 1 || p > n) throw std::invalid_argument("times_x: variable index out of range");
    std::map<Permutation, int> out;
    auto moved = [&](int i, int j) {
        std::vector<int> word = u.word();
        std::swap(word[i - 1], word[j - 1]);
        return Permutation(std::move(word));
    };
    for (int j = p + 1; j <= n; ++j) {
        Permutation v = moved(p, j);
        if (v.length() == u.length() + 1) out.emplace(v, 1);
    }
    for (int i = 1; i < p; ++i) {
        Permutation v = moved(i, p);
        if (v.length() == u.length() + 1) out.emplace(v, -1);
    }
    return out;
}

namespace {

/* Classes of the coinvariant algebra grouped by degree, with the degree-one
 * multiplication table in those coordinates. */
struct ClassTable {
    int n = 0, top = 0;
    std::vector<std::vector<Permutation>> by_length;
    std::map<Permutation, int> position;  // index within its length class
    // entry[p-1][d][k]: x_p times class k of degree d, one degree up.
    std::vector<std::vector<std::vector<std::vector<std::pair<int, int>>>>> entry;
};

ClassTable build_class_table(int n) {
    ClassTable T;
    T.n = n;
    T.top = n * (n - 1) / 2;
    T.by_length.resize(T.top + 1);
    for (const Permutation& u : all_permutations(n)) T.by_length[u.length()].push_back(u);
    for (auto& cls : T.by_length) {
        std::sort(cls.begin(), cls.end(),
                  [](const Permutation& x, const Permutation& y) { return x.word() < y.word(); });
        for (size_t k = 0; k < cls.size(); ++k) T.position.emplace(cls[k], int(k));
    }
    T.entry.assign(n, {});
    for (int p = 1; p <= n; ++p) {
        T.entry[p - 1].resize(T.top + 1);
        for (int d = 0; d <= T.top; ++d) {
            T.entry[p - 1][d].resize(T.by_length[d].size());
            for (size_t k = 0; k < T.by_length[d].size(); ++k)
                for (const auto& [v, c] : times_x(p, T.by_length[d][k]))
                    T.entry[p - 1][d][k].push_back({T.position.at(v), c});
        }
    }
    return T;
}

/* Degree-indexed unit rows marking the classes of the given elements. */
std::vector<IntMatrix> unit_seeds(const ClassTable& T, const std::vector<Permutation>& gens) {
    std::vector<IntMatrix> seeds(T.top + 1);
    for (const Permutation& g : gens) {
        int d = g.length();
        IntVector row(T.by_length[d].size(), 0);
        row[T.position.at(g)] = 1;
        seeds[d].push_back(std::move(row));
    }
    return seeds;
}

/* Hermite bases, degree by degree, of the ideal the seed rows generate. */
std::vector<IntMatrix> closure_span(const ClassTable& T, const std::vector<IntMatrix>& seeds) {
    std::vector<IntMatrix> span(T.top + 1);
    for (int d = 0; d <= T.top; ++d) {
        IntMatrix rows = seeds[d];
        if (d > 0)
            for (const IntVector& prev : span[d - 1])
                for (int p = 1; p <= T.n; ++p) {
                    IntVector row(T.by_length[d].size(), 0);
                    bool hit = false;
                    for (size_t k = 0; k < prev.size(); ++k) {
                        if (prev[k] == 0) continue;
                        for (const auto& [dst, c] : T.entry[p - 1][d - 1][k]) {
                            row[dst] += prev[k] * c;
                            hit = true;
                        }
                    }
                    if (hit) rows.push_back(std::move(row));
                }
        span[d] = hermite_normal_form(rows);
    }
    return span;
}

/* Unit rows for the classes of {u : u not<= w} in one degree. */
IntMatrix outside_rows(const ClassTable& T, int d, const Permutation& w) {
    IntMatrix rows;
    for (size_t k = 0; k < T.by_length[d].size(); ++k)
        if (!bruhat_leq(T.by_length[d][k], w)) {
            IntVector row(T.by_length[d].size(), 0);
            row[k] = 1;
            rows.push_back(std::move(row));
        }
    return rows;
}

bool generates_from(const ClassTable& T, const std::vector<IntMatrix>& seeds,
                    const Permutation& w) {
    std::vector<IntMatrix> span = closure_span(T, seeds);
    for (int d = 0; d <= T.top; ++d)
        if (span[d] != hermite_normal_form(outside_rows(T, d, w))) return false;
    return true;
}

}  // namespace

bool verify_Iw_generates(const Permutation& w) {
    ClassTable T = build_class_table(w.n());
    return generates_from(T, unit_seeds(T, gen_set_Iw_grassmannian(w)), w);
}

SweepReport verify_Iw_generates_sweep(int n) {
    ClassTable T = build_class_table(n);
    SweepReport report;
    for (const Permutation& w : all_permutations(n)) {
        ++report.checked;
        if (!generates_from(T, unit_seeds(T, gen_set_Iw_grassmannian(w)), w))
            report.failures.push_back(w.str());
    }
    return report;
}

GeneratorReport minimal_generators_Iw(const Permutation& w) {
    int n = w.n();
    ClassTable T = build_class_table(n);
    std::vector<IntMatrix> seeds(T.top + 1);
    std::vector<int> profile(T.top + 1, 0);
    for (const SchurGenerator& g : gen_set_Iw_schur(w)) {
        Permutation u = partition_to_grassmannian(g.shape, g.descent, n);
        int d = u.length();
        IntVector row(T.by_length[d].size(), 0);
        row[T.position.at(u)] = 1;
        seeds[d].push_back(std::move(row));
        ++profile[d];
    }
    std::vector<IntMatrix> span = closure_span(T, seeds);
    for (int d = 0; d <= T.top; ++d)
        if (span[d] != hermite_normal_form(outside_rows(T, d, w)))
            throw std::logic_error("generating set fails to span the vanishing ideal");

    GeneratorReport report;
    report.counts.assign(T.top + 1, 0);
    report.torsion.assign(T.top + 1, {});
    for (int d = 0; d <= T.top; ++d) {
        const IntMatrix& basis = span[d];
        if (basis.empty()) continue;
        IntMatrix sub;  // the positive-degree multiples, in basis coordinates
        if (d > 0)
            for (const IntVector& prev : span[d - 1])
                for (int p = 1; p <= n; ++p) {
                    IntVector row(T.by_length[d].size(), 0);
                    bool hit = false;
                    for (size_t k = 0; k < prev.size(); ++k) {
                        if (prev[k] == 0) continue;
                        for (const auto& [dst, c] : T.entry[p - 1][d - 1][k]) {
                            row[dst] += prev[k] * c;
                            hit = true;
                        }
                    }
                    if (hit) sub.push_back(express_in_basis(basis, row));
                }
        std::vector<Int> factors = smith_invariant_factors(sub);
        int free_part = int(basis.size()) - int(factors.size());
        std::vector<Int> nontrivial;
        for (const Int& f : factors)
            if (f > 1) nontrivial.push_back(f);
        report.counts[d] = free_part + int(nontrivial.size());
        report.torsion[d] = nontrivial;
        if (!nontrivial.empty()) report.torsion_free = false;
    }
    for (int c : report.counts) report.total += c;
    report.input_minimal = profile == report.counts;
    return report;
}

namespace {

/* The same tables over the rationals for a finite reflection group, built
 * from the rational Schubert representatives. */
struct GeneralClassTable {
    const CoxeterGroup* G = nullptr;
    int top = 0;
    std::vector<std::vector<SignedWord>> by_length;
    std::map<SignedWord, int> position;  // index within its length class
    std::vector<std::vector<std::vector<std::vector<std::pair<int, Rat>>>>> entry;
};

GeneralClassTable build_general_table(const CoxeterGroup& G) {
    GeneralClassTable T;
    T.G = &G;
    T.top = G.length(G.longest_element());
    T.by_length.resize(T.top + 1);
    for (const SignedWord& u : G.elements()) T.by_length[G.length(u)].push_back(u);
    for (auto& cls : T.by_length)
        for (size_t k = 0; k < cls.size(); ++k) T.position.emplace(cls[k], int(k));
    int dim = G.dim();
    T.entry.assign(dim, {});
    for (int p = 1; p <= dim; ++p) {
        T.entry[p - 1].resize(T.top + 1);
        for (int d = 0; d <= T.top; ++d) T.entry[p - 1][d].resize(T.by_length[d].size());
    }
    for (int d = 0; d < T.top; ++d)
        for (size_t k = 0; k < T.by_length[d].size(); ++k) {
            ExactPolynomial s = hiller_schubert(G, T.by_length[d][k]);
            for (int p = 1; p <= dim; ++p) {
                ExactPolynomial f = ExactPolynomial::variable(dim, p) * s;
                for (const auto& [v, c] : coinvariant_expand(G, f))
                    T.entry[p - 1][d][k].push_back({T.position.at(v), c});
            }
        }
    return T;
}

/* Scale a rational row to integers by the common denominator. */
IntVector scaled_row(const std::vector<Rat>& row) {
    Int lcm_den = 1;
    for (const Rat& x : row) {
        Int den = Int(boost::multiprecision::denominator(x));
        lcm_den = lcm_den / gcd(lcm_den, den) * den;
    }
    IntVector out;
    for (const Rat& x : row) {
        Rat cleared = x * lcm_den;
        out.push_back(Int(boost::multiprecision::numerator(cleared)));
    }
    return out;
}

bool generates_from_general(const GeneralClassTable& T, const SignedWord& w) {
    const CoxeterGroup& G = *T.G;
    int dim = G.dim();

    // Grassmannian generators: unique descent, above some essential element
    // with the same descent set.
    std::vector<SignedWord> essential = G.essential_set(w);
    std::vector<SignedWord> gens;
    for (const SignedWord& u : G.elements()) {
        if (G.right_descents(u).size() != 1) continue;
        for (const SignedWord& v : essential)
            if (G.right_descents(u) == G.right_descents(v) && G.bruhat_leq(v, u)) {
                gens.push_back(u);
                break;
            }
    }

    std::vector<std::vector<std::vector<Rat>>> span(T.top + 1);
    for (int d = 0; d <= T.top; ++d) {
        int width = int(T.by_length[d].size());
        std::vector<std::vector<Rat>> rows;
        for (const SignedWord& g : gens)
            if (G.length(g) == d) {
                std::vector<Rat> row(width, Rat(0));
                row[T.position.at(g)] = 1;
                rows.push_back(std::move(row));
            }
        if (d > 0)
            for (const std::vector<Rat>& prev : span[d - 1])
                for (int p = 1; p <= dim; ++p) {
                    std::vector<Rat> row(width, Rat(0));
                    bool hit = false;
                    for (size_t k = 0; k < prev.size(); ++k) {
                        if (prev[k] == 0) continue;
                        for (const auto& [dst, c] : T.entry[p - 1][d - 1][k]) {
                            row[dst] += prev[k] * c;
                            hit = true;
                        }
                    }
                    if (hit) rows.push_back(std::move(row));
                }
        // Reduce to a basis of the rational span before propagating, else
        // the row count multiplies by dim at every degree.
        IntMatrix scaled;
        for (const std::vector<Rat>& row : rows) scaled.push_back(scaled_row(row));
        IntMatrix hnf = hermite_normal_form(scaled);
        span[d].clear();
        for (const IntVector& row : hnf) span[d].emplace_back(row.begin(), row.end());

        // Supports must avoid the classes of elements below w, and the rank
        // must match the count of classes outside the lower interval.
        int outside = 0;
        for (size_t k = 0; k < T.by_length[d].size(); ++k) {
            bool below = G.bruhat_leq(T.by_length[d][k], w);
            if (!below) ++outside;
            if (below)
                for (const IntVector& row : hnf)
                    if (row[k] != 0) return false;
        }
        if (int(hnf.size()) != outside) return false;
    }
    return true;
}

}  // namespace

bool verify_Iw_generates_general(const CoxeterGroup& G, const SignedWord& w) {
    GeneralClassTable T = build_general_table(G);
    return generates_from_general(T, w);
}

SweepReport verify_Iw_generates_general_sweep(const CoxeterGroup& G) {
    GeneralClassTable T = build_general_table(G);
    SweepReport report;
    for (const SignedWord& w : G.elements()) {
        ++report.checked;
        if (!generates_from_general(T, w)) report.failures.push_back(G.format(w));
    }
    return report;
}

}  // namespace schubert
