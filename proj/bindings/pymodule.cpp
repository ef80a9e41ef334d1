/* Python bindings: the main operations behind one import, with plain
 * Python types at the boundary (strings for permutations, lists of part
 * lists for shapes, dicts for reports). */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "schubert/coxeter.hpp"
#include "schubert/numeric.hpp"
#include "schubert/partitions.hpp"
#include "schubert/permutations.hpp"
#include "schubert/polynomials.hpp"
#include "schubert/presentation.hpp"
#include "schubert/schur.hpp"

namespace py = pybind11;
using namespace schubert;

namespace {

std::vector<std::string> perm_strings(const std::vector<Permutation>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (const Permutation& v : vs) out.push_back(v.str());
    return out;
}

std::vector<std::vector<int>> shape_lists(const std::vector<Partition>& shapes) {
    std::vector<std::vector<int>> out;
    out.reserve(shapes.size());
    for (const Partition& mu : shapes) out.push_back(mu.parts());
    return out;
}

py::dict report_dict(const GeneratorReport& rep) {
    py::dict d;
    std::vector<int> degrees;
    for (size_t k = 0; k < rep.counts.size(); ++k)
        degrees.insert(degrees.end(), rep.counts[k], int(k));
    d["count"] = rep.total;
    d["degrees"] = degrees;
    d["torsion_free"] = rep.torsion_free;
    d["input_minimal"] = rep.input_minimal;
    return d;
}

py::object rat_object(const Rat& q) {
    Rat copy = q;
    Int num = numerator(copy), den = denominator(copy);
    if (den == 1) return py::int_(num.convert_to<long long>());
    return py::str(num.str() + "/" + den.str());
}

}  // namespace

PYBIND11_MODULE(schubert, m) {
    m.doc() = "Exact engine for essential sets and generating sets of "
              "Schubert vanishing ideals";

    m.def(
        "essential_set",
        [](const std::string& w) {
            return perm_strings(essential_set(Permutation::parse(w)));
        },
        py::arg("w"), "Bruhat-minimal elements not below w, as one-line words");

    m.def(
        "bigrassmannian_params",
        [](const std::string& v) {
            BigrassmannianData d = bigrassmannian_data(Permutation::parse(v));
            py::dict out;
            out["r"] = d.r;
            out["s"] = d.s;
            out["t"] = d.t;
            out["n"] = d.n;
            out["i"] = d.i;
            out["j"] = d.j;
            out["a"] = d.a;
            out["b"] = d.b;
            return out;
        },
        py::arg("v"), "descent data and rectangle parameters of a bigrassmannian");

    m.def(
        "make_bigrassmannian",
        [](int r, int s, int t, int n) {
            return make_bigrassmannian({r, s, t}, n).str();
        },
        py::arg("r"), py::arg("s"), py::arg("t"), py::arg("n"),
        "the minimal permutation violating dim(V_r cap C^s) >= t");

    m.def(
        "gen_set",
        [](const std::string& v, const std::string& variant) {
            return shape_lists(gen_set(Permutation::parse(v), parse_variant(variant)));
        },
        py::arg("v"), py::arg("variant") = "full",
        "shapes generating the ideal of a bigrassmannian: full, one or two");

    m.def(
        "grassmannian_generators",
        [](const std::string& w) {
            return perm_strings(gen_set_Iw_grassmannian(Permutation::parse(w)));
        },
        py::arg("w"),
        "grassmannian permutations whose classes generate the vanishing ideal");

    m.def(
        "minimal_generators_w",
        [](const std::string& w_text) {
            Permutation w = Permutation::parse(w_text);
            py::dict d = report_dict(minimal_generators_Iw(w));
            d["listed"] = int(gen_set_Iw_schur(w).size());
            return d;
        },
        py::arg("w"),
        "minimal generator count of the vanishing ideal in the coinvariant ring");

    m.def(
        "minimal_generators_box",
        [](const std::string& v_text, const std::string& variant) {
            Permutation v = Permutation::parse(v_text);
            BigrassmannianData data = bigrassmannian_data(v);
            std::vector<Partition> shapes = gen_set(v, parse_variant(variant));
            std::vector<SchurVector> gens;
            gens.reserve(shapes.size());
            for (const Partition& mu : shapes) gens.push_back(schur_unit(mu));
            py::dict d = report_dict(minimal_generators(gens, data.r, data.n));
            d["listed"] = int(shapes.size());
            d["expected"] = binomial(data.a + data.b, data.a).convert_to<long long>();
            return d;
        },
        py::arg("v"), py::arg("variant") = "one",
        "minimal generator count of the ideal in the box quotient");

    m.def(
        "verify_ideal_equality",
        [](const std::string& v, const std::string& variant) {
            return verify_ideal_equality(Permutation::parse(v), parse_variant(variant));
        },
        py::arg("v"), py::arg("variant") = "full",
        "the chosen generating set spans the whole shape interval");

    m.def(
        "verify_minimality_conjecture",
        [](int r_max, int k_max) {
            ConjectureReport rep = verify_minimality_conjecture(r_max, k_max);
            py::dict d;
            d["checked"] = rep.bigrassmannians_checked;
            d["failures"] = rep.failures;
            return d;
        },
        py::arg("r_max"), py::arg("k_max"),
        "minimality of both variants for descent <= r_max, co-descent <= k_max");

    m.def(
        "verify_generates",
        [](const std::string& w) {
            return verify_Iw_generates(Permutation::parse(w));
        },
        py::arg("w"),
        "grassmannian generator classes span everything not below w");

    m.def(
        "structure_constant",
        [](const std::string& u, const std::string& v, const std::string& w) {
            return rat_object(structure_constant(Permutation::parse(u),
                                                 Permutation::parse(v),
                                                 Permutation::parse(w)));
        },
        py::arg("u"), py::arg("v"), py::arg("w"),
        "coefficient of the w class in the product of the u and v classes");

    m.def(
        "schubert_polynomial",
        [](const std::string& w) {
            return schubert_polynomial(Permutation::parse(w)).str();
        },
        py::arg("w"), "the polynomial representative, as text");

    m.def(
        "hook_identity",
        [](const std::vector<int>& nu, int k) {
            return hook_identity_check(Partition(nu), k);
        },
        py::arg("nu"), py::arg("k"), "hook-shape expansion identity");
    m.def(
        "jacobi_trudi",
        [](const std::vector<int>& lam) {
            return jacobi_trudi_verify(Partition(lam));
        },
        py::arg("lam"), "determinant reconstruction of one Schur function");

    m.def(
        "coxeter_scan",
        [](const std::string& group) {
            if (group.size() < 2)
                throw std::invalid_argument("expected a type and rank, e.g. B3");
            CoxeterGroup G(group[0], std::stoi(group.substr(1)));
            CoxeterScanReport rep = G.scan_essential_bigrassmannian();
            py::dict d;
            d["type"] = std::string(1, rep.type);
            d["rank"] = rep.rank;
            d["elements"] = rep.elements_scanned;
            d["violations"] = rep.violations;
            return d;
        },
        py::arg("group"),
        "every essential element of the group is bigrassmannian");
}
