/* Command-line front end for the library: every computation and verification
 * behind one binary, with table or JSON output.
 *
 * stdout carries only the result and is byte-deterministic for a fixed
 * invocation; progress and wall time go to stderr.  Exit status: 0 = pass,
 * 1 = a mathematical assertion failed, 2 = usage error. */
#include <cctype>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "schubert/coxeter.hpp"
#include "schubert/numeric.hpp"
#include "schubert/partitions.hpp"
#include "schubert/permutations.hpp"
#include "schubert/polynomials.hpp"
#include "schubert/presentation.hpp"
#include "schubert/schur.hpp"

using nlohmann::ordered_json;
using namespace schubert;

namespace {

std::string int_list(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string perm_set(const std::vector<Permutation>& vs) {
    std::string s = "{";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += vs[i].str();
    }
    return s + "}";
}

std::string rat_str(const Rat& q) {
    Rat copy = q;
    Int num = numerator(copy), den = denominator(copy);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::string condition_str(int r, int s, int t) {
    return "dim(V_" + std::to_string(r) + " cap C^" + std::to_string(s) +
           ") >= " + std::to_string(t);
}

/* Expand a per-degree count profile into the sorted list of degrees,
 * one entry per generator. */
std::vector<int> degree_list(const GeneratorReport& rep) {
    std::vector<int> out;
    for (size_t d = 0; d < rep.counts.size(); ++d)
        out.insert(out.end(), rep.counts[d], int(d));
    return out;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* passfail(bool b) { return b ? "PASS" : "FAIL"; }

void print_failures(const std::vector<std::string>& failures) {
    for (const std::string& f : failures) std::cout << "failure: " << f << "\n";
}

ordered_json torsion_json(const GeneratorReport& rep) {
    ordered_json t = ordered_json::array();
    for (size_t d = 0; d < rep.torsion.size(); ++d)
        for (const Int& f : rep.torsion[d])
            t.push_back({{"degree", int(d)}, {"factor", f.str()}});
    return t;
}

// ---------------------------------------------------------------- subcommands

int cmd_essential_set(const Permutation& w, const std::string& format) {
    std::vector<Permutation> ess = essential_set(w);
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "essential-set";
        j["status"] = "pass";
        j["w"] = w.str();
        j["essential"] = ordered_json::array();
        for (const Permutation& v : ess) {
            RankTriple rt = bigrassmannian_params(v);
            j["essential"].push_back(
                {{"v", v.str()}, {"r", rt.r}, {"s", rt.s}, {"t", rt.t}});
        }
        emit_json(j);
        return 0;
    }
    if (ess.empty()) {
        std::cout << "E(w) = {}\n";
        return 0;
    }
    std::cout << "E(" << w.str() << ") = " << perm_set(ess) << "\n";
    for (const Permutation& v : ess) {
        RankTriple rt = bigrassmannian_params(v);
        std::cout << v.str() << "  (r=" << rt.r << ", s=" << rt.s
                  << ", t=" << rt.t << ")\n";
    }
    return 0;
}

int cmd_fulton_table(const Permutation& w, const std::string& format) {
    std::vector<FultonCell> cells = fulton_essential(w);
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "fulton-table";
        j["status"] = "pass";
        j["w"] = w.str();
        j["cells"] = ordered_json::array();
        for (const FultonCell& c : cells) {
            Permutation v = fulton_cell_bigrassmannian(c, w.n());
            j["cells"].push_back({{"row", c.row},
                                  {"col", c.col},
                                  {"t", c.t},
                                  {"condition", condition_str(c.row, c.col - 1, c.t)},
                                  {"bigrassmannian", v.str()}});
        }
        emit_json(j);
        return 0;
    }
    if (cells.empty()) {
        std::cout << "E(w) = {}\n";
        return 0;
    }
    std::cout << "cell  condition  bigrassmannian\n";
    for (const FultonCell& c : cells) {
        Permutation v = fulton_cell_bigrassmannian(c, w.n());
        std::cout << "(" << c.row << "," << c.col << ")  "
                  << condition_str(c.row, c.col - 1, c.t) << "  " << v.str()
                  << "\n";
    }
    return 0;
}

int cmd_make_bigrassmannian(int r, int s, int t, int n, const std::string& format) {
    Permutation v = make_bigrassmannian({r, s, t}, n);
    BigrassmannianData d = bigrassmannian_data(v);
    Partition rect = Partition::rectangle(d.j, d.i);
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "make-bigrassmannian";
        j["status"] = "pass";
        j["v"] = v.str();
        j["r"] = d.r;
        j["s"] = d.s;
        j["t"] = d.t;
        j["n"] = d.n;
        j["i"] = d.i;
        j["j"] = d.j;
        j["a"] = d.a;
        j["b"] = d.b;
        j["rectangle"] = rect.parts();
        j["length"] = v.length();
        emit_json(j);
        return 0;
    }
    std::cout << "v = " << v.str() << "\n"
              << "r = " << d.r << "\n"
              << "s = " << d.s << "\n"
              << "t = " << d.t << "\n"
              << "n = " << d.n << "\n"
              << "i = " << d.i << "\n"
              << "j = " << d.j << "\n"
              << "a = " << d.a << "\n"
              << "b = " << d.b << "\n"
              << "rectangle = " << rect.str() << "\n"
              << "length = " << v.length() << "\n";
    return 0;
}

int cmd_generators(const Permutation& v, const std::string& variant,
                   const std::string& format) {
    if (variant == "grassmannian") {
        std::vector<Permutation> gens = gen_set_Iw_grassmannian(v);
        if (format == "json") {
            ordered_json j;
            j["subcommand"] = "generators";
            j["status"] = "pass";
            j["w"] = v.str();
            j["variant"] = variant;
            j["generators"] = ordered_json::array();
            for (const Permutation& u : gens) j["generators"].push_back(u.str());
            emit_json(j);
            return 0;
        }
        std::cout << "w = " << v.str() << "\n"
                  << "generators = " << gens.size() << "\n";
        for (const Permutation& u : gens) std::cout << u.str() << "\n";
        return 0;
    }
    std::vector<Partition> shapes = gen_set(v, parse_variant(variant));
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "generators";
        j["status"] = "pass";
        j["v"] = v.str();
        j["variant"] = variant;
        j["shapes"] = ordered_json::array();
        for (const Partition& mu : shapes) j["shapes"].push_back(mu.parts());
        emit_json(j);
        return 0;
    }
    std::cout << "v = " << v.str() << "\n"
              << "variant = " << variant << "\n"
              << "shapes = " << shapes.size() << "\n";
    for (const Partition& mu : shapes) std::cout << mu.str() << "\n";
    return 0;
}

std::vector<std::string> variant_list(const std::string& variant) {
    if (variant.empty()) return {"full", "one", "two"};
    return {variant};
}

void check_degree_budget(const Permutation& v, int budget) {
    BigrassmannianData d = bigrassmannian_data(v);
    int top = d.r * (d.n - d.r);
    if (top > budget)
        throw CLI::ValidationError(
            "--budget-degree", "box degree " + std::to_string(top) +
                                   " for " + v.str() + " exceeds the budget " +
                                   std::to_string(budget));
}

int cmd_verify_ideal(const std::string& v_text, int n, const std::string& variant,
                     int budget, const std::string& format) {
    std::vector<std::string> variants = variant_list(variant);
    ordered_json j;
    j["subcommand"] = "verify-ideal";
    j["status"] = "pass";
    bool all_pass = true;

    if (!v_text.empty()) {
        Permutation v = Permutation::parse(v_text);
        check_degree_budget(v, budget);
        j["v"] = v.str();
        j["results"] = ordered_json::object();
        std::vector<std::pair<std::string, bool>> rows;
        for (const std::string& name : variants) {
            bool ok = verify_ideal_equality(v, parse_variant(name));
            rows.emplace_back(name, ok);
            j["results"][name] = ok;
            all_pass = all_pass && ok;
        }
        if (!all_pass) j["status"] = "fail";
        if (format == "json") {
            emit_json(j);
        } else {
            std::cout << "v = " << v.str() << "\n";
            for (const auto& [name, ok] : rows)
                std::cout << "variant " << name << ": " << passfail(ok) << "\n";
            std::cout << passfail(all_pass) << "\n";
        }
        return all_pass ? 0 : 1;
    }

    std::vector<Permutation> vs = all_bigrassmannians(n);
    for (const Permutation& v : vs) check_degree_budget(v, budget);
    std::vector<std::string> failures;
    int checked = 0;
    for (size_t k = 0; k < vs.size(); ++k) {
        std::fprintf(stderr, "[verify-ideal] %zu/%zu %s\n", k + 1, vs.size(),
                     vs[k].str().c_str());
        for (const std::string& name : variants) {
            ++checked;
            if (!verify_ideal_equality(vs[k], parse_variant(name)))
                failures.push_back(vs[k].str() + " variant " + name);
        }
    }
    all_pass = failures.empty();
    j["n"] = n;
    j["bigrassmannians"] = int(vs.size());
    j["variants"] = variants;
    j["checked"] = checked;
    j["failures"] = failures;
    if (!all_pass) j["status"] = "fail";
    if (format == "json") {
        emit_json(j);
    } else {
        std::cout << "n = " << n << "\n"
                  << "bigrassmannians = " << vs.size() << "\n"
                  << "checked = " << checked << "\n";
        print_failures(failures);
        std::cout << passfail(all_pass) << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_minimal_generators(const std::string& w_text, const std::string& v_text,
                           const std::string& variant, int budget,
                           const std::string& format) {
    ordered_json j;
    j["subcommand"] = "minimal-generators";
    j["status"] = "pass";

    if (!w_text.empty()) {
        Permutation w = Permutation::parse(w_text);
        int listed = int(gen_set_Iw_schur(w).size());
        GeneratorReport rep = minimal_generators_Iw(w);
        std::vector<int> degrees = degree_list(rep);
        if (format == "json") {
            j["mode"] = "coinvariant";
            j["w"] = w.str();
            j["listed"] = listed;
            j["count"] = rep.total;
            j["degrees"] = degrees;
            j["torsion_free"] = rep.torsion_free;
            j["torsion"] = torsion_json(rep);
            j["input_minimal"] = rep.input_minimal;
            emit_json(j);
        } else {
            std::cout << "w = " << w.str() << "\n"
                      << "listed generators = " << listed << "\n"
                      << "minimal generators = " << rep.total << "\n"
                      << "degrees = " << int_list(degrees) << "\n"
                      << "torsion free = " << yesno(rep.torsion_free) << "\n"
                      << "input minimal = " << yesno(rep.input_minimal) << "\n";
        }
        return 0;
    }

    Permutation v = Permutation::parse(v_text);
    check_degree_budget(v, budget);
    BigrassmannianData d = bigrassmannian_data(v);
    std::string name = variant.empty() ? "one" : variant;
    std::vector<Partition> shapes = gen_set(v, parse_variant(name));
    std::vector<SchurVector> gens;
    for (const Partition& mu : shapes) gens.push_back(schur_unit(mu));
    GeneratorReport rep = minimal_generators(gens, d.r, d.n);
    std::vector<int> degrees = degree_list(rep);
    long long expected = binomial(d.a + d.b, d.a).convert_to<long long>();
    if (format == "json") {
        j["mode"] = "box";
        j["v"] = v.str();
        j["variant"] = name;
        j["listed"] = int(shapes.size());
        j["count"] = rep.total;
        j["expected"] = expected;
        j["degrees"] = degrees;
        j["torsion_free"] = rep.torsion_free;
        j["torsion"] = torsion_json(rep);
        j["input_minimal"] = rep.input_minimal;
        emit_json(j);
    } else {
        std::cout << "v = " << v.str() << "\n"
                  << "variant = " << name << "\n"
                  << "listed generators = " << shapes.size() << "\n"
                  << "minimal generators = " << rep.total << "\n"
                  << "expected count = " << expected << "\n"
                  << "degrees = " << int_list(degrees) << "\n"
                  << "torsion free = " << yesno(rep.torsion_free) << "\n"
                  << "input minimal = " << yesno(rep.input_minimal) << "\n";
    }
    return 0;
}

int cmd_verify_conjecture(int r_max, int k_max, const std::string& format) {
    std::fprintf(stderr, "[verify-conjecture] r_max=%d k_max=%d running...\n",
                 r_max, k_max);
    ConjectureReport rep = verify_minimality_conjecture(r_max, k_max);
    bool ok = rep.all_minimal();
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "verify-conjecture";
        j["status"] = ok ? "pass" : "fail";
        j["r_max"] = r_max;
        j["k_max"] = k_max;
        j["bigrassmannians_checked"] = rep.bigrassmannians_checked;
        j["failures"] = rep.failures;
        emit_json(j);
    } else {
        std::cout << "r max = " << r_max << "\n"
                  << "k max = " << k_max << "\n"
                  << "bigrassmannians checked = " << rep.bigrassmannians_checked
                  << "\n";
        print_failures(rep.failures);
        std::cout << passfail(ok) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify_parabolic(const Permutation& w, const std::vector<int>& J,
                         const std::string& format) {
    ParabolicReport rep = verify_parabolic(w, J);
    bool ok = rep.pass();
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "verify-parabolic";
        j["status"] = ok ? "pass" : "fail";
        j["w"] = w.str();
        j["J"] = J;
        j["w_max"] = rep.w_max.str();
        j["essential"] = ordered_json::array();
        for (const Permutation& v : rep.essential)
            j["essential"].push_back(v.str());
        j["descents_avoid_parabolic"] = rep.descents_avoid_parabolic;
        j["generators_invariant"] = rep.generators_invariant;
        emit_json(j);
    } else {
        std::cout << "w = " << w.str() << "\n"
                  << "J = " << int_list(J) << "\n"
                  << "w_max = " << rep.w_max.str() << "\n"
                  << "E(w_max) = " << perm_set(rep.essential) << "\n"
                  << "descents avoid parabolic: " << yesno(rep.descents_avoid_parabolic)
                  << "\n"
                  << "generators invariant: " << yesno(rep.generators_invariant)
                  << "\n"
                  << passfail(ok) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_structure_constant(const Permutation& u, const Permutation& v,
                           const Permutation& w, const std::string& format) {
    if (u.n() != v.n() || u.n() != w.n())
        throw std::invalid_argument("structure-constant: u, v, w need one size");
    Rat c = structure_constant(u, v, w);
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "structure-constant";
        j["status"] = "pass";
        j["u"] = u.str();
        j["v"] = v.str();
        j["w"] = w.str();
        Rat copy = c;
        if (denominator(copy) == 1)
            j["c"] = numerator(copy).convert_to<long long>();
        else
            j["c"] = rat_str(c);
        emit_json(j);
    } else {
        std::cout << "u = " << u.str() << "\n"
                  << "v = " << v.str() << "\n"
                  << "w = " << w.str() << "\n"
                  << "c = " << rat_str(c) << "\n";
    }
    return 0;
}

int cmd_identity_check(const std::string& family, int size_max, int k_max,
                       const std::string& format) {
    int checked = 0;
    std::vector<std::string> failures;
    if (family == "hook") {
        if (size_max < 0) size_max = 8;
        for (int d = 0; d <= size_max; ++d)
            for (const Partition& nu : partitions_of(d))
                for (int k = 0; k <= k_max; ++k) {
                    ++checked;
                    if (!hook_identity_check(nu, k))
                        failures.push_back(nu.str() + " k=" + std::to_string(k));
                }
    } else if (family == "column") {
        if (size_max < 0) size_max = 10;
        for (int d = 1; d <= size_max; ++d)
            for (const Partition& mu : partitions_of(d)) {
                Partition conj = mu.conjugate();
                for (int i = 0; conj.part(i + 1) > i; ++i) {
                    ++checked;
                    if (!column_identity_check(mu, i))
                        failures.push_back(mu.str() + " i=" + std::to_string(i));
                }
            }
    } else if (family == "jacobi-trudi") {
        if (size_max < 0) size_max = 8;
        for (int d = 0; d <= size_max; ++d)
            for (const Partition& lam : partitions_of(d)) {
                ++checked;
                if (!jacobi_trudi_verify(lam)) failures.push_back(lam.str());
            }
    } else {
        throw CLI::ValidationError("family",
                                   "expected hook, column or jacobi-trudi");
    }
    bool ok = failures.empty();
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "identity-check";
        j["status"] = ok ? "pass" : "fail";
        j["family"] = family;
        j["size_max"] = size_max;
        if (family == "hook") j["k_max"] = k_max;
        j["checked"] = checked;
        j["failures"] = failures;
        emit_json(j);
    } else {
        std::cout << "family = " << family << "\n"
                  << "size max = " << size_max << "\n";
        if (family == "hook") std::cout << "k max = " << k_max << "\n";
        std::cout << "checked = " << checked << "\n";
        print_failures(failures);
        std::cout << passfail(ok) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_coxeter_scan(const std::string& group, const std::string& format) {
    if (group.size() < 2)
        throw CLI::ValidationError("group", "expected a type and rank, e.g. B3");
    char type = char(std::toupper(group[0]));
    int rank = 0;
    try {
        size_t used = 0;
        rank = std::stoi(group.substr(1), &used);
        if (used != group.size() - 1) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
        throw CLI::ValidationError("group", "expected a type and rank, e.g. B3");
    }
    CoxeterGroup G(type, rank);
    CoxeterScanReport rep = G.scan_essential_bigrassmannian();
    bool ok = rep.violations.empty();
    if (format == "json") {
        ordered_json j;
        j["subcommand"] = "coxeter-scan";
        j["status"] = ok ? "pass" : "fail";
        j["type"] = std::string(1, rep.type);
        j["rank"] = rep.rank;
        j["elements_scanned"] = rep.elements_scanned;
        j["violations"] = rep.violations;
        emit_json(j);
    } else {
        std::cout << "type = " << rep.type << "\n"
                  << "rank = " << rep.rank << "\n"
                  << "elements scanned = " << rep.elements_scanned << "\n"
                  << "violations = " << rep.violations.size() << "\n";
        print_failures(rep.violations);
        std::cout << passfail(ok) << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert calculus: essential sets, generating sets of "
                 "Schubert vanishing ideals, and the verifications behind them"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    int rc = 0;
    auto guarded = [&rc](auto&& body) {
        try {
            rc = body();
        } catch (const CLI::ValidationError&) {
            throw;  // handled by CLI11's parse loop below
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            rc = 2;
        } catch (const std::logic_error& e) {
            std::cerr << "check failed: " << e.what() << "\n";
            rc = 1;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            rc = 2;
        }
    };

    // essential-set <w>
    std::string es_w;
    CLI::App* es = app.add_subcommand(
        "essential-set", "Bruhat-minimal elements not below w, with (r,s,t)");
    es->add_option("w", es_w, "permutation, one-line digits or comma-separated")
        ->required();
    es->callback([&] {
        guarded([&] { return cmd_essential_set(Permutation::parse(es_w), format); });
    });

    // fulton-table <w>
    std::string ft_w;
    CLI::App* ft = app.add_subcommand(
        "fulton-table", "essential diagram cells with rank conditions");
    ft->add_option("w", ft_w, "permutation, one-line digits or comma-separated")
        ->required();
    ft->callback([&] {
        guarded([&] { return cmd_fulton_table(Permutation::parse(ft_w), format); });
    });

    // make-bigrassmannian <r> <s> <t> --n
    int mb_r = 0, mb_s = 0, mb_t = 0, mb_n = 0;
    CLI::App* mb = app.add_subcommand(
        "make-bigrassmannian", "the minimal permutation violating dim(V_r cap C^s) >= t");
    mb->add_option("r", mb_r, "rank triple r")->required();
    mb->add_option("s", mb_s, "rank triple s")->required();
    mb->add_option("t", mb_t, "rank triple t")->required();
    mb->add_option("--n", mb_n, "ambient size")->required();
    mb->callback([&] {
        guarded([&] { return cmd_make_bigrassmannian(mb_r, mb_s, mb_t, mb_n, format); });
    });

    // generators <v> [--variant full|one|two|grassmannian]
    std::string gn_v, gn_variant = "full";
    CLI::App* gn = app.add_subcommand(
        "generators", "generating set of the vanishing ideal");
    gn->add_option("v", gn_v, "bigrassmannian (shapes) or any w (grassmannian)")
        ->required();
    gn->add_option("--variant", gn_variant, "full, one, two or grassmannian")
        ->check(CLI::IsMember({"full", "one", "two", "grassmannian"}))
        ->capture_default_str();
    gn->callback([&] {
        guarded([&] {
            return cmd_generators(Permutation::parse(gn_v), gn_variant, format);
        });
    });

    // verify-ideal [<v>] [--n N] [--variant ...] [--budget-degree D]
    std::string vi_v, vi_variant;
    int vi_n = 0, vi_budget = 64;
    CLI::App* vi = app.add_subcommand(
        "verify-ideal",
        "span of the generating set equals the shape-interval span degree by degree");
    CLI::Option* vi_vopt = vi->add_option("v", vi_v, "one bigrassmannian");
    vi->add_option("--n", vi_n, "sweep every bigrassmannian of this size")
        ->excludes(vi_vopt)
        ->check(CLI::Range(2, 9));
    vi->add_option("--variant", vi_variant, "restrict to one variant")
        ->check(CLI::IsMember({"full", "one", "two"}));
    vi->add_option("--budget-degree", vi_budget, "largest box degree allowed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    vi->callback([&] {
        guarded([&] {
            if (vi_v.empty() && vi_n == 0)
                throw std::invalid_argument("verify-ideal: give v or --n");
            return cmd_verify_ideal(vi_v, vi_n, vi_variant, vi_budget, format);
        });
    });

    // minimal-generators [--w W | <v> --variant ...] [--budget-degree D]
    std::string mg_w, mg_v, mg_variant;
    int mg_budget = 64;
    CLI::App* mg = app.add_subcommand(
        "minimal-generators",
        "graded Nakayama generator counts, per degree, over the integers");
    CLI::Option* mg_vopt =
        mg->add_option("v", mg_v, "bigrassmannian for the box quotient");
    mg->add_option("--w", mg_w, "permutation for the coinvariant quotient")
        ->excludes(mg_vopt);
    mg->add_option("--variant", mg_variant, "seed variant for the box quotient")
        ->check(CLI::IsMember({"full", "one", "two"}));
    mg->add_option("--budget-degree", mg_budget, "largest box degree allowed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    mg->callback([&] {
        guarded([&] {
            if (mg_w.empty() && mg_v.empty())
                throw std::invalid_argument("minimal-generators: give v or --w");
            return cmd_minimal_generators(mg_w, mg_v, mg_variant, mg_budget, format);
        });
    });

    // verify-conjecture --r-max R --k-max K
    int vc_r = 0, vc_k = 0;
    CLI::App* vc = app.add_subcommand(
        "verify-conjecture",
        "both variants are minimal with the predicted degree profile");
    vc->add_option("--r-max", vc_r, "largest descent")->required()
        ->check(CLI::PositiveNumber);
    vc->add_option("--k-max", vc_k, "largest co-descent n-r")->required()
        ->check(CLI::PositiveNumber);
    vc->callback([&] {
        guarded([&] { return cmd_verify_conjecture(vc_r, vc_k, format); });
    });

    // verify-parabolic <w> [--j 1,3]
    std::string vp_w;
    std::vector<int> vp_j;
    CLI::App* vp = app.add_subcommand(
        "verify-parabolic",
        "generators of the coset maximum are invariant under the parabolic");
    vp->add_option("w", vp_w, "permutation")->required();
    vp->add_option("--j", vp_j, "simple reflection indices of the parabolic")
        ->delimiter(',');
    vp->callback([&] {
        guarded([&] {
            return cmd_verify_parabolic(Permutation::parse(vp_w), vp_j, format);
        });
    });

    // structure-constant <u> <v> <w>
    std::string sc_u, sc_v, sc_w;
    CLI::App* sc = app.add_subcommand(
        "structure-constant", "coefficient of S_w in S_u * S_v");
    sc->add_option("u", sc_u, "permutation")->required();
    sc->add_option("v", sc_v, "permutation")->required();
    sc->add_option("w", sc_w, "permutation")->required();
    sc->callback([&] {
        guarded([&] {
            return cmd_structure_constant(Permutation::parse(sc_u),
                                          Permutation::parse(sc_v),
                                          Permutation::parse(sc_w), format);
        });
    });

    // identity-check <hook|column|jacobi-trudi> [--size-max N] [--k-max K]
    std::string ic_family;
    int ic_size = -1, ic_k = 5;
    CLI::App* ic = app.add_subcommand(
        "identity-check", "symmetric function identity over a shape range");
    ic->add_option("family", ic_family, "hook, column or jacobi-trudi")
        ->required()
        ->check(CLI::IsMember({"hook", "column", "jacobi-trudi"}));
    ic->add_option("--size-max", ic_size, "largest shape size (family default)");
    ic->add_option("--k-max", ic_k, "largest hook leg")->capture_default_str();
    ic->callback([&] {
        guarded([&] { return cmd_identity_check(ic_family, ic_size, ic_k, format); });
    });

    // coxeter-scan <group>
    std::string cs_group;
    CLI::App* cs = app.add_subcommand(
        "coxeter-scan", "every essential element is bigrassmannian");
    cs->add_option("group", cs_group, "type and rank, e.g. A3, B2, B3, D4")
        ->required();
    cs->callback([&] { guarded([&] { return cmd_coxeter_scan(cs_group, format); }); });

    auto start = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "[time] %.3fs\n", elapsed.count());
    return rc;
}
