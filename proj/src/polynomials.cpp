#include "schubert/polynomials.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schubert {

ExactPolynomial ExactPolynomial::constant(int vars, const Rat& c) {
    ExactPolynomial f(vars);
    f.add_term(std::vector<int>(vars, 0), c);
    return f;
}

ExactPolynomial ExactPolynomial::variable(int vars, int i) {
    if (i < 1 || i > vars) throw std::invalid_argument("variable index");
    std::vector<int> e(vars, 0);
    e[i - 1] = 1;
    ExactPolynomial f(vars);
    f.add_term(e, 1);
    return f;
}

ExactPolynomial ExactPolynomial::monomial(const std::vector<int>& exps, const Rat& c) {
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    ExactPolynomial f(int(exps.size()));
    f.add_term(exps, c);
    return f;
}

void ExactPolynomial::add_term(const std::vector<int>& exps, const Rat& c) {
    if (int(exps.size()) != vars_) throw std::invalid_argument("exponent vector length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat ExactPolynomial::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat ExactPolynomial::constant_term() const {
    return coefficient(std::vector<int>(vars_, 0));
}

int ExactPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

bool ExactPolynomial::is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        if (d == -2) d = t;
        else if (d != t) return false;
    }
    return true;
}

ExactPolynomial ExactPolynomial::homogeneous_component(int d) const {
    ExactPolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        if (t == d) out.add_term(e, c);
    }
    return out;
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable count mismatch");
    ExactPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable count mismatch");
    ExactPolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable count mismatch");
    ExactPolynomial out(vars_);
    std::vector<int> e(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

ExactPolynomial ExactPolynomial::operator*(const Rat& c) const {
    ExactPolynomial out(vars_);
    if (c == 0) return out;
    for (const auto& [e, co] : terms_) out.add_term(e, co * c);
    return out;
}

std::string ExactPolynomial::str() const {
    if (terms_.empty()) return "0";
    // Sort terms by degree then lexicographic exponent vector, leading first.
    std::vector<const std::pair<const std::vector<int>, Rat>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto total = [](const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        int da = total(a->first), db = total(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : order) {
        Rat c = t->second;
        bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        Rat mag = negative ? Rat(-c) : c;
        std::string mono;
        for (int i = 0; i < vars_; ++i) {
            int e = t->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out << mag;
        } else {
            if (mag != 1) {
                out << mag << "*";
            }
            out << mono;
        }
    }
    return out.str();
}

ExactPolynomial act(const ExactPolynomial& f, const Permutation& w) {
    if (f.vars() != w.n()) throw std::invalid_argument("variable count mismatch");
    ExactPolynomial out(f.vars());
    std::vector<int> e(f.vars());
    for (const auto& [exps, c] : f.terms()) {
        for (int k = 1; k <= f.vars(); ++k) e[w(k) - 1] = exps[k - 1];
        out.add_term(e, c);
    }
    return out;
}

ExactPolynomial act(const CoxeterGroup& G, const ExactPolynomial& f, const SignedWord& w) {
    if (f.vars() != G.dim()) throw std::invalid_argument("variable count mismatch");
    ExactPolynomial out(f.vars());
    std::vector<int> e(f.vars());
    for (const auto& [exps, c] : f.terms()) {
        bool negate = false;
        for (int k = 0; k < f.vars(); ++k) {
            e[std::abs(w[k]) - 1] = exps[k];
            if (w[k] < 0 && exps[k] % 2 == 1) negate = !negate;
        }
        out.add_term(e, negate ? Rat(-c) : c);
    }
    return out;
}

namespace {

/* Exact division of a multiple of alpha (a linear form with integer
 * coefficients) by alpha.  Synthetic division along the first variable
 * appearing in alpha; a nonzero remainder means the caller's numerator was
 * not antisymmetric, which is a bug. */
ExactPolynomial exact_quotient_by_linear(const ExactPolynomial& numerator,
                                         const std::vector<int>& alpha) {
    int vars = numerator.vars();
    if (int(alpha.size()) != vars) throw std::invalid_argument("linear form length");
    int p = -1;
    for (int i = 0; i < vars; ++i)
        if (alpha[i] != 0) {
            p = i;
            break;
        }
    if (p < 0) throw std::invalid_argument("zero linear form");
    Rat c(alpha[p]);
    ExactPolynomial beta(vars);  // alpha - c x_p, free of x_p
    for (int i = p + 1; i < vars; ++i)
        if (alpha[i] != 0) {
            std::vector<int> e(vars, 0);
            e[i] = 1;
            beta.add_term(e, alpha[i]);
        }

    // Split the numerator by the exponent of x_p.
    std::map<int, ExactPolynomial> layer;
    int top = 0;
    for (const auto& [e, co] : numerator.terms()) {
        std::vector<int> stripped = e;
        int k = stripped[p];
        stripped[p] = 0;
        auto [it, inserted] = layer.emplace(k, ExactPolynomial(vars));
        it->second.add_term(stripped, co);
        top = std::max(top, k);
    }
    auto layer_at = [&](int k) {
        auto it = layer.find(k);
        return it == layer.end() ? ExactPolynomial(vars) : it->second;
    };

    ExactPolynomial quotient(vars);
    ExactPolynomial carry(vars);  // q_k during the downward sweep
    for (int k = top; k >= 1; --k) {
        // Coefficient of x_p^k in the numerator minus beta * q_k gives c q_{k-1}.
        ExactPolynomial qk = (layer_at(k) - beta * carry) * Rat(1 / c);
        for (const auto& [e, co] : qk.terms()) {
            std::vector<int> lifted = e;
            lifted[p] = k - 1;
            quotient.add_term(lifted, co);
        }
        carry = qk;
    }
    if (!(layer_at(0) - beta * carry).is_zero())
        throw std::logic_error("inexact division by a root linear form");
    return quotient;
}

ExactPolynomial act_swap(const ExactPolynomial& f, int i) {
    ExactPolynomial out(f.vars());
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> swapped = e;
        std::swap(swapped[i - 1], swapped[i]);
        out.add_term(swapped, c);
    }
    return out;
}

}  // namespace

ExactPolynomial divided_difference(const ExactPolynomial& f, int i) {
    if (i < 1 || i + 1 > f.vars()) throw std::invalid_argument("reflection index");
    std::vector<int> alpha(f.vars(), 0);
    alpha[i - 1] = 1;
    alpha[i] = -1;
    return exact_quotient_by_linear(f - act_swap(f, i), alpha);
}

ExactPolynomial divided_difference(const CoxeterGroup& G, const ExactPolynomial& f, int i) {
    if (i < 1 || i > G.rank()) throw std::invalid_argument("reflection index");
    ExactPolynomial reflected = act(G, f, G.simple(i));
    return exact_quotient_by_linear(f - reflected, G.simple_roots()[i - 1]);
}

ExactPolynomial demazure(const ExactPolynomial& f, int i) {
    return divided_difference(ExactPolynomial::variable(f.vars(), i) * f, i);
}

ExactPolynomial apply_word(const ExactPolynomial& f, const std::vector<int>& word) {
    // Leftmost operator applied last: d_{(i1..il)} = d_{i1} o ... o d_{il}.
    ExactPolynomial out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = divided_difference(out, *it);
    return out;
}

ExactPolynomial apply_word(const CoxeterGroup& G, const ExactPolynomial& f,
                           const std::vector<int>& word) {
    ExactPolynomial out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = divided_difference(G, out, *it);
    return out;
}

ExactPolynomial schubert_polynomial(const Permutation& w) {
    int n = w.n();
    std::vector<int> delta(n);
    for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
    ExactPolynomial top = ExactPolynomial::monomial(delta, 1);
    Permutation u = w.inverse() * Permutation::longest(n);
    return apply_word(top, u.reduced_word());
}

ExactPolynomial hiller_longest(const CoxeterGroup& G) {
    ExactPolynomial prod = ExactPolynomial::constant(G.dim(), 1);
    for (const auto& root : G.positive_roots()) {
        ExactPolynomial linear(G.dim());
        for (int i = 0; i < G.dim(); ++i)
            if (root[i] != 0) {
                std::vector<int> e(G.dim(), 0);
                e[i] = 1;
                linear.add_term(e, root[i]);
            }
        prod = prod * linear;
    }
    return prod * Rat(1, G.order());
}

ExactPolynomial hiller_schubert(const CoxeterGroup& G, const SignedWord& w) {
    SignedWord u = G.multiply(G.inverse_element(w), G.longest_element());
    return apply_word(G, hiller_longest(G), G.reduced_word(u));
}

SchubertExpansion coinvariant_expand(const ExactPolynomial& f, int n) {
    if (f.vars() != n) throw std::invalid_argument("variable count mismatch");
    std::vector<Permutation> perms = all_permutations(n);
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        return a.length() < b.length();
    });
    std::map<Permutation, int> index;
    for (int i = 0; i < int(perms.size()); ++i) index[perms[i]] = i;

    SchubertExpansion out;
    int top_len = perms.back().length();
    for (int d = 0; d <= std::min(f.degree(), top_len); ++d) {
        ExactPolynomial fd = f.homogeneous_component(d);
        if (fd.is_zero()) continue;
        std::vector<ExactPolynomial> images(perms.size(), ExactPolynomial(n));
        images[0] = fd;
        for (int i = 1; i < int(perms.size()); ++i) {
            const Permutation& w = perms[i];
            if (w.length() > d) break;
            // d_w = d_s o d_{sw} for a left descent s of w.
            int s = w.inverse().descents().front();
            images[i] = divided_difference(images[index.at(w.left_s(s))], s);
            if (w.length() == d) {
                Rat c = images[i].constant_term();
                if (c != 0) out[w] += c;
            }
        }
        if (d == 0) {
            Rat c = fd.constant_term();
            if (c != 0) out[perms[0]] += c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

GeneralExpansion coinvariant_expand(const CoxeterGroup& G, const ExactPolynomial& f) {
    if (f.vars() != G.dim()) throw std::invalid_argument("variable count mismatch");
    const std::vector<SignedWord>& elements = G.elements();  // length-sorted
    GeneralExpansion out;
    int top_len = G.length(G.longest_element());
    for (int d = 0; d <= std::min(f.degree(), top_len); ++d) {
        ExactPolynomial fd = f.homogeneous_component(d);
        if (fd.is_zero()) continue;
        std::vector<ExactPolynomial> images(elements.size(), ExactPolynomial(G.dim()));
        images[0] = fd;
        for (int i = 1; i < int(elements.size()); ++i) {
            const SignedWord& w = elements[i];
            if (G.length(w) > d) break;
            int s = G.left_descents(w).front();
            SignedWord shorter = G.multiply(G.simple(s), w);
            images[i] = divided_difference(G, images[G.element_index(shorter)], s);
            if (G.length(w) == d) {
                Rat c = images[i].constant_term();
                if (c != 0) out[w] += c;
            }
        }
        if (d == 0) {
            Rat c = fd.constant_term();
            if (c != 0) out[elements[0]] += c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rat structure_constant(const Permutation& u, const Permutation& v, const Permutation& w) {
    if (u.n() != v.n() || u.n() != w.n()) throw std::invalid_argument("group mismatch");
    if (u.length() + v.length() != w.length()) return 0;
    ExactPolynomial prod = schubert_polynomial(u) * schubert_polynomial(v);
    return apply_word(prod, w.reduced_word()).constant_term();
}

Rat structure_constant(const CoxeterGroup& G, const SignedWord& u, const SignedWord& v,
                       const SignedWord& w) {
    if (G.length(u) + G.length(v) != G.length(w)) return 0;
    ExactPolynomial prod = hiller_schubert(G, u) * hiller_schubert(G, v);
    return apply_word(G, prod, G.reduced_word(w)).constant_term();
}

bool verify_sparsity(const Permutation& u, const Permutation& x, const Permutation& xp,
                     const std::vector<int>& J) {
    int n = u.n();
    if (x.n() != n || xp.n() != n) throw std::invalid_argument("group mismatch");
    std::vector<int> du = u.descents();
    for (int j : J)
        if (std::find(du.begin(), du.end(), j) != du.end())
            throw std::invalid_argument("u has a descent in J");
    Permutation w0J = longest_in_parabolic(n, J);
    if (!bruhat_leq(x, w0J) || !bruhat_leq(xp, w0J))
        throw std::invalid_argument("x outside the parabolic subgroup");
    if (x.length() != xp.length()) throw std::invalid_argument("length mismatch");
    Rat c = structure_constant(u, x, u * xp);
    return c == (x == xp ? Rat(1) : Rat(0));
}

}  // namespace schubert
