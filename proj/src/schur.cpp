#include "schubert/schur.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

SchurVector schur_unit(const Partition& lambda) { return {{lambda, 1}}; }

void add_to(SchurVector& v, const Partition& lambda, long long c) {
    if (c == 0) return;
    auto it = v.find(lambda);
    if (it == v.end()) {
        v.emplace(lambda, c);
        return;
    }
    it->second += c;
    if (it->second == 0) v.erase(it);
}

SchurVector schur_sum(const SchurVector& a, const SchurVector& b) {
    SchurVector out = a;
    for (const auto& [p, c] : b) add_to(out, p, c);
    return out;
}

SchurVector schur_scale(const SchurVector& v, long long c) {
    SchurVector out;
    if (c == 0) return out;
    for (const auto& [p, co] : v) out.emplace(p, co * c);
    return out;
}

std::string schur_str(const SchurVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : v) {
        long long mag = c < 0 ? -c : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        if (mag != 1) os << mag << "*";
        os << "s" << p.str();
        first = false;
    }
    return os.str();
}

SchurVector pieri(char kind, int k, const SchurVector& v) {
    if (kind != 'e' && kind != 'h') throw std::invalid_argument("pieri kind must be e or h");
    if (k < 0) throw std::invalid_argument("pieri strip size must be nonnegative");
    if (k == 0) return v;
    SchurVector out;
    for (const auto& [lambda, c] : v) {
        std::vector<Partition> grown = kind == 'e' ? add_vertical_strips(lambda, k)
                                                   : add_horizontal_strips(lambda, k);
        for (const Partition& mu : grown) add_to(out, mu, c);
    }
    return out;
}

SchurVector project_quotient(const SchurVector& v, int r, int n) {
    if (r < 1 || r >= n) throw std::invalid_argument("project_quotient needs 1 <= r < n");
    SchurVector out;
    for (const auto& [lambda, c] : v)
        if (lambda.fits_in_box(r, n - r)) out.emplace(lambda, c);
    return out;
}

std::vector<HMonomial> jacobi_trudi(const Partition& lambda) {
    int l = lambda.rows();
    std::map<std::vector<int>, long long> sums;
    std::vector<int> sigma(l);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        int sign = 1;
        for (int a = 0; a < l; ++a)
            for (int b = a + 1; b < l; ++b)
                if (sigma[a] > sigma[b]) sign = -sign;
        std::vector<int> factors;
        bool zero = false;
        for (int i = 1; i <= l && !zero; ++i) {
            int idx = lambda.part(i) - i + sigma[i - 1];
            if (idx < 0) zero = true;
            else if (idx > 0) factors.push_back(idx);
        }
        if (zero) continue;
        std::sort(factors.begin(), factors.end(), std::greater<int>());
        sums[factors] += sign;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::vector<HMonomial> out;
    for (const auto& [factors, coef] : sums)
        if (coef != 0) out.push_back({coef, factors});
    return out;
}

SchurVector expand_h_product(const std::vector<int>& factors) {
    SchurVector v = schur_unit(Partition());
    for (int k : factors) v = pieri('h', k, v);
    return v;
}

bool jacobi_trudi_verify(const Partition& lambda) {
    SchurVector total;
    for (const HMonomial& m : jacobi_trudi(lambda))
        total = schur_sum(total, schur_scale(expand_h_product(m.factors), m.coef));
    return total == schur_unit(lambda);
}

bool hook_identity_check(const Partition& nu, int k) {
    if (k < 0) throw std::invalid_argument("hook length must be nonnegative");
    std::vector<int> hook_parts = nu.parts();
    hook_parts.insert(hook_parts.end(), k, 1);
    SchurVector lhs = schur_unit(Partition(hook_parts));
    SchurVector rhs;
    for (int l = 0; l <= k; ++l) {
        SchurVector inner;
        for (const Partition& lam : add_horizontal_strips(nu, l))
            if (lam.rows() <= nu.rows()) add_to(inner, lam, 1);
        SchurVector term = pieri('e', k - l, inner);
        rhs = schur_sum(rhs, schur_scale(term, l % 2 == 0 ? 1 : -1));
    }
    return lhs == rhs;
}

bool column_identity_check(const Partition& mu, int i) {
    if (i < 0) throw std::invalid_argument("column index must be nonnegative");
    int k = 0;
    while (mu.part(k + 1) > i) ++k;
    if (k <= i) throw std::invalid_argument("column i+1 must be longer than i");
    SchurVector rhs;
    for (int m = 1; m <= k; ++m) {
        std::vector<int> parts;
        for (int a = 1; a < m; ++a) parts.push_back(mu.part(a));
        for (int a = m + 1; a <= k; ++a) parts.push_back(mu.part(a) - 1);
        parts.push_back(i);
        for (int a = k + 1; a <= mu.rows(); ++a) parts.push_back(mu.part(a));
        SchurVector term = pieri('h', mu.part(m) + k - i - m, schur_unit(Partition(parts)));
        rhs = schur_sum(rhs, schur_scale(term, (k - m) % 2 == 0 ? 1 : -1));
    }
    return rhs == schur_unit(mu);
}

SchurVector omega(const SchurVector& v) {
    SchurVector out;
    for (const auto& [p, c] : v) out.emplace(p.conjugate(), c);
    return out;
}

ExactPolynomial schur_in_variables(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("need at least one variable");
    // Branching recursion: strip a horizontal strip for the last variable.
    std::map<std::pair<std::vector<int>, int>, ExactPolynomial> memo;
    auto rec = [&](auto&& self, const Partition& lam, int m) -> ExactPolynomial {
        if (lam.rows() > m) return ExactPolynomial(r);
        if (m == 0) return ExactPolynomial::constant(r, 1);
        auto key = std::make_pair(lam.parts(), m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        ExactPolynomial total(r);
        // All mu with mu subset lam and lam/mu a horizontal strip:
        // mu_t in [max(lam_{t+1}, ...), lam_t] with mu_t >= lam_{t+1}.
        std::vector<int> mu(lam.rows());
        auto walk = [&](auto&& go, int t, int used) -> void {
            if (t == lam.rows()) {
                std::vector<int> trimmed(mu.begin(), mu.begin() + t);
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                ExactPolynomial sub = self(self, Partition(trimmed), m - 1);
                std::vector<int> e(r, 0);
                e[m - 1] = lam.size() - used;
                total = total + sub * ExactPolynomial::monomial(e, 1);
                return;
            }
            int lo = lam.part(t + 2);
            for (int val = lam.part(t + 1); val >= lo; --val) {
                mu[t] = val;
                go(go, t + 1, used + val);
            }
        };
        walk(walk, 0, 0);
        memo.emplace(key, total);
        return total;
    };
    return rec(rec, lambda, r);
}

SchurVector schur_product(const SchurVector& a, const SchurVector& b) {
    SchurVector out;
    for (const auto& [lambda, ca] : a)
        for (const HMonomial& m : jacobi_trudi(lambda)) {
            SchurVector t = b;
            for (int f : m.factors) t = pieri('h', f, t);
            out = schur_sum(out, schur_scale(t, ca * m.coef));
        }
    return out;
}

}  // namespace schubert
