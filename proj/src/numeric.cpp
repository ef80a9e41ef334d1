#include "schubert/numeric.hpp"

#include <stdexcept>

namespace schubert {

Int binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::vector<Int> gaussian_binomial(int m, int k) {
    if (k < 0 || m < 0 || k > m) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= m");
    // [m choose k]_q = [m-1 choose k-1]_q + q^k [m-1 choose k]_q
    std::vector<std::vector<Int>> row(k + 1);
    row[0] = {1};
    for (int mm = 1; mm <= m; ++mm) {
        for (int kk = std::min(k, mm); kk >= 1; --kk) {
            std::vector<Int> next = row[kk - 1];
            if (kk <= mm - 1) {
                const std::vector<Int>& shifted = row[kk];
                next.resize(std::max(next.size(), shifted.size() + kk), 0);
                for (size_t i = 0; i < shifted.size(); ++i) next[i + kk] += shifted[i];
            }
            row[kk] = std::move(next);
        }
    }
    row[k].resize(size_t(k) * (m - k) + 1, 0);
    return row[k];
}

}  // namespace schubert
