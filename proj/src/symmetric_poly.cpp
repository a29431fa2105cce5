#include "itw/symmetric_poly.hpp"

#include <algorithm>
#include <cmath>

namespace itw {

std::vector<std::vector<int>> monomial_orbit(const Partition& mu, int nvars) {
    if (mu.length() > nvars)
        throw DomainError("monomial type longer than variable count");
    std::vector<int> exp(static_cast<size_t>(nvars), 0);
    std::copy(mu.parts().begin(), mu.parts().end(), exp.begin());
    std::sort(exp.begin(), exp.end());
    std::vector<std::vector<int>> orbit;
    do {
        orbit.push_back(exp);
    } while (std::next_permutation(exp.begin(), exp.end()));
    return orbit;
}

int64_t monomial_count_at_ones(const Partition& mu, int nvars) {
    if (mu.length() > nvars) return 0;
    // n! / (prod multiplicity! * (n-l)!) computed without overflow
    std::vector<int> mult;
    int run = 1;
    for (int i = 2; i <= mu.length() + 1; ++i) {
        if (i <= mu.length() && mu.part(i) == mu.part(i - 1)) {
            ++run;
        } else {
            mult.push_back(run);
            run = 1;
        }
    }
    if (mu.empty()) mult.clear();
    // choose slots for each distinct value in turn
    int64_t pick = nvars;
    int64_t result = 1;
    for (int m : mult) {
        // C(pick, m)
        int64_t c = 1;
        for (int j = 1; j <= m; ++j) c = c * (pick - m + j) / j;
        result *= c;
        pick -= m;
    }
    return result;
}

double monomial_eval(const Partition& mu, const std::vector<double>& z) {
    if (mu.empty()) return 1.0;
    if (mu.length() > static_cast<int>(z.size())) return 0.0;
    double acc = 0;
    for (const auto& exp : monomial_orbit(mu, static_cast<int>(z.size()))) {
        double term = 1;
        for (size_t i = 0; i < z.size(); ++i) {
            for (int k = 0; k < exp[i]; ++k) term *= z[i];
        }
        acc += term;
    }
    return acc;
}

} // namespace itw
