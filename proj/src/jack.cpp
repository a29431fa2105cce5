#include "itw/jack.hpp"

namespace itw {

double jack_eval(const JackIndex& idx, const std::vector<double>& z) {
    if (static_cast<int>(z.size()) != idx.nvars)
        throw DomainError("jack_eval: point dimension mismatch");
    SymmetricPoly<double> p = jack_expand(idx.lambda, idx.nvars, idx.theta);
    return sym_eval(p, z);
}

const SymmetricPoly<double>& JackTable::expansion(const Partition& lambda, int n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(lambda, n);
    auto it = expansions_.find(key);
    if (it == expansions_.end()) {
        auto poly = std::make_unique<SymmetricPoly<double>>(jack_expand(lambda, n, theta_));
        it = expansions_.emplace(key, std::move(poly)).first;
    }
    return *it->second;
}

const std::vector<double>& JackTable::binomials(const Partition& lambda) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = binoms_.find(lambda);
    if (it == binoms_.end()) {
        auto values =
            std::make_unique<std::vector<double>>(first_order_binomials(lambda, theta_));
        it = binoms_.emplace(lambda, std::move(values)).first;
    }
    return *it->second;
}

const JackTable& shared_jack_table(double theta) {
    static std::mutex mutex;
    static std::map<double, std::unique_ptr<JackTable>> tables;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = tables.find(theta);
    if (it == tables.end())
        it = tables.emplace(theta, std::make_unique<JackTable>(theta)).first;
    return *it->second;
}

} // namespace itw
