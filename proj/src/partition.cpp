#include "itw/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace itw {

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

int64_t Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), int64_t{0});
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]));
    for (int i = 1; i <= parts_[0]; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        conj[static_cast<size_t>(i - 1)] = count;
    }
    return Partition(std::move(conj));
}

int64_t Partition::b_stat() const {
    int64_t acc = 0;
    for (size_t i = 0; i < parts_.size(); ++i)
        acc += static_cast<int64_t>(i) * parts_[i];
    return acc;
}

std::optional<Partition> Partition::decremented(int i) const {
    if (i < 1 || i > length()) return std::nullopt;
    std::vector<int> p = parts_;
    p[static_cast<size_t>(i - 1)] -= 1;
    if (p[static_cast<size_t>(i - 1)] == 0) {
        // only the last part may be dropped
        if (i != length()) return std::nullopt;
        p.pop_back();
        return Partition(std::move(p));
    }
    // still weakly decreasing?
    if (i < length() && p[static_cast<size_t>(i - 1)] < p[static_cast<size_t>(i)])
        return std::nullopt;
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool weight_revlex_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end());
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight()) return false;
    int64_t psum_mu = 0, psum_la = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        psum_mu += mu.part(i);
        psum_la += lambda.part(i);
        if (psum_mu > psum_la) return false;
    }
    return true;
}

bool contained_in(const Partition& kappa, const Partition& lambda) {
    if (kappa.length() > lambda.length()) return false;
    for (int i = 1; i <= kappa.length(); ++i)
        if (kappa.part(i) > lambda.part(i)) return false;
    return true;
}

namespace {

void enumerate_partitions(int remaining, int max_part, int max_len,
                          std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_partitions(remaining - p, p, max_len - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of_weight(int weight, int max_len) {
    if (weight < 0) throw DomainError("negative partition weight");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_partitions(weight, weight, max_len, acc, out);
    std::sort(out.begin(), out.end(), weight_revlex_less);
    return out;
}

std::vector<Partition> partitions_up_to_weight(int max_weight, int max_len) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto batch = partitions_of_weight(w, max_len);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

namespace {

void enumerate_down_set(const Partition& top, int max_len, int i, int prev,
                        std::vector<int>& acc, std::vector<Partition>& out) {
    if (acc.size() <= static_cast<size_t>(max_len)) out.emplace_back(acc);
    if (i > top.length() || static_cast<int>(acc.size()) >= max_len) return;
    // pick a value for the next part and recurse; zero terminates the prefix
    for (int v = 1; v <= std::min(top.part(i), prev); ++v) {
        acc.push_back(v);
        enumerate_down_set(top, max_len, i + 1, v, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> down_set(const Partition& top, int max_len) {
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_down_set(top, max_len, 1, top.empty() ? 0 : top.part(1), acc, out);
    std::sort(out.begin(), out.end(), weight_revlex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace itw
