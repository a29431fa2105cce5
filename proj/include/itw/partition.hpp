#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "itw/errors.hpp"

namespace itw {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the zero partition.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int64_t weight() const;

    /// Part value at 1-based index i; 0 beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }

    /// Conjugate partition: lambda'_i = #{j : lambda_j >= i}.
    Partition conjugate() const;

    /// B(lambda) = sum_i (i-1) lambda_i.
    int64_t b_stat() const;

    /// lambda with part i (1-based) decremented by one; the part is dropped
    /// when it reaches zero. Empty when the result is not a partition.
    std::optional<Partition> decremented(int i) const;

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  private:
    void validate() const;
    std::vector<int> parts_;
};

/// Deterministic total order used for basis layout: by weight, then
/// lexicographically on the parts. Within a fixed weight this is a linear
/// extension of dominance order (dominated partitions sort first).
bool weight_revlex_less(const Partition& a, const Partition& b);

struct WeightRevlexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return weight_revlex_less(a, b);
    }
};

/// Dominance order on partitions of equal weight: mu <= lambda iff every
/// prefix sum of mu is bounded by the matching prefix sum of lambda.
/// False when the weights differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// True when kappa_i <= lambda_i for all i (entrywise containment).
bool contained_in(const Partition& kappa, const Partition& lambda);

/// All partitions of the given weight with length <= max_len, sorted by
/// weight_revlex_less.
std::vector<Partition> partitions_of_weight(int weight, int max_len);

/// All partitions of weight <= max_weight with length <= max_len.
std::vector<Partition> partitions_up_to_weight(int max_weight, int max_len);

/// Entrywise-containment down-set of top, filtered to length <= max_len,
/// sorted by weight_revlex_less. Always includes the zero partition.
std::vector<Partition> down_set(const Partition& top, int max_len);

} // namespace itw
