#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "itw/partition.hpp"

using namespace itw;

namespace {

// independent oracle: column counts read off the Young diagram cells
Partition conjugate_by_enumeration(const Partition& p) {
    std::vector<std::vector<int>> diagram;
    for (int i = 1; i <= p.length(); ++i)
        diagram.push_back(std::vector<int>(static_cast<size_t>(p.part(i)), 1));
    std::vector<int> cols;
    for (int c = 0;; ++c) {
        int count = 0;
        for (const auto& row : diagram)
            if (c < static_cast<int>(row.size())) ++count;
        if (count == 0) break;
        cols.push_back(count);
    }
    return Partition(cols);
}

} // namespace

TEST_CASE("conjugate") {
    CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    for (const auto& p : partitions_up_to_weight(9, 9)) {
        CHECK(p.conjugate() == conjugate_by_enumeration(p));
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().weight() == p.weight());
    }
}

TEST_CASE("b_stat") {
    CHECK(Partition{}.b_stat() == 0);
    CHECK(Partition{3, 1}.b_stat() == 1);
    CHECK(Partition{2, 2, 1}.b_stat() == 4);
    // duality B(lambda) = sum_i C(lambda'_i, 2) for all weights <= 12
    for (const auto& p : partitions_up_to_weight(12, 12)) {
        int64_t viaconj = 0;
        Partition conj = p.conjugate();
        for (int i = 1; i <= conj.length(); ++i) {
            int64_t c = conj.part(i);
            viaconj += c * (c - 1) / 2;
        }
        CHECK(p.b_stat() == viaconj);
    }
}

TEST_CASE("decrement") {
    CHECK(*Partition{3, 1}.decremented(1) == Partition{2, 1});
    CHECK(*Partition{3, 1}.decremented(2) == Partition{3});
    CHECK(!Partition{2, 2}.decremented(1).has_value()); // (1,2) is not a partition
    CHECK(*Partition{2, 2}.decremented(2) == Partition{2, 1});
    CHECK(*Partition{1}.decremented(1) == Partition{});
    CHECK(!Partition{1, 1}.decremented(1).has_value());
    CHECK(!Partition{2}.decremented(5).has_value());
}

TEST_CASE("invalid partitions") {
    CHECK_THROWS_AS((Partition{1, 2}), DomainError);
    CHECK_THROWS_AS((Partition{0}), DomainError);
    CHECK_THROWS_AS((Partition{-1}), DomainError);
}

TEST_CASE("orders") {
    CHECK(dominance_leq(Partition{1, 1}, Partition{2}));
    CHECK(!dominance_leq(Partition{2}, Partition{1, 1}));
    CHECK(!dominance_leq(Partition{1}, Partition{2})); // weights differ
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    // incomparable pair at weight 6
    CHECK(!dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK(!dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));

    // weight_revlex extends dominance within a weight class
    for (int w = 1; w <= 8; ++w) {
        auto parts = partitions_of_weight(w, w);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                if (a == b) continue;
                if (dominance_leq(a, b)) CHECK(weight_revlex_less(a, b));
            }
    }
}

TEST_CASE("enumeration") {
    CHECK(partitions_of_weight(0, 3).size() == 1);
    CHECK(partitions_of_weight(4, 4).size() == 5);
    CHECK(partitions_of_weight(6, 6).size() == 11);
    CHECK(partitions_of_weight(6, 2).size() == 4); // (6),(5,1),(4,2),(3,3)

    auto ds = down_set(Partition{2, 1}, 3);
    CHECK(ds.size() == 5); // (), (1), (1,1), (2), (2,1)
    CHECK(ds.front() == Partition{});
    // closed under part decrement
    for (const auto& top : partitions_up_to_weight(5, 4)) {
        for (int nvars = top.length(); nvars <= 4; ++nvars) {
            auto members = down_set(top, nvars);
            for (const auto& m : members) {
                CHECK(contained_in(m, top));
                for (int i = 1; i <= m.length(); ++i) {
                    auto low = m.decremented(i);
                    if (!low) continue;
                    bool found = false;
                    for (const auto& other : members) found = found || other == *low;
                    CHECK(found);
                }
            }
        }
    }
}
