#include "liar/config.hpp"
#include "liar/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

using namespace liar;

namespace {

// Independent oracle: scan every map {1..m} -> {1..m} that is a permutation,
// keep single cycles by cycle decomposition, count odd polarity vectors.
long long brute_force_count(int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    long long total = 0;
    do {
        std::vector<bool> seen(m, false);
        int cycles = 0;
        for (int s = 0; s < m; ++s) {
            if (seen[s]) {
                continue;
            }
            ++cycles;
            for (int x = s; !seen[x]; x = perm[x] - 1) {
                seen[x] = true;
            }
        }
        if (cycles != 1) {
            continue;
        }
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            total += std::popcount(mask) % 2;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected liar::Error");
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("validate accepts single cycles") {
    CHECK(validate(one_liar()) == one_liar());
    const Configuration three{3, {2, 3, 1}, {false, true, false}};
    CHECK(validate(three) == three);
    CHECK_NOTHROW(validate(eight_liar()));
}

TEST_CASE("validate rejects fixed points, split cycles and bad ranges") {
    CHECK(kind_of([] { validate({3, {1, 3, 2}, {true, false, false}}); }) == ErrorKind::NotSingleCycle);
    CHECK(kind_of([] { validate({2, {1, 2}, {true, false}}); }) == ErrorKind::NotSingleCycle);
    CHECK(kind_of([] { validate({4, {2, 1, 4, 3}, {true, false, false, false}}); }) == ErrorKind::NotSingleCycle);
    CHECK(kind_of([] { validate({3, {2, 2, 1}, {true, false, false}}); }) == ErrorKind::NotSingleCycle);
    CHECK(kind_of([] { validate({3, {2, 4, 1}, {true, false, false}}); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { validate({3, {2, 0, 1}, {true, false, false}}); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { validate({0, {}, {}}); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { validate({2, {2, 1}, {true}}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("is_paradoxical counts negations") {
    CHECK(is_paradoxical(one_liar()));
    CHECK_FALSE(is_paradoxical({2, {2, 1}, {false, false}}));
    CHECK(is_paradoxical(eight_liar()));
    const Configuration eight = eight_liar();
    CHECK(std::count(eight.negating.begin(), eight.negating.end(), true) == 5);
}

TEST_CASE("count_paradoxical matches brute force and closed form") {
    const long long frozen[] = {1, 2, 8, 48, 384};
    for (int m = 1; m <= 5; ++m) {
        CHECK(brute_force_count(m) == frozen[m - 1]);
        CHECK(count_paradoxical(m) == frozen[m - 1]);
    }
    for (int m = 1; m <= 20; ++m) {
        BigInt closed = 1;
        for (int k = 2; k < m; ++k) {
            closed *= k;
        }
        closed <<= (m - 1);
        CHECK(count_paradoxical(m) == closed);
    }
    // 19! * 2^19 needs more than 64 bits.
    CHECK(count_paradoxical(20).str() == "63777066403145711616000");
}

TEST_CASE("enumerate_paradoxical yields each configuration once") {
    CHECK(enumerate_paradoxical(1).size() == 1);
    CHECK(enumerate_paradoxical(1).front() == one_liar());
    CHECK(enumerate_paradoxical(3).size() == 8);
    CHECK(enumerate_paradoxical(4).size() == 48);
    for (int m = 1; m <= 8; ++m) {
        long long seen = 0;
        for_each_paradoxical(m, [&](const Configuration& c) {
            ++seen;
            CHECK_NOTHROW(validate(c));
            CHECK(is_paradoxical(c));
        });
        CHECK(BigInt(seen) == count_paradoxical(m));
    }
    const auto five = enumerate_paradoxical(5);
    std::set<std::pair<std::vector<int>, std::vector<bool>>> distinct;
    for (const auto& c : five) {
        distinct.emplace(c.referent, c.negating);
    }
    CHECK(distinct.size() == five.size());
}

TEST_CASE("enumeration bound") {
    CHECK(kind_of([] { enumerate_paradoxical(9); }) == ErrorKind::BoundExceeded);
    CHECK(kind_of([] { enumerate_paradoxical(3, 2); }) == ErrorKind::BoundExceeded);
}

TEST_CASE("flipping one polarity toggles paradoxicality") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 9);
        Configuration c = random_paradoxical(m, rng);
        REQUIRE(is_paradoxical(c));
        const auto i = static_cast<std::size_t>(rng() % m);
        c.negating[i] = !c.negating[i];
        CHECK_FALSE(is_paradoxical(c));
        c.negating[i] = !c.negating[i];
        CHECK(is_paradoxical(c));
    }
}

TEST_CASE("presets") {
    const auto c = eight_liar();
    // 1->3->8->2->7->4->6->5->1
    int s = 1;
    std::vector<int> order;
    for (int k = 0; k < 8; ++k) {
        order.push_back(s);
        s = c.referent_of(s);
    }
    CHECK(order == std::vector<int>{1, 3, 8, 2, 7, 4, 6, 5});
    CHECK(s == 1);
    for (int m = 1; m <= 10; ++m) {
        CHECK_NOTHROW(validate(chain_liar(m)));
        CHECK(is_paradoxical(chain_liar(m)));
    }
}
