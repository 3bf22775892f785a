#include "doctest.h"

#include "ncb/enumerate.hpp"
#include "ncb/partition.hpp"

#include <map>

using namespace ncb;

namespace {

BPartition pi1()
{
    return BPartition(6, {{1, 2, 5}, {-1, -2, -5}, {3, -6}, {-3, 6}, {4}, {-4}});
}

BPartition pi2() { return BPartition(6, {{1, -1, 5, -5}, {2, 3, 4}, {-2, -3, -4}, {6}, {-6}}); }

BPartition eq_pi()
{
    return BPartition(8, {{1, -5}, {-1, 5}, {2}, {-2}, {3, -4, -6, 8}, {-3, 4, 6, -8}, {7}, {-7}});
}

}  // namespace

TEST_CASE("canonical form and validation")
{
    const BPartition a(2, {{-2, 1}, {2, -1}});
    CHECK(a.blocks() == std::vector<Block>{{1, -2}, {-1, 2}});
    CHECK(a.to_string() == "{{1,-2},{-1,2}}");
    CHECK_THROWS_AS(BPartition(2, {{1}, {-1}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(BPartition(2, {{1, 2}, {-1}, {-2}}), std::invalid_argument);
    CHECK_THROWS_AS(BPartition(2, {{1, -1}, {2, -2}}), std::invalid_argument);
    CHECK_THROWS_AS(BPartition(2, {{1, 1}, {-1, -1}, {2}, {-2}}), std::invalid_argument);
}

TEST_CASE("JSON round trip and rejection")
{
    const auto j = to_json(pi1());
    CHECK(j["n"] == 6);
    CHECK(partition_from_json(j) == pi1());
    const auto text = nlohmann::json::parse(R"({"n":2,"blocks":[[1,2],[-1,-2]]})");
    CHECK(partition_from_json(text) == BPartition(2, {{1, 2}, {-1, -2}}));
    CHECK_THROWS(partition_from_json(nlohmann::json::parse(R"({"n":2})")));
    CHECK_THROWS(partition_from_json(nlohmann::json::parse(R"({"n":2,"blocks":[[1,2]]})")));
    CHECK_THROWS(partition_from_json(nlohmann::json::parse(R"({"n":"x","blocks":[]})")));
}

TEST_CASE("adjusted orbits")
{
    const auto t2 = SignedPermutation::from_cycles(6, {{1, -1}, {2, 3, 4}, {5, -5}});
    CHECK(adjusted_orbits(t2) == pi2());
    CHECK(adjusted_orbits(identity(4)) == BPartition::bottom(4));
    CHECK(adjusted_orbits(gamma(AnnulusShape::annulus(3, 2))) == BPartition::top(5));
}

TEST_CASE("rank, connectivity, pair statistics")
{
    const auto shape = AnnulusShape::annulus(4, 2);
    CHECK(rank(pi1()) == 3);
    CHECK(rank(BPartition::bottom(6)) == 0);
    CHECK(rank(BPartition::top(6)) == 6);
    CHECK(connectivity(pi1(), shape) == 2);
    CHECK(connectivity(pi2(), shape) == 0);
    CHECK(connectivity(BPartition::bottom(6), shape) == 0);
    CHECK(pair_stats(pi1(), shape) == PairStats{2, 1, 0});
    CHECK(pair_stats(BPartition::top(6), shape) == PairStats{0, 0, 0});
    CHECK(pair_stats(eq_pi(), AnnulusShape::annulus(5, 3)) == PairStats{1, 2, 1});
}

TEST_CASE("zero-block")
{
    CHECK(zero_block(pi2()) == Block{1, -1, 5, -5});
    CHECK(!zero_block(pi1()).has_value());
    CHECK(zero_block(BPartition::top(2))->size() == 4);
}

TEST_CASE("partition order mirrors the absolute order")
{
    for (int n = 2; n <= 5; ++n) {
        for (int p = 1; p < n; ++p) {
            const auto shape = AnnulusShape::annulus(p, n - p);
            const auto perms = interval_perms(gamma(shape));
            std::vector<BPartition> images;
            for (const auto& t : perms) images.push_back(adjusted_orbits(t));
            for (std::size_t i = 0; i < perms.size(); ++i) {
                CHECK(rank(images[i]) == length_b(perms[i]));
                for (std::size_t j = 0; j < perms.size(); ++j) {
                    CHECK(leq(images[i], images[j]) == leq(perms[i], perms[j]));
                }
            }
        }
    }
}

TEST_CASE("positive connectivity excludes a zero-block")
{
    for (int n = 2; n <= 5; ++n) {
        for (int p = 1; p < n; ++p) {
            const auto shape = AnnulusShape::annulus(p, n - p);
            for (const auto& pi : nc_b_elements(shape)) {
                const PairStats s = pair_stats(pi, shape);
                if (s.c == 0) continue;
                CHECK(!zero_block(pi).has_value());
                CHECK(s.c <= std::min(p, n - p));
            }
        }
    }
}

TEST_CASE("absolute value map on the disc")
{
    for (int n = 1; n <= 4; ++n) {
        std::map<ClassicalPartition, int> fibers;
        for (const auto& pi : nc_b_elements(AnnulusShape::disc(n))) {
            const ClassicalPartition image = abs_map(pi);
            CHECK(is_noncrossing(image));
            ++fibers[image];
            // With a zero-block, its image is the only block holding fixed signs.
            if (auto z = zero_block(pi)) CHECK(image.blocks()[image.block_of(std::abs((*z)[0]))].size() * 2 == z->size());
        }
        CHECK(fibers.size() == nc_a(n).elements.size());
        for (const auto& [image, count] : fibers) CHECK(count == n + 1);
    }
    const ClassicalPartition crossing(4, {{1, 3}, {2, 4}});
    CHECK(!is_noncrossing(crossing));
}

TEST_CASE("Kreweras complement reverses the order")
{
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        const auto shape = AnnulusShape::annulus(p, q);
        const auto poset = cached_poset(shape);
        const int n = p + q;
        CHECK(kreweras(BPartition::bottom(n), shape) == BPartition::top(n));
        for (const auto& a : poset->elements) {
            const BPartition ka = kreweras(a, shape);
            CHECK(poset->contains(ka));
            CHECK(rank(a) + rank(ka) == n);
            for (const auto& b : poset->elements) {
                if (leq(a, b)) CHECK(leq(kreweras(b, shape), ka));
            }
        }
    }
    CHECK_THROWS_AS(kreweras(BPartition(3, {{1, 3}, {-1, -3}, {2, -2}}), AnnulusShape::annulus(2, 1)),
                    std::invalid_argument);
}

TEST_CASE("Mobius function is symmetric under the Kreweras complement")
{
    const auto shape = AnnulusShape::annulus(2, 1);
    const auto poset = cached_poset(shape);
    const auto& P = poset->poset;
    for (std::size_t i = 0; i < P.size(); ++i) {
        const std::size_t ki = poset->index_of(kreweras(poset->elements[i], shape));
        CHECK(mobius_oracle(P, P.bottom(), i) == mobius_oracle(P, ki, P.top()));
    }
}

TEST_CASE("intersection meet is the greatest lower bound for (p,1)")
{
    for (int p = 2; p <= 3; ++p) {
        const auto shape = AnnulusShape::annulus(p, 1);
        const auto poset = cached_poset(shape);
        const auto& els = poset->elements;
        for (const auto& a : els) {
            for (const auto& b : els) {
                const BPartition m = meet_q1(a, b, shape);
                REQUIRE(poset->contains(m));
                CHECK(leq(m, a));
                CHECK(leq(m, b));
                for (const auto& c : els) {
                    if (leq(c, a) && leq(c, b)) CHECK(leq(c, m));
                }
            }
        }
    }
}
