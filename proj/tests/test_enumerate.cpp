#include "doctest.h"

#include "ncb/enumerate.hpp"
#include "ncb/formulas.hpp"

#include <set>

using namespace ncb;

TEST_CASE("interval sizes")
{
    CHECK(nc_b_elements(AnnulusShape::annulus(1, 1)).size() == 6);
    CHECK(nc_b_elements(AnnulusShape::annulus(2, 1)).size() == 20);
    CHECK(nc_b_elements(AnnulusShape::annulus(2, 2)).size() == 72);
    for (int n = 1; n <= 5; ++n) {
        CHECK(BigInt(nc_b_elements(AnnulusShape::disc(n)).size()) == binomial(2 * n, n));
        CHECK(BigInt(nc_a(n).elements.size()) == catalan(n));
    }
}

TEST_CASE("filter and growth enumerations agree")
{
    for (const auto& shape : {AnnulusShape::annulus(3, 2), AnnulusShape::disc(4), AnnulusShape({1, 1, 2})}) {
        const auto g = gamma(shape);
        const auto a = interval_perms_filter(g);
        const auto b = interval_perms_bfs(g);
        CHECK(std::set<SignedPermutation>(a.begin(), a.end()) == std::set<SignedPermutation>(b.begin(), b.end()));
        CHECK(a.size() == b.size());
    }
}

TEST_CASE("NC^(B)(1,1) and NC^(B)(2) have the same size")
{
    CHECK(nc_b_elements(AnnulusShape::annulus(1, 1)).size() == nc_b_elements(AnnulusShape::disc(2)).size());
}

TEST_CASE("poset structure")
{
    const auto poset = cached_poset(AnnulusShape::annulus(2, 1));
    const auto& P = poset->poset;
    CHECK(P.size() == 20);
    CHECK(P.max_rank() == 3);
    CHECK(poset->elements[P.bottom()] == BPartition::bottom(3));
    CHECK(poset->elements[P.top()] == BPartition::top(3));
    CHECK(rank_vector(P) == std::vector<std::size_t>{1, 9, 9, 1});
    for (std::size_t i = 0; i < P.size(); ++i) {
        CHECK(rank(poset->elements[i]) == P.rank(i));
        CHECK(adjusted_orbits(poset->perms[i]) == poset->elements[i]);
        CHECK(poset->index_of(poset->elements[i]) == i);
    }
    // Gradedness: every cover raises the rank by one.
    for (auto [a, b] : hasse_edges(P)) CHECK(P.rank(b) == P.rank(a) + 1);
    CHECK(hasse_edges(P).size() == 46);
    CHECK_THROWS_AS(poset->index_of(BPartition(3, {{1, 3}, {-1, -3}, {2, -2}})), std::invalid_argument);
}

TEST_CASE("cached poset is shared")
{
    const auto a = cached_poset(AnnulusShape::annulus(2, 2));
    const auto b = cached_poset(AnnulusShape::annulus(2, 2));
    CHECK(a.get() == b.get());
}

TEST_CASE("Mobius oracle")
{
    const auto small = cached_poset(AnnulusShape::annulus(1, 1));
    CHECK(mobius_oracle(small->poset, small->poset.bottom(), small->poset.top()) == 3);
    const auto poset = cached_poset(AnnulusShape::annulus(2, 1));
    const auto& P = poset->poset;
    CHECK(mobius_oracle(P, P.bottom(), P.top()) == -11);
    const auto to_top = mobius_to(P, P.top());
    const auto from_bottom = mobius_from(P, P.bottom());
    CHECK(to_top[P.bottom()] == -11);
    CHECK(from_bottom[P.top()] == -11);
    // Sum of μ(x, z) over x <= z <= y vanishes for x < y.
    BigInt total = 0;
    for (std::size_t z = 0; z < P.size(); ++z) total += from_bottom[z];
    CHECK(total == 0);
    CHECK(interpolated_zeta(P, -1) == Rational(-11));
}

TEST_CASE("multichains and maximal chains")
{
    const auto small = cached_poset(AnnulusShape::annulus(1, 1));
    CHECK(zeta_oracle(small->poset, 2) == 6);
    CHECK(zeta_oracle(small->poset, 3) == 15);
    CHECK(maximal_chains_oracle(small->poset) == 4);
    const auto poset = cached_poset(AnnulusShape::annulus(2, 1));
    CHECK(zeta_oracle(poset->poset, 3) == 85);
    CHECK(maximal_chains_oracle(poset->poset) == 28);
    CHECK(maximal_chains_oracle(cached_poset(AnnulusShape::disc(3))->poset) == 27);
    CHECK_THROWS(zeta_oracle(poset->poset, 1));
}

TEST_CASE("every joint orbit of an element and gamma meets at most two boundary cycles")
{
    const std::vector<std::vector<int>> shapes = {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 1, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}};
    for (const auto& sizes : shapes) {
        const AnnulusShape shape(sizes);
        const auto g = gamma(shape);
        const int n = shape.n();
        for (const auto& t : interval_perms(g)) {
            // Grow each joint orbit from a seed by applying t and g.
            std::vector<bool> seen(2 * n, false);
            for (int seed = 0; seed < 2 * n; ++seed) {
                if (seen[seed]) continue;
                std::set<int> cycles;
                std::vector<int> stack = {point_at(seed, n)};
                seen[seed] = true;
                while (!stack.empty()) {
                    const int x = stack.back();
                    stack.pop_back();
                    cycles.insert(shape.cycle_of(x));
                    for (int y : {t(x), g(x)}) {
                        if (!seen[point_index(y, n)]) {
                            seen[point_index(y, n)] = true;
                            stack.push_back(y);
                        }
                    }
                }
                CHECK(cycles.size() <= 2);
            }
        }
    }
}

TEST_CASE("three-circle totals")
{
    CHECK(nc_b_elements(AnnulusShape({1, 1, 1})).size() == 20);
    CHECK(nc_b_elements(AnnulusShape({1, 1, 2})).size() == 68);
    CHECK(multi3_total(1, 1, 1) == 20);
    CHECK(multi3_total(2, 1, 1) == 68);
    CHECK(multi3_total(1, 2, 1) == 68);
}

TEST_CASE("Graphviz output")
{
    const auto poset = cached_poset(AnnulusShape::annulus(1, 1));
    const std::string dot = to_dot(poset->poset);
    CHECK(dot.rfind("digraph", 0) == 0);
    std::size_t arrows = 0;
    for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++arrows;
    CHECK(arrows == hasse_edges(poset->poset).size());
}

TEST_CASE("desk bounds")
{
    CHECK_THROWS_AS(check_desk_bound(AnnulusShape::annulus(5, 4)), DeskBoundError);
    CHECK_THROWS_AS(check_desk_bound(AnnulusShape({3, 2, 2})), DeskBoundError);
    CHECK_NOTHROW(check_desk_bound(AnnulusShape::annulus(4, 4)));
}
