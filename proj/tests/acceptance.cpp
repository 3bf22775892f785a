// Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownUnattainable, whose lines still print FAIL with the measured values.

#include "ncb/bijection.hpp"
#include "ncb/enumerate.hpp"
#include "ncb/formulas.hpp"
#include "ncb/partition.hpp"
#include "ncb/signed_perm.hpp"
#include "ncb/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace ncb;

namespace {

const std::set<int> kKnownUnattainable = {4};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& what)
    {
        if (pass) detail = what;
        pass = false;
    }
    void expect(bool ok, const std::string& what)
    {
        if (!ok) fail(what);
    }
};

std::string shape_text(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

BPartition partition_of(int n, std::vector<Block> blocks) { return BPartition(n, std::move(blocks)); }

Outcome criterion_1()
{
    Outcome out;
    const auto start = Clock::now();
    for (int n = 2; n <= 6; ++n) {
        const auto poset = cached_poset(AnnulusShape::annulus(n - 1, 1));
        const auto ranks = rank_vector(poset->poset);
        std::ostringstream got;
        bool ok = ranks.size() == static_cast<std::size_t>(n + 1);
        for (int k = 0; k <= n && ok; ++k) ok = BigInt(ranks[k]) == binomial(n, k) * binomial(n, k);
        out.expect(ok, "rank counts differ at n=" + std::to_string(n));
    }
    const double elapsed = seconds_since(start);
    out.expect(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
    if (out.pass) out.detail = "n=2..6 in " + std::to_string(elapsed) + " s";
    return out;
}

Outcome criterion_2()
{
    Outcome out;
    int shapes = 0;
    for (int n = 2; n <= 7; ++n) {
        for (int p = 1; p < n; ++p) {
            const int q = n - p;
            const auto count = nc_b_elements(AnnulusShape::annulus(p, q)).size();
            const BigInt closed = require_integer(
                ratio(BigInt(p + q + p * q) * binomial(2 * p, p) * binomial(2 * q, q), BigInt(p + q)), "total");
            out.expect(BigInt(count) == closed && annulus_total(p, q) == closed,
                       shape_text(p, q) + ": enumerated " + std::to_string(count) + ", closed " + to_string(closed));
            ++shapes;
        }
    }
    if (out.pass) out.detail = std::to_string(shapes) + " shapes with p+q<=7";
    return out;
}

Outcome criterion_3()
{
    Outcome out;
    int shapes = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int p = 1; p < n; ++p) {
            const int q = n - p;
            const AnnulusShape shape = AnnulusShape::annulus(p, q);
            std::map<std::tuple<int, int, int>, long long> cells;
            std::map<int, long long> by_c;
            for (const auto& pi : nc_b_elements(shape)) {
                const PairStats s = pair_stats(pi, shape);
                ++by_c[s.c];
                if (s.c > 0) ++cells[{s.c, s.e, s.i}];
            }
            for (int c = 1; c <= std::min(p, q); ++c) {
                for (int e = 0; e + c <= p; ++e) {
                    for (int i = 0; i + c <= q; ++i) {
                        const long long got = cells.count({c, e, i}) ? cells[{c, e, i}] : 0;
                        out.expect(BigInt(got) == annulus_cell_count(p, q, c, e, i),
                                   shape_text(p, q) + " cell c=" + std::to_string(c) + " e=" + std::to_string(e) +
                                       " i=" + std::to_string(i));
                    }
                }
            }
            for (int c = 0; c <= std::min(p, q); ++c) {
                out.expect(BigInt(by_c[c]) == annulus_connectivity_count(p, q, c),
                           shape_text(p, q) + " connectivity " + std::to_string(c));
            }
            ++shapes;
        }
    }
    if (out.pass) out.detail = std::to_string(shapes) + " shapes with p+q<=6";
    return out;
}

Outcome criterion_4()
{
    Outcome out;
    const auto annulus = cached_poset(AnnulusShape::annulus(2, 1));
    const std::size_t annulus_edges = hasse_edges(annulus->poset).size();
    out.expect(annulus_edges == 46, "NC^(B)(2,1) has " + std::to_string(annulus_edges) + " edges, expected 46");

    const auto disc = cached_poset(AnnulusShape::disc(3));
    const std::size_t disc_edges = hasse_edges(disc->poset).size();
    // Rank sizes 1,9,9,1 with unique bottom and top: every maximal chain
    // passes through exactly one middle cover, so edges = 9 + chains + 9.
    const BigInt chains = maximal_chains_oracle(disc->poset);
    const BigInt forced = BigInt(9) + chains + 9;
    const std::string disc_text = "NC^(B)(3) has " + std::to_string(disc_edges) + " edges (9+" + to_string(chains) +
                                  "+9=" + to_string(forced) + " forced by the maximal-chain count), stated value 44";
    out.expect(disc_edges == 44, disc_text);
    out.expect(BigInt(disc_edges) == forced, "edge count disagrees with chain count");
    std::string prefix = "NC^(B)(2,1) has " + std::to_string(annulus_edges) + " edges; ";
    out.detail = prefix + disc_text;
    return out;
}

Outcome criterion_5()
{
    Outcome out;
    for (int n = 2; n <= 6; ++n) {
        const auto poset = cached_poset(AnnulusShape::disc(n));
        const FinitePoset& P = poset->poset;
        out.expect(mobius_oracle(P, P.bottom(), P.top()) == disc_counts(n).mobius_b,
                   "disc n=" + std::to_string(n));
    }
    for (int n = 2; n <= 6; ++n) {
        for (int p = 1; p < n; ++p) {
            const int q = n - p;
            const auto poset = cached_poset(AnnulusShape::annulus(p, q));
            const FinitePoset& P = poset->poset;
            const BigInt mu = mobius_oracle(P, P.bottom(), P.top());
            out.expect(mu == mobius_annulus(p, q), shape_text(p, q) + " closed form");
            out.expect(Rational(mu) == interpolated_zeta(P, -1), shape_text(p, q) + " Z(-1)");
        }
    }
    const auto small = cached_poset(AnnulusShape::annulus(1, 1));
    const auto medium = cached_poset(AnnulusShape::annulus(2, 1));
    const BigInt mu11 = mobius_oracle(small->poset, small->poset.bottom(), small->poset.top());
    const BigInt mu21 = mobius_oracle(medium->poset, medium->poset.bottom(), medium->poset.top());
    out.expect(mu21 == -11, "mu(2,1) = " + to_string(mu21));
    out.expect(mu11 == 3, "mu(1,1) = " + to_string(mu11));
    if (out.pass) out.detail = "mu(1,1)=" + to_string(mu11) + ", mu(2,1)=" + to_string(mu21);
    return out;
}

Outcome criterion_6()
{
    Outcome out;
    for (int n = 2; n <= 5; ++n) {
        for (int p = 1; p < n; ++p) {
            const int q = n - p;
            const auto poset = cached_poset(AnnulusShape::annulus(p, q));
            for (int m = 2; m <= 4; ++m) {
                const BigInt oracle = zeta_oracle(poset->poset, m);
                const std::string where = shape_text(p, q) + " m=" + std::to_string(m);
                out.expect(oracle == zeta_poly(p, q, m), where);
                if (q == 1) out.expect(oracle == zeta_poly_q1(p + 1, m), where + " (n-1,1) form");
            }
        }
    }
    const BigInt z11 = zeta_oracle(cached_poset(AnnulusShape::annulus(1, 1))->poset, 3);
    const BigInt z21 = zeta_oracle(cached_poset(AnnulusShape::annulus(2, 1))->poset, 3);
    out.expect(z11 == 15, "Z(1,1;3) = " + to_string(z11));
    out.expect(z21 == 85, "Z(2,1;3) = " + to_string(z21));
    if (out.pass) out.detail = "Z(1,1;3)=" + to_string(z11) + ", Z(2,1;3)=" + to_string(z21);
    return out;
}

Outcome criterion_7()
{
    Outcome out;
    for (int n = 2; n <= 5; ++n) {
        for (int p = 1; p < n; ++p) {
            const int q = n - p;
            const BigInt oracle = maximal_chains_oracle(cached_poset(AnnulusShape::annulus(p, q))->poset);
            out.expect(oracle == max_chains(p, q), shape_text(p, q));
        }
    }
    const BigInt c11 = maximal_chains_oracle(cached_poset(AnnulusShape::annulus(1, 1))->poset);
    const BigInt c21 = maximal_chains_oracle(cached_poset(AnnulusShape::annulus(2, 1))->poset);
    out.expect(c11 == 4, "chains(1,1) = " + to_string(c11));
    out.expect(c21 == 28, "chains(2,1) = " + to_string(c21));
    if (out.pass) out.detail = "chains(1,1)=" + to_string(c11) + ", chains(2,1)=" + to_string(c21);
    return out;
}

Outcome criterion_8()
{
    Outcome out;
    const auto start = Clock::now();
    for (int n = 2; n <= 5; ++n) {
        for (int p = 1; p < n; ++p) {
            const std::string err = annulus_round_trip(p, n - p);
            out.expect(err.empty(), shape_text(p, n - p) + ": " + err);
        }
    }
    for (int n = 2; n <= 4; ++n) {
        for (int p = 1; p < n; ++p) {
            for (int m = 2; m <= 4; ++m) {
                const std::string err = multichain_round_trip(p, n - p, m);
                out.expect(err.empty(), shape_text(p, n - p) + " m=" + std::to_string(m) + ": " + err);
            }
        }
    }
    const double elapsed = seconds_since(start);
    out.expect(elapsed < 120.0, "took " + std::to_string(elapsed) + " s");
    if (out.pass) out.detail = "annulus p+q<=5, multichain p+q<=4 m<=4 in " + std::to_string(elapsed) + " s";
    return out;
}

Outcome criterion_9()
{
    Outcome out;

    const ParenString s = parse_paren_string("( ) ( ( ) ( (");
    out.expect(legal_left_shifts(s) == std::vector<int>{2, 5, 6}, "legal shift set");

    const AnnulusTuple t = parse_tuple("c=1 d=2 LE=2,4,5 RE=1,2 LI=7 RI=6,7");
    const ParenString u = exterior_string(t, 5);
    out.expect(u == parse_paren_string("1 ) ( 2 ) 3 ( 4 ( 5 -1 ) ( -2 ) -3 ( -4 ( -5"), "exterior string");
    out.expect(legal_left_shifts(u) == std::vector<int>{6, 16}, "exterior shifts");
    const ParenString v = interior_string(t, 5, 3);
    out.expect(v == parse_paren_string("6 ) ( 7 ) 8 -6 ) ( -7 ) -8"), "interior string");
    const ParenString t1 = cyclic_shift(u, 16);
    const ParenString t2 = cyclic_shift(v, legal_right_shifts(v).back());
    out.expect(t1 == parse_paren_string("( -4 ( -5 1 ) ( 2 ) 3 ( 4 ( 5 -1 ) ( -2 ) -3"), "t1");
    out.expect(t2 == parse_paren_string("( -7 ) -8 6 ) ( 7 ) 8 -6 )"), "t2");

    const BPartition pi = partition_of(8, {{1, -5}, {-1, 5}, {2}, {-2}, {3, -4, -6, 8}, {-3, 4, 6, -8}, {7}, {-7}});
    out.expect(encode_annulus(t, 5, 3) == pi, "annulus encode");
    out.expect(decode_annulus(pi, 5, 3) == t, "annulus decode");

    const AnnulusTuple chain_tuple = parse_tuple("c=2 d=1 LE=1,2,3,5,6 RE1=1,3 RE2=3 LI=8,9 RI1=7,8,9 RI2=7");
    std::vector<Block> first_blocks = {{4, -6, 7}, {-4, 6, -7}};
    for (int x : {1, 2, 3, 5, 8, 9}) {
        first_blocks.push_back({x});
        first_blocks.push_back({-x});
    }
    const BPartition pi1 = partition_of(9, first_blocks);
    const BPartition pi2 =
        partition_of(9, {{1, 4, -5, -6, 7, -8, -9}, {-1, -4, 5, 6, -7, 8, 9}, {2, 3}, {-2, -3}});
    const std::vector<BPartition> chain = {pi1, pi2};
    out.expect(encode_multichain(chain_tuple, 6, 3) == chain, "multichain encode");
    out.expect(decode_multichain(chain, 6, 3) == chain_tuple, "multichain decode");
    out.expect(rank(pi1) == 2 && rank(pi2) == 7, "multichain ranks");

    if (out.pass) out.detail = "shift set {2,5,6}; annulus pair; two-level chain";
    return out;
}

// Number of distinct boundary cycles met by each joint orbit of tau and gamma.
int max_cycles_per_joint_orbit(const SignedPermutation& tau, const SignedPermutation& g, const AnnulusShape& shape)
{
    const int n = shape.n();
    std::vector<int> parent(2 * n);
    for (int i = 0; i < 2 * n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    for (int i = 0; i < 2 * n; ++i) {
        const int x = point_at(i, n);
        parent[find(i)] = find(point_index(tau(x), n));
        parent[find(i)] = find(point_index(g(x), n));
    }
    std::map<int, std::set<int>> cycles;
    for (int i = 0; i < 2 * n; ++i) cycles[find(i)].insert(shape.cycle_of(point_at(i, n)));
    int most = 0;
    for (const auto& [root, set] : cycles) most = std::max(most, static_cast<int>(set.size()));
    return most;
}

void for_each_composition(int total, int parts, std::vector<int>& prefix, const std::function<void()>& f)
{
    if (parts == 0) {
        if (total == 0) f();
        return;
    }
    for (int a = 1; a <= total - (parts - 1); ++a) {
        prefix.push_back(a);
        for_each_composition(total - a, parts - 1, prefix, f);
        prefix.pop_back();
    }
}

Outcome criterion_10()
{
    Outcome out;
    long long checked = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            std::vector<int> sizes;
            for_each_composition(n, k, sizes, [&] {
                const AnnulusShape shape(sizes);
                const SignedPermutation g = gamma(shape);
                for (const auto& tau : interval_perms(g)) {
                    ++checked;
                    if (max_cycles_per_joint_orbit(tau, g, shape) > 2) {
                        out.fail("splitting fails on " + shape.to_string() + " at " + tau.to_cycle_string());
                    }
                }
            });
        }
    }

    const auto c111 = nc_b_elements(AnnulusShape({1, 1, 1})).size();
    const auto c112 = nc_b_elements(AnnulusShape({1, 1, 2})).size();
    out.expect(c111 == 20 && multi3_total(1, 1, 1) == 20, "NC^(B)(1,1,1) = " + std::to_string(c111));
    out.expect(c112 == 68 && multi3_total(1, 1, 2) == 68, "NC^(B)(1,1,2) = " + std::to_string(c112));

    long long pairs = 0;
    for (int n = 2; n <= 3; ++n) {
        const auto group = all_signed_permutations(n);
        for (const auto& tau : group) {
            for (const auto& sigma : group) {
                const int defect = genus_defect(tau, sigma);
                ++pairs;
                if (defect < 0 || defect % 2 != 0) {
                    out.fail("genus defect " + std::to_string(defect) + " at " + tau.to_cycle_string() + ", " +
                             sigma.to_cycle_string());
                }
            }
        }
    }
    if (out.pass) {
        out.detail = std::to_string(checked) + " interval elements; |NC^(B)(1,1,1)|=20, |NC^(B)(1,1,2)|=68; " +
                     std::to_string(pairs) + " genus pairs";
    }
    return out;
}

Outcome criterion_11()
{
    Outcome out;
    const auto start = Clock::now();
    const VerifyReport report = verify_suite(VerifyBounds{});
    const double elapsed = seconds_since(start);
    const std::set<std::string> identities = {"Chu-Vandermonde", "multinomial hypersum", "Dixon consequence",
                                              "compact rank form"};
    std::map<std::string, int> seen;
    for (const auto& check : report.checks) {
        if (identities.count(check.name)) {
            ++seen[check.name];
            out.expect(check.pass, check.name + " " + check.params);
        }
    }
    for (const auto& name : identities) out.expect(seen[name] > 0, name + " not run");
    out.expect(report.all_passed(), std::to_string(report.failures()) + " suite checks failed");
    out.expect(elapsed < 300.0, "suite took " + std::to_string(elapsed) + " s");
    if (out.pass) {
        out.detail = std::to_string(report.checks.size()) + " suite checks in " + std::to_string(elapsed) + " s";
    }
    return out;
}

}  // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5,  criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
    };
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i + 1);
        Outcome result;
        try {
            result = criteria[i]();
        } catch (const std::exception& e) {
            result.fail(std::string("exception: ") + e.what());
        }
        const bool known = kKnownUnattainable.count(number) != 0;
        std::printf("criterion %2d: %s  %s%s\n", number, result.pass ? "PASS" : "FAIL", result.detail.c_str(),
                    !result.pass && known ? "  [known unattainable]" : "");
        if (!result.pass && !known) ++unexpected;
        if (result.pass && known) std::printf("criterion %2d: now passes, remove it from the unattainable list\n", number);
    }
    std::fflush(stdout);
    return unexpected == 0 ? 0 : 1;
}
