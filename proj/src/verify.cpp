#include "ncb/verify.hpp"

#include "ncb/bijection.hpp"
#include "ncb/enumerate.hpp"
#include "ncb/formulas.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace ncb {

namespace {

template <typename T>
std::string join(const std::vector<T>& values)
{
    std::ostringstream out;
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (j) out << ',';
        out << values[j];
    }
    return out.str();
}

std::string shape_params(int p, int q) { return "p=" + std::to_string(p) + " q=" + std::to_string(q); }

class Collector {
public:
    Collector(VerifyReport& report, const std::function<void(const CheckResult&)>& progress)
        : report_(report), progress_(progress)
    {
    }

    void add(std::string name, std::string params, std::string formula, std::string oracle)
    {
        CheckResult r{std::move(name), std::move(params), std::move(formula), std::move(oracle), false};
        r.pass = r.formula == r.oracle;
        if (progress_) progress_(r);
        report_.checks.push_back(std::move(r));
    }

private:
    VerifyReport& report_;
    const std::function<void(const CheckResult&)>& progress_;
};

// All multichains x_1 <= ... <= x_len of the poset, as index sequences.
void for_each_multichain(const FinitePoset& poset, int len, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> chain;
    std::function<void()> extend = [&] {
        if (static_cast<int>(chain.size()) == len) {
            f(chain);
            return;
        }
        for (std::size_t z = 0; z < poset.size(); ++z) {
            if (chain.empty() || poset.leq(chain.back(), z)) {
                chain.push_back(z);
                extend();
                chain.pop_back();
            }
        }
    };
    extend();
}

void check_disc(Collector& out, int max_n)
{
    for (int n = 1; n <= max_n; ++n) {
        const auto poset = cached_poset(AnnulusShape::disc(n));
        const DiscCounts counts = disc_counts(n);
        const std::string params = "n=" + std::to_string(n);
        out.add("disc rank vector", params, join(counts.rank_counts), join(rank_vector(poset->poset)));
        out.add("disc total", params, to_string(counts.total), std::to_string(poset->elements.size()));
        out.add("disc Mobius (type B)", params, to_string(counts.mobius_b),
                to_string(mobius_oracle(poset->poset, poset->poset.bottom(), poset->poset.top())));
    }
    for (int n = 1; n <= std::min(max_n + 2, 10); ++n) {
        const APoset a = nc_a(n);
        const std::string params = "n=" + std::to_string(n);
        out.add("type A total", params, to_string(catalan(n)), std::to_string(a.elements.size()));
        std::vector<BigInt> narayanas;
        for (int k = 0; k < n; ++k) narayanas.push_back(narayana(n, k));
        out.add("type A rank vector", params, join(narayanas), join(rank_vector(a.poset)));
        out.add("type A Mobius", params, to_string(disc_counts(n).mobius_a),
                to_string(mobius_oracle(a.poset, a.poset.bottom(), a.poset.top())));
    }
}

void check_annulus(Collector& out, int p, int q)
{
    const AnnulusShape shape = AnnulusShape::annulus(p, q);
    const auto poset = cached_poset(shape);
    const FinitePoset& P = poset->poset;
    const std::string params = shape_params(p, q);

    out.add("annulus total", params, to_string(annulus_total(p, q)), std::to_string(poset->elements.size()));

    std::map<int, std::size_t> by_c;
    std::map<std::tuple<int, int, int>, std::size_t> cells;
    for (const auto& pi : poset->elements) {
        const PairStats s = pair_stats(pi, shape);
        ++by_c[s.c];
        if (s.c > 0) ++cells[{s.c, s.e, s.i}];
    }
    std::vector<std::string> formula_c, oracle_c;
    for (int c = 0; c <= std::min(p, q); ++c) {
        formula_c.push_back(std::to_string(c) + ":" + to_string(annulus_connectivity_count(p, q, c)));
        oracle_c.push_back(std::to_string(c) + ":" + std::to_string(by_c[c]));
    }
    out.add("connectivity histogram", params, join(formula_c), join(oracle_c));

    std::vector<std::string> formula_cells, oracle_cells;
    for (int c = 1; c <= std::min(p, q); ++c) {
        for (int e = 0; e + c <= p; ++e) {
            for (int i = 0; i + c <= q; ++i) {
                const std::string key = std::to_string(c) + "/" + std::to_string(e) + "/" + std::to_string(i) + ":";
                formula_cells.push_back(key + to_string(annulus_cell_count(p, q, c, e, i)));
                const auto it = cells.find({c, e, i});
                oracle_cells.push_back(key + std::to_string(it == cells.end() ? 0 : it->second));
            }
        }
    }
    out.add("connectivity cells", params, join(formula_cells), join(oracle_cells));

    const IntPolynomial f = rank_gen(p, q);
    std::vector<BigInt> oracle_ranks;
    for (std::size_t r : rank_vector(P)) oracle_ranks.push_back(r);
    out.add("rank generating function", params, f.to_string(), IntPolynomial(oracle_ranks).to_string());
    out.add("compact rank generating function", params, rank_gen_compact(p, q).to_string(), f.to_string());

    const BigInt mu = mobius_oracle(P, P.bottom(), P.top());
    out.add("Mobius", params, to_string(mobius_annulus(p, q)), to_string(mu));
    out.add("Mobius as Z(-1)", params, to_string(zeta_poly(p, q, -1)), to_string(interpolated_zeta(P, -1)));
    if (q == 1) out.add("Mobius (n-1,1)", params, to_string(mobius_q1(p + 1)), to_string(mu));
}

void check_chains(Collector& out, int p, int q)
{
    const auto poset = cached_poset(AnnulusShape::annulus(p, q));
    const FinitePoset& P = poset->poset;
    const std::string params = shape_params(p, q);
    for (int m = 2; m <= 4; ++m) {
        const std::string mp = params + " m=" + std::to_string(m);
        const BigInt oracle = zeta_oracle(P, m);
        out.add("zeta polynomial", mp, to_string(zeta_poly(p, q, m)), to_string(oracle));
        if (q == 1) out.add("zeta polynomial (n-1,1)", mp, to_string(zeta_poly_q1(p + 1, m)), to_string(oracle));
        out.add("positive multichains", mp, to_string(zeta_positive_closed(p, q, m)),
                to_string(zeta_positive_direct(p, q, m)));
    }
    const BigInt chains = maximal_chains_oracle(P);
    out.add("maximal chains", params, to_string(max_chains(p, q)), to_string(chains));
    const auto coeffs = zeta_coefficients(p, q);
    out.add("maximal chains from leading coefficient", params, to_string(coeffs.back() * Rational(factorial(p + q))),
            to_string(chains));
}

void check_identities(Collector& out)
{
    bool ok = true;
    std::string first_bad;
    for (int n = 0; n <= 12 && ok; ++n) {
        for (int r = 0; r <= n; ++r) {
            if (vandermonde_sum(n, r) != vandermonde_closed(n, r)) {
                ok = false;
                first_bad = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                break;
            }
        }
    }
    out.add("Chu-Vandermonde", "n<=12", ok ? "holds" : "fails at " + first_bad, "holds");

    ok = true;
    first_bad.clear();
    std::vector<int> tops;
    std::function<void(int)> grow = [&](int remaining) {
        if (!ok) return;
        if (tops.size() >= 2) {
            for (int b = 0; b <= tops.back(); ++b) {
                if (hypersum_sum(tops, b) != hypersum_closed(tops, b)) {
                    ok = false;
                    first_bad = "A=" + join(tops) + " b=" + std::to_string(b);
                    return;
                }
            }
        }
        if (tops.size() == 4) return;
        for (int a = 0; a <= remaining; ++a) {
            tops.push_back(a);
            grow(remaining - a);
            tops.pop_back();
        }
    };
    grow(10);
    out.add("multinomial hypersum", "sum A<=10, k<=3", ok ? "holds" : "fails at " + first_bad, "holds");

    for (int p = 1; p <= 8; ++p) {
        for (int q = 1; q <= 8; ++q) {
            out.add("Dixon consequence", shape_params(p, q), to_string(dixon_closed(p, q)), to_string(dixon_sum(p, q)));
        }
    }
    for (int p = 1; p <= 6; ++p) {
        for (int q = 1; q <= 6; ++q) {
            out.add("compact rank form", shape_params(p, q), rank_gen_compact(p, q).to_string(), rank_gen(p, q).to_string());
        }
    }
    for (int n = 2; n <= 7; ++n) {
        std::vector<BigInt> squares;
        for (int k = 0; k <= n; ++k) squares.push_back(binomial(n, k) * binomial(n, k));
        out.add("rank counts (n-1,1) formula", "n=" + std::to_string(n), rank_gen(n - 1, 1).to_string(),
                IntPolynomial(squares).to_string());
    }
}

}  // namespace

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::string VerifyReport::table() const
{
    std::size_t name_w = 5, param_w = 6;
    for (const auto& c : checks) {
        name_w = std::max(name_w, c.name.size());
        param_w = std::max(param_w, c.params.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(name_w)) << "check" << "  " << std::setw(static_cast<int>(param_w))
        << "params" << "  formula | oracle  result\n";
    for (const auto& c : checks) {
        out << std::setw(static_cast<int>(name_w)) << c.name << "  " << std::setw(static_cast<int>(param_w)) << c.params
            << "  " << c.formula << " | " << c.oracle << "  " << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    return out.str();
}

std::string annulus_round_trip(int p, int q)
{
    const AnnulusShape shape = AnnulusShape::annulus(p, q);
    const auto poset = cached_poset(shape);
    std::set<BPartition> images;
    const auto tuples = enumerate_tuples(p, q, 2);
    for (const auto& t : tuples) {
        const BPartition pi = encode_annulus(t, p, q);
        if (!poset->contains(pi)) return "encode(" + to_string(t) + ") = " + pi.to_string() + " is not an element";
        if (connectivity(pi, shape) != t.c) return "encode(" + to_string(t) + ") has the wrong connectivity";
        const AnnulusTuple back = decode_annulus(pi, p, q);
        if (back != t) return "decode(encode(" + to_string(t) + ")) = " + to_string(back);
        images.insert(pi);
    }
    if (images.size() != tuples.size()) return "encoding is not injective";
    std::size_t positive = 0;
    for (const auto& pi : poset->elements) {
        if (connectivity(pi, shape) == 0) continue;
        ++positive;
        if (encode_annulus(decode_annulus(pi, p, q), p, q) != pi) return "encode(decode(" + pi.to_string() + ")) differs";
    }
    if (positive != tuples.size()) {
        return std::to_string(positive) + " positive partitions but " + std::to_string(tuples.size()) + " tuples";
    }
    return "";
}

std::string multichain_round_trip(int p, int q, int m)
{
    const AnnulusShape shape = AnnulusShape::annulus(p, q);
    const auto poset = cached_poset(shape);
    std::set<std::vector<BPartition>> images;
    const auto tuples = enumerate_tuples(p, q, m);
    for (const auto& t : tuples) {
        const auto chain = encode_multichain(t, p, q);
        bool positive = false;
        for (int j = 0; j < m - 1; ++j) {
            if (!poset->contains(chain[j])) return "encode(" + to_string(t) + ") leaves the poset";
            if (j > 0 && !leq(chain[j - 1], chain[j])) return "encode(" + to_string(t) + ") is not a multichain";
            std::size_t tail = 0;
            for (int k = j; k < m - 1; ++k) tail += t.right_ext[k].size() + t.right_int[k].size();
            if (rank(chain[j]) != p + q - static_cast<int>(tail)) {
                return "encode(" + to_string(t) + ") level " + std::to_string(j + 1) + " has the wrong rank";
            }
            positive = positive || connectivity(chain[j], shape) > 0;
        }
        if (!positive) return "encode(" + to_string(t) + ") has no level of positive connectivity";
        if (decode_multichain(chain, p, q) != t) return "decode(encode(" + to_string(t) + ")) differs";
        images.insert(chain);
    }
    if (images.size() != tuples.size()) return "encoding is not injective";

    std::size_t positive_chains = 0;
    std::string failure;
    for_each_multichain(poset->poset, m - 1, [&](const std::vector<std::size_t>& idx) {
        if (!failure.empty()) return;
        std::vector<BPartition> chain;
        bool positive = false;
        for (std::size_t z : idx) {
            chain.push_back(poset->elements[z]);
            positive = positive || connectivity(chain.back(), shape) > 0;
        }
        if (!positive) return;
        ++positive_chains;
        if (!images.count(chain)) failure = "multichain starting " + chain.front().to_string() + " has no tuple";
    });
    if (!failure.empty()) return failure;
    if (positive_chains != tuples.size()) return "positive multichain count differs from tuple count";
    return "";
}

VerifyReport verify_suite(const VerifyBounds& bounds, const std::function<void(const CheckResult&)>& progress)
{
    if (bounds.max_n < 1) throw std::invalid_argument("max-n must be positive");
    if (bounds.max_n > kMaxAnnulusN) {
        throw DeskBoundError("max-n " + std::to_string(bounds.max_n) + " exceeds the enumeration bound " +
                             std::to_string(kMaxAnnulusN));
    }
    VerifyReport report;
    Collector out(report, progress);
    const int max_n = bounds.max_n;

    check_disc(out, max_n);
    for (int n = 2; n <= max_n; ++n) {
        for (int p = n - 1; p >= 1; --p) check_annulus(out, p, n - p);
    }
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        for (int p = n - 1; p >= 1; --p) check_chains(out, p, n - p);
    }
    if (max_n >= 3) {
        out.add("Hasse edges", shape_params(2, 1), "46",
                std::to_string(hasse_edges(cached_poset(AnnulusShape::annulus(2, 1))->poset).size()));
        // Rank sizes 1,9,9,1: every middle cover lies on exactly one maximal chain.
        const BigInt disc_edges = binomial(3, 1) * binomial(3, 1) * 2 + max_chains_disc(3);
        out.add("Hasse edges", "n=3", to_string(disc_edges),
                std::to_string(hasse_edges(cached_poset(AnnulusShape::disc(3))->poset).size()));
    }
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        for (int p = n - 1; p >= 1; --p) {
            const std::string r = annulus_round_trip(p, n - p);
            out.add("annulus codec round trip", shape_params(p, n - p), r.empty() ? "bijective" : r, "bijective");
        }
    }
    for (int n = 2; n <= std::min(max_n, 4); ++n) {
        for (int p = n - 1; p >= 1; --p) {
            for (int m = 3; m <= 4; ++m) {
                const std::string r = multichain_round_trip(p, n - p, m);
                out.add("multichain codec round trip", shape_params(p, n - p) + " m=" + std::to_string(m),
                        r.empty() ? "bijective" : r, "bijective");
            }
        }
    }
    const std::vector<std::vector<int>> triples{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {1, 2, 2}, {1, 1, 3}, {2, 2, 2}};
    for (const auto& s : triples) {
        if (s[0] + s[1] + s[2] > std::min(max_n, kMaxMultiN)) continue;
        out.add("three-circle total", "sizes=" + join(s), to_string(multi3_total(s[0], s[1], s[2])),
                std::to_string(cached_poset(AnnulusShape(s))->elements.size()));
    }
    check_identities(out);
    return report;
}

}  // namespace ncb
