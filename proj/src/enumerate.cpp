#include "ncb/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace ncb {

namespace {

std::vector<std::size_t> indices_by_rank(const FinitePoset& poset)
{
    std::vector<std::size_t> order(poset.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return poset.rank(a) < poset.rank(b); });
    return order;
}

// For each point index, the index of the first point of its block.
std::vector<std::uint8_t> block_representatives(const BPartition& pi)
{
    const int n = pi.n();
    std::vector<std::uint8_t> rep(2 * n);
    for (int t = 0; t < 2 * n; ++t) {
        rep[t] = static_cast<std::uint8_t>(point_index(pi.blocks()[pi.block_of(point_at(t, n))].front(), n));
    }
    return rep;
}

std::vector<std::uint8_t> block_ids(const BPartition& pi)
{
    const int n = pi.n();
    std::vector<std::uint8_t> ids(2 * n);
    for (int t = 0; t < 2 * n; ++t) ids[t] = static_cast<std::uint8_t>(pi.block_of(point_at(t, n)));
    return ids;
}

}  // namespace

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<int> ranks, const LeqFn& leq)
    : labels_(std::move(labels)), ranks_(std::move(ranks))
{
    if (labels_.size() != ranks_.size()) throw std::invalid_argument("labels and ranks differ in length");
    const std::size_t n = ranks_.size();
    words_ = (n + 63) / 64;
    rows_.assign(n * words_, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (ranks_[i] > ranks_[j]) continue;
            if (i == j || leq(i, j)) rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    max_rank_ = n ? *std::max_element(ranks_.begin(), ranks_.end()) : 0;
}

std::size_t FinitePoset::bottom() const
{
    for (std::size_t i = 0; i < size(); ++i) {
        bool below_all = true;
        for (std::size_t j = 0; j < size() && below_all; ++j) below_all = leq(i, j);
        if (below_all) return i;
    }
    throw std::logic_error("poset has no least element");
}

std::size_t FinitePoset::top() const
{
    for (std::size_t i = 0; i < size(); ++i) {
        bool above_all = true;
        for (std::size_t j = 0; j < size() && above_all; ++j) above_all = leq(j, i);
        if (above_all) return i;
    }
    throw std::logic_error("poset has no greatest element");
}

// ---------------------------------------------------------------------------
// Interval enumeration

std::vector<SignedPermutation> interval_perms_filter(const SignedPermutation& gamma_perm)
{
    std::vector<SignedPermutation> result;
    for (auto& tau : all_signed_permutations(gamma_perm.n())) {
        if (leq(tau, gamma_perm)) result.push_back(std::move(tau));
    }
    return result;
}

std::vector<SignedPermutation> interval_perms_bfs(const SignedPermutation& gamma_perm)
{
    const int n = gamma_perm.n();
    const int top = length_b(gamma_perm);
    const auto gens = reflections(n);
    std::vector<SignedPermutation> result{identity(n)};
    std::vector<SignedPermutation> level = result;
    for (int r = 0; r < top; ++r) {
        std::unordered_set<SignedPermutation> next;
        for (const auto& tau : level) {
            for (const auto& g : gens) {
                SignedPermutation sigma = compose(tau, g);
                if (next.count(sigma) || length_b(sigma) != r + 1) continue;
                if (leq(sigma, gamma_perm)) next.insert(std::move(sigma));
            }
        }
        level.assign(next.begin(), next.end());
        result.insert(result.end(), level.begin(), level.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<SignedPermutation> interval_perms(const SignedPermutation& gamma_perm)
{
    return gamma_perm.n() <= kMaxFilterN ? interval_perms_filter(gamma_perm) : interval_perms_bfs(gamma_perm);
}

void check_desk_bound(const AnnulusShape& shape)
{
    const int limit = shape.k() <= 2 ? kMaxAnnulusN : kMaxMultiN;
    if (shape.n() > limit) {
        throw DeskBoundError("shape " + shape.to_string() + " exceeds the enumeration bound (total size " +
                             std::to_string(shape.n()) + " > " + std::to_string(limit) + ")");
    }
}

std::vector<BPartition> nc_b_elements(const AnnulusShape& shape)
{
    check_desk_bound(shape);
    std::vector<BPartition> result;
    for (const auto& tau : interval_perms(gamma(shape))) result.push_back(adjusted_orbits(tau));
    std::sort(result.begin(), result.end());
    return result;
}

// ---------------------------------------------------------------------------
// Posets

std::size_t BPoset::index_of(const BPartition& pi) const
{
    const auto it = index.find(pi);
    if (it == index.end()) {
        throw std::invalid_argument("partition " + pi.to_string() + " is not in NC^(B)(" + shape.to_string() + ")");
    }
    return it->second;
}

BPoset nc_b(const AnnulusShape& shape)
{
    check_desk_bound(shape);
    std::vector<std::pair<BPartition, SignedPermutation>> pairs;
    for (auto& tau : interval_perms(gamma(shape))) {
        BPartition pi = adjusted_orbits(tau);
        pairs.emplace_back(std::move(pi), std::move(tau));
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        const int ra = rank(a.first), rb = rank(b.first);
        return ra != rb ? ra < rb : a.first < b.first;
    });

    BPoset result{shape, {}, {}, {}, {}};
    std::vector<std::string> labels;
    std::vector<int> ranks;
    for (auto& [pi, tau] : pairs) {
        const std::size_t at = result.elements.size();
        if (!result.index.emplace(pi, at).second) {
            throw std::logic_error("adjusted orbit map is not injective on the interval");
        }
        labels.push_back(pi.to_string());
        ranks.push_back(rank(pi));
        result.elements.push_back(std::move(pi));
        result.perms.push_back(std::move(tau));
    }

    std::vector<std::vector<std::uint8_t>> reps, ids;
    for (const auto& pi : result.elements) {
        reps.push_back(block_representatives(pi));
        ids.push_back(block_ids(pi));
    }
    const std::size_t points = 2 * static_cast<std::size_t>(shape.n());
    result.poset = FinitePoset(std::move(labels), std::move(ranks), [&](std::size_t i, std::size_t j) {
        const auto& rep = reps[i];
        const auto& id = ids[j];
        for (std::size_t t = 0; t < points; ++t) {
            if (id[t] != id[rep[t]]) return false;
        }
        return true;
    });
    return result;
}

BPoset nc_b_annulus(int p, int q) { return nc_b(AnnulusShape::annulus(p, q)); }

BPoset nc_b_disc(int n) { return nc_b(AnnulusShape::disc(n)); }

BPoset nc_b_multi(const std::vector<int>& sizes) { return nc_b(AnnulusShape(sizes)); }

APoset nc_a(int n)
{
    if (n < 1) throw std::invalid_argument("NC^(A)(n) needs n >= 1");
    if (n > 10) throw DeskBoundError("NC^(A)(" + std::to_string(n) + ") exceeds the enumeration bound 10");
    APoset result;
    // Restricted growth strings enumerate set partitions.
    std::vector<int> rgs(n, 0);
    for (;;) {
        const int count = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Block> blocks(count);
        for (int x = 1; x <= n; ++x) blocks[rgs[x - 1]].push_back(x);
        ClassicalPartition pi(n, std::move(blocks));
        if (is_noncrossing(pi)) result.elements.push_back(std::move(pi));

        int pos = n - 1;
        while (pos > 0) {
            const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + pos);
            if (rgs[pos] <= prefix_max) break;
            --pos;
        }
        if (pos == 0) break;
        ++rgs[pos];
        std::fill(rgs.begin() + pos + 1, rgs.end(), 0);
    }
    std::sort(result.elements.begin(), result.elements.end(), [](const auto& a, const auto& b) {
        const int ra = rank(a), rb = rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    std::vector<std::string> labels;
    std::vector<int> ranks;
    for (const auto& pi : result.elements) {
        labels.push_back(pi.to_string());
        ranks.push_back(rank(pi));
    }
    result.poset = FinitePoset(std::move(labels), std::move(ranks), [&](std::size_t i, std::size_t j) {
        return leq(result.elements[i], result.elements[j]);
    });
    return result;
}

std::shared_ptr<const BPoset> cached_poset(const AnnulusShape& shape)
{
    static std::mutex mutex;
    static std::map<AnnulusShape, std::shared_ptr<const BPoset>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[shape];
    if (!slot) slot = std::make_shared<const BPoset>(nc_b(shape));
    return slot;
}

SignedPermutation omega_tilde_inverse(const BPartition& pi, const AnnulusShape& shape)
{
    return cached_poset(shape)->omega_tilde_inverse(pi);
}

// ---------------------------------------------------------------------------
// Oracles

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& poset)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < poset.size(); ++i) {
        for (std::size_t j = 0; j < poset.size(); ++j) {
            if (poset.rank(j) == poset.rank(i) + 1 && poset.leq(i, j)) edges.emplace_back(i, j);
        }
    }
    return edges;
}

std::vector<std::size_t> rank_vector(const FinitePoset& poset)
{
    std::vector<std::size_t> counts(poset.size() ? poset.max_rank() + 1 : 0, 0);
    for (int r : poset.ranks()) ++counts[r];
    return counts;
}

std::vector<BigInt> mobius_from(const FinitePoset& poset, std::size_t x)
{
    std::vector<BigInt> mu(poset.size(), 0);
    mu[x] = 1;
    const auto order = indices_by_rank(poset);
    for (std::size_t z : order) {
        if (z == x || !poset.leq(x, z)) continue;
        BigInt sum = 0;
        for (std::size_t w : order) {
            if (poset.rank(w) >= poset.rank(z)) break;
            if (poset.leq(x, w) && poset.leq(w, z)) sum += mu[w];
        }
        mu[z] = -sum;
    }
    return mu;
}

std::vector<BigInt> mobius_to(const FinitePoset& poset, std::size_t y)
{
    std::vector<BigInt> mu(poset.size(), 0);
    mu[y] = 1;
    auto order = indices_by_rank(poset);
    std::reverse(order.begin(), order.end());
    for (std::size_t z : order) {
        if (z == y || !poset.leq(z, y)) continue;
        BigInt sum = 0;
        for (std::size_t w : order) {
            if (poset.rank(w) <= poset.rank(z)) break;
            if (poset.leq(z, w) && poset.leq(w, y)) sum += mu[w];
        }
        mu[z] = -sum;
    }
    return mu;
}

BigInt mobius_oracle(const FinitePoset& poset, std::size_t x, std::size_t y)
{
    if (!poset.leq(x, y)) throw std::invalid_argument("mobius_oracle: elements are not comparable");
    return mobius_from(poset, x)[y];
}

BigInt zeta_oracle(const FinitePoset& poset, int m)
{
    if (m < 2) throw std::invalid_argument("zeta_oracle needs m >= 2");
    const std::size_t n = poset.size();
    std::vector<BigInt> chains(n, 1);  // chains ending at each element
    for (int step = 2; step < m; ++step) {
        std::vector<BigInt> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (chains[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (poset.leq(i, j)) next[j] += chains[i];
            }
        }
        chains = std::move(next);
    }
    BigInt total = 0;
    for (const auto& c : chains) total += c;
    return total;
}

BigInt maximal_chains_oracle(const FinitePoset& poset)
{
    const std::size_t bottom = poset.bottom();
    const std::size_t top = poset.top();
    std::vector<BigInt> paths(poset.size(), 0);
    paths[bottom] = 1;
    std::vector<std::vector<std::size_t>> up(poset.size());
    for (const auto& [i, j] : hasse_edges(poset)) up[i].push_back(j);
    for (std::size_t i : indices_by_rank(poset)) {
        for (std::size_t j : up[i]) paths[j] += paths[i];
    }
    return paths[top];
}

Rational interpolated_zeta(const FinitePoset& poset, long long target)
{
    const int degree = poset.max_rank();
    std::vector<long long> xs;
    std::vector<BigInt> ys;
    for (int m = 2; m <= degree + 2; ++m) {
        xs.push_back(m);
        ys.push_back(zeta_oracle(poset, m));
    }
    Rational value = 0;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        Rational term = Rational(ys[a]);
        for (std::size_t b = 0; b < xs.size(); ++b) {
            if (a == b) continue;
            term *= ratio(target - xs[b], xs[a] - xs[b]);
        }
        value += term;
    }
    return value;
}

std::string to_dot(const FinitePoset& poset, const std::string& name)
{
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontsize=10];\n";
    for (int r = 0; r <= poset.max_rank() && poset.size(); ++r) {
        out << "  subgraph cluster_rank" << r << " {\n";
        out << "    label=\"rank " << r << "\";\n";
        out << "    rank=same;\n";
        for (std::size_t i = 0; i < poset.size(); ++i) {
            if (poset.rank(i) == r) out << "    n" << i << " [label=\"" << poset.label(i) << "\"];\n";
        }
        out << "  }\n";
    }
    for (const auto& [i, j] : hasse_edges(poset)) out << "  n" << i << " -> n" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ncb
