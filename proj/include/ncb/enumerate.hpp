#pragma once

#include "ncb/exact.hpp"
#include "ncb/partition.hpp"
#include "ncb/signed_perm.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ncb {

/// Raised when a request exceeds the sizes the exhaustive enumerators accept.
class DeskBoundError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxAnnulusN = 8;
inline constexpr int kMaxMultiN = 6;
inline constexpr int kMaxFilterN = 6;

/// Graded finite poset with a materialized order relation.
///
/// Elements are indexed 0..size()-1; `labels` are display strings only.
class FinitePoset {
public:
    using LeqFn = std::function<bool(std::size_t, std::size_t)>;

    FinitePoset() = default;
    /// Builds the relation by calling `leq` on every pair with rank(i) <= rank(j);
    /// pairs with a larger rank on the left are incomparable by gradedness.
    FinitePoset(std::vector<std::string> labels, std::vector<int> ranks, const LeqFn& leq);

    std::size_t size() const { return ranks_.size(); }
    bool leq(std::size_t i, std::size_t j) const { return (rows_[i * words_ + j / 64] >> (j % 64)) & 1u; }
    int rank(std::size_t i) const { return ranks_[i]; }
    const std::vector<int>& ranks() const { return ranks_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    int max_rank() const { return max_rank_; }

    /// Unique minimal / maximal element; throws std::logic_error if absent.
    std::size_t bottom() const;
    std::size_t top() const;

private:
    std::vector<std::string> labels_;
    std::vector<int> ranks_;
    std::vector<std::uint64_t> rows_;
    std::size_t words_ = 0;
    int max_rank_ = 0;
};

/// NC^(B) of a shape: the interval [ε, γ] together with its Ω̃ images.
/// Elements are sorted by rank, then by canonical partition order; perms[i]
/// is the unique interval element with Ω̃(perms[i]) = elements[i].
struct BPoset {
    AnnulusShape shape;
    std::vector<SignedPermutation> perms;
    std::vector<BPartition> elements;
    FinitePoset poset;
    std::unordered_map<BPartition, std::size_t> index;

    /// Throws std::invalid_argument when pi is not an element.
    std::size_t index_of(const BPartition& pi) const;
    bool contains(const BPartition& pi) const { return index.count(pi) != 0; }
    SignedPermutation omega_tilde_inverse(const BPartition& pi) const { return perms[index_of(pi)]; }
};

/// NC^(A)(n): non-crossing partitions of {1,…,n} under reverse refinement.
struct APoset {
    std::vector<ClassicalPartition> elements;
    FinitePoset poset;
};

/// All τ ≤ γ. Filters B_n for n <= 6, otherwise grows the interval upward
/// from ε by reflections.
std::vector<SignedPermutation> interval_perms(const SignedPermutation& gamma_perm);
std::vector<SignedPermutation> interval_perms_filter(const SignedPermutation& gamma_perm);
std::vector<SignedPermutation> interval_perms_bfs(const SignedPermutation& gamma_perm);

/// Partitions only, without the order relation.
std::vector<BPartition> nc_b_elements(const AnnulusShape& shape);

BPoset nc_b(const AnnulusShape& shape);
BPoset nc_b_annulus(int p, int q);
BPoset nc_b_disc(int n);
BPoset nc_b_multi(const std::vector<int>& sizes);
APoset nc_a(int n);

/// Shared immutable poset per shape; built on first use, safe for concurrent readers.
std::shared_ptr<const BPoset> cached_poset(const AnnulusShape& shape);

SignedPermutation omega_tilde_inverse(const BPartition& pi, const AnnulusShape& shape);

/// Throws DeskBoundError when the shape is too large to enumerate.
void check_desk_bound(const AnnulusShape& shape);

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& poset);
std::vector<std::size_t> rank_vector(const FinitePoset& poset);

BigInt mobius_oracle(const FinitePoset& poset, std::size_t x, std::size_t y);
/// μ(z, y) for every z (zero where z ≰ y).
std::vector<BigInt> mobius_to(const FinitePoset& poset, std::size_t y);
/// μ(x, z) for every z (zero where x ≰ z).
std::vector<BigInt> mobius_from(const FinitePoset& poset, std::size_t x);

/// Number of multichains x₁ ≤ … ≤ x_{m−1}; throws for m < 2.
BigInt zeta_oracle(const FinitePoset& poset, int m);
BigInt maximal_chains_oracle(const FinitePoset& poset);

/// Value at `target` of the polynomial interpolating zeta_oracle at
/// m = 2, …, max_rank + 2 (degree max_rank). At target −1 this is μ(0̂, 1̂).
Rational interpolated_zeta(const FinitePoset& poset, long long target);

/// Graphviz digraph: one node per element, one edge per cover, ranks clustered.
std::string to_dot(const FinitePoset& poset, const std::string& name = "hasse");

}  // namespace ncb
