#pragma once

#include "ncb/signed_perm.hpp"

#include "json.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace ncb {

using Block = std::vector<int>;

/// Order on points of {±1,…,±n}: by absolute value, positive before negative.
bool canonical_point_less(int a, int b);

/// Negation-closed partition of {±1,…,±n} with at most one zero-block.
///
/// Blocks are kept in canonical form: points inside a block sorted by
/// canonical_point_less, blocks sorted lexicographically under the same order
/// (so by least absolute value, A before −A when A holds the positive point).
class BPartition {
public:
    BPartition() = default;
    /// Throws std::invalid_argument on a non-partition, a block whose negation
    /// is not a block, or two inversion-invariant blocks.
    BPartition(int n, std::vector<Block> blocks);

    static BPartition bottom(int n);
    static BPartition top(int n);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    /// Index into blocks() of the block holding x.
    int block_of(int x) const { return block_id_[point_index(x, n_)]; }
    bool same_block(int x, int y) const { return block_of(x) == block_of(y); }

    /// "{{1,2,5},{-1,-2,-5},{3,-6},...}"
    std::string to_string() const;

    friend bool operator==(const BPartition& a, const BPartition& b) { return a.n_ == b.n_ && a.blocks_ == b.blocks_; }
    friend std::strong_ordering operator<=>(const BPartition& a, const BPartition& b);

private:
    int n_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> block_id_;
};

/// Set partition of {1,…,n}; blocks sorted ascending, ordered by least element.
class ClassicalPartition {
public:
    ClassicalPartition() = default;
    ClassicalPartition(int n, std::vector<Block> blocks);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    int block_of(int x) const { return block_id_[x - 1]; }
    std::string to_string() const;

    friend bool operator==(const ClassicalPartition& a, const ClassicalPartition& b) { return a.blocks_ == b.blocks_ && a.n_ == b.n_; }
    friend auto operator<=>(const ClassicalPartition& a, const ClassicalPartition& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    int n_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> block_id_;
};

struct PairStats {
    int c = 0;  // connecting pairs
    int e = 0;  // exterior pairs
    int i = 0;  // interior pairs

    friend bool operator==(const PairStats&, const PairStats&) = default;
};

/// Orbit partition of τ with all inversion-invariant orbits merged.
BPartition adjusted_orbits(const SignedPermutation& tau);

int rank(const BPartition& pi);
int rank(const ClassicalPartition& pi);

/// Half the number of blocks A ≠ −A meeting both boundary circles.
int connectivity(const BPartition& pi, const AnnulusShape& shape);
PairStats pair_stats(const BPartition& pi, const AnnulusShape& shape);

/// Reverse refinement: every block of pi lies inside a block of rho.
bool leq(const BPartition& pi, const BPartition& rho);
bool leq(const ClassicalPartition& pi, const ClassicalPartition& rho);

std::optional<Block> zero_block(const BPartition& pi);

/// Image under ±i ↦ i.
ClassicalPartition abs_map(const BPartition& pi);

bool is_noncrossing(const ClassicalPartition& pi);

/// Kreweras complement Ω̃(τ⁻¹γ) for the τ in the interval with Ω̃(τ) = pi.
/// Throws std::invalid_argument when pi is not in NC^(B)(shape).
BPartition kreweras(const BPartition& pi, const AnnulusShape& shape);

/// Intersection meet; valid as the lattice meet only for shapes (p, 1).
BPartition meet_q1(const BPartition& pi, const BPartition& rho, const AnnulusShape& shape);

nlohmann::json to_json(const BPartition& pi);
BPartition partition_from_json(const nlohmann::json& value);

}  // namespace ncb

template <>
struct std::hash<ncb::BPartition> {
    std::size_t operator()(const ncb::BPartition& pi) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL ^ static_cast<std::size_t>(pi.n());
        for (const auto& block : pi.blocks()) {
            for (int v : block) {
                h ^= static_cast<std::size_t>(v + 64);
                h *= 0x100000001b3ULL;
            }
            h ^= 0xff;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};
