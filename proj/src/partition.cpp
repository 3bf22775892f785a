#include "ncb/partition.hpp"

#include "ncb/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncb {

namespace {

std::string join_blocks(const std::vector<Block>& blocks)
{
    std::string out = "{";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out += ',';
        out += '{';
        for (std::size_t j = 0; j < blocks[b].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(blocks[b][j]);
        }
        out += '}';
    }
    return out + "}";
}

bool block_less(const Block& a, const Block& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_point_less);
}

Block negated(const Block& block)
{
    Block result;
    result.reserve(block.size());
    for (int v : block) result.push_back(-v);
    std::sort(result.begin(), result.end(), canonical_point_less);
    return result;
}

bool is_inversion_invariant(const BPartition& pi, int block_index)
{
    const int x = pi.blocks()[block_index].front();
    return pi.block_of(-x) == block_index;
}

}  // namespace

bool canonical_point_less(int a, int b)
{
    const int aa = std::abs(a), ab = std::abs(b);
    return aa != ab ? aa < ab : a > b;
}

// ---------------------------------------------------------------------------
// BPartition

BPartition::BPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks))
{
    if (n < 1) throw std::invalid_argument("partition needs n >= 1");
    block_id_.assign(2 * n, -1);
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("empty block");
        std::sort(block.begin(), block.end(), canonical_point_less);
    }
    std::sort(blocks_.begin(), blocks_.end(), block_less);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int x : blocks_[b]) {
            if (x == 0 || std::abs(x) > n) throw std::invalid_argument("point " + std::to_string(x) + " outside ground set");
            int& slot = block_id_[point_index(x, n)];
            if (slot >= 0) throw std::invalid_argument("point " + std::to_string(x) + " in two blocks");
            slot = static_cast<int>(b);
        }
    }
    if (std::find(block_id_.begin(), block_id_.end(), -1) != block_id_.end()) {
        throw std::invalid_argument("blocks do not cover the ground set");
    }
    int invariant = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const Block mirror = negated(blocks_[b]);
        const Block& other = blocks_[block_of(mirror.front())];
        if (other != mirror) throw std::invalid_argument("partition is not closed under negation");
        if (mirror == blocks_[b]) ++invariant;
    }
    if (invariant > 1) throw std::invalid_argument("partition has more than one zero-block");
}

BPartition BPartition::bottom(int n)
{
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i) {
        blocks.push_back({i});
        blocks.push_back({-i});
    }
    return BPartition(n, std::move(blocks));
}

BPartition BPartition::top(int n)
{
    Block all;
    for (int i = 1; i <= n; ++i) {
        all.push_back(i);
        all.push_back(-i);
    }
    return BPartition(n, {all});
}

std::string BPartition::to_string() const { return join_blocks(blocks_); }

std::strong_ordering operator<=>(const BPartition& a, const BPartition& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    const std::size_t common = std::min(a.blocks_.size(), b.blocks_.size());
    for (std::size_t j = 0; j < common; ++j) {
        if (a.blocks_[j] == b.blocks_[j]) continue;
        return block_less(a.blocks_[j], b.blocks_[j]) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.blocks_.size() <=> b.blocks_.size();
}

// ---------------------------------------------------------------------------
// ClassicalPartition

ClassicalPartition::ClassicalPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks))
{
    if (n < 1) throw std::invalid_argument("partition needs n >= 1");
    block_id_.assign(n, -1);
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int x : blocks_[b]) {
            if (x < 1 || x > n) throw std::invalid_argument("point " + std::to_string(x) + " outside ground set");
            if (block_id_[x - 1] >= 0) throw std::invalid_argument("point " + std::to_string(x) + " in two blocks");
            block_id_[x - 1] = static_cast<int>(b);
        }
    }
    if (std::find(block_id_.begin(), block_id_.end(), -1) != block_id_.end()) {
        throw std::invalid_argument("blocks do not cover the ground set");
    }
}

std::string ClassicalPartition::to_string() const { return join_blocks(blocks_); }

// ---------------------------------------------------------------------------
// Operations

BPartition adjusted_orbits(const SignedPermutation& tau)
{
    std::vector<Block> blocks;
    Block zero;
    for (auto& cycle : tau.cycles()) {
        if (std::find(cycle.begin(), cycle.end(), -cycle.front()) != cycle.end()) {
            zero.insert(zero.end(), cycle.begin(), cycle.end());
        } else {
            blocks.push_back(std::move(cycle));
        }
    }
    if (!zero.empty()) blocks.push_back(std::move(zero));
    return BPartition(tau.n(), std::move(blocks));
}

int rank(const BPartition& pi)
{
    int paired = 0;
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
        if (!is_inversion_invariant(pi, static_cast<int>(b))) ++paired;
    }
    return pi.n() - paired / 2;
}

int rank(const ClassicalPartition& pi) { return pi.n() - static_cast<int>(pi.blocks().size()); }

PairStats pair_stats(const BPartition& pi, const AnnulusShape& shape)
{
    if (!shape.is_annulus()) throw std::invalid_argument("pair statistics need an annulus shape");
    if (shape.n() != pi.n()) throw std::invalid_argument("partition size does not match shape");
    PairStats stats;
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
        if (is_inversion_invariant(pi, static_cast<int>(b))) continue;
        bool outer = false, inner = false;
        for (int x : pi.blocks()[b]) {
            (shape.cycle_of(x) == 0 ? outer : inner) = true;
        }
        if (outer && inner) ++stats.c;
        else if (outer) ++stats.e;
        else ++stats.i;
    }
    stats.c /= 2;
    stats.e /= 2;
    stats.i /= 2;
    return stats;
}

int connectivity(const BPartition& pi, const AnnulusShape& shape) { return pair_stats(pi, shape).c; }

bool leq(const BPartition& pi, const BPartition& rho)
{
    if (pi.n() != rho.n()) throw std::invalid_argument("partitions of different sizes");
    for (const auto& block : pi.blocks()) {
        const int target = rho.block_of(block.front());
        for (int x : block) {
            if (rho.block_of(x) != target) return false;
        }
    }
    return true;
}

bool leq(const ClassicalPartition& pi, const ClassicalPartition& rho)
{
    if (pi.n() != rho.n()) throw std::invalid_argument("partitions of different sizes");
    for (const auto& block : pi.blocks()) {
        const int target = rho.block_of(block.front());
        for (int x : block) {
            if (rho.block_of(x) != target) return false;
        }
    }
    return true;
}

std::optional<Block> zero_block(const BPartition& pi)
{
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
        if (is_inversion_invariant(pi, static_cast<int>(b))) return pi.blocks()[b];
    }
    return std::nullopt;
}

ClassicalPartition abs_map(const BPartition& pi)
{
    std::map<int, Block> by_least;
    std::vector<bool> placed(pi.n() + 1, false);
    for (const auto& block : pi.blocks()) {
        Block image;
        for (int x : block) image.push_back(std::abs(x));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (placed[image.front()]) continue;  // −A gives the same image as A
        for (int v : image) placed[v] = true;
        by_least.emplace(image.front(), std::move(image));
    }
    std::vector<Block> blocks;
    for (auto& [least, block] : by_least) blocks.push_back(std::move(block));
    return ClassicalPartition(pi.n(), std::move(blocks));
}

bool is_noncrossing(const ClassicalPartition& pi)
{
    const int n = pi.n();
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (pi.block_of(a) == pi.block_of(b)) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (pi.block_of(c) != pi.block_of(a)) continue;
                for (int d = c + 1; d <= n; ++d) {
                    if (pi.block_of(d) == pi.block_of(b)) return false;
                }
            }
        }
    }
    return true;
}

BPartition kreweras(const BPartition& pi, const AnnulusShape& shape)
{
    const auto poset = cached_poset(shape);
    const SignedPermutation tau = poset->omega_tilde_inverse(pi);
    return adjusted_orbits(compose(tau.inverse(), gamma(shape)));
}

BPartition meet_q1(const BPartition& pi, const BPartition& rho, const AnnulusShape& shape)
{
    if (!shape.is_annulus() || shape.q() != 1) {
        throw std::invalid_argument("intersection meet is only defined here for shapes (p,1)");
    }
    if (pi.n() != shape.n() || rho.n() != shape.n()) throw std::invalid_argument("partition size does not match shape");
    std::map<std::pair<int, int>, Block> cells;
    for (int j = 0; j < 2 * pi.n(); ++j) {
        const int x = point_at(j, pi.n());
        cells[{pi.block_of(x), rho.block_of(x)}].push_back(x);
    }
    std::vector<Block> blocks;
    for (auto& [key, block] : cells) blocks.push_back(std::move(block));
    return BPartition(pi.n(), std::move(blocks));
}

nlohmann::json to_json(const BPartition& pi)
{
    return nlohmann::json{{"n", pi.n()}, {"blocks", pi.blocks()}};
}

BPartition partition_from_json(const nlohmann::json& value)
{
    if (!value.is_object() || !value.contains("n") || !value.contains("blocks")) {
        throw std::invalid_argument("partition JSON needs \"n\" and \"blocks\"");
    }
    return BPartition(value.at("n").get<int>(), value.at("blocks").get<std::vector<Block>>());
}

}  // namespace ncb
