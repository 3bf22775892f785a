#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ncb {

// Points of the ground set {±1,…,±n} are addressed by a dense index:
// x > 0 maps to x-1, x < 0 maps to n+|x|-1.
inline int point_index(int x, int n) { return x > 0 ? x - 1 : n - x - 1; }
inline int point_at(int index, int n) { return index < n ? index + 1 : -(index - n + 1); }

/// Boundary structure (n₁,…,n_k): one inversion-invariant cycle of length 2nⱼ
/// per size. k = 1 is the disc, k = 2 the annulus (p, q).
class AnnulusShape {
public:
    explicit AnnulusShape(std::vector<int> sizes);

    static AnnulusShape disc(int n) { return AnnulusShape({n}); }
    static AnnulusShape annulus(int p, int q) { return AnnulusShape({p, q}); }

    const std::vector<int>& sizes() const { return sizes_; }
    int k() const { return static_cast<int>(sizes_.size()); }
    int n() const { return n_; }
    bool is_annulus() const { return sizes_.size() == 2; }

    // Annulus accessors; throw std::logic_error unless k == 2.
    int p() const;
    int q() const;

    /// Index j of the cycle whose support contains ±x.
    int cycle_of(int x) const;
    /// First positive label of cycle j.
    int cycle_start(int j) const { return offsets_[j] + 1; }

    std::string to_string() const;

    friend bool operator==(const AnnulusShape&, const AnnulusShape&) = default;
    friend auto operator<=>(const AnnulusShape& a, const AnnulusShape& b) { return a.sizes_ <=> b.sizes_; }

private:
    std::vector<int> sizes_;
    std::vector<int> offsets_;
    std::vector<int> owner_;  // owner_[|x|-1] = cycle index
    int n_ = 0;
};

/// Element of the hyperoctahedral group B_n, stored as the images of 1..n.
class SignedPermutation {
public:
    SignedPermutation() = default;

    static SignedPermutation identity(int n);
    /// `image[i-1]` is τ(i); throws std::invalid_argument unless the absolute
    /// values form a permutation of 1..n.
    static SignedPermutation from_image(std::vector<int> image);
    /// Builds τ from cycles over {±1,…,±n}. The negated copy of each cycle is
    /// implied; listing it explicitly is allowed. Unlisted points are fixed.
    static SignedPermutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    /// Parses the display notation produced by to_cycle_string().
    static SignedPermutation parse_cycles(int n, std::string_view text);

    int n() const { return static_cast<int>(image_.size()); }
    const std::vector<int>& image() const { return image_; }
    int operator()(int x) const { return x > 0 ? image_[x - 1] : -image_[-x - 1]; }

    SignedPermutation inverse() const;

    /// All orbits on {±1,…,±n} in cycle order, each starting at its element of
    /// least absolute value (positive sign preferred), sorted by that element.
    std::vector<std::vector<int>> cycles() const;

    /// Display form: "((1,2,5))" is the pair (1,2,5)(-1,-2,-5), "[3]" is the
    /// inversion-invariant cycle (3,-3); fixed points are omitted, ε is "()".
    std::string to_cycle_string() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) { return a.image_ <=> b.image_; }

private:
    explicit SignedPermutation(std::vector<int> image) : image_(std::move(image)) {}

    std::vector<int> image_;
};

struct OrbitStats {
    int count = 0;
    int inv_invariant_count = 0;

    friend bool operator==(const OrbitStats&, const OrbitStats&) = default;
};

SignedPermutation identity(int n);

/// x ↦ tau(sigma(x)); sigma is applied first.
SignedPermutation compose(const SignedPermutation& tau, const SignedPermutation& sigma);

OrbitStats orbit_stats(const SignedPermutation& tau);

/// Absolute length: n minus half the number of orbits A with A ≠ −A.
int length_b(const SignedPermutation& tau);

/// Absolute order: ℓ(σ) = ℓ(τ) + ℓ(τ⁻¹σ).
bool leq(const SignedPermutation& tau, const SignedPermutation& sigma);

SignedPermutation gamma(const AnnulusShape& shape);

/// Number of orbits of the group generated by tau and sigma.
int joint_orbit_count(const SignedPermutation& tau, const SignedPermutation& sigma);

/// |X| + 2·#(τ,σ) − #(σ) − #(τ) − #(τ⁻¹σ); twice the genus.
int genus_defect(const SignedPermutation& tau, const SignedPermutation& sigma);

/// τ⁻¹γ, for τ ≤ γ. Throws std::invalid_argument otherwise.
SignedPermutation kreweras_perm(const SignedPermutation& tau, const SignedPermutation& gamma_perm);

/// The n² reflections (i,j)(−i,−j), (i,−j)(−i,j), (i,−i) generating B_n.
std::vector<SignedPermutation> reflections(int n);

/// Every element of B_n in lexicographic order of the image sequence.
std::vector<SignedPermutation> all_signed_permutations(int n);

}  // namespace ncb

template <>
struct std::hash<ncb::SignedPermutation> {
    std::size_t operator()(const ncb::SignedPermutation& tau) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int v : tau.image()) {
            h ^= static_cast<std::size_t>(v + 64);
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};
