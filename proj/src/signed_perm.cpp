#include "ncb/signed_perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncb {

namespace {

void require_same_n(const SignedPermutation& a, const SignedPermutation& b)
{
    if (a.n() != b.n()) {
        throw std::invalid_argument("signed permutations of different sizes: " + std::to_string(a.n()) +
                                    " vs " + std::to_string(b.n()));
    }
}

// Orbit id for each point index; returns the number of orbits.
int label_orbits(const SignedPermutation& tau, std::vector<int>& orbit)
{
    const int n = tau.n();
    orbit.assign(2 * n, -1);
    int count = 0;
    for (int start = 0; start < 2 * n; ++start) {
        if (orbit[start] >= 0) continue;
        int x = point_at(start, n);
        do {
            orbit[point_index(x, n)] = count;
            x = tau(x);
        } while (orbit[point_index(x, n)] < 0);
        ++count;
    }
    return count;
}

class UnionFind {
public:
    explicit UnionFind(int size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

bool less_by_abs(int a, int b)
{
    const int aa = std::abs(a), ab = std::abs(b);
    return aa != ab ? aa < ab : a > b;
}

}  // namespace

// ---------------------------------------------------------------------------
// AnnulusShape

AnnulusShape::AnnulusShape(std::vector<int> sizes) : sizes_(std::move(sizes))
{
    if (sizes_.empty()) throw std::invalid_argument("shape needs at least one size");
    for (int s : sizes_) {
        if (s < 1) throw std::invalid_argument("shape sizes must be positive");
        offsets_.push_back(n_);
        owner_.insert(owner_.end(), s, static_cast<int>(offsets_.size()) - 1);
        n_ += s;
    }
}

int AnnulusShape::p() const
{
    if (!is_annulus()) throw std::logic_error("shape " + to_string() + " is not an annulus");
    return sizes_[0];
}

int AnnulusShape::q() const
{
    if (!is_annulus()) throw std::logic_error("shape " + to_string() + " is not an annulus");
    return sizes_[1];
}

int AnnulusShape::cycle_of(int x) const
{
    const int a = std::abs(x);
    if (a < 1 || a > n_) throw std::out_of_range("point " + std::to_string(x) + " outside shape " + to_string());
    return owner_[a - 1];
}

std::string AnnulusShape::to_string() const
{
    std::string out;
    for (std::size_t j = 0; j < sizes_.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(sizes_[j]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SignedPermutation

SignedPermutation SignedPermutation::identity(int n)
{
    if (n < 1) throw std::invalid_argument("B_n needs n >= 1");
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    return SignedPermutation(std::move(image));
}

SignedPermutation SignedPermutation::from_image(std::vector<int> image)
{
    const int n = static_cast<int>(image.size());
    if (n < 1) throw std::invalid_argument("B_n needs n >= 1");
    std::vector<bool> seen(n + 1, false);
    for (int v : image) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[a]) throw std::invalid_argument("image is not a signed permutation");
        seen[a] = true;
    }
    return SignedPermutation(std::move(image));
}

SignedPermutation SignedPermutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles)
{
    if (n < 1) throw std::invalid_argument("B_n needs n >= 1");
    std::vector<int> target(2 * n, 0);  // 0 = not yet assigned
    auto assign = [&](int from, int to) {
        if (std::abs(from) > n || std::abs(to) > n || from == 0 || to == 0) {
            throw std::invalid_argument("cycle entry outside {±1,…,±" + std::to_string(n) + "}");
        }
        int& slot = target[point_index(from, n)];
        if (slot != 0 && slot != to) throw std::invalid_argument("inconsistent cycles");
        slot = to;
    };
    for (const auto& cycle : cycles) {
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            const int from = cycle[j];
            const int to = cycle[(j + 1) % cycle.size()];
            assign(from, to);
            assign(-from, -to);
        }
    }
    std::vector<int> image(n);
    for (int i = 1; i <= n; ++i) {
        const int t = target[point_index(i, n)];
        image[i - 1] = t == 0 ? i : t;
    }
    for (int i = 1; i <= n; ++i) {
        const int t = target[point_index(-i, n)];
        if (t != 0 && t != -image[i - 1]) throw std::invalid_argument("inconsistent cycles");
    }
    return from_image(std::move(image));
}

SignedPermutation SignedPermutation::parse_cycles(int n, std::string_view text)
{
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto read_numbers = [&](char close) {
        std::vector<int> values;
        for (;;) {
            skip_space();
            if (pos < text.size() && text[pos] == close) break;
            int v = 0;
            const auto* first = text.data() + pos;
            const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
            if (ec != std::errc()) throw std::invalid_argument("bad cycle notation: " + std::string(text));
            pos += static_cast<std::size_t>(ptr - first);
            values.push_back(v);
            skip_space();
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        ++pos;
        return values;
    };
    skip_space();
    if (text.substr(pos) == "()") return identity(n);
    while (skip_space(), pos < text.size()) {
        if (text.substr(pos, 2) == "((") {
            pos += 2;
            auto values = read_numbers(')');
            if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("bad cycle notation: " + std::string(text));
            ++pos;
            cycles.push_back(std::move(values));
        } else if (text[pos] == '[') {
            ++pos;
            auto values = read_numbers(']');
            const std::size_t half = values.size();
            for (std::size_t j = 0; j < half; ++j) values.push_back(-values[j]);
            cycles.push_back(std::move(values));
        } else {
            throw std::invalid_argument("bad cycle notation: " + std::string(text));
        }
    }
    return from_cycles(n, cycles);
}

SignedPermutation SignedPermutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= n(); ++i) {
        const int t = image_[i - 1];
        if (t > 0) inv[t - 1] = i;
        else inv[-t - 1] = -i;
    }
    return SignedPermutation(std::move(inv));
}

std::vector<std::vector<int>> SignedPermutation::cycles() const
{
    const int size = 2 * n();
    std::vector<bool> seen(size, false);
    std::vector<int> order(size);
    for (int j = 0; j < size; ++j) order[j] = point_at(j, n());
    std::sort(order.begin(), order.end(), less_by_abs);

    std::vector<std::vector<int>> result;
    for (int start : order) {
        if (seen[point_index(start, n())]) continue;
        std::vector<int> cycle;
        int x = start;
        do {
            seen[point_index(x, n())] = true;
            cycle.push_back(x);
            x = (*this)(x);
        } while (x != start);
        result.push_back(std::move(cycle));
    }
    return result;
}

std::string SignedPermutation::to_cycle_string() const
{
    std::string out;
    auto join = [](const std::vector<int>& values, std::size_t count) {
        std::string s;
        for (std::size_t j = 0; j < count; ++j) {
            if (j) s += ',';
            s += std::to_string(values[j]);
        }
        return s;
    };
    for (const auto& cycle : cycles()) {
        if (cycle.size() == 1) continue;
        const bool invariant = std::find(cycle.begin(), cycle.end(), -cycle.front()) != cycle.end();
        if (invariant) {
            out += "[" + join(cycle, cycle.size() / 2) + "]";
        } else if (cycle.front() > 0) {
            out += "((" + join(cycle, cycle.size()) + "))";
        }
    }
    return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// Free functions

SignedPermutation identity(int n) { return SignedPermutation::identity(n); }

SignedPermutation compose(const SignedPermutation& tau, const SignedPermutation& sigma)
{
    require_same_n(tau, sigma);
    std::vector<int> image(tau.n());
    for (int i = 1; i <= tau.n(); ++i) image[i - 1] = tau(sigma(i));
    return SignedPermutation::from_image(std::move(image));
}

OrbitStats orbit_stats(const SignedPermutation& tau)
{
    std::vector<int> orbit;
    OrbitStats stats;
    stats.count = label_orbits(tau, orbit);
    const int n = tau.n();
    std::vector<bool> counted(stats.count, false);
    for (int i = 1; i <= n; ++i) {
        const int id = orbit[point_index(i, n)];
        if (id == orbit[point_index(-i, n)] && !counted[id]) {
            counted[id] = true;
            ++stats.inv_invariant_count;
        }
    }
    return stats;
}

int length_b(const SignedPermutation& tau)
{
    const OrbitStats stats = orbit_stats(tau);
    return tau.n() - (stats.count - stats.inv_invariant_count) / 2;
}

bool leq(const SignedPermutation& tau, const SignedPermutation& sigma)
{
    require_same_n(tau, sigma);
    return length_b(sigma) == length_b(tau) + length_b(compose(tau.inverse(), sigma));
}

SignedPermutation gamma(const AnnulusShape& shape)
{
    std::vector<int> image(shape.n());
    for (int j = 0; j < shape.k(); ++j) {
        const int first = shape.cycle_start(j);
        const int last = first + shape.sizes()[j] - 1;
        for (int x = first; x < last; ++x) image[x - 1] = x + 1;
        image[last - 1] = -first;
    }
    return SignedPermutation::from_image(std::move(image));
}

int joint_orbit_count(const SignedPermutation& tau, const SignedPermutation& sigma)
{
    require_same_n(tau, sigma);
    const int n = tau.n();
    UnionFind uf(2 * n);
    int count = 2 * n;
    for (int j = 0; j < 2 * n; ++j) {
        const int x = point_at(j, n);
        if (uf.unite(j, point_index(tau(x), n))) --count;
        if (uf.unite(j, point_index(sigma(x), n))) --count;
    }
    return count;
}

int genus_defect(const SignedPermutation& tau, const SignedPermutation& sigma)
{
    require_same_n(tau, sigma);
    const int ground = 2 * tau.n();
    return ground + 2 * joint_orbit_count(tau, sigma) -
           (orbit_stats(sigma).count + orbit_stats(tau).count + orbit_stats(compose(tau.inverse(), sigma)).count);
}

SignedPermutation kreweras_perm(const SignedPermutation& tau, const SignedPermutation& gamma_perm)
{
    if (!leq(tau, gamma_perm)) throw std::invalid_argument("kreweras_perm: tau is not below gamma");
    return compose(tau.inverse(), gamma_perm);
}

std::vector<SignedPermutation> reflections(int n)
{
    std::vector<SignedPermutation> result;
    result.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            result.push_back(SignedPermutation::from_cycles(n, {{i, j}}));
            result.push_back(SignedPermutation::from_cycles(n, {{i, -j}}));
        }
        result.push_back(SignedPermutation::from_cycles(n, {{i, -i}}));
    }
    return result;
}

std::vector<SignedPermutation> all_signed_permutations(int n)
{
    if (n < 1) throw std::invalid_argument("B_n needs n >= 1");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<SignedPermutation> result;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> image(perm);
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) image[i] = -image[i];
            }
            result.push_back(SignedPermutation::from_image(std::move(image)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace ncb
