#include "ncb/bijection.hpp"

#include "ncb/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncb {

namespace {

bool contains(const std::vector<int>& sorted, int value)
{
    return std::binary_search(sorted.begin(), sorted.end(), value);
}

int paren_balance(const ParenString& s)
{
    int balance = 0;
    for (const auto& t : s) {
        if (t.kind == Token::Kind::Left) ++balance;
        else if (t.kind == Token::Kind::Right) --balance;
    }
    return balance;
}

bool legal_from_left(const ParenString& s)
{
    if (s.empty() || s.front().kind != Token::Kind::Left) return false;
    int balance = 0;
    for (const auto& t : s) {
        if (!t.is_paren()) continue;
        balance += t.kind == Token::Kind::Left ? 1 : -1;
        if (balance <= 0) return false;
    }
    return true;
}

bool legal_from_right(const ParenString& s)
{
    if (s.empty() || s.back().kind != Token::Kind::Right) return false;
    int balance = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        if (!it->is_paren()) continue;
        balance += it->kind == Token::Kind::Right ? 1 : -1;
        if (balance <= 0) return false;
    }
    return true;
}

ParenString circle_string(const std::vector<int>& labels, const std::vector<int>& lefts,
                          const std::vector<std::vector<int>>& rights)
{
    ParenString s;
    for (int sign : {1, -1}) {
        for (int label : labels) {
            if (contains(lefts, label)) s.push_back(Token::left());
            s.push_back(Token::number(sign * label));
            for (std::size_t k = 0; k < rights.size(); ++k) {
                if (contains(rights[k], label)) s.push_back(Token::right(static_cast<int>(k) + 1));
            }
        }
    }
    return s;
}

std::vector<int> range_labels(int first, int count)
{
    std::vector<int> labels(count);
    for (int j = 0; j < count; ++j) labels[j] = first + j;
    return labels;
}

void require_subset(const std::vector<int>& set, int lo, int hi, const char* name)
{
    for (std::size_t j = 0; j < set.size(); ++j) {
        if (set[j] < lo || set[j] > hi) {
            throw std::invalid_argument(std::string(name) + " has label " + std::to_string(set[j]) + " outside " +
                                        std::to_string(lo) + ".." + std::to_string(hi));
        }
        if (j && set[j] <= set[j - 1]) throw std::invalid_argument(std::string(name) + " must be strictly ascending");
    }
}

std::size_t total_size(const std::vector<std::vector<int>>& sets)
{
    std::size_t total = 0;
    for (const auto& s : sets) total += s.size();
    return total;
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc()) throw std::invalid_argument("bad integer list: " + std::string(text));
        values.push_back(v);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size()) {
            if (text[pos] != ',') throw std::invalid_argument("bad integer list: " + std::string(text));
            ++pos;
        }
    }
    return values;
}

std::string join(const std::vector<int>& values)
{
    std::string out;
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(values[j]);
    }
    return out;
}

std::vector<int> mask_to_labels(unsigned mask, int first, int count)
{
    std::vector<int> labels;
    for (int j = 0; j < count; ++j) {
        if (mask & (1u << j)) labels.push_back(first + j);
    }
    return labels;
}

// Reads every level of the chain from t1t2; level j drops right parentheses of
// type < j along with the left parentheses they close.
std::vector<BPartition> read_levels(const ParenString& s, int m)
{
    std::vector<int> closing_type(s.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
        if (s[pos].kind == Token::Kind::Left) {
            stack.push_back(pos);
        } else if (s[pos].kind == Token::Kind::Right) {
            if (stack.empty()) throw std::logic_error("t1t2 has an unmatched right parenthesis");
            closing_type[stack.back()] = s[pos].value;
            stack.pop_back();
        }
    }
    if (!stack.empty()) throw std::logic_error("t1t2 has an unmatched left parenthesis");

    std::vector<BPartition> chain;
    for (int level = 1; level < m; ++level) {
        ParenString kept;
        for (std::size_t pos = 0; pos < s.size(); ++pos) {
            const Token& t = s[pos];
            if (t.kind == Token::Kind::Right && t.value < level) continue;
            if (t.kind == Token::Kind::Left && closing_type[pos] < level) continue;
            kept.push_back(t);
        }
        chain.push_back(read_partition(kept));
    }
    return chain;
}

// Position of the start token of a shift index i (1-based token numbering).
int shift_start_token(int i, int length) { return i % length + 1; }

}  // namespace

// ---------------------------------------------------------------------------
// Paren strings

std::string to_string(const ParenString& s)
{
    std::string out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j) out += ' ';
        switch (s[j].kind) {
        case Token::Kind::Number: out += std::to_string(s[j].value); break;
        case Token::Kind::Left: out += '('; break;
        case Token::Kind::Right: out += ')' + std::to_string(s[j].value); break;
        }
    }
    return out;
}

ParenString parse_paren_string(std::string_view text)
{
    ParenString s;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char ch = text[pos];
        if (ch == ' ' || ch == '\t' || ch == '\n') {
            ++pos;
        } else if (ch == '(') {
            s.push_back(Token::left());
            ++pos;
        } else if (ch == ')') {
            ++pos;
            int type = 1;
            if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), type);
                pos = static_cast<std::size_t>(ptr - text.data());
                if (ec != std::errc() || type < 1) throw std::invalid_argument("bad parenthesis type");
            }
            s.push_back(Token::right(type));
        } else {
            int v = 0;
            const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
            if (ec != std::errc() || v == 0) {
                throw std::invalid_argument("bad token in parenthesis string: " + std::string(text.substr(pos)));
            }
            pos = static_cast<std::size_t>(ptr - text.data());
            s.push_back(Token::number(v));
        }
    }
    return s;
}

ParenString cyclic_shift(const ParenString& s, int i)
{
    const int len = static_cast<int>(s.size());
    if (i < 1 || i > len) throw std::out_of_range("shift index out of range");
    ParenString out;
    out.reserve(s.size());
    out.insert(out.end(), s.begin() + i % len, s.end());
    out.insert(out.end(), s.begin(), s.begin() + i % len);
    return out;
}

std::vector<int> legal_left_shifts(const ParenString& s)
{
    if (paren_balance(s) <= 0) throw std::invalid_argument("left surplus must be positive");
    std::vector<int> result;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
        if (legal_from_left(cyclic_shift(s, i))) result.push_back(i);
    }
    return result;
}

std::vector<int> legal_right_shifts(const ParenString& s)
{
    if (paren_balance(s) >= 0) throw std::invalid_argument("right surplus must be positive");
    std::vector<int> result;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
        if (legal_from_right(cyclic_shift(s, i))) result.push_back(i);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Tuples

std::string to_string(const AnnulusTuple& t)
{
    std::string out = "c=" + std::to_string(t.c) + " d=" + std::to_string(t.d) + " LE=" + join(t.left_ext);
    for (std::size_t k = 0; k < t.right_ext.size(); ++k) out += " RE" + std::to_string(k + 1) + "=" + join(t.right_ext[k]);
    out += " LI=" + join(t.left_int);
    for (std::size_t k = 0; k < t.right_int.size(); ++k) out += " RI" + std::to_string(k + 1) + "=" + join(t.right_int[k]);
    return out;
}

AnnulusTuple parse_tuple(std::string_view text)
{
    AnnulusTuple t;
    std::map<int, std::vector<int>> re, ri;
    bool have_c = false, have_d = false;
    std::istringstream in{std::string(text)};
    std::string field;
    while (in >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("tuple field without '=': " + field);
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        auto sorted = [&] {
            auto v = parse_int_list(value);
            std::sort(v.begin(), v.end());
            return v;
        };
        auto index_of = [&](std::size_t prefix) {
            if (key.size() == prefix) return 1;
            int k = 0;
            const auto [ptr, ec] = std::from_chars(key.data() + prefix, key.data() + key.size(), k);
            if (ec != std::errc() || ptr != key.data() + key.size() || k < 1) {
                throw std::invalid_argument("bad tuple key: " + key);
            }
            return k;
        };
        if (key == "c") {
            t.c = std::stoi(value);
            have_c = true;
        } else if (key == "d") {
            t.d = std::stoi(value);
            have_d = true;
        } else if (key == "LE") {
            t.left_ext = sorted();
        } else if (key == "LI") {
            t.left_int = sorted();
        } else if (key.rfind("RE", 0) == 0) {
            re[index_of(2)] = sorted();
        } else if (key.rfind("RI", 0) == 0) {
            ri[index_of(2)] = sorted();
        } else {
            throw std::invalid_argument("unknown tuple key: " + key);
        }
    }
    if (!have_c || !have_d) throw std::invalid_argument("tuple needs c= and d=");
    int levels = 1;
    if (!re.empty()) levels = std::max(levels, re.rbegin()->first);
    if (!ri.empty()) levels = std::max(levels, ri.rbegin()->first);
    t.right_ext.assign(levels, {});
    t.right_int.assign(levels, {});
    for (auto& [k, v] : re) t.right_ext[k - 1] = std::move(v);
    for (auto& [k, v] : ri) t.right_int[k - 1] = std::move(v);
    return t;
}

void validate(const AnnulusTuple& t, int p, int q)
{
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    if (t.c < 1) throw std::invalid_argument("c must be at least 1");
    if (t.d < 1 || t.d > 2 * t.c) throw std::invalid_argument("d must lie in 1..2c");
    if (t.right_ext.empty() || t.right_ext.size() != t.right_int.size()) {
        throw std::invalid_argument("need the same number (m-1 >= 1) of exterior and interior right sets");
    }
    require_subset(t.left_ext, 1, p, "LE");
    require_subset(t.left_int, p + 1, p + q, "LI");
    for (const auto& s : t.right_ext) require_subset(s, 1, p, "RE");
    for (const auto& s : t.right_int) require_subset(s, p + 1, p + q, "RI");
    if (t.left_ext.size() != total_size(t.right_ext) + static_cast<std::size_t>(t.c)) {
        throw std::invalid_argument("|LE| must equal the total size of the RE sets plus c");
    }
    if (t.left_int.size() + static_cast<std::size_t>(t.c) != total_size(t.right_int)) {
        throw std::invalid_argument("|LI| must equal the total size of the RI sets minus c");
    }
}

ParenString exterior_string(const AnnulusTuple& t, int p)
{
    return circle_string(range_labels(1, p), t.left_ext, t.right_ext);
}

ParenString interior_string(const AnnulusTuple& t, int p, int q)
{
    return circle_string(range_labels(p + 1, q), t.left_int, t.right_int);
}

// ---------------------------------------------------------------------------
// Reading and the codecs

BPartition read_partition(const ParenString& s)
{
    std::vector<Block> blocks;
    std::vector<Block> open;
    Block unenclosed;
    int n = 0;
    for (const auto& t : s) {
        switch (t.kind) {
        case Token::Kind::Left: open.emplace_back(); break;
        case Token::Kind::Number:
            (open.empty() ? unenclosed : open.back()).push_back(t.value);
            n = std::max(n, std::abs(t.value));
            break;
        case Token::Kind::Right:
            if (open.empty()) throw std::invalid_argument("unmatched right parenthesis");
            if (!open.back().empty()) blocks.push_back(std::move(open.back()));
            open.pop_back();
            break;
        }
    }
    if (!open.empty()) throw std::invalid_argument("unmatched left parenthesis");
    if (!unenclosed.empty()) blocks.push_back(std::move(unenclosed));
    return BPartition(n, std::move(blocks));
}

std::vector<BPartition> encode_multichain(const AnnulusTuple& t, int p, int q)
{
    validate(t, p, q);
    const ParenString u = exterior_string(t, p);
    const auto lefts = legal_left_shifts(u);
    if (static_cast<int>(lefts.size()) != 2 * t.c) throw std::logic_error("cycle lemma count mismatch on u");
    ParenString s = cyclic_shift(u, lefts[t.d - 1]);

    const ParenString v = interior_string(t, p, q);
    const auto rights = legal_right_shifts(v);
    if (static_cast<int>(rights.size()) != 2 * t.c) throw std::logic_error("cycle lemma count mismatch on v");
    // Last legal shift among those closing with the highest type, so the
    // outermost pair of t1t2 survives at every level where any pair does.
    int close_type = 0, chosen = 0;
    for (int j : rights) {
        if (v[j - 1].value >= close_type) {
            close_type = v[j - 1].value;
            chosen = j;
        }
    }
    const ParenString t2 = cyclic_shift(v, chosen);
    s.insert(s.end(), t2.begin(), t2.end());

    return read_levels(s, t.m());
}

BPartition encode_annulus(const AnnulusTuple& t, int p, int q)
{
    if (t.m() != 2) throw std::invalid_argument("encode_annulus takes a tuple with a single right set per circle");
    return encode_multichain(t, p, q).front();
}

std::vector<int> canonical_block_order(const std::vector<int>& part, const AnnulusShape& shape)
{
    if (part.empty()) throw std::invalid_argument("empty block part");
    const int circle = shape.cycle_of(part.front());
    std::set<int> members(part.begin(), part.end());
    for (int x : part) {
        if (shape.cycle_of(x) != circle) throw std::invalid_argument("block part spans two circles");
        if (members.count(-x)) throw std::invalid_argument("block part meets its own negation");
    }
    const int first = shape.cycle_start(circle);
    const int size = shape.sizes()[circle];
    std::vector<int> sequence;
    for (int sign : {1, -1}) {
        for (int j = 0; j < size; ++j) sequence.push_back(sign * (first + j));
    }
    const int len = static_cast<int>(sequence.size());
    const int start = static_cast<int>(std::find(sequence.begin(), sequence.end(), -part.front()) - sequence.begin());
    std::vector<int> order;
    for (int step = 1; step < len; ++step) {
        const int x = sequence[(start + step) % len];
        if (members.count(x)) order.push_back(x);
    }
    return order;
}

namespace {

// Left parentheses sit at the first point of each block part and right
// parentheses at the last; a connecting block opens outside and closes inside.
AnnulusTuple block_boundaries(const BPartition& pi, const AnnulusShape& shape)
{
    std::set<int> le, re, li, ri;
    auto mark = [&](std::set<int>& target, int x) { target.insert(std::abs(x)); };
    for (const auto& block : pi.blocks()) {
        std::vector<int> outer, inner;
        for (int x : block) (shape.cycle_of(x) == 0 ? outer : inner).push_back(x);
        if (inner.empty()) {
            const auto order = canonical_block_order(outer, shape);
            mark(le, order.front());
            mark(re, order.back());
        } else if (outer.empty()) {
            const auto order = canonical_block_order(inner, shape);
            mark(li, order.front());
            mark(ri, order.back());
        } else {
            mark(le, canonical_block_order(outer, shape).front());
            mark(ri, canonical_block_order(inner, shape).back());
        }
    }
    AnnulusTuple t;
    t.left_ext.assign(le.begin(), le.end());
    t.right_ext = {std::vector<int>(re.begin(), re.end())};
    t.left_int.assign(li.begin(), li.end());
    t.right_int = {std::vector<int>(ri.begin(), ri.end())};
    t.c = static_cast<int>(le.size()) - static_cast<int>(re.size());
    return t;
}

}  // namespace

AnnulusTuple decode_annulus(const BPartition& pi, int p, int q)
{
    const AnnulusShape shape = AnnulusShape::annulus(p, q);
    if (pi.n() != shape.n()) throw std::invalid_argument("partition size does not match shape");
    const PairStats stats = pair_stats(pi, shape);
    if (stats.c == 0) throw std::invalid_argument("partition has connectivity 0; outside the bijection's range");

    AnnulusTuple t = block_boundaries(pi, shape);
    t.c = stats.c;

    // t2 is the last legal shift of v; its closing parenthesis belongs to the
    // connecting block that t1 must open.
    const ParenString v = interior_string(t, p, q);
    const auto rights = legal_right_shifts(v);
    const int v_len = static_cast<int>(v.size());
    int pos = rights.back() - 1;  // 0-based index of the closing token
    while (v[pos].kind != Token::Kind::Number) pos = (pos + v_len - 1) % v_len;
    const Block& chosen = pi.blocks()[pi.block_of(v[pos].value)];
    std::vector<int> chosen_outer;
    for (int x : chosen) {
        if (shape.cycle_of(x) == 0) chosen_outer.push_back(x);
    }
    if (chosen_outer.empty()) throw std::logic_error("closing block of t2 is not a connecting block");
    const int opener = canonical_block_order(chosen_outer, shape).front();

    const ParenString u = exterior_string(t, p);
    const int u_len = static_cast<int>(u.size());
    const auto lefts = legal_left_shifts(u);
    const auto at = std::find(u.begin(), u.end(), Token::number(opener)) - u.begin();  // 0-based
    const int left_token = static_cast<int>(at);                                        // 1-based token of "("
    for (std::size_t k = 0; k < lefts.size(); ++k) {
        if (shift_start_token(lefts[k], u_len) == left_token) {
            t.d = static_cast<int>(k) + 1;
            return t;
        }
    }
    throw std::logic_error("no legal shift of u opens the chosen connecting block");
}

std::vector<AnnulusTuple> enumerate_tuples(int p, int q, int m)
{
    if (p < 1 || q < 1 || m < 2) throw std::invalid_argument("enumerate_tuples needs p, q >= 1 and m >= 2");
    if ((p + q) * m > 24) throw DeskBoundError("tuple domain for (" + std::to_string(p) + "," + std::to_string(q) + ", m=" +
                                               std::to_string(m) + ") exceeds the enumeration bound");
    const int levels = m - 1;
    std::vector<AnnulusTuple> result;

    // Interior halves grouped by their surplus Σ|RI| − |LI|.
    std::map<int, std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>>> interior;
    const unsigned q_sets = 1u << q;
    std::vector<unsigned> masks(levels, 0);
    for (unsigned li = 0; li < q_sets; ++li) {
        std::fill(masks.begin(), masks.end(), 0);
        for (;;) {
            std::vector<std::vector<int>> rights;
            int total = 0;
            for (unsigned mask : masks) {
                rights.push_back(mask_to_labels(mask, p + 1, q));
                total += static_cast<int>(rights.back().size());
            }
            const int surplus = total - __builtin_popcount(li);
            if (surplus >= 1) interior[surplus].emplace_back(mask_to_labels(li, p + 1, q), std::move(rights));
            int k = 0;
            while (k < levels && ++masks[k] == q_sets) masks[k++] = 0;
            if (k == levels) break;
        }
    }

    const unsigned p_sets = 1u << p;
    for (unsigned le = 0; le < p_sets; ++le) {
        std::fill(masks.begin(), masks.end(), 0);
        for (;;) {
            std::vector<std::vector<int>> rights;
            int total = 0;
            for (unsigned mask : masks) {
                rights.push_back(mask_to_labels(mask, 1, p));
                total += static_cast<int>(rights.back().size());
            }
            const int c = __builtin_popcount(le) - total;
            if (c >= 1 && interior.count(c)) {
                for (const auto& [left_int, right_int] : interior.at(c)) {
                    for (int d = 1; d <= 2 * c; ++d) {
                        result.push_back(AnnulusTuple{c, d, mask_to_labels(le, 1, p), rights, left_int, right_int});
                    }
                }
            }
            int k = 0;
            while (k < levels && ++masks[k] == p_sets) masks[k++] = 0;
            if (k == levels) break;
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

AnnulusTuple decode_multichain(const std::vector<BPartition>& chain, int p, int q)
{
    if (chain.empty()) throw std::invalid_argument("empty chain");
    if (chain.size() == 1) return decode_annulus(chain.front(), p, q);
    const int levels = static_cast<int>(chain.size());
    const auto outside = [] { return std::invalid_argument("chain is outside the image of the multichain encoding"); };
    const AnnulusShape shape = AnnulusShape::annulus(p, q);
    for (const auto& pi : chain) {
        if (pi.n() != shape.n()) throw outside();
    }

    // Every label is enclosed at the lowest level, so each of its blocks is one
    // matched pair, opened at the block's first point. A pair of type k still
    // opens a block at levels 1..k and is absorbed above that.
    const BPartition& lowest = chain.front();
    if (zero_block(lowest)) throw outside();
    auto opener = [&](const Block& block) {
        std::vector<int> outer, inner;
        for (int x : block) (shape.cycle_of(x) == 0 ? outer : inner).push_back(x);
        return canonical_block_order(outer.empty() ? inner : outer, shape).front();
    };
    std::set<int> le, li;
    // Per type: pure exterior pairs (closing side unknown), exterior-opened
    // pairs reaching the inner circle, and interior pairs.
    std::vector<int> ext_pure(levels + 1, 0), ext_conn(levels + 1, 0), int_open(levels + 1, 0);
    for (const auto& block : lowest.blocks()) {
        const int first = opener(block);
        if (first < 0) continue;
        const bool opens_outside = shape.cycle_of(first) == 0;
        (opens_outside ? le : li).insert(first);
        int type = 1;
        for (int j = 2; j <= levels; ++j) {
            const BPartition& pi = chain[j - 1];
            const Block& holder = pi.blocks()[pi.block_of(first)];
            const bool invariant = std::find(holder.begin(), holder.end(), -first) != holder.end();
            if (!invariant && opener(holder) == first) type = j;
        }
        const bool reaches_inside =
            std::any_of(block.begin(), block.end(), [&](int x) { return shape.cycle_of(x) == 1; });
        if (!opens_outside) ++int_open[type];
        else if (reaches_inside) ++ext_conn[type];
        else ++ext_pure[type];
    }

    AnnulusTuple t;
    t.left_ext.assign(le.begin(), le.end());
    t.left_int.assign(li.begin(), li.end());
    t.right_ext.assign(levels, {});
    t.right_int.assign(levels, {});

    auto subsets_of_size = [](int count, int base, int size) {
        std::vector<std::vector<int>> out;
        for (unsigned mask = 0; mask < (1u << size); ++mask) {
            if (__builtin_popcount(mask) == count) out.push_back(mask_to_labels(mask, base, size));
        }
        return out;
    };

    // moved[k]: pure exterior pairs of type k that close on the inner circle.
    std::vector<int> moved(levels + 1, 0);
    double work = 0;
    while (true) {
        int c = 0;
        for (int k = 1; k <= levels; ++k) c += ext_conn[k] + moved[k];
        if (c >= 1) {
            std::vector<std::vector<std::vector<int>>> options;  // ext slots then int slots, by type
            double candidates = 2.0 * c;
            for (int k = 1; k <= levels; ++k) {
                options.push_back(subsets_of_size(ext_pure[k] - moved[k], 1, p));
                options.push_back(subsets_of_size(ext_conn[k] + moved[k] + int_open[k], p + 1, q));
                candidates *= static_cast<double>(options[options.size() - 2].size() * options.back().size());
            }
            work += candidates;
            if (work > 5e6) throw DeskBoundError("multichain decode search exceeds the enumeration bound");
            t.c = c;
            std::vector<std::size_t> choice(options.size(), 0);
            const bool empty = std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
            while (!empty) {
                for (int k = 1; k <= levels; ++k) {
                    t.right_ext[k - 1] = options[2 * (k - 1)][choice[2 * (k - 1)]];
                    t.right_int[k - 1] = options[2 * (k - 1) + 1][choice[2 * (k - 1) + 1]];
                }
                for (int d = 1; d <= 2 * c; ++d) {
                    t.d = d;
                    if (encode_multichain(t, p, q) == chain) return t;
                }
                std::size_t i = 0;
                while (i < choice.size() && ++choice[i] == options[i].size()) choice[i++] = 0;
                if (i == choice.size()) break;
            }
        }
        int k = 1;
        while (k <= levels && ++moved[k] > ext_pure[k]) moved[k++] = 0;
        if (k > levels) break;
    }
    throw outside();
}

}  // namespace ncb
