#pragma once

#include "ncb/partition.hpp"
#include "ncb/signed_perm.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ncb {

struct Token {
    enum class Kind { Number, Left, Right };

    Kind kind = Kind::Number;
    int value = 0;  // label for Number, type (>= 1) for Right, unused for Left

    static Token number(int label) { return {Kind::Number, label}; }
    static Token left() { return {Kind::Left, 0}; }
    static Token right(int type = 1) { return {Kind::Right, type}; }

    bool is_paren() const { return kind != Kind::Number; }

    friend bool operator==(const Token&, const Token&) = default;
};

/// Sequence of signed labels, left parentheses and typed right parentheses.
/// Text form: space-separated tokens, "(" for a left parenthesis, ")k" for a
/// right parenthesis of type k (a bare ")" reads as type 1).
using ParenString = std::vector<Token>;

std::string to_string(const ParenString& s);
ParenString parse_paren_string(std::string_view text);

/// Cyclic shift s^(i), 1 <= i <= len: tokens i+1..len followed by 1..i.
ParenString cyclic_shift(const ParenString& s, int i);

/// Shift indices (ascending) whose shift starts with "(" and whose
/// parenthesis subsequence has a strict left surplus on every nonempty prefix.
/// Throws std::invalid_argument unless the left surplus is positive.
std::vector<int> legal_left_shifts(const ParenString& s);
/// Mirror image: shifts ending with ")" with a strict right surplus on every
/// nonempty suffix. Throws unless the right surplus is positive.
std::vector<int> legal_right_shifts(const ParenString& s);

/// Encoding data for a multichain of length m-1 with positive connectivity;
/// m = 2 is the single-partition case.
///
/// right_ext[k-1] and right_int[k-1] hold the labels carrying a right
/// parenthesis of type k. Exterior labels lie in 1..p, interior in p+1..p+q.
struct AnnulusTuple {
    int c = 1;
    int d = 1;
    std::vector<int> left_ext;
    std::vector<std::vector<int>> right_ext;
    std::vector<int> left_int;
    std::vector<std::vector<int>> right_int;

    int m() const { return static_cast<int>(right_ext.size()) + 1; }

    friend bool operator==(const AnnulusTuple&, const AnnulusTuple&) = default;
    friend auto operator<=>(const AnnulusTuple&, const AnnulusTuple&) = default;
};

/// "c=2 d=1 LE=1,2,3,5,6 RE1=1,3 RE2=3 LI=8,9 RI1=7,8,9 RI2=7"
std::string to_string(const AnnulusTuple& t);
/// Accepts the to_string() form; "RE"/"RI" are read as "RE1"/"RI1".
AnnulusTuple parse_tuple(std::string_view text);

/// Throws std::invalid_argument when t violates the size and range constraints.
void validate(const AnnulusTuple& t, int p, int q);

/// The strings u (exterior) and v (interior) before any shift is taken.
ParenString exterior_string(const AnnulusTuple& t, int p);
ParenString interior_string(const AnnulusTuple& t, int p, int q);

/// Reads a partition by repeatedly removing an innermost matched pair of
/// parentheses together with the labels directly inside it (one block).
/// Labels outside every pair form one further block, the zero-block.
/// Parenthesis types are ignored. Throws on unmatched parentheses or a
/// result that is not a valid BPartition.
BPartition read_partition(const ParenString& s);

BPartition encode_annulus(const AnnulusTuple& t, int p, int q);
/// Throws std::invalid_argument for connectivity 0.
AnnulusTuple decode_annulus(const BPartition& pi, int p, int q);

std::vector<BPartition> encode_multichain(const AnnulusTuple& t, int p, int q);
/// For m >= 3 the lowest level fixes c and the label sets; the parenthesis
/// types and d are then found by re-encoding. Throws std::invalid_argument
/// for a chain outside the image, DeskBoundError when the search is too large.
AnnulusTuple decode_multichain(const std::vector<BPartition>& chain, int p, int q);

/// Points of `part` (all on one boundary circle, part ∩ −part = ∅) in the
/// order met when running the circle from just after a point of −part.
std::vector<int> canonical_block_order(const std::vector<int>& part, const AnnulusShape& shape);

/// Every valid tuple for (p, q, m), in lexicographic order.
std::vector<AnnulusTuple> enumerate_tuples(int p, int q, int m);

}  // namespace ncb
