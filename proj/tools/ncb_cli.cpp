// Command-line front end: counting, enumeration, the parenthesis codecs,
// the formula-versus-oracle suite and Hasse diagram export.

#include "ncb/bijection.hpp"
#include "ncb/enumerate.hpp"
#include "ncb/formulas.hpp"
#include "ncb/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace ncb;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string shape;
    std::optional<int> rank;
    std::optional<int> connectivity;
    long long m = 2;
    bool json = false;
    bool formula = false;
    bool oracle = false;
    bool all = false;
    int max_n = 6;
    std::vector<std::string> tuples;
    std::string in;
    std::string out;
};

AnnulusShape parse_shape(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("--shape is required");
    std::vector<int> sizes;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            sizes.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad shape: " + text);
        }
    }
    return AnnulusShape(sizes);
}

AnnulusShape require_annulus(const Options& o)
{
    const AnnulusShape shape = parse_shape(o.shape);
    if (!shape.is_annulus()) throw std::invalid_argument("this command needs an annulus shape p,q");
    return shape;
}

std::vector<std::string> read_lines(const std::string& path)
{
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot read " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
    return lines;
}

bool matches_filters(const BPartition& pi, const AnnulusShape& shape, const Options& o)
{
    if (o.rank && rank(pi) != *o.rank) return false;
    if (o.connectivity && connectivity(pi, shape) != *o.connectivity) return false;
    return true;
}

void check_filters(const AnnulusShape& shape, const Options& o)
{
    if (o.connectivity && !shape.is_annulus()) throw std::invalid_argument("--connectivity needs an annulus shape");
}

BigInt count_by_formula(const AnnulusShape& shape, const Options& o)
{
    if (shape.k() == 1) {
        const auto counts = disc_counts(shape.n());
        if (!o.rank) return counts.total;
        return *o.rank >= 0 && *o.rank <= shape.n() ? counts.rank_counts[*o.rank] : BigInt(0);
    }
    if (shape.k() == 3) {
        if (o.rank) throw std::invalid_argument("no rank-refined formula for three circles");
        const auto& s = shape.sizes();
        return multi3_total(s[0], s[1], s[2]);
    }
    if (!shape.is_annulus()) throw std::invalid_argument("no closed formula for more than three circles");
    const int p = shape.p(), q = shape.q();
    if (!o.connectivity) return o.rank ? rank_gen(p, q).coefficient(*o.rank) : annulus_total(p, q);
    const int c = *o.connectivity;
    if (!o.rank) return annulus_connectivity_count(p, q, c);
    if (c == 0) {
        return (disc_rank_gen(p) * disc_rank_gen(q)).coefficient(*o.rank);
    }
    BigInt total = 0;
    for (int e = 0; e + c <= p; ++e) {
        const int i = p + q - c - e - *o.rank;
        total += annulus_cell_count(p, q, c, e, i);
    }
    return total;
}

int cmd_count(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = parse_shape(o.shape);
    check_filters(shape, o);
    if (o.formula) {
        out << to_string(count_by_formula(shape, o)) << '\n';
        return 0;
    }
    std::size_t count = 0;
    for (const auto& pi : nc_b_elements(shape)) count += matches_filters(pi, shape, o);
    out << count << '\n';
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = parse_shape(o.shape);
    check_filters(shape, o);
    for (const auto& pi : cached_poset(shape)->elements) {
        if (!matches_filters(pi, shape, o)) continue;
        out << (o.json ? to_json(pi).dump() : pi.to_string()) << '\n';
    }
    return 0;
}

int cmd_rank_poly(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = parse_shape(o.shape);
    if (o.oracle) {
        std::vector<BigInt> counts;
        for (std::size_t r : rank_vector(cached_poset(shape)->poset)) counts.push_back(r);
        out << IntPolynomial(counts).to_string() << '\n';
    } else if (shape.k() == 1) {
        out << disc_rank_gen(shape.n()).to_string() << '\n';
    } else if (shape.is_annulus()) {
        out << rank_gen(shape.p(), shape.q()).to_string() << '\n';
    } else {
        throw std::invalid_argument("no closed rank formula for this shape; use --oracle");
    }
    return 0;
}

int cmd_zeta(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = parse_shape(o.shape);
    if (o.oracle) {
        if (o.m < 2 || o.m > 64) throw std::invalid_argument("the multichain oracle needs 2 <= m <= 64");
        out << to_string(zeta_oracle(cached_poset(shape)->poset, static_cast<int>(o.m))) << '\n';
    } else if (shape.k() == 1) {
        out << to_string(binomial(BigInt(o.m * shape.n()), shape.n())) << '\n';
    } else if (shape.is_annulus()) {
        out << to_string(zeta_poly(shape.p(), shape.q(), o.m)) << '\n';
    } else {
        throw std::invalid_argument("no closed zeta formula for this shape; use --oracle");
    }
    return 0;
}

int cmd_mobius(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = parse_shape(o.shape);
    if (o.oracle) {
        const auto& P = cached_poset(shape)->poset;
        out << to_string(mobius_oracle(P, P.bottom(), P.top())) << '\n';
    } else if (shape.k() == 1) {
        out << to_string(disc_counts(shape.n()).mobius_b) << '\n';
    } else if (shape.is_annulus()) {
        out << to_string(mobius_annulus(shape.p(), shape.q())) << '\n';
    } else {
        throw std::invalid_argument("no closed Möbius formula for this shape; use --oracle");
    }
    return 0;
}

int cmd_max_chains(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = parse_shape(o.shape);
    if (o.oracle) {
        out << to_string(maximal_chains_oracle(cached_poset(shape)->poset)) << '\n';
    } else if (shape.is_annulus()) {
        out << to_string(max_chains(shape.p(), shape.q())) << '\n';
    } else {
        throw std::invalid_argument("no closed maximal-chain formula for this shape; use --oracle");
    }
    return 0;
}

int cmd_encode(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = require_annulus(o);
    std::vector<std::string> inputs = o.tuples;
    if (!o.in.empty()) {
        const auto lines = read_lines(o.in);
        inputs.insert(inputs.end(), lines.begin(), lines.end());
    }
    if (inputs.empty()) throw std::invalid_argument("encode needs --tuple or --in");
    for (const auto& text : inputs) {
        const auto chain = encode_multichain(parse_tuple(text), shape.p(), shape.q());
        if (o.json) {
            nlohmann::json line = nlohmann::json::array();
            for (const auto& pi : chain) line.push_back(to_json(pi));
            out << (chain.size() == 1 ? line[0].dump() : line.dump()) << '\n';
        } else {
            for (std::size_t j = 0; j < chain.size(); ++j) out << (j ? " <= " : "") << chain[j].to_string();
            out << '\n';
        }
    }
    return 0;
}

int cmd_decode(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = require_annulus(o);
    if (o.in.empty()) throw std::invalid_argument("decode needs --in with one JSON partition or chain per line");
    for (const auto& line : read_lines(o.in)) {
        nlohmann::json value;
        try {
            value = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("bad JSON: ") + e.what());
        }
        std::vector<BPartition> chain;
        if (value.is_array()) {
            for (const auto& item : value) chain.push_back(partition_from_json(item));
        } else {
            chain.push_back(partition_from_json(value));
        }
        out << to_string(decode_multichain(chain, shape.p(), shape.q())) << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (!o.all) throw std::invalid_argument("verify runs the full suite; pass --all");
    const VerifyReport report = verify_suite(VerifyBounds{o.max_n});
    out << report.table();
    out << report.checks.size() - report.failures() << " passed, " << report.failures() << " failed\n";
    return report.all_passed() ? 0 : kExitFail;
}

int cmd_hasse_dot(const Options& o, std::ostream& out)
{
    const AnnulusShape shape = parse_shape(o.shape);
    out << to_dot(cached_poset(shape)->poset, "NCB_" + shape.to_string());
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Annular non-crossing partitions of type B"};
    app.require_subcommand(1);
    Options o;

    auto add_shape = [&](CLI::App* sub) { sub->add_option("--shape", o.shape, "Circle sizes, e.g. 4,2")->required(); };
    auto add_filters = [&](CLI::App* sub) {
        sub->add_option("--rank", o.rank, "Only partitions of this rank");
        sub->add_option("--connectivity", o.connectivity, "Only partitions of this connectivity");
    };
    auto add_source = [&](CLI::App* sub) {
        auto* f = sub->add_flag("--formula", o.formula, "Use the closed formula");
        sub->add_flag("--oracle", o.oracle, "Use exhaustive enumeration")->excludes(f);
    };

    auto* count = app.add_subcommand("count", "Number of partitions");
    add_shape(count);
    add_filters(count);
    add_source(count);

    auto* enumerate = app.add_subcommand("enumerate", "List partitions in canonical order");
    add_shape(enumerate);
    add_filters(enumerate);
    enumerate->add_flag("--json", o.json, "One JSON object per line");

    auto* rank_poly = app.add_subcommand("rank-poly", "Rank generating function");
    add_shape(rank_poly);
    add_source(rank_poly);

    auto* zeta = app.add_subcommand("zeta", "Zeta polynomial value Z(m)");
    add_shape(zeta);
    zeta->add_option("--m", o.m, "Argument m")->required();
    add_source(zeta);

    auto* mobius = app.add_subcommand("mobius", "Möbius function from bottom to top");
    add_shape(mobius);
    add_source(mobius);

    auto* chains = app.add_subcommand("max-chains", "Number of maximal chains");
    add_shape(chains);
    add_source(chains);

    auto* encode = app.add_subcommand("encode", "Tuple(s) to partition or multichain");
    add_shape(encode);
    encode->add_option("--tuple", o.tuples, "Tuple text, e.g. \"c=1 d=1 LE=1 RE1= LI= RI1=2\"");
    encode->add_option("--in", o.in, "File with one tuple per line");
    encode->add_flag("--json", o.json, "JSON output");

    auto* decode = app.add_subcommand("decode", "Partition or multichain to tuple");
    add_shape(decode);
    decode->add_option("--in", o.in, "File with one JSON partition or chain per line")->required();

    auto* verify = app.add_subcommand("verify", "Check every closed formula against enumeration");
    verify->add_flag("--all", o.all, "Run the full suite");
    verify->add_option("--max-n", o.max_n, "Largest total size enumerated");

    auto* hasse = app.add_subcommand("hasse-dot", "Hasse diagram in Graphviz DOT");
    add_shape(hasse);

    for (auto* sub : app.get_subcommands({})) sub->add_option("--out", o.out, "Write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    std::ostringstream buffer;
    int code = 0;
    try {
        const std::string verb = app.get_subcommands().front()->get_name();
        if (verb == "count") code = cmd_count(o, buffer);
        else if (verb == "enumerate") code = cmd_enumerate(o, buffer);
        else if (verb == "rank-poly") code = cmd_rank_poly(o, buffer);
        else if (verb == "zeta") code = cmd_zeta(o, buffer);
        else if (verb == "mobius") code = cmd_mobius(o, buffer);
        else if (verb == "max-chains") code = cmd_max_chains(o, buffer);
        else if (verb == "encode") code = cmd_encode(o, buffer);
        else if (verb == "decode") code = cmd_decode(o, buffer);
        else if (verb == "verify") code = cmd_verify(o, buffer);
        else if (verb == "hasse-dot") code = cmd_hasse_dot(o, buffer);
    } catch (const DeskBoundError& e) {
        std::cerr << "ncb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ncb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "ncb: " << e.what() << '\n';
        return kExitUsage;
    }

    if (o.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(o.out);
        if (!file) {
            std::cerr << "ncb: cannot write " << o.out << '\n';
            return kExitUsage;
        }
        file << buffer.str();
    }
    return code;
}
