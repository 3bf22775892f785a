#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ncb {

/// One formula-versus-oracle comparison.
struct CheckResult {
    std::string name;
    std::string params;
    std::string formula;
    std::string oracle;
    bool pass = false;
};

struct VerifyBounds {
    int max_n = 6;  ///< largest ground-set size n = p + q enumerated
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t failures() const;
    /// One line per check: name, parameters, formula value, oracle value, PASS/FAIL.
    std::string table() const;
};

/// Runs every closed formula against its enumeration oracle within `bounds`.
/// `progress`, when set, is called after each check.
VerifyReport verify_suite(const VerifyBounds& bounds,
                          const std::function<void(const CheckResult&)>& progress = {});

/// Full tuple-domain and positive-connectivity round trip of the annulus
/// codec for one shape. Returns a description of the first mismatch, or "".
std::string annulus_round_trip(int p, int q);
/// Round trip of the multichain codec for chains of length m-1, including
/// the rank and positive-connectivity conditions on every encoded chain.
std::string multichain_round_trip(int p, int q, int m);

}  // namespace ncb
