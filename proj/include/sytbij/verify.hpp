#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sytbij/array_pair.hpp"

namespace sytbij {

/// First failing input of an exhaustive run.
struct CheckFailure {
    std::string check;
    ArrayPair input;
    std::string detail;
};

struct IdentityReport {
    int n = 0;
    ArrayMode mode = ArrayMode::standard;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    std::uint64_t array_count = 0;
    bool bijection1_ok = false;
    bool bijection2_ok = false;
    bool composition_ok = false;
    std::map<int, std::uint64_t> step_histogram;

    /// Remark mode only: resolved weight w of the right-hand sum over
    /// H(1,1;w); -1 when unresolved or in standard mode.
    int rhs_hook_weight = -1;

    std::optional<CheckFailure> failure;

    bool ok() const { return bijection1_ok && bijection2_ok && composition_ok; }
};

/// (sum of (f^mu)^2 over H(1,1;n+1), sum of f^lambda over H(2,0;2n)),
/// computed purely from counting.
std::pair<std::uint64_t, std::uint64_t> identity_sides(int n);

/// Sum of f^lambda * f^(lambda plus one) over H(1,1;hook_weight).
std::uint64_t remark_pair_sum(int hook_weight);

/// Hook weights w in {max(0,n-1)..n+3} whose pair sum equals the remark
/// left-hand side C(2n+1,n+1).
std::vector<int> remark_matching_weights(int n);

struct CertifyOptions {
    int max_n = 0;    // 0 = mode default (8 standard, 6 remark)
    int threads = 0;  // 0 = hardware concurrency
};

inline constexpr int kDefaultCertifyBound = 8;
inline constexpr int kDefaultRemarkCertifyBound = 6;

/// Exhaustive certification over every standard-mode array: injectivity of
/// both bijections, codomain validity, both round-trips, image sets equal to
/// the two enumerated codomains, and the materialized composition
/// hook-pairs <-> two-row SYTs checked for bijectivity.
IdentityReport certify(int n, const CertifyOptions& options = {});

/// The same certification over (n+1,n)-mode arrays, with the right-hand-side
/// hook indexing resolved numerically and recorded in the report.
IdentityReport certify_remark(int n, const CertifyOptions& options = {});

}  // namespace sytbij
