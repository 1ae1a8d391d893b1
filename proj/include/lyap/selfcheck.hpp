#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lyap {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first counterexample on failure, summary on success
};

// Each sweep returns the first counterexample, or nullopt when clean.
std::optional<std::string> check_slope_sums(int max_genus);
std::optional<std::string> check_kappa_below_cap(int max_genus);
std::optional<std::string> check_rational_roundtrip(int iterations);
std::optional<std::string> check_cover_genus_consistency(int max_abs_sum);
std::optional<std::string> check_max_sum_family(int max_k);
std::optional<std::string> check_semigroup_agreement(int max_genus, int degree_factor);
std::optional<std::string> check_divisor_bounds();
std::optional<std::string> check_canonical_h0(int max_abs_sum);
std::optional<std::string> check_theorem_main(int max_genus);
std::optional<std::string> check_mode_monotonic(int max_genus);
std::optional<std::string> check_exact_vs_yz(int max_abs_sum);
std::optional<std::string> check_table_consistency();
std::optional<std::string> check_partial_sums(int max_genus);
std::optional<std::string> check_cross_formula(int max_abs_sum, int max_entry);
std::optional<std::string> check_table_regeneration();
std::optional<std::string> check_mn_family(int max_n);

// Runs every library-level invariant sweep at the documented limits.
std::vector<CheckResult> run_library_checks();

} // namespace lyap
