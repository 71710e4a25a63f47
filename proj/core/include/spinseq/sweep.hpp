// sweep.hpp
// Parameter sweeps and verification runs behind the CLI: model-vs-QM
// comparison grids, the brute-force oracle check, and granularity scans.
// Output is deterministic CSV or JSON with a fixed column set.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spinseq/model.hpp"

namespace spinseq {

struct SweepSpec {
    enum class Format { csv, json };
    enum class LKind { sum_all, fixed, paper_tuned };

    int n = 0;
    std::optional<int> two_j;
    std::optional<int> two_m_a1;  // defaults to two_j when unset
    std::optional<int> c_a1;      // beam-splitter flavor
    std::optional<int> d_a1;
    std::optional<Mode> mode;
    LKind l_kind = LKind::sum_all;
    int fixed_two_l_a1 = 0;

    std::vector<int> grid;         // b_map values; empty means 0..n
    std::vector<double> tau_grid;  // compare-bs: extra grid points snapped from tau
    double tau_tolerance = 0.01;

    Format format = Format::csv;
};

// Exit codes shared by all runs:
//   0 success, 1 oracle mismatch, 2 invalid or infeasible spec,
//   3 model diagnostic (negative weight).
inline constexpr int kExitOk = 0;
inline constexpr int kExitOracleMismatch = 1;
inline constexpr int kExitInvalidSpec = 2;
inline constexpr int kExitDiagnostic = 3;

/// Model vs QM over the grid; columns theta_over_pi,two_m_b2,p_model,p_qm,abs_delta.
int run_compare_sg(const SweepSpec& spec, std::ostream& out, std::ostream& diag);

/// Beam-splitter comparison; columns tau,c_b2,d_b2,p_model,p_qm,abs_delta.
int run_compare_bs(const SweepSpec& spec, std::ostream& out, std::ostream& diag);

/// Exhaustive check of the counting formulas against brute-force
/// enumeration at n <= 6: per-cell cardinalities, feasible-set equality,
/// marginal consistency, and count/quantum-number roundtrips.
int run_oracle_verify(const SweepSpec& spec, std::ostream& out, std::ostream& diag);

/// Every outcome with model probability exactly zero, with its QM value.
int run_granularity_scan(const SweepSpec& spec, std::ostream& out, std::ostream& diag);

}  // namespace spinseq
