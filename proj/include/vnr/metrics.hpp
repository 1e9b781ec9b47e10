#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "vnr/outcome.hpp"

namespace vnr {

enum class End { Top, Least };

// All comparisons read `total_preorder`, so unranked systems form one
// trailing tie-group. Both outcomes must mention the same systems.

/// Overlap of the best (or worst) k systems. A tie-group straddling the k
/// boundary joins whole, and the overlap is divided by the larger set.
double agreement_rate(const RuleOutcome& a, const RuleOutcome& b, std::size_t k, End end = End::Top);

/// Tau-b. Identical preorders give exactly 1; a preorder with a single
/// tie-group against a different one gives 0.
double kendall_tau(const RuleOutcome& a, const RuleOutcome& b);

/// Pearson correlation of fractional ranks, with the same degenerate cases
/// as `kendall_tau`.
double spearman_rho(const RuleOutcome& a, const RuleOutcome& b);

/// |M| minus the number of tie-groups.
std::size_t discriminative_power(const RuleOutcome& r);

/// Systems in the best (or worst) k, extended to whole tie-groups.
std::vector<std::string> end_set(const RuleOutcome& r, std::size_t k, End end = End::Top);

/// The preorder of `r` restricted to `keep`; empty groups vanish and the
/// result has no unranked systems.
RuleOutcome restrict_outcome(const RuleOutcome& r, std::span<const std::string> keep);

}  // namespace vnr
