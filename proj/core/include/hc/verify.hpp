#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hc/supermodule.hpp"
#include "hc/tableaux.hpp"

namespace hc {

struct CheckResult {
    std::string name;     // instance label, e.g. "diagram [0..2]: thick dimension"
    std::string rule;     // stable rule id, e.g. "dimension-formula"
    bool pass = false;
    std::string witness;  // minimal failure data (offending entry / weight)
};

struct Report {
    std::string campaign;
    int n = 0;
    std::uint32_t p = 0;
    std::vector<CheckResult> checks;

    void add(const std::string& name, const std::string& rule, bool pass,
             const std::string& witness = "");
    void merge(const Report& o);
    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    std::string text() const;
};

struct VerifyConfig {
    int max_content = -1;   // characteristic-0 content cap; -1 = default
    int end_dim_max_n = 4;  // commutant solves only up to this rank
    int jobs = 1;
};

/// Relation suite: every defining relation the module's generators support,
/// plus the parity discipline.
Report verify_module(const SuperModule& m, const std::string& tag = "module");

/// Builds the module of every classification label, checking relations,
/// semisimplicity, weight-space structure, dimensions, commutants, and
/// pairwise distinctness.
Report verify_classification(int n, std::uint32_t p, const VerifyConfig& cfg = {});

/// Finite-quotient campaign: x_1 = 0, x_k equal to the twisted transposition
/// sums, and the strict-partition label count and dimension formulas.
Report verify_finite(int n, std::uint32_t p, const VerifyConfig& cfg = {});

/// Rank-2/3 x^2-semisimple family: the dichotomy grid, the annihilation
/// identities on the doubly-degenerate module, braid checks, induced module
/// spectra, the triple Jordan block, and the weight pattern constraint.
Report verify_larger(std::uint32_t p, const VerifyConfig& cfg = {});

/// Intertwiner identity families as exact normal-form identities.
Report verify_intertwiners(int n, std::uint32_t p);

/// Copy with a single generator entry perturbed; negative control for the
/// relation suite.
SuperModule perturbed_copy(const SuperModule& m);

/// Fan a pure index-function over a worker pool; fn(i) must only write
/// i-indexed slots.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

}  // namespace hc
