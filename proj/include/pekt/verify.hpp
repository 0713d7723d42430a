#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pekt/point_model.hpp"

namespace pekt {

/// Shared knobs for the verification routines. `n_max` is the size bound
/// of every check (largest n, or largest x-degree where that applies).
struct VerifyOptions {
    unsigned n_max = 5;
    unsigned q_order = 12;
    /// Unset means "large enough": n_max times the input's max weight.
    std::optional<unsigned> weight_cap;
    /// Largest module degree for the positivity check.
    unsigned degree = 6;
    std::uint64_t seed = 1;
    Evaluation eval;
};

struct NamedCheck {
    std::string name;
    CheckReport report;
};

/// Names accepted by run_verification, in a fixed order.
const std::vector<std::string>& verification_names();

/// Runs one named verification; throws DomainError for an unknown name.
std::vector<NamedCheck> run_verification(const std::string& name, const VerifyOptions& opts);

std::vector<NamedCheck> verify_theorem(const VerifyOptions& opts);
std::vector<NamedCheck> verify_corollary1(const VerifyOptions& opts);
std::vector<NamedCheck> verify_finite_difference(const VerifyOptions& opts);
std::vector<NamedCheck> verify_corollary2(const VerifyOptions& opts);
std::vector<NamedCheck> verify_oracle(const VerifyOptions& opts);
std::vector<NamedCheck> verify_schur_weyl(const VerifyOptions& opts);
std::vector<NamedCheck> verify_orthogonality(const VerifyOptions& opts);
std::vector<NamedCheck> verify_binomial(const VerifyOptions& opts);
std::vector<NamedCheck> verify_positivity(const VerifyOptions& opts);

}  // namespace pekt
