#ifndef CTX_HIDDEN_VARIABLE_HPP
#define CTX_HIDDEN_VARIABLE_HPP

#include "ctx/empirical.hpp"
#include "ctx/linprog.hpp"
#include "ctx/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctx {

/// The Boolean incidence system between local sections (rows) and global
/// sections (columns): entry (i, j) is set when the j-th global section
/// restricts to the i-th local section. Row order is cover order then section
/// enumeration order; column order is global-section enumeration order. The
/// all-ones normalization row is appended logically when `augmented` is set.
struct IncidenceSystem {
    MeasurementScenario scenario;
    std::vector<std::pair<int, Section>> rows;  // (cover index, local section)
    std::vector<Section> columns;               // global sections
    std::vector<std::vector<std::uint64_t>> bits;  // p rows of ceil(q/64) words
    std::vector<std::size_t> row_offset;           // first row of each cover context
    bool augmented = true;

    std::size_t p() const { return rows.size(); }
    std::size_t q() const { return columns.size(); }
    bool entry(std::size_t i, std::size_t j) const {
        return (bits[i][j >> 6] >> (j & 63)) & 1u;
    }
};

IncidenceSystem build_incidence(const MeasurementScenario& scenario,
                                std::uint64_t cap = kDefaultSectionCap);

/// Empirical weights stacked in incidence row order.
RatVector stack_weights(const EmpiricalModel& model);

/// Support indicator of a model (true where the weight is nonzero), row order.
std::vector<bool> support_vector(const EmpiricalModel& model);

struct FeasibilityVerdict {
    bool feasible = false;
    Semiring semiring = Semiring::Probability;
    std::optional<RatVector> certificate;  // weights over global sections
};

/// Existence of x >= 0 with M'x = v' over the rationals, exact.
FeasibilityVerdict solve_probabilistic(const IncidenceSystem& system, const RatVector& v);

/// Consistency of M'x = v' over the rationals with no sign constraint.
FeasibilityVerdict solve_signed(const IncidenceSystem& system, const RatVector& v);

struct BooleanFeasibility {
    bool feasible = false;
    std::size_t candidate_count = 0;       // global sections consistent with the support
    std::vector<bool> certificate;         // indicator of the candidate columns
};

/// Boolean-semiring solvability of M x = v: candidate columns are the global
/// sections whose every restriction lies in the support; the system is
/// solvable exactly when the candidates cover every supported local section.
BooleanFeasibility solve_possibilistic(const IncidenceSystem& system,
                                       const std::vector<bool>& support);

enum class ContextualityClass {
    Noncontextual,
    ProbabilisticallyContextual,
    LogicallyContextual,
    StronglyContextual,
};

std::string to_string(ContextualityClass cls);

struct Classification {
    ContextualityClass cls = ContextualityClass::Noncontextual;
    FeasibilityVerdict probabilistic;
    BooleanFeasibility possibilistic;
};

/// Hierarchy over the three semirings. Requires a compatible probability
/// model; an incompatible model is rejected with its witness.
Classification classify(const EmpiricalModel& model, std::uint64_t cap = kDefaultSectionCap);

/// A finite hidden-variable model with factorizable responses: one prior over
/// the hidden values and, per hidden value and measurement, a distribution
/// over outcomes. Only factorizable responses are representable.
struct HiddenVariableModel {
    std::vector<Rational> prior;  // one weight per hidden value, sums to 1
    // response[lambda][measurement][outcome]
    std::vector<std::vector<std::vector<Rational>>> response;
    bool factorizable = true;
};

/// Averages the factorizable responses over the prior: the weight of section
/// s in context C is sum_lambda prior(lambda) * prod_{m in C} response(lambda, m, s(m)).
/// The output is always compatible.
EmpiricalModel realize_hv(const HiddenVariableModel& hv, const MeasurementScenario& scenario);

/// Certificate vector as a probability distribution over the global sections.
Distribution certificate_distribution(const IncidenceSystem& system, const RatVector& x);

}  // namespace ctx

#endif  // CTX_HIDDEN_VARIABLE_HPP
