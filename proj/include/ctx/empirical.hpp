#ifndef CTX_EMPIRICAL_HPP
#define CTX_EMPIRICAL_HPP

#include "ctx/rational.hpp"
#include "ctx/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctx {

/// Weight semiring of a distribution. Probability: nonnegative rationals
/// summing to one. Signed: rationals summing to one. Possibilistic: Boolean
/// weights (stored as 0/1 rationals, combined by OR), at least one true.
enum class Semiring { Probability, Signed, Possibilistic };

std::string to_string(Semiring semiring);
Semiring semiring_from_string(const std::string& name);  // "prob" | "signed" | "bool"

/// A distribution over the sections of one context. Weights are aligned with
/// enumerate_sections(scenario, context).
struct Distribution {
    Context context;
    Semiring semiring = Semiring::Probability;
    std::vector<Rational> weights;

    bool operator==(const Distribution&) const = default;
};

/// Checks the semiring's admissibility and normalization rules exactly.
Distribution make_distribution(const MeasurementScenario& scenario, Context context,
                               Semiring semiring, std::vector<Rational> weights);

/// One distribution per cover context, all in the same semiring.
struct EmpiricalModel {
    MeasurementScenario scenario;
    Semiring semiring = Semiring::Probability;
    std::vector<Distribution> table;  // aligned with scenario.cover

    const Distribution& distribution_for(const Context& context) const;
    bool operator==(const EmpiricalModel&) const = default;
};

EmpiricalModel make_model(MeasurementScenario scenario, Semiring semiring,
                          std::vector<Distribution> table);

/// Pushes a distribution down to a subcontext. Probability/Signed weights add;
/// Possibilistic weights combine by OR. Normalization is preserved.
Distribution marginalize(const MeasurementScenario& scenario, const Distribution& dist,
                         const Context& subcontext);

/// First pair of cover contexts (lexicographic pair order) whose marginals
/// disagree on the shared subcontext, together with the two marginals.
struct CompatibilityWitness {
    int context_a = -1;
    int context_b = -1;
    Context overlap;
    Distribution marginal_a;
    Distribution marginal_b;
};

struct CompatibilityVerdict {
    bool compatible = false;
    std::optional<CompatibilityWitness> witness;
};

/// No-signaling / no-disturbance check: all cover pairs agree on overlap
/// marginals, by exact comparison.
CompatibilityVerdict check_compatibility(const EmpiricalModel& model);

/// Marginalizes a distribution over the global sections onto every cover
/// context. The result is always compatible.
EmpiricalModel model_from_global_distribution(const MeasurementScenario& scenario,
                                              const Distribution& global_dist);

/// One weighted event of a correlation expression. The section's context must
/// be a cover context of the model being evaluated.
struct EventTerm {
    Section event;
    Rational weight;
};

/// Sum of weight * probability over the terms, exact. Probability models only;
/// weights must be nonnegative.
Rational evaluate_expression(const EmpiricalModel& model, const std::vector<EventTerm>& terms);

}  // namespace ctx

#endif  // CTX_EMPIRICAL_HPP
