#include "ctx/empirical.hpp"

#include <algorithm>

namespace ctx {

std::string to_string(Semiring semiring) {
    switch (semiring) {
        case Semiring::Probability: return "prob";
        case Semiring::Signed: return "signed";
        case Semiring::Possibilistic: return "bool";
    }
    return "?";
}

Semiring semiring_from_string(const std::string& name) {
    if (name == "prob") return Semiring::Probability;
    if (name == "signed") return Semiring::Signed;
    if (name == "bool") return Semiring::Possibilistic;
    throw ValidationError("unknown semiring '" + name + "' (expected prob, signed, or bool)");
}

Distribution make_distribution(const MeasurementScenario& scenario, Context context,
                               Semiring semiring, std::vector<Rational> weights) {
    const std::uint64_t expected = section_count(scenario, context);
    if (weights.size() != expected)
        throw ValidationError("distribution over {" + scenario.context_key(context) + "} needs " +
                              std::to_string(expected) + " weights, got " +
                              std::to_string(weights.size()));
    switch (semiring) {
        case Semiring::Probability: {
            for (const auto& w : weights)
                if (w < 0)
                    throw ValidationError("negative weight " + rational_to_string(w) +
                                          " in a probability distribution over {" +
                                          scenario.context_key(context) + "}");
            if (rational_sum(weights) != 1)
                throw ValidationError("probability distribution over {" +
                                      scenario.context_key(context) + "} sums to " +
                                      rational_to_string(rational_sum(weights)) + ", not 1");
            break;
        }
        case Semiring::Signed: {
            if (rational_sum(weights) != 1)
                throw ValidationError("signed distribution over {" +
                                      scenario.context_key(context) + "} sums to " +
                                      rational_to_string(rational_sum(weights)) + ", not 1");
            break;
        }
        case Semiring::Possibilistic: {
            bool any = false;
            for (const auto& w : weights) {
                if (w != 0 && w != 1)
                    throw ValidationError("possibilistic weights must be 0 or 1, got " +
                                          rational_to_string(w));
                any = any || w == 1;
            }
            if (!any)
                throw ValidationError("possibilistic distribution over {" +
                                      scenario.context_key(context) + "} has empty support");
            break;
        }
    }
    return Distribution{std::move(context), semiring, std::move(weights)};
}

const Distribution& EmpiricalModel::distribution_for(const Context& context) const {
    for (std::size_t i = 0; i < scenario.cover.size(); ++i)
        if (scenario.cover[i] == context) return table[i];
    throw ValidationError("context {" + scenario.context_key(context) +
                          "} is not in the scenario cover");
}

EmpiricalModel make_model(MeasurementScenario scenario, Semiring semiring,
                          std::vector<Distribution> table) {
    if (table.size() != scenario.cover.size())
        throw ValidationError("model needs one distribution per cover context (" +
                              std::to_string(scenario.cover.size()) + "), got " +
                              std::to_string(table.size()));
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i].context != scenario.cover[i])
            throw ValidationError("distribution " + std::to_string(i) +
                                  " is not aligned with cover context {" +
                                  scenario.context_key(scenario.cover[i]) + "}");
        if (table[i].semiring != semiring)
            throw ValidationError("distribution over {" +
                                  scenario.context_key(table[i].context) +
                                  "} does not match the model semiring " + to_string(semiring));
    }
    return EmpiricalModel{std::move(scenario), semiring, std::move(table)};
}

Distribution marginalize(const MeasurementScenario& scenario, const Distribution& dist,
                         const Context& subcontext) {
    if (!std::includes(dist.context.begin(), dist.context.end(), subcontext.begin(),
                       subcontext.end()))
        throw ValidationError("subcontext {" + scenario.context_key(subcontext) +
                              "} is not contained in {" + scenario.context_key(dist.context) +
                              "}");
    const auto sections = enumerate_sections(scenario, dist.context);
    std::vector<Rational> out(static_cast<std::size_t>(section_count(scenario, subcontext)), 0);
    for (std::size_t i = 0; i < sections.size(); ++i) {
        const auto rank = section_rank(scenario, sections[i].restricted(subcontext));
        if (dist.semiring == Semiring::Possibilistic) {
            if (dist.weights[i] != 0) out[rank] = 1;
        } else {
            out[rank] += dist.weights[i];
        }
    }
    return Distribution{subcontext, dist.semiring, std::move(out)};
}

CompatibilityVerdict check_compatibility(const EmpiricalModel& model) {
    const auto& cover = model.scenario.cover;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        for (std::size_t j = i + 1; j < cover.size(); ++j) {
            Context overlap;
            std::set_intersection(cover[i].begin(), cover[i].end(), cover[j].begin(),
                                  cover[j].end(), std::back_inserter(overlap));
            Distribution ma = marginalize(model.scenario, model.table[i], overlap);
            Distribution mb = marginalize(model.scenario, model.table[j], overlap);
            if (ma.weights != mb.weights) {
                CompatibilityWitness witness{static_cast<int>(i), static_cast<int>(j), overlap,
                                             std::move(ma), std::move(mb)};
                return CompatibilityVerdict{false, std::move(witness)};
            }
        }
    }
    return CompatibilityVerdict{true, std::nullopt};
}

EmpiricalModel model_from_global_distribution(const MeasurementScenario& scenario,
                                              const Distribution& global_dist) {
    if (global_dist.context != scenario.full_context())
        throw ValidationError("distribution is not over the full measurement set");
    // Re-validate against this scenario (sizes and semiring rules).
    Distribution checked = make_distribution(scenario, global_dist.context, global_dist.semiring,
                                             global_dist.weights);
    std::vector<Distribution> table;
    table.reserve(scenario.cover.size());
    for (const auto& context : scenario.cover)
        table.push_back(marginalize(scenario, checked, context));
    return EmpiricalModel{scenario, global_dist.semiring, std::move(table)};
}

Rational evaluate_expression(const EmpiricalModel& model, const std::vector<EventTerm>& terms) {
    if (model.semiring != Semiring::Probability)
        throw ValidationError("expressions are evaluated on probability models only");
    Rational total = 0;
    for (const auto& term : terms) {
        if (term.weight < 0)
            throw ValidationError("expression weights must be nonnegative, got " +
                                  rational_to_string(term.weight));
        const Distribution& dist = model.distribution_for(term.event.context);
        const auto rank = section_rank(model.scenario, term.event);
        total += term.weight * dist.weights[rank];
    }
    return total;
}

}  // namespace ctx
