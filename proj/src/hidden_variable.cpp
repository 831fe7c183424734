#include "ctx/hidden_variable.hpp"

#include <algorithm>
#include <sstream>

namespace ctx {

IncidenceSystem build_incidence(const MeasurementScenario& scenario, std::uint64_t cap) {
    IncidenceSystem system;
    system.scenario = scenario;
    system.columns = enumerate_global_sections(scenario, cap);

    for (std::size_t c = 0; c < scenario.cover.size(); ++c) {
        system.row_offset.push_back(system.rows.size());
        for (auto& section : enumerate_sections(scenario, scenario.cover[c], cap))
            system.rows.emplace_back(static_cast<int>(c), std::move(section));
    }

    const std::size_t words = (system.q() + 63) / 64;
    system.bits.assign(system.p(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < system.columns.size(); ++j) {
        for (std::size_t c = 0; c < scenario.cover.size(); ++c) {
            const Section local = system.columns[j].restricted(scenario.cover[c]);
            const std::size_t i = system.row_offset[c] +
                                  static_cast<std::size_t>(section_rank(scenario, local));
            system.bits[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        }
    }
    return system;
}

RatVector stack_weights(const EmpiricalModel& model) {
    RatVector v;
    for (const auto& dist : model.table)
        v.insert(v.end(), dist.weights.begin(), dist.weights.end());
    return v;
}

std::vector<bool> support_vector(const EmpiricalModel& model) {
    std::vector<bool> support;
    for (const auto& dist : model.table)
        for (const auto& w : dist.weights) support.push_back(w != 0);
    return support;
}

namespace {

void check_rhs_size(const IncidenceSystem& system, std::size_t got) {
    if (got != system.p())
        throw ValidationError("weight vector has " + std::to_string(got) +
                              " entries, incidence system has " + std::to_string(system.p()) +
                              " rows");
}

// Dense rational copy of the augmented system [M; 1] x = [v; 1].
std::pair<RatMatrix, RatVector> augmented_system(const IncidenceSystem& system,
                                                 const RatVector& v) {
    const std::size_t p = system.p(), q = system.q();
    RatMatrix A(p + 1, RatVector(q, 0));
    RatVector b(p + 1, 0);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j)
            if (system.entry(i, j)) A[i][j] = 1;
        b[i] = v[i];
    }
    for (std::size_t j = 0; j < q; ++j) A[p][j] = 1;
    b[p] = 1;
    return {std::move(A), std::move(b)};
}

}  // namespace

FeasibilityVerdict solve_probabilistic(const IncidenceSystem& system, const RatVector& v) {
    check_rhs_size(system, v.size());
    auto [A, b] = augmented_system(system, v);
    LpSolution lp = solve_equality_feasibility(A, b);
    FeasibilityVerdict verdict;
    verdict.semiring = Semiring::Probability;
    verdict.feasible = lp.status == LpStatus::Optimal;
    if (verdict.feasible) verdict.certificate = std::move(lp.x);
    return verdict;
}

FeasibilityVerdict solve_signed(const IncidenceSystem& system, const RatVector& v) {
    check_rhs_size(system, v.size());
    auto [A, b] = augmented_system(system, v);
    LpSolution lp = solve_linear_system(A, b);
    FeasibilityVerdict verdict;
    verdict.semiring = Semiring::Signed;
    verdict.feasible = lp.status == LpStatus::Optimal;
    if (verdict.feasible) verdict.certificate = std::move(lp.x);
    return verdict;
}

BooleanFeasibility solve_possibilistic(const IncidenceSystem& system,
                                       const std::vector<bool>& support) {
    check_rhs_size(system, support.size());
    BooleanFeasibility result;
    result.certificate.assign(system.q(), false);

    std::vector<bool> covered(system.p(), false);
    for (std::size_t j = 0; j < system.q(); ++j) {
        bool candidate = true;
        for (std::size_t i = 0; i < system.p() && candidate; ++i)
            if (system.entry(i, j) && !support[i]) candidate = false;
        if (!candidate) continue;
        result.certificate[j] = true;
        ++result.candidate_count;
        for (std::size_t i = 0; i < system.p(); ++i)
            if (system.entry(i, j)) covered[i] = true;
    }

    result.feasible = true;
    for (std::size_t i = 0; i < system.p(); ++i)
        if (support[i] && !covered[i]) { result.feasible = false; break; }
    return result;
}

std::string to_string(ContextualityClass cls) {
    switch (cls) {
        case ContextualityClass::Noncontextual: return "Noncontextual";
        case ContextualityClass::ProbabilisticallyContextual: return "ProbabilisticallyContextual";
        case ContextualityClass::LogicallyContextual: return "LogicallyContextual";
        case ContextualityClass::StronglyContextual: return "StronglyContextual";
    }
    return "?";
}

Classification classify(const EmpiricalModel& model, std::uint64_t cap) {
    if (model.semiring != Semiring::Probability)
        throw ValidationError("classification needs a probability model");
    const CompatibilityVerdict compat = check_compatibility(model);
    if (!compat.compatible) {
        const auto& w = *compat.witness;
        std::ostringstream os;
        os << "model is incompatible: contexts {"
           << model.scenario.context_key(model.scenario.cover[static_cast<std::size_t>(w.context_a)])
           << "} and {"
           << model.scenario.context_key(model.scenario.cover[static_cast<std::size_t>(w.context_b)])
           << "} disagree on {" << model.scenario.context_key(w.overlap) << "}";
        throw ValidationError(os.str());
    }

    const IncidenceSystem system = build_incidence(model.scenario, cap);
    Classification result;
    result.probabilistic = solve_probabilistic(system, stack_weights(model));
    result.possibilistic = solve_possibilistic(system, support_vector(model));
    if (result.probabilistic.feasible)
        result.cls = ContextualityClass::Noncontextual;
    else if (result.possibilistic.feasible)
        result.cls = ContextualityClass::ProbabilisticallyContextual;
    else if (result.possibilistic.candidate_count > 0)
        result.cls = ContextualityClass::LogicallyContextual;
    else
        result.cls = ContextualityClass::StronglyContextual;
    return result;
}

EmpiricalModel realize_hv(const HiddenVariableModel& hv, const MeasurementScenario& scenario) {
    const std::size_t lambdas = hv.prior.size();
    if (lambdas == 0) throw ValidationError("hidden-variable model has no hidden values");
    if (hv.response.size() != lambdas)
        throw ValidationError("response table size does not match the prior");
    if (!hv.factorizable)
        throw ValidationError("only factorizable hidden-variable models are representable");
    if (rational_sum(hv.prior) != 1)
        throw ValidationError("hidden-variable prior sums to " +
                              rational_to_string(rational_sum(hv.prior)) + ", not 1");
    for (const auto& w : hv.prior)
        if (w < 0) throw ValidationError("hidden-variable prior has a negative weight");

    const std::size_t n_measurements = scenario.measurements.size();
    const std::size_t n_outcomes = scenario.outcomes.size();
    for (std::size_t l = 0; l < lambdas; ++l) {
        if (hv.response[l].size() != n_measurements)
            throw ValidationError("response table for hidden value " + std::to_string(l) +
                                  " does not cover every measurement");
        for (std::size_t m = 0; m < n_measurements; ++m) {
            const auto& row = hv.response[l][m];
            if (row.size() != n_outcomes)
                throw ValidationError("response distribution has the wrong arity");
            for (const auto& w : row)
                if (w < 0) throw ValidationError("response table has a negative weight");
            if (rational_sum(row) != 1)
                throw ValidationError("response distribution for hidden value " +
                                      std::to_string(l) + ", measurement '" +
                                      scenario.measurements[m] + "' is not normalized");
        }
    }

    std::vector<Distribution> table;
    table.reserve(scenario.cover.size());
    for (const auto& context : scenario.cover) {
        const auto sections = enumerate_sections(scenario, context);
        RatVector weights(sections.size(), 0);
        for (std::size_t s = 0; s < sections.size(); ++s) {
            for (std::size_t l = 0; l < lambdas; ++l) {
                Rational term = hv.prior[l];
                for (std::size_t k = 0; k < context.size(); ++k) {
                    term *= hv.response[l][static_cast<std::size_t>(context[k])]
                                        [static_cast<std::size_t>(sections[s].outcomes[k])];
                    if (term == 0) break;
                }
                weights[s] += term;
            }
        }
        table.push_back(make_distribution(scenario, context, Semiring::Probability,
                                          std::move(weights)));
    }
    return make_model(scenario, Semiring::Probability, std::move(table));
}

Distribution certificate_distribution(const IncidenceSystem& system, const RatVector& x) {
    if (x.size() != system.q())
        throw ValidationError("certificate length does not match the number of global sections");
    return make_distribution(system.scenario, system.scenario.full_context(),
                             Semiring::Probability, x);
}

}  // namespace ctx
