#include "ctx/scenario.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ctx {

namespace {

std::string join_indices(const MeasurementScenario& scenario, const Context& context) {
    std::ostringstream os;
    for (std::size_t k = 0; k < context.size(); ++k) {
        if (k) os << ",";
        int m = context[k];
        if (m >= 0 && m < static_cast<int>(scenario.measurements.size()))
            os << scenario.measurements[m];
        else
            os << "#" << m;
    }
    return os.str();
}

bool is_subset(const Context& a, const Context& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

int Section::outcome_for(int measurement) const {
    auto it = std::lower_bound(context.begin(), context.end(), measurement);
    if (it == context.end() || *it != measurement)
        throw ValidationError("measurement index " + std::to_string(measurement) +
                              " is not in the section's context");
    return outcomes[static_cast<std::size_t>(it - context.begin())];
}

Section Section::restricted(const Context& subcontext) const {
    if (!std::is_sorted(subcontext.begin(), subcontext.end()))
        throw ValidationError("subcontext is not a sorted set");
    Section out;
    out.context = subcontext;
    out.outcomes.reserve(subcontext.size());
    for (int m : subcontext) out.outcomes.push_back(outcome_for(m));
    return out;
}

int MeasurementScenario::measurement_index(const std::string& label) const {
    for (std::size_t i = 0; i < measurements.size(); ++i)
        if (measurements[i] == label) return static_cast<int>(i);
    return -1;
}

int MeasurementScenario::outcome_index(const std::string& label) const {
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i] == label) return static_cast<int>(i);
    return -1;
}

Context MeasurementScenario::full_context() const {
    Context all(measurements.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return all;
}

std::string MeasurementScenario::context_key(const Context& context) const {
    return join_indices(*this, context);
}

MeasurementScenario validate_scenario(std::vector<std::string> measurements,
                                      std::vector<std::string> outcomes,
                                      std::vector<Context> cover) {
    if (measurements.empty()) throw ValidationError("scenario has no measurements");
    if (outcomes.empty()) throw ValidationError("scenario has no outcomes");

    std::unordered_set<std::string> seen;
    for (const auto& label : measurements)
        if (!seen.insert(label).second)
            throw ValidationError("duplicate measurement label '" + label + "'");
    seen.clear();
    for (const auto& label : outcomes)
        if (!seen.insert(label).second)
            throw ValidationError("duplicate outcome label '" + label + "'");

    const int n = static_cast<int>(measurements.size());
    for (auto& context : cover) {
        if (context.empty()) throw ValidationError("cover contains an empty context");
        for (int m : context)
            if (m < 0 || m >= n)
                throw ValidationError("context references invalid measurement index " +
                                      std::to_string(m));
        std::sort(context.begin(), context.end());
        context.erase(std::unique(context.begin(), context.end()), context.end());
    }
    if (cover.empty()) throw ValidationError("scenario cover is empty");

    MeasurementScenario scenario{std::move(measurements), std::move(outcomes), std::move(cover)};

    for (std::size_t i = 0; i < scenario.cover.size(); ++i)
        for (std::size_t j = 0; j < scenario.cover.size(); ++j) {
            if (i == j) continue;
            if (is_subset(scenario.cover[i], scenario.cover[j]))
                throw ValidationError("cover is not an antichain: context {" +
                                      join_indices(scenario, scenario.cover[i]) +
                                      "} is contained in {" +
                                      join_indices(scenario, scenario.cover[j]) + "}");
        }

    std::vector<bool> covered(scenario.measurements.size(), false);
    for (const auto& context : scenario.cover)
        for (int m : context) covered[static_cast<std::size_t>(m)] = true;
    for (std::size_t m = 0; m < covered.size(); ++m)
        if (!covered[m])
            throw ValidationError("measurement '" + scenario.measurements[m] +
                                  "' appears in no context");

    return scenario;
}

namespace {

void check_context(const MeasurementScenario& scenario, const Context& context) {
    const int n = static_cast<int>(scenario.measurements.size());
    for (std::size_t k = 0; k < context.size(); ++k) {
        if (context[k] < 0 || context[k] >= n)
            throw ValidationError("invalid measurement index " + std::to_string(context[k]));
        if (k > 0 && context[k - 1] >= context[k])
            throw ValidationError("context is not a sorted set");
    }
}

}  // namespace

std::uint64_t section_count(const MeasurementScenario& scenario, const Context& context,
                            std::uint64_t cap) {
    check_context(scenario, context);
    const std::uint64_t base = scenario.outcomes.size();
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < context.size(); ++k) {
        if (count > cap / base && base > 1)
            throw CapError("section count exceeds cap of " + std::to_string(cap));
        count *= base;
    }
    if (count > cap) throw CapError("section count exceeds cap of " + std::to_string(cap));
    return count;
}

std::vector<Section> enumerate_sections(const MeasurementScenario& scenario,
                                        const Context& context, std::uint64_t cap) {
    const std::uint64_t total = section_count(scenario, context, cap);
    const int base = static_cast<int>(scenario.outcomes.size());
    std::vector<Section> sections;
    sections.reserve(total);
    Section current{context, std::vector<int>(context.size(), 0)};
    for (std::uint64_t i = 0; i < total; ++i) {
        sections.push_back(current);
        // Odometer increment, last measurement fastest.
        for (int k = static_cast<int>(context.size()) - 1; k >= 0; --k) {
            if (++current.outcomes[static_cast<std::size_t>(k)] < base) break;
            current.outcomes[static_cast<std::size_t>(k)] = 0;
        }
    }
    return sections;
}

std::uint64_t section_rank(const MeasurementScenario& scenario, const Section& section) {
    check_context(scenario, section.context);
    if (section.outcomes.size() != section.context.size())
        throw ValidationError("section assignment does not match its context");
    const std::uint64_t base = scenario.outcomes.size();
    std::uint64_t rank = 0;
    for (std::size_t k = 0; k < section.context.size(); ++k) {
        int o = section.outcomes[k];
        if (o < 0 || o >= static_cast<int>(base))
            throw ValidationError("invalid outcome index " + std::to_string(o));
        rank = rank * base + static_cast<std::uint64_t>(o);
    }
    return rank;
}

std::vector<Section> enumerate_global_sections(const MeasurementScenario& scenario,
                                               std::uint64_t cap) {
    return enumerate_sections(scenario, scenario.full_context(), cap);
}

}  // namespace ctx
