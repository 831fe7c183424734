#ifndef CTX_SCENARIO_HPP
#define CTX_SCENARIO_HPP

#include "ctx/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ctx {

/// A context is a sorted set of measurement indices.
using Context = std::vector<int>;

/// Hard cap on enumerated section counts (|outcomes|^|measurements|).
inline constexpr std::uint64_t kDefaultSectionCap = std::uint64_t{1} << 24;

/// An outcome assignment over a context. `outcomes[k]` is the outcome index
/// of measurement `context[k]`. A section whose context is the full
/// measurement set is a global section.
struct Section {
    Context context;
    std::vector<int> outcomes;

    /// Outcome assigned to `measurement`; throws if not in the context.
    int outcome_for(int measurement) const;

    /// Projection onto a subset of this section's context.
    Section restricted(const Context& subcontext) const;

    auto operator<=>(const Section&) const = default;
};

/// A measurement scenario: measurement labels, shared outcome labels, and a
/// cover of jointly-measurable contexts. Construct through validate_scenario;
/// all operations assume the invariants hold.
struct MeasurementScenario {
    std::vector<std::string> measurements;
    std::vector<std::string> outcomes;
    std::vector<Context> cover;

    int measurement_index(const std::string& label) const;  // -1 if unknown
    int outcome_index(const std::string& label) const;      // -1 if unknown
    Context full_context() const;
    std::string context_key(const Context& context) const;  // "A1,B1"

    bool operator==(const MeasurementScenario&) const = default;
};

/// Checks every scenario invariant: unique labels, nonempty contexts with
/// valid indices, every measurement covered, and the cover an antichain.
/// Contexts are sorted and deduplicated per context; violations raise
/// ValidationError naming the offending element.
MeasurementScenario validate_scenario(std::vector<std::string> measurements,
                                      std::vector<std::string> outcomes,
                                      std::vector<Context> cover);

/// |outcomes|^|context| with an overflow/cap guard (throws CapError).
std::uint64_t section_count(const MeasurementScenario& scenario, const Context& context,
                            std::uint64_t cap = kDefaultSectionCap);

/// All sections over `context` in lexicographic order: the first measurement
/// of the (sorted) context varies slowest, outcomes in label order. This
/// order is a public contract; incidence rows and columns depend on it.
std::vector<Section> enumerate_sections(const MeasurementScenario& scenario,
                                        const Context& context,
                                        std::uint64_t cap = kDefaultSectionCap);

/// Position of `section` in enumerate_sections(scenario, section.context).
std::uint64_t section_rank(const MeasurementScenario& scenario, const Section& section);

/// All sections over the full measurement set, lexicographic order.
std::vector<Section> enumerate_global_sections(const MeasurementScenario& scenario,
                                               std::uint64_t cap = kDefaultSectionCap);

}  // namespace ctx

#endif  // CTX_SCENARIO_HPP
