#ifndef SEPSG_REGISTRY_HPP_
#define SEPSG_REGISTRY_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sepsg/semigroup.hpp"

namespace sepsg {

  inline constexpr std::uint64_t kDefaultSeed = 20241019;

  //! Everything needed to replay one failing (or found) instance.
  struct WitnessRecord {
    std::size_t                                     semigroup_index = 0;
    std::size_t                                     order           = 0;
    std::vector<Element>                            table;
    std::vector<std::pair<std::string, SubsetMask>> subsets;
    std::vector<Element>                            map;  // may be empty
    std::string                                     note;
  };

  struct VerificationReport {
    std::string                          property_id;
    std::string                          corpus_spec;
    std::uint64_t                        seed              = kDefaultSeed;
    std::size_t                          semigroups        = 0;
    std::size_t                          instances_checked = 0;
    // Instances whose hypothesis held, so the conclusion was exercised.
    std::size_t                          nonvacuous        = 0;
    std::size_t                          violation_count   = 0;
    std::vector<WitnessRecord>           violations;  // first few, in order
    std::vector<WitnessRecord>           examples_found;
    std::map<std::string, std::uint64_t> counters;
    double                               runtime_ms = 0;

    bool pass() const { return violation_count == 0; }
  };

  struct PropertyInfo {
    std::string_view id;
    std::string_view summary;
    // Existence probes record examples and never fail.
    bool             existence = false;
  };

  std::vector<PropertyInfo> const& property_registry();

  //! Splits "P-T7,P-T8" into ids, validating each. An empty selection means
  //! every registered property. Throws UnknownPropertyId.
  std::vector<std::string> parse_property_selection(std::string_view csv);

  struct RegistryOptions {
    std::uint64_t seed = kDefaultSeed;
    // 0 means the hardware concurrency.
    unsigned      jobs = 0;
    // Random 3-element families per semigroup for P-T1.
    std::size_t   triple_samples = 64;
    std::size_t   max_records    = 16;
  };

  //! Runs every selected property over every corpus member. Reports come
  //! back in selection order; witnesses within a report are sorted by
  //! semigroup index, then by subset masks.
  std::vector<VerificationReport> run_registry(
      std::vector<Semigroup> const&   corpus,
      std::vector<std::string> const& property_ids,
      std::string const&              corpus_spec,
      RegistryOptions const&          options = {});

}  // namespace sepsg

#endif  // SEPSG_REGISTRY_HPP_
