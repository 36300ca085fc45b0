#ifndef SEPSG_JSON_IO_HPP_
#define SEPSG_JSON_IO_HPP_

// JSON views of results, shared by the C API and the CLI. Subsets are
// arrays of element indices; words are strings.

#include "json.hpp"

#include "sepsg/freewords.hpp"
#include "sepsg/morphisms.hpp"
#include "sepsg/registry.hpp"
#include "sepsg/semigroup.hpp"

namespace sepsg {

  nlohmann::json subset_json(SubsetMask const& a);
  nlohmann::json semigroup_json(Semigroup const& s);
  nlohmann::json witness_json(WitnessRecord const& w);
  nlohmann::json report_json(VerificationReport const& r);

  nlohmann::json theorem4_json(Theorem4Result const& r,
                               HomomorphismMap const& phi);
  nlohmann::json remark5_witness_json(std::vector<Semigroup> const& corpus,
                                      Remark5Witness const&         w);
  nlohmann::json remark5_survey_json(std::vector<Semigroup> const& corpus,
                                     Remark5Survey const&          r);

  nlohmann::json code_json(GeneratorSet const& g, CodeResult const& r);
  nlohmann::json bounded_separator_json(BoundedSepResult const& r);
  nlohmann::json stability_json(StabilityResult const& r);
  nlohmann::json theorem13_json(Theorem13Result const& r);
  nlohmann::json theorem14_json(Theorem14Report const& r);

}  // namespace sepsg

#endif  // SEPSG_JSON_IO_HPP_
