#pragma once

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "kkb/bounds.hpp"
#include "kkb/sequence.hpp"
#include "kkb/upper_set.hpp"

namespace kkb {

using OrderedJson = nlohmann::ordered_json;

/// printf("%.12g"): 12 significant digits, ties to even on the binary value.
std::string format_number(double x);

/// x rounded to 12 significant digits, so JSON output matches the CSV.
double round12(double x);

/// {"ground_size": n, "minimal_elements": [[...], ...], "normalize": bool?}.
/// Non-antichain input is rejected (NotAntichain) unless "normalize" is true.
/// Malformed documents raise ParseError.
UpperSet parse_instance(std::string_view text);
OrderedJson instance_to_json(const UpperSet& f);

OrderedJson variant_to_json(const BoundVariant& v);
OrderedJson report_to_json(const BoundReport& r);
OrderedJson necessary_conditions_to_json(const NecessaryConditionsReport& r);
OrderedJson classification_to_json(const Classification& c);

}  // namespace kkb
