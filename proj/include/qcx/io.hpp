#pragma once

// JSON and CSV interchange.
//
// Function file:
//   {"p": 0.5, "coeffs": [[re, im], ...], "tail_bound": 0.0,
//    "envelope": {"scale": s, "ratio": r},                      (optional)
//    "omega": {"kind": "poly", "coeffs": [[re, im], ...]},      (optional)
//    "extension": {"family": "theorem1", "a0": [re, im], "a1": [re, im]}}
//
// When "coeffs" is absent the Taylor part is taken from the omega block.
// Doubles are written in shortest round-trip form.

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qcx/area.hpp"
#include "qcx/certify.hpp"
#include "qcx/errors.hpp"
#include "qcx/extension.hpp"
#include "qcx/series.hpp"

namespace qcx::io {

using nlohmann::json;

/// Malformed input; the message names the offending field or position.
class InputError : public Error {
public:
  using Error::Error;
};

struct FunctionFile {
  PoledFunction function;
  std::optional<std::vector<cplx>> omega;
  std::optional<AffineMobius> extension;
};

json complex_to_json(cplx z);
cplx complex_from_json(const json& j, std::string_view field);

json to_json(const PoledFunction& f);
json to_json(const FunctionFile& file);
json to_json(const WeightedSums& ws);
json to_json(const MembershipCertificate& c);
json to_json(const AreaReport& r);
json to_json(const AreaTheoremCheck& c);
json to_json(const A1BoundCheck& c);
json to_json(const ProbeReport& r);

/// Parses and validates a function file. Throws InputError.
FunctionFile parse_function_file(std::string_view text);
FunctionFile function_file_from_json(const json& j);

/// The extension described by a file: affine when an "extension" block is
/// present, omega reflection when an "omega" block is. Throws InputError
/// otherwise.
ExtensionMap extension_from_file(const FunctionFile& file);

/// Columns re(z), im(z), re(mu), im(mu), abs(mu) with a header row.
void write_dilatation_csv(std::ostream& os, const DilatationSweep& sweep);

} // namespace qcx::io
