#pragma once

#include <iosfwd>
#include <string>

#include "fmcob/model.hpp"

namespace fmcob {

/// Load a model from the textual format below.  The loaded model is
/// validated; unless `force` is set, any FAIL line aborts the load with the
/// offending lines in the exception message.
///
///   # comments run to end of line
///   name = my-model            (optional; defaults to the file stem)
///   g = 2
///   selfdual = true
///   [basis]
///   one 0 0                    (name, codimension grade, weight grade)
///   theta 1 0
///   [mult]                     (unlisted products are zero; the unit's
///   theta * theta = 2*theta2    products are implicit)
///   [fourier]                  (optional section; if present, one line
///   F(one) = theta2             per basis class)
///   [degree]                   (unlisted degrees are zero)
///   deg(theta2) = 1
///   [star]                     (optional: declared convolution table,
///   a * b = theta               cross-checked against the derived one)
///   [diagonal]                 (optional: declared diagonal class;
///   theta * one = 1             "a * b = q" is the coefficient of a(x)b)
///
/// Linear combinations are sums/differences of `rational*name`, `name`, or
/// a literal `0`; rationals are `num` or `num/den`.
ModelPtr load_model(const std::string& path, bool force = false);

/// Same, reading from a stream; `display_name` seeds error messages and the
/// default model name.
ModelPtr load_model_stream(std::istream& in, const std::string& display_name,
                           bool force = false);

/// Canonical text form; load_model_stream(model_to_text(m)) reproduces m.
std::string model_to_text(const BeauvilleAlgebra& m);

/// Write model_to_text to a file, throwing on I/O failure.
void save_model(const BeauvilleAlgebra& m, const std::string& path);

}  // namespace fmcob
