#pragma once

#include <string>

#include "fmcob/omega.hpp"

namespace fmcob {

/// Parse a class expression over a model into an OmegaClass at the given
/// truncation order.
///
/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' uint]
///   atom   := '(' expr ')' | rational | name
///   rational := uint ['/' uint]
///
/// A name is either a basis class of the model or a coefficient variable
/// t1, t2, ...; basis names shadow the t-variables.  Errors are reported as
/// std::invalid_argument carrying the 1-based character position.
OmegaClass parse_class_expr(const std::string& text, const ModelPtr& model, int order);

}  // namespace fmcob
