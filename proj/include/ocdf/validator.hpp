#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ocdf/diagnostic.hpp"
#include "ocdf/model.hpp"

namespace ocdf {

/// Checks every class of `model` against the profile constraints.
///
/// Structural rules (unique ids, resolvable endpoints) are re-checked as
/// well, since a model assembled in memory need not have passed through
/// build_class. The result is sorted by (class name, code, subjects) and is
/// empty iff the model conforms.
std::vector<Diagnostic> validate(const OcdfModel& model);
std::vector<Diagnostic> validate(const OcdfClass& cls);

/// Rule text for a diagnostic code token such as "E_CONST_WRITE".
Result<std::string> explain(std::string_view code);
std::string explain(Code code);

}  // namespace ocdf
