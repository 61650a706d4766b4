#pragma once

#include "heckeaf/error.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace heckeaf::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kDomainError = 3, kPipelineError = 4 };

/// Input errors are malformed or inconsistent data; everything else is a
/// domain error (or, under `af`, a pipeline error).
bool is_input_error(ErrorCode code) noexcept;

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heckeaf::cli
