#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chebms/closed_forms.hpp"
#include "chebms/identities.hpp"

namespace chebms::cli {

enum class Format { Json, Csv, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// identities-verify against an explicit Worpitzky table.
int identities_verify(const IdentityRanges& ranges, const WorpitzkyTable& table, Format format, std::ostream& out);

}  // namespace chebms::cli
