#pragma once

#include <string>
#include <vector>

namespace clear::cli {

/// One validation finding. `path` is a JSON pointer (or "line:N" for CSV).
struct Diagnostic
{
    std::string path;
    std::string message;
};

using Diagnostics = std::vector<Diagnostic>;

} // namespace clear::cli
