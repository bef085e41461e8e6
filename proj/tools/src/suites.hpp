#ifndef BAXTER_TOOLS_SUITES_HPP
#define BAXTER_TOOLS_SUITES_HPP

#include <string>
#include <vector>

#include "baxter/witnesses.hpp"

namespace baxter::cli {

/// Names accepted by `witness --suite`.
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite) at the "small" or "medium" preset.
std::vector<Certificate> run_suite(const std::string& suite, const std::string& bounds);

}  // namespace baxter::cli

#endif
