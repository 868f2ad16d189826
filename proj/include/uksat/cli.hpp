#pragma once

#include <string>
#include <vector>

#include "uksat/search.hpp"

namespace uksat {

// Entry point behind the `uksat` binary. Exit codes: 0 success / verified,
// 1 verified-false or out-of-range parameters, 2 input or usage error,
// 3 search aborted on a resource limit.
int run_cli(const std::vector<std::string>& args);

std::string table_to_tsv(const ExistenceTable& table);
std::string table_to_json(const ExistenceTable& table);

}  // namespace uksat
