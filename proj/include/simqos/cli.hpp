// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#ifndef SIMQOS_CLI_HPP
#define SIMQOS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace simqos::cli {

// Entry point behind the simqos binary; split out so tests can drive the
// full command surface in-process. Exit codes: 0 success, 1 validation
// failure, 2 runtime failure.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Table 5 reproduction in CSV form (the `map` subcommand payload).
std::string qci_map_csv();

} // namespace simqos::cli

#endif
