#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "superbranch/bratteli.hpp"
#include "superbranch/coeff.hpp"
#include "superbranch/tableaux.hpp"

namespace superbranch::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kVerificationFailure = 2 };

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json monomial_json(const QMonomial& m);
nlohmann::ordered_json combination_json(const CharCombination& c);
nlohmann::ordered_json tableau_json(const ShellTableau& t);

/// Loads Λ(n) through k from $SUPERBRANCH_CACHE when present, else builds it
/// (and stores it when the variable is set).
BratteliDiagram load_or_build(int n, int k);

} // namespace superbranch::cli
