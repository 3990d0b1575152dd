#pragma once

#include <map>
#include <string>
#include <vector>

namespace catstat {

/// Result of one verification check.  A pass verdict is issued only when
/// every compared item matched exactly; on failure `detail` carries the
/// first counterexample (object or monomial) and both values.
struct CheckReport {
    std::string check_id;
    std::map<std::string, long long> params;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::string to_json(const CheckReport& report);

/// All known check ids, in catalog order.
const std::vector<std::string>& check_catalog();

/// Default parameters of a check (the acceptance-suite values).
std::map<std::string, long long> check_defaults(const std::string& check_id);

/// Runs one check; `overrides` replaces matching default parameters.
/// Throws std::invalid_argument for unknown ids or parameters outside
/// the configured ceilings.
CheckReport run_check(const std::string& check_id,
                      const std::map<std::string, long long>& overrides = {});

}  // namespace catstat
