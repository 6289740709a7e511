#include <algorithm>

#include "groundkit/bars.hpp"
#include "groundkit/oracle.hpp"

namespace groundkit {

// The two-implementation cross-check: ground enumeration over selection
// trees and bars on one side, rule saturation on the other.  The sides
// share nothing beyond the formula syntax and the rule identifiers.
CompareReport compare(const Formula& f, CalculusConfig cfg, std::size_t oracle_cap,
                      std::size_t closure_cap) {
    CompareReport report{f, cfg, {}, {}, {}, {}, false};
    report.bars_side = enumerate_grounds(f, cfg, closure_cap);
    report.oracle_side = saturate(f, cfg, oracle_cap);

    std::vector<FormulaSet> bars_sorted = report.bars_side;
    std::vector<FormulaSet> oracle_sorted = report.oracle_side;
    std::sort(bars_sorted.begin(), bars_sorted.end());
    std::sort(oracle_sorted.begin(), oracle_sorted.end());
    std::set_difference(bars_sorted.begin(), bars_sorted.end(), oracle_sorted.begin(),
                        oracle_sorted.end(), std::back_inserter(report.only_bars));
    std::set_difference(oracle_sorted.begin(), oracle_sorted.end(), bars_sorted.begin(),
                        bars_sorted.end(), std::back_inserter(report.only_oracle));
    report.pass = report.only_bars.empty() && report.only_oracle.empty();
    return report;
}

}  // namespace groundkit
