#pragma once

#include <string>
#include <vector>

namespace cascade {

// Writes the named data set into outdir (created if missing), one CSV per
// curve, and returns the written paths in a deterministic order.
//   fig2  — closed-form N(t) and D(t), default params, t in [0, 2500]
//   fig3a — N(t) with drives off: closed form plus damped runs
//           (kappa = 0.01, 0.02), t in [0, 100]
//   fig3b — as fig3a with the default drives on
//   fig4  — D(t) from the moment engine for kappa in {0, 0.01, 0.02},
//           t in [0, 100]
// Unknown names throw MalformedValue.
std::vector<std::string> run_figure(const std::string& name,
                                    const std::string& outdir);

}  // namespace cascade
