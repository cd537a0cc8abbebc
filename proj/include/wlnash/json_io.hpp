#pragma once

#include <nlohmann/json.hpp>

#include "wlnash/bounds.hpp"
#include "wlnash/cycles.hpp"
#include "wlnash/equilibrium.hpp"
#include "wlnash/harness.hpp"
#include "wlnash/profile.hpp"
#include "wlnash/regime.hpp"

namespace wlnash {

using Json = nlohmann::ordered_json;

/// {"p": ["1/2", ...], "q": [...]}
Json to_json(const MixedProfile& m);
/// Throws std::invalid_argument on a malformed document.
MixedProfile profile_from_json(const Json& j);

Json to_json(const RegimePlan& plan);
Json to_json(const CycleCandidate& c);
Json to_json(const VerificationReport& r);
Json to_json(const BoundValue& b);
Json to_json(const TrialRecord& r);
Json to_json(const BenchSummary& s);
Json to_json(const SweepReport& s);

/// Every bound calculator at (n, p, ell), with vacuous flags.
Json bounds_report(double n, double p, int ell);

}  // namespace wlnash
