#pragma once

#include "kecoh/catalog.hpp"
#include "kecoh/metric.hpp"
#include "kecoh/ode_params.hpp"
#include "kecoh/ode_solver.hpp"
#include "kecoh/pairing.hpp"
#include "kecoh/sign_integral.hpp"

#include <json.hpp>

#include <iosfwd>
#include <vector>

namespace kecoh {

// All JSON documents carry "schema_version"; exact rationals are serialized
// as "p/q" strings, floating point numbers at full round-trip precision.
inline constexpr int kSchemaVersion = 1;

nlohmann::json case_to_json(const CaseSpec& c);
nlohmann::json catalog_to_json(const std::vector<CaseSpec>& cases);
nlohmann::json pairing_report_to_json(const PairingReport& rep);
nlohmann::json params_to_json(const OdeParams& p);
nlohmann::json sign_result_to_json(const SignIntegralResult& r, const OdeParams& p);
nlohmann::json profile_to_json(const SolutionProfile& prof, const OdeParams& p);
nlohmann::json metric_to_json(const MetricProfile& m, const OdeParams& p);
nlohmann::json extension_report_to_json(const ExtensionReport& rep);

// CSV columns: theta, V, V_dot.
void write_profile_csv(std::ostream& os, const SolutionProfile& prof);
// CSV columns: t, f, f_prime, f_second, f_third, transversal, then one
// fiber_minus/fiber_plus/base triple per coefficient.
void write_metric_csv(std::ostream& os, const MetricProfile& m);

}  // namespace kecoh
