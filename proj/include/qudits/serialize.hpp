#pragma once

#include "qudits/circuit.hpp"
#include "qudits/representations.hpp"
#include "qudits/simulator.hpp"

#include <json.hpp>

namespace qudits {

// Matrices and vectors serialize with explicit [re, im] pairs.
nlohmann::json matrix_to_json(const CMatrix& m);
nlohmann::json realization_to_json(const Realization& r);
nlohmann::json register_to_json(const Register& reg);
nlohmann::json execution_report_to_json(const ExecutionReport& report);

}  // namespace qudits
