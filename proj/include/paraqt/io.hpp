#pragma once

#include <paraqt/circuit.hpp>
#include <paraqt/estimators.hpp>
#include <paraqt/hamiltonian.hpp>
#include <paraqt/jones.hpp>
#include <paraqt/linalg.hpp>

#include <json.hpp>

#include <string>

namespace paraqt::io {

using Json = nlohmann::ordered_json;

// Complex numbers are [re, im]; matrices are row-major arrays of rows.
// Readers accept a bare real wherever a complex is expected.
// Every reader throws InvalidInput naming the offending field.

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where);

Json state_to_json(const StateVector& s);
StateVector state_from_json(const Json& j);

Json hamiltonian_to_json(const LocalHamiltonian& h);
LocalHamiltonian hamiltonian_from_json(const Json& j);

Json circuit_to_json(const QuantumCircuit& c);
QuantumCircuit circuit_from_json(const Json& j);

/// Circuit schema plus "classical_only": true.
Json gap_instance_to_json(const GapInstance& g);
GapInstance gap_instance_from_json(const Json& j);

Json braid_to_json(const BraidWord& b);
BraidWord braid_from_json(const Json& j);

Json report_to_json(const EstimateReport& r);
EstimateReport report_from_json(const Json& j);

Json parse(const std::string& text, const std::string& source);
Json read_file(const std::string& path);

}  // namespace paraqt::io
