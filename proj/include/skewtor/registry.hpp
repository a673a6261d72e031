#pragma once

// Embedded example models with their structure tensors, and the JSON model
// file format:
//
//   {"name": "heis5", "dim": 5, "notes": "...",
//    "coframe_d": [{"index": 5, "d": [[[1,2], "2"], [[3,4], "2"]]}],
//    "structure": {"contact": {"xi": 5, "eta": [[[5], "1"]], "phi": [["0","-1",...], ...]}}}
//
// Indices are 1-based; forms are lists of (index list, "p/q") pairs. The
// structure is one of {"g2": {"omega": form}}, {"contact": {xi, eta, phi}} or
// {"hermitian": {"J": matrix}}; matrix rows are target components, so
// column j holds the image of e_j.

#include "skewtor/acskit.hpp"
#include "skewtor/g2kit.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewtor {

enum class StructureKind { G2, Contact, Hermitian };
std::string kindName(StructureKind k);

struct ModelFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModelEntry {
    std::string name;
    std::string notes;
    LieModel model;
    StructureKind kind = StructureKind::G2;
    Form omega;  // g2
    int xi = -1; // contact, 0-based coframe index of the Reeb vector
    Mat phi;     // contact
    Mat J;       // hermitian
    // false for the synthetic fixtures that exercise the no-connection branches
    bool hasConnection = true;

    G2Structure g2() const;
    AlmostContact contact() const;
    AlmostHermitian hermitian() const;
    // Torsion of the characteristic connection; throws NoSkewConnection.
    Form characteristicTorsion() const;
};

// heis7, solv7, almab7, abelian7 (G2); heis5, aff5, m5n, su2r2, cosymp5,
// abelian5 (contact); solv6, abelian6 (hermitian). All carry a characteristic
// connection.
const std::vector<ModelEntry>& registryModels();
// almab7x, nk5, nokill5, kt4, herm4: no characteristic connection.
const std::vector<ModelEntry>& fixtureModels();

// Registry and fixtures first, then <name>.json in the directories listed in
// SKEWTOR_MODEL_PATH (colon separated).
std::optional<ModelEntry> findModel(const std::string& name);
std::vector<std::string> modelPathDirs();

std::string modelToJson(const ModelEntry& e, int indent = 2);
// Validates the Jacobi identity (d^2 = 0) and the structure invariants.
ModelEntry modelFromJson(const std::string& text);
ModelEntry loadModelFile(const std::string& path);

} // namespace skewtor
