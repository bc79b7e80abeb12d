#pragma once

#include <string>

#include <json.hpp>

#include "qsd/minimum_error.hpp"
#include "qsd/operator_core.hpp"

namespace qsd {

/// Serialized form of a two-state discrimination problem. Matrices are kept
/// as raw complex arrays so a document can be loaded, inspected and re-saved
/// without passing state validation; realize() performs the checks.
struct ProblemDocument {
    int dim = 0;
    ComplexMatrix rho1;
    ComplexMatrix rho2;
    double eta1 = 0.0;
};

/// dim x dim complex matrix as nested arrays of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Parses the nested-array encoding; `field` names the document key in error
/// messages. Throws DocumentParseError on wrong shape or non-numeric entries.
ComplexMatrix matrix_from_json(const nlohmann::json& j, int dim, const std::string& field);

nlohmann::json to_json(const ProblemDocument& doc);

/// Throws DocumentParseError if required keys are missing or malformed.
ProblemDocument problem_document_from_json(const nlohmann::json& j);

/// Throws IoError if the file cannot be read, DocumentParseError if its
/// contents are not valid JSON or not a valid document.
ProblemDocument load_problem_document(const std::string& path);

/// Throws IoError if the file cannot be written.
void save_problem_document(const ProblemDocument& doc, const std::string& path);

/// Validates both matrices as density operators and builds the problem.
DiscriminationProblem realize(const ProblemDocument& doc, const Tolerances& tol = {});

ProblemDocument document_of(const DiscriminationProblem& p);

}  // namespace qsd
