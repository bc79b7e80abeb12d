#include "qsd/problem_io.hpp"

#include <fstream>
#include <sstream>

namespace qsd {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j, int dim, const std::string& field) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        std::ostringstream os;
        os << field << ": expected " << dim << " rows";
        throw DocumentParseError(os.str());
    }
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            std::ostringstream os;
            os << field << ": row " << r << " must have " << dim << " entries";
            throw DocumentParseError(os.str());
        }
        for (int c = 0; c < dim; ++c) {
            const auto& entry = row[c];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                std::ostringstream os;
                os << field << ": entry (" << r << "," << c << ") must be a [re, im] pair";
                throw DocumentParseError(os.str());
            }
            m(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return m;
}

nlohmann::json to_json(const ProblemDocument& doc) {
    return nlohmann::json{{"dim", doc.dim},
                          {"eta1", doc.eta1},
                          {"rho1", matrix_to_json(doc.rho1)},
                          {"rho2", matrix_to_json(doc.rho2)}};
}

ProblemDocument problem_document_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw DocumentParseError("document root must be a JSON object");
    }
    for (const char* key : {"dim", "eta1", "rho1", "rho2"}) {
        if (!j.contains(key)) {
            throw DocumentParseError(std::string("missing required key \"") + key + "\"");
        }
    }
    if (!j["dim"].is_number_integer()) {
        throw DocumentParseError("dim: must be an integer");
    }
    const int dim = j["dim"].get<int>();
    if (dim < 1) {
        throw DocumentParseError("dim: must be >= 1");
    }
    if (!j["eta1"].is_number()) {
        throw DocumentParseError("eta1: must be a number");
    }

    ProblemDocument doc;
    doc.dim = dim;
    doc.eta1 = j["eta1"].get<double>();
    doc.rho1 = matrix_from_json(j["rho1"], dim, "rho1");
    doc.rho2 = matrix_from_json(j["rho2"], dim, "rho2");
    return doc;
}

ProblemDocument load_problem_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return problem_document_from_json(j);
}

void save_problem_document(const ProblemDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << to_json(doc).dump(2) << '\n';
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

DiscriminationProblem realize(const ProblemDocument& doc, const Tolerances& tol) {
    if (doc.rho1.rows() != doc.dim || doc.rho2.rows() != doc.dim) {
        throw DocumentParseError("document matrices do not match the declared dimension");
    }
    return DiscriminationProblem(validate_density(doc.rho1, tol), validate_density(doc.rho2, tol),
                                 doc.eta1);
}

ProblemDocument document_of(const DiscriminationProblem& p) {
    ProblemDocument doc;
    doc.dim = static_cast<int>(p.dim());
    doc.rho1 = p.rho1().matrix();
    doc.rho2 = p.rho2().matrix();
    doc.eta1 = p.eta1();
    return doc;
}

}  // namespace qsd
