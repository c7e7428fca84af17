#include "magiclab/catalog.h"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "magiclab/errors.h"
#include "magiclab/sic.h"

namespace magiclab {

namespace {

constexpr double kResidualMatchTol = 1e-10;

}  // namespace

std::string to_string(FiducialSource source) {
    switch (source) {
        case FiducialSource::Catalog: return "catalog";
        case FiducialSource::Search: return "search";
        case FiducialSource::User: return "user";
    }
    return "user";
}

FiducialSource parse_source(const std::string& text) {
    if (text == "catalog") return FiducialSource::Catalog;
    if (text == "search") return FiducialSource::Search;
    if (text == "user") return FiducialSource::User;
    throw ParseError("unknown fiducial source '" + text + "'");
}

FiducialRecord make_record(const Factorization& factorization, const PureState& phi,
                           FiducialSource source) {
    const WHGroup g(factorization);
    FiducialRecord r;
    r.dim = factorization.dim();
    r.factorization = factorization;
    r.vector = phi.vector();
    r.sic_residual = fiducial_residual(g, phi);
    r.source = source;
    return r;
}

std::vector<FiducialRecord> builtin_catalog() {
    // Qubit: Bloch vector (1,1,1)/sqrt(3).
    const double cos_theta = 1.0 / std::sqrt(3.0);
    ComplexVector qubit(2);
    qubit[0] = std::sqrt((1.0 + cos_theta) / 2.0);
    qubit[1] = std::polar(std::sqrt((1.0 - cos_theta) / 2.0), std::numbers::pi / 4.0);

    // Qutrit: (0, 1, -1)/sqrt(2), a fiducial of the Hesse SIC.
    ComplexVector qutrit(3);
    qutrit << 0.0, 1.0, -1.0;

    return {make_record(Factorization::single(2), PureState::normalized(qubit), FiducialSource::Catalog),
            make_record(Factorization::single(3), PureState::normalized(qutrit), FiducialSource::Catalog)};
}

FiducialRecord builtin_fiducial(int d) {
    for (FiducialRecord& r : builtin_catalog()) {
        if (r.dim == d) return r;
    }
    throw std::out_of_range("no shipped fiducial for d = " + std::to_string(d));
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string& text) {
    if (text.empty()) throw ParseError("empty number");
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
        throw ParseError("bad decimal '" + text + "'");
    }
    return v;
}

nlohmann::json encode_amplitudes(const ComplexVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.push_back({format_double(v[k].real()), format_double(v[k].imag())});
    }
    return out;
}

ComplexVector decode_amplitudes(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("\"vector\" must be a non-empty array of [re, im] pairs");
    }
    auto component = [](const nlohmann::json& x) {
        if (x.is_string()) return parse_double(x.get<std::string>());
        if (x.is_number()) return x.get<double>();
        throw ParseError("amplitude components must be decimal strings or numbers");
    };
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
        const nlohmann::json& pair = j[k];
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("amplitude " + std::to_string(k) + " is not a [re, im] pair");
        }
        v[static_cast<Eigen::Index>(k)] = Complex(component(pair[0]), component(pair[1]));
    }
    return v;
}

nlohmann::json record_to_json(const FiducialRecord& r) {
    nlohmann::json j;
    j["dim"] = r.dim;
    j["factors"] = r.factorization.factors();
    j["vector"] = encode_amplitudes(r.vector);
    j["sic_residual"] = r.sic_residual;
    j["source"] = to_string(r.source);
    return j;
}

FiducialRecord record_from_json(const nlohmann::json& j) {
    FiducialRecord r;
    try {
        r.dim = j.at("dim").get<int>();
        std::vector<int> factors = j.contains("factors") ? j.at("factors").get<std::vector<int>>()
                                                         : std::vector<int>{r.dim};
        r.factorization = Factorization(std::move(factors));
        r.vector = decode_amplitudes(j.at("vector"));
        r.sic_residual = j.at("sic_residual").get<double>();
        r.source = j.contains("source") ? parse_source(j.at("source").get<std::string>())
                                        : FiducialSource::User;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("fiducial record: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("fiducial record: ") + e.what());
    }
    if (r.factorization.dim() != r.dim || r.vector.size() != r.dim) {
        throw DimensionMismatch("fiducial record: dim, factors, and vector length disagree");
    }
    double recomputed;
    try {
        recomputed = fiducial_residual(WHGroup(r.factorization), PureState::normalized(r.vector));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("fiducial record: ") + e.what());
    }
    r.trusted = std::abs(recomputed - r.sic_residual) <= kResidualMatchTol;
    return r;
}

std::vector<FiducialRecord> catalog_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog '" + path + "'");
    std::vector<FiducialRecord> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        out.push_back(record_from_json(j));
        if (!out.back().trusted) {
            std::cerr << "warning: " << path << ":" << line_no
                      << ": stored sic_residual does not match recomputation; record untrusted\n";
        }
    }
    return out;
}

void catalog_save(const std::vector<FiducialRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write catalog '" + path + "'");
    for (const FiducialRecord& r : records) out << record_to_json(r).dump() << '\n';
}

void catalog_append(const FiducialRecord& record, const std::string& path) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to catalog '" + path + "'");
    out << record_to_json(record).dump() << '\n';
}

}  // namespace magiclab
