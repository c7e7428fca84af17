#ifndef MAGICLAB_CATALOG_H
#define MAGICLAB_CATALOG_H

#include <string>
#include <vector>

#include "json.hpp"

#include "magiclab/core_states.h"
#include "magiclab/wh_group.h"

namespace magiclab {

enum class FiducialSource { Catalog, Search, User };

std::string to_string(FiducialSource source);
FiducialSource parse_source(const std::string& text);

/// A candidate WH-SIC fiducial.
///
/// On disk this is one JSON object per line:
///   {"dim": 2, "factors": [2], "vector": [["0.88...", "0"], ...],
///    "sic_residual": 1.1e-16, "source": "catalog"}
/// Amplitudes are decimal strings with 17 significant digits.
struct FiducialRecord {
    int dim = 0;
    Factorization factorization = Factorization::single(2);
    ComplexVector vector;
    double sic_residual = 0.0;
    FiducialSource source = FiducialSource::User;
    /// False when the stored residual disagrees with a recomputation by more
    /// than 1e-10. Not serialized.
    bool trusted = true;
};

/// Builds a record for `phi` under the group of `factorization`, computing
/// its residual.
FiducialRecord make_record(const Factorization& factorization, const PureState& phi,
                           FiducialSource source);

/// The two shipped fiducials: d = 2 (Bloch vector (1,1,1)/sqrt 3) and
/// d = 3 ((0, 1, -1)/sqrt 2).
std::vector<FiducialRecord> builtin_catalog();

/// Shipped fiducial for dimension d; throws std::out_of_range if none.
FiducialRecord builtin_fiducial(int d);

/// Amplitude (de)serialization shared by catalog and state files.
nlohmann::json encode_amplitudes(const ComplexVector& v);
/// Throws ParseError on anything other than a list of [re, im] decimal strings
/// (or JSON numbers).
ComplexVector decode_amplitudes(const nlohmann::json& j);
std::string format_double(double x);
double parse_double(const std::string& text);

nlohmann::json record_to_json(const FiducialRecord& r);
/// Parses and re-verifies one record. Throws ParseError on malformed input and
/// DimensionMismatch when the vector, dim, and factors disagree.
FiducialRecord record_from_json(const nlohmann::json& j);

/// Reads a line-delimited catalog. Every record's residual is recomputed; a
/// mismatch marks the record untrusted and logs a warning to stderr.
std::vector<FiducialRecord> catalog_load(const std::string& path);
/// Overwrites `path` with `records`.
void catalog_save(const std::vector<FiducialRecord>& records, const std::string& path);
/// Appends one line to `path`, creating it if needed.
void catalog_append(const FiducialRecord& record, const std::string& path);

}  // namespace magiclab

#endif
