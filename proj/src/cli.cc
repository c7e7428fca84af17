#include "magiclab/cli.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "magiclab/catalog.h"
#include "magiclab/errors.h"
#include "magiclab/magic.h"
#include "magiclab/search.h"
#include "magiclab/sic.h"
#include "magiclab/stabilizer.h"

namespace magiclab {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";
constexpr double kStabilizerZeroTol = 1e-10;

/// Raised inside command handlers to leave with a specific exit code.
struct CliFailure {
    int code;
    std::string message;
};

enum class Format { Json, Csv, Pretty };

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

struct OutputRecord {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    Table table;
};

std::string cell_text(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
        std::ostringstream s;
        s << std::setprecision(12) << v.get<double>();
        return s.str();
    }
    return v.dump();
}

void render(const OutputRecord& rec, Format format, std::ostream& out) {
    switch (format) {
        case Format::Json: {
            json doc;
            doc["schema"] = kSchemaVersion;
            doc["command"] = rec.command;
            doc["inputs"] = rec.inputs;
            doc["results"] = rec.results;
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            for (std::size_t c = 0; c < rec.table.columns.size(); ++c) {
                out << (c ? "," : "") << rec.table.columns[c];
            }
            out << '\n';
            for (const auto& row : rec.table.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    std::string text = row[c].is_number_float() ? format_double(row[c].get<double>())
                                                                : cell_text(row[c]);
                    if (text.find_first_of(",\"") != std::string::npos) {
                        std::string quoted = "\"";
                        for (char ch : text) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
                        text = quoted + "\"";
                    }
                    out << (c ? "," : "") << text;
                }
                out << '\n';
            }
            break;
        }
        case Format::Pretty: {
            out << rec.command << "\n";
            for (const auto& [key, value] : rec.inputs.items()) {
                out << "  " << key << ": " << cell_text(value) << "\n";
            }
            std::vector<std::size_t> width(rec.table.columns.size());
            for (std::size_t c = 0; c < width.size(); ++c) width[c] = rec.table.columns[c].size();
            for (const auto& row : rec.table.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
            }
            for (std::size_t c = 0; c < width.size(); ++c) {
                out << std::left << std::setw(static_cast<int>(width[c]) + 2) << rec.table.columns[c];
            }
            out << "\n";
            for (const auto& row : rec.table.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out << std::left << std::setw(static_cast<int>(width[c]) + 2) << cell_text(row[c]);
                }
                out << "\n";
            }
            break;
        }
    }
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Pretty;
}

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

Factorization resolve_factorization(const std::string& factors_text, std::optional<int> dim, int state_dim) {
    if (!factors_text.empty()) {
        Factorization f = [&] {
            try {
                return parse_factorization(factors_text);
            } catch (const std::invalid_argument& e) {
                throw CliFailure{kExitParse, std::string("--factors: ") + e.what()};
            }
        }();
        if (f.dim() != state_dim) {
            throw CliFailure{kExitDimension, "factors " + f.str() + " multiply to " + std::to_string(f.dim()) +
                                                 " but the state has dimension " + std::to_string(state_dim)};
        }
        return f;
    }
    if (dim && *dim != state_dim) {
        throw CliFailure{kExitDimension, "--dim " + std::to_string(*dim) + " but the state has dimension " +
                                             std::to_string(state_dim)};
    }
    if (state_dim < 2) throw CliFailure{kExitDimension, "dimension must be at least 2"};
    return Factorization::single(state_dim);
}

json read_json_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliFailure{kExitParse, "cannot open '" + path + "'"};
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
    }
    // Line-delimited: use the first non-blank line.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            return json::parse(line);
        } catch (const json::parse_error& e) {
            throw CliFailure{kExitParse, path + ": " + e.what()};
        }
    }
    throw CliFailure{kExitParse, path + ": empty file"};
}

PureState state_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("vector")) {
        throw CliFailure{kExitParse, where + ": expected an object with a \"vector\" field"};
    }
    ComplexVector v;
    try {
        v = decode_amplitudes(j.at("vector"));
    } catch (const ParseError& e) {
        throw CliFailure{kExitParse, where + ": " + e.what()};
    }
    if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<int>() != v.size())) {
        throw CliFailure{kExitDimension, where + ": \"dim\" does not match the vector length"};
    }
    try {
        return PureState::normalized(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw CliFailure{kExitParse, where + ": " + e.what()};
    }
}

// ---------------------------------------------------------------------------
// entropy

struct EntropyOptions {
    std::string state_file;
    std::optional<int> catalog_dim;
    std::optional<std::uint64_t> random_seed;
    std::optional<int> dim;
    std::string factors;
    std::vector<double> alphas{2.0};
    bool base2 = false;
};

OutputRecord cmd_entropy(const EntropyOptions& o) {
    const int sources = (!o.state_file.empty()) + o.catalog_dim.has_value() + o.random_seed.has_value();
    if (sources != 1) {
        throw CliFailure{kExitParse, "entropy needs exactly one of --state, --catalog, --random"};
    }
    OutputRecord rec;
    rec.command = "entropy";

    std::optional<PureState> psi;
    std::string source;
    std::string file_factors;
    if (!o.state_file.empty()) {
        json j = read_json_document(o.state_file);
        psi = state_from_json(j, o.state_file);
        if (j.contains("factors") && o.factors.empty()) {
            try {
                file_factors = Factorization(j.at("factors").get<std::vector<int>>()).str();
            } catch (const std::exception& e) {
                throw CliFailure{kExitParse, o.state_file + ": bad \"factors\": " + e.what()};
            }
        }
        source = "file:" + o.state_file;
        rec.inputs["state"] = o.state_file;
    } else if (o.catalog_dim) {
        try {
            psi = PureState::normalized(builtin_fiducial(*o.catalog_dim).vector);
        } catch (const std::out_of_range& e) {
            throw CliFailure{kExitParse, e.what()};
        }
        source = "catalog";
        rec.inputs["catalog"] = *o.catalog_dim;
    } else {
        int d = 0;
        if (o.dim) {
            d = *o.dim;
        } else if (!o.factors.empty()) {
            try {
                d = parse_factorization(o.factors).dim();
            } catch (const std::invalid_argument& e) {
                throw CliFailure{kExitParse, std::string("--factors: ") + e.what()};
            }
        } else {
            throw CliFailure{kExitParse, "--random needs --dim or --factors"};
        }
        if (d < 2) throw CliFailure{kExitDimension, "dimension must be at least 2"};
        psi = haar_random_state(d, *o.random_seed);
        source = "random";
        rec.inputs["random"] = *o.random_seed;
    }

    const Factorization f =
        resolve_factorization(o.factors.empty() ? file_factors : o.factors, o.dim, psi->dim());
    const WHGroup g(f);
    const CharDistribution p = char_distribution(g, *psi);
    const double scale = o.base2 ? 1.0 / std::numbers::ln2 : 1.0;
    const std::string unit = o.base2 ? "bits" : "nats";

    rec.inputs["dim"] = f.dim();
    rec.inputs["factors"] = f.factors();
    rec.inputs["alphas"] = o.alphas;
    rec.inputs["unit"] = unit;

    rec.table.columns = {"alpha", "value", "bound", "gap", "bound_applies"};
    json rows = json::array();
    for (double alpha : o.alphas) {
        EntropyReport r;
        try {
            r = entropy_from_distribution(p, alpha);
        } catch (const std::domain_error& e) {
            throw CliFailure{kExitParse, std::string("--alpha: ") + e.what()};
        }
        const json value = r.value * scale;
        const json bound = r.bound ? json(*r.bound * scale) : json(nullptr);
        const json gap = r.saturation_gap ? json(*r.saturation_gap * scale) : json(nullptr);
        rows.push_back({{"alpha", alpha}, {"value", value}, {"bound", bound}, {"gap", gap},
                        {"bound_applies", alpha >= 2.0}});
        rec.table.rows.push_back({alpha, value, bound, gap, alpha >= 2.0});
    }
    rec.results["source"] = source;
    rec.results["entropies"] = rows;
    return rec;
}

// ---------------------------------------------------------------------------
// search

struct SearchOptions {
    std::optional<int> dim;
    std::string factors;
    int restarts = 20;
    std::uint64_t seed = 0;
    int max_iters = 5000;
    double grad_tol = 1e-10;
    double gap_tol = 1e-10;
    std::string out_path;
};

OutputRecord cmd_search(const SearchOptions& o, int threads, std::ostream& log, bool& converged) {
    SearchConfig config;
    if (!o.factors.empty()) {
        try {
            config.factorization = parse_factorization(o.factors);
        } catch (const std::invalid_argument& e) {
            throw CliFailure{kExitParse, std::string("--factors: ") + e.what()};
        }
        if (o.dim && *o.dim != config.factorization.dim()) {
            throw CliFailure{kExitDimension, "--dim does not match the product of --factors"};
        }
    } else if (o.dim) {
        if (*o.dim < 2) throw CliFailure{kExitDimension, "dimension must be at least 2"};
        config.factorization = Factorization::single(*o.dim);
    } else {
        throw CliFailure{kExitParse, "search needs --dim or --factors"};
    }
    config.restarts = o.restarts;
    config.seed = o.seed;
    config.max_iters = o.max_iters;
    config.grad_tol = o.grad_tol;
    config.target_gap_tol = o.gap_tol;
    config.threads = threads;
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw CliFailure{kExitParse, e.what()};
    }

    const auto started = std::chrono::steady_clock::now();
    const SearchResult r = find_fiducial(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    log << "search: d=" << config.dim() << " factors=" << config.factorization.str()
        << " restarts=" << config.restarts << " best_restart=" << r.best_restart
        << " converged=" << (r.converged ? "yes" : "no") << " (" << std::setprecision(3) << seconds << " s)\n";

    const FiducialRecord record = make_record(config.factorization, r.best_state, FiducialSource::Search);
    if (!o.out_path.empty()) {
        if (r.converged) {
            catalog_append(record, o.out_path);
            log << "search: appended fiducial to " << o.out_path << "\n";
        } else {
            log << "search: not converged, nothing appended to " << o.out_path << "\n";
        }
    }
    converged = r.converged;

    OutputRecord rec;
    rec.command = "search";
    rec.inputs = {{"dim", config.dim()},
                  {"factors", config.factorization.factors()},
                  {"restarts", config.restarts},
                  {"seed", config.seed},
                  {"max_iters", config.max_iters},
                  {"grad_tol", config.grad_tol},
                  {"gap_tol", config.target_gap_tol}};
    rec.results = {{"converged", r.converged},
                   {"objective", r.objective},
                   {"target", r.target},
                   {"objective_gap", r.objective - r.target},
                   {"sic_residual", r.sic_residual},
                   {"entropy_at_2", r.entropy_at_2},
                   {"bound_at_2", r.bound_at_2},
                   {"restarts_used", r.restarts_used},
                   {"best_restart", r.best_restart},
                   {"iterations", r.iterations},
                   {"record", record_to_json(record)}};
    rec.table.columns = {"converged", "objective", "target", "sic_residual", "entropy_at_2", "bound_at_2",
                         "best_restart"};
    rec.table.rows.push_back({r.converged, r.objective, r.target, r.sic_residual, r.entropy_at_2, r.bound_at_2,
                              r.best_restart});
    return rec;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string fiducial_file;
    std::string set_file;
    double tol = 1e-6;
};

json k_alpha_table(const StateSet& v) {
    json rows = json::array();
    for (double alpha : {1.0, 2.0}) {
        const double k = k_alpha(v, alpha);
        const double bound = k_alpha_bound(v.dim(), alpha);
        rows.push_back({{"alpha", alpha}, {"value", k}, {"bound", bound}, {"excess", k - bound}});
    }
    return rows;
}

OutputRecord cmd_verify(const VerifyOptions& o) {
    if (o.fiducial_file.empty() == o.set_file.empty()) {
        throw CliFailure{kExitParse, "verify needs exactly one of --fiducial, --set"};
    }
    OutputRecord rec;
    rec.command = "verify";
    rec.inputs["tol"] = o.tol;
    rec.table.columns = {"entry", "dim", "is_sic", "max_residual", "sic_residual", "k1", "k1_bound", "k2",
                         "k2_bound"};
    json entries = json::array();
    bool all_sic = true;

    auto add_entry = [&](json entry, const StateSet& v, std::optional<double> sic_residual) {
        const SicReport report = verify_sic(v, o.tol);
        entry["dim"] = v.dim();
        entry["is_sic"] = report.is_sic;
        entry["max_residual"] = report.max_residual;
        if (sic_residual) entry["sic_residual"] = *sic_residual;
        entry["k_alpha"] = k_alpha_table(v);
        all_sic = all_sic && report.is_sic;
        const json& k = entry["k_alpha"];
        rec.table.rows.push_back({static_cast<int>(entries.size()), v.dim(), report.is_sic, report.max_residual,
                                  nullable(sic_residual), k[0]["value"], k[0]["bound"], k[1]["value"],
                                  k[1]["bound"]});
        entries.push_back(std::move(entry));
    };

    if (!o.fiducial_file.empty()) {
        rec.inputs["fiducial"] = o.fiducial_file;
        std::vector<FiducialRecord> records;
        try {
            records = catalog_load(o.fiducial_file);
        } catch (const ParseError& e) {
            throw CliFailure{kExitParse, e.what()};
        } catch (const DimensionMismatch& e) {
            throw CliFailure{kExitDimension, e.what()};
        }
        if (records.empty()) throw CliFailure{kExitParse, o.fiducial_file + ": no records"};
        for (const FiducialRecord& r : records) {
            const WHGroup g(r.factorization);
            const PureState phi = PureState::normalized(r.vector);
            json entry = {{"factors", r.factorization.factors()},
                          {"source", to_string(r.source)},
                          {"stored_sic_residual", r.sic_residual},
                          {"trusted", r.trusted}};
            add_entry(std::move(entry), wh_orbit(g, phi), fiducial_residual(g, phi));
        }
    } else {
        rec.inputs["set"] = o.set_file;
        json doc = read_json_document(o.set_file);
        if (!doc.is_object() || !doc.contains("states") || !doc.at("states").is_array()) {
            throw CliFailure{kExitParse, o.set_file + ": expected an object with a \"states\" array"};
        }
        std::vector<PureState> states;
        for (const json& s : doc.at("states")) {
            states.push_back(state_from_json(s.is_array() ? json{{"vector", s}} : s, o.set_file));
        }
        std::optional<StateSet> set;
        try {
            set.emplace(std::move(states));
        } catch (const DimensionMismatch& e) {
            throw CliFailure{kExitDimension, e.what()};
        }
        const long long d = set->dim();
        if (set->size() != d * d) {
            throw CliFailure{kExitDimension, "a set in dimension " + std::to_string(d) + " needs " +
                                                 std::to_string(d * d) + " states, got " +
                                                 std::to_string(set->size())};
        }
        add_entry(json::object(), *set, std::nullopt);
    }
    rec.results["is_sic"] = all_sic;
    rec.results["entries"] = entries;
    return rec;
}

// ---------------------------------------------------------------------------
// stabilizers

OutputRecord cmd_stabilizers(std::optional<int> dim, const std::string& factors_text) {
    Factorization f = Factorization::single(2);
    try {
        if (!factors_text.empty()) {
            f = parse_factorization(factors_text);
        } else if (dim) {
            if (*dim < 2) throw CliFailure{kExitUnsupportedDimension, "dimension must be a prime >= 2"};
            f = Factorization::single(*dim);
        } else {
            throw CliFailure{kExitParse, "stabilizers needs --dim or --factors"};
        }
    } catch (const std::invalid_argument& e) {
        throw CliFailure{kExitParse, e.what()};
    }
    const WHGroup g(f);
    std::vector<StabilizerState> states;
    try {
        states = enumerate_stabilizer_states(g);
    } catch (const UnsupportedDimension& e) {
        throw CliFailure{kExitUnsupportedDimension, e.what()};
    }

    OutputRecord rec;
    rec.command = "stabilizers";
    rec.inputs = {{"dim", f.dim()}, {"factors", f.factors()}};
    rec.table.columns = {"index", "stabilizer", "m2", "vector"};
    json rows = json::array();
    for (std::size_t i = 0; i < states.size(); ++i) {
        const StabilizerState& s = states[i];
        std::string generators;
        for (const DisplacementIndex& a : s.subset.indices) generators += a.str();
        double m2 = stabilizer_entropy(g, s.state, 2.0).value;
        if (std::abs(m2) < kStabilizerZeroTol) m2 = 0.0;
        std::string amplitudes;
        for (int k = 0; k < s.state.dim(); ++k) {
            if (k) amplitudes += ';';
            amplitudes += format_double(s.state[k].real()) + ":" + format_double(s.state[k].imag());
        }
        rows.push_back({{"index", i}, {"stabilizer", generators}, {"m2", m2},
                        {"vector", encode_amplitudes(s.state.vector())}});
        rec.table.rows.push_back({i, generators, m2, amplitudes});
    }
    rec.results["count"] = states.size();
    rec.results["states"] = rows;
    return rec;
}

// ---------------------------------------------------------------------------
// bound-table

OutputRecord cmd_bound_table(const std::vector<int>& dims, const std::vector<double>& alphas, bool base2) {
    OutputRecord rec;
    rec.command = "bound-table";
    const double scale = base2 ? 1.0 / std::numbers::ln2 : 1.0;
    rec.inputs = {{"dims", dims}, {"alphas", alphas}, {"unit", base2 ? "bits" : "nats"}};
    rec.table.columns = {"d", "alpha", "magic_bound", "k_alpha_bound"};
    json rows = json::array();
    for (int d : dims) {
        if (d < 2) throw CliFailure{kExitDimension, "--dims entries must be >= 2"};
        for (double alpha : alphas) {
            const json mb = alpha >= 2.0 ? json(magic_bound(d, alpha) * scale) : json(nullptr);
            const json kb = alpha >= 1.0 ? json(k_alpha_bound(d, alpha)) : json(nullptr);
            rows.push_back({{"d", d}, {"alpha", alpha}, {"magic_bound", mb}, {"k_alpha_bound", kb}});
            rec.table.rows.push_back({d, alpha, mb, kb});
        }
    }
    rec.results["rows"] = rows;
    return rec;
}

int resolve_threads(std::optional<int> flag, std::ostream& err) {
    if (flag) return *flag;
    if (const char* env = std::getenv("MAGICLAB_THREADS")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            err << "warning: ignoring malformed MAGICLAB_THREADS='" << env << "'\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"magiclab: stabilizer entropies, maximal-magic bounds, and WH-SIC fiducials"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<int> threads;
    app.add_option("--threads", threads, "Worker threads (default: MAGICLAB_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);

    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}))
            ->capture_default_str();
    };

    EntropyOptions eo;
    auto* entropy = app.add_subcommand("entropy", "Stabilizer entropies M_alpha and their upper bound");
    entropy->add_option("--state", eo.state_file, "State file (JSON with a \"vector\" of [re, im] strings)");
    entropy->add_option("--catalog", eo.catalog_dim, "Use the shipped fiducial of this dimension");
    entropy->add_option("--random", eo.random_seed, "Haar-random state with this seed");
    entropy->add_option("--dim", eo.dim, "Dimension");
    entropy->add_option("--factors", eo.factors, "WH group factorization, e.g. 2,3");
    entropy->add_option("--alpha", eo.alphas, "Orders alpha (comma separated)")->delimiter(',');
    entropy->add_flag("--base2", eo.base2, "Report in bits instead of nats");
    add_format(entropy);

    SearchOptions so;
    auto* search = app.add_subcommand("search", "Search for a maximal-magic (WH-SIC fiducial) state");
    search->add_option("--dim", so.dim, "Dimension");
    search->add_option("--factors", so.factors, "WH group factorization, e.g. 2,2,2");
    search->add_option("--restarts", so.restarts, "Independent random restarts")->capture_default_str();
    search->add_option("--seed", so.seed, "Base seed; restart i uses seed + i")->capture_default_str();
    search->add_option("--max-iters", so.max_iters, "Iterations per restart")->capture_default_str();
    search->add_option("--grad-tol", so.grad_tol, "Projected gradient tolerance")->capture_default_str();
    search->add_option("--gap-tol", so.gap_tol, "Convergence tolerance on objective - target")
        ->capture_default_str();
    search->add_option("--out", so.out_path, "Append the converged fiducial to this catalog file");
    add_format(search);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Check the SIC condition and the K_alpha bound");
    verify->add_option("--fiducial", vo.fiducial_file, "Catalog file of fiducial records");
    verify->add_option("--set", vo.set_file, "File with {\"states\": [...]} holding d^2 states");
    verify->add_option("--tol", vo.tol, "SIC residual tolerance")->capture_default_str();
    add_format(verify);

    std::optional<int> stab_dim;
    std::string stab_factors;
    auto* stabilizers = app.add_subcommand("stabilizers", "Enumerate the pure stabilizer states");
    stabilizers->add_option("--dim", stab_dim, "Prime dimension");
    stabilizers->add_option("--factors", stab_factors, "Factorization into primes, e.g. 2,3");
    add_format(stabilizers);

    std::vector<int> dims{2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<double> alphas{2.0, 3.0, 4.0};
    bool table_base2 = false;
    auto* bound_table = app.add_subcommand("bound-table", "Tabulate the entropy and K_alpha bounds");
    bound_table->add_option("--dims", dims, "Dimensions")->delimiter(',')->capture_default_str();
    bound_table->add_option("--alphas", alphas, "Orders alpha")->delimiter(',')->capture_default_str();
    bound_table->add_flag("--base2", table_base2, "Report the entropy bound in bits");
    add_format(bound_table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        OutputRecord rec;
        int code = kExitOk;
        if (entropy->parsed()) {
            rec = cmd_entropy(eo);
        } else if (search->parsed()) {
            bool converged = false;
            rec = cmd_search(so, resolve_threads(threads, err), err, converged);
            if (!converged) code = kExitNotConverged;
        } else if (verify->parsed()) {
            rec = cmd_verify(vo);
        } else if (stabilizers->parsed()) {
            rec = cmd_stabilizers(stab_dim, stab_factors);
        } else {
            rec = cmd_bound_table(dims, alphas, table_base2);
        }
        render(rec, parse_format(format), out);
        return code;
    } catch (const CliFailure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const UnsupportedDimension& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsupportedDimension;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

}  // namespace magiclab
