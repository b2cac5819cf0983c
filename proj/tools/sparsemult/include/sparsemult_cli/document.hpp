#ifndef SPARSEMULT_CLI_DOCUMENT_HPP
#define SPARSEMULT_CLI_DOCUMENT_HPP

#include "sparsemult/supports.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sparsemult::cli {

inline constexpr const char* version = "1.0.0";

/// {"n": 2, "supports": [[[1,0],[0,2]], ...], "seed": 7, "bound": 1000, "M": 5, "K_max": 20}
struct InputDocument {
    SupportFamily family;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> bound;
    std::optional<Coord> M;
    std::optional<std::size_t> kmax;
};

/// Throws InputError on anything malformed.
InputDocument parse_input(const nlohmann::json& j);
nlohmann::json to_json(const InputDocument& doc);

struct CommandEcho {
    std::string name;
    std::string format = "json";
    std::optional<Coord> M;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> bound;
    std::optional<std::size_t> kmax;
    std::optional<std::size_t> trials;
};

struct Conditions {
    bool h1 = false;
    bool h2 = false;
    bool h3 = false;
    std::optional<IndexSet> failing_I;
};

struct StratumRow {
    IndexSet I;
    IndexSet J;
    bool a1 = false;
    bool a2 = false;
    bool a3 = false;
    std::optional<Integer> count;
    std::optional<Integer> multiplicity;
    std::map<std::string, Integer> routes;
};

struct Totals {
    Integer mv;
    Integer sm;
    Integer mv_A0;
    Integer total_with_multiplicity;
};

struct Mult0Section {
    Coord M = 0;
    Integer value;
    std::map<std::string, Integer> routes;
    bool agree = false;
};

struct OracleTrial {
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> seeds;
    Integer expected;
    std::optional<std::uint64_t> observed;
    bool match = false;
    std::optional<std::string> error;
};

struct OracleSection {
    std::uint64_t seed = 0;
    std::uint64_t bound = 0;
    std::size_t kmax = 0;
    std::vector<OracleTrial> trials;
    bool all_match = false;
};

struct Status {
    int exit_code = 0;
    std::optional<std::string> error;
};

struct OutputDocument {
    std::string version;
    CommandEcho command;
    std::optional<InputDocument> input;
    std::optional<Conditions> conditions;
    std::optional<std::vector<StratumRow>> strata;
    std::optional<Totals> totals;
    std::optional<Mult0Section> mult0;
    std::optional<OracleSection> oracle;
    Status status;
};

nlohmann::json to_json(const OutputDocument& doc);
OutputDocument parse_output(const nlohmann::json& j);

/// Two-space indented JSON with sorted keys and a trailing newline.
std::string dump(const nlohmann::json& j);

/// Plain-text rendering for --format table.
std::string render_table(const OutputDocument& doc);

} // namespace sparsemult::cli

#endif
