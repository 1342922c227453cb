#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace olsembed::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kNotPartialLatin = 3,
    kNotOrthogonalPair = 4,
    kLatinViolation = 5,
    kOrthogonalityViolation = 6,
    kContainmentViolation = 7,
};

struct EmbedOptions {
    std::string pair_path;
    bool basic = false;
    bool lazy = false;
    std::optional<unsigned> exponent; // --basic only
    std::string out_a;
    std::string out_b;
    std::string manifest;
    std::string dump_trades;
    std::string report;
    bool json = false;
    bool timings = false;
};

struct VerifyEmbeddingOptions {
    std::string pair_path;
    std::string square_a;
    std::string square_b;
    std::string manifest;
};

struct CellOptions {
    std::string manifest;
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    char square = 'a';
};

int cmd_verify_pair(const std::string& pair_path, std::ostream& out, std::ostream& err);
int cmd_embed(const EmbedOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify_embedding(const VerifyEmbeddingOptions& options, std::ostream& out, std::ostream& err);
int cmd_cell(const CellOptions& options, std::ostream& out, std::ostream& err);

/// Full command line without the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace olsembed::cli
