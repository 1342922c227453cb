#include "olsembed_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "olsembed/io.hpp"
#include "olsembed/pipeline.hpp"
#include "olsembed/product.hpp"
#include "olsembed/verify.hpp"

namespace olsembed::cli {

namespace {

struct CommandError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CommandError{kFailure, "cannot read " + path};
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw CommandError{kFailure, "cannot write " + path};
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    auto out = open_output(path);
    out << content;
    if (!out) {
        throw CommandError{kFailure, "write failed for " + path};
    }
}

struct LoadedPair {
    PartialLatinSquare p;
    PartialLatinSquare q;
};

PairDocument read_pair_document(const std::string& path) {
    try {
        return parse_pair_document(read_file(path));
    } catch (const ParseError& e) {
        throw CommandError{kParseError, path + ": " + e.what()};
    }
}

PartialLatinSquare require_partial_latin(const PairDocument& doc, const std::vector<Triple>& triples,
                                         const char* name) {
    if (triples.empty()) {
        throw CommandError{kNotPartialLatin, std::string(name) + " is empty"};
    }
    const auto verdict = check_partial_latin(doc.order, triples);
    if (!verdict.ok()) {
        throw CommandError{kNotPartialLatin, std::string(name) + " is not a partial latin square: " + verdict.summary()};
    }
    return PartialLatinSquare(doc.order, triples);
}

/// Reports violations on `out` before failing, so verify-pair lists them.
LoadedPair load_pair(const std::string& path, std::ostream& out) {
    const auto doc = read_pair_document(path);
    auto p = require_partial_latin(doc, doc.p, "P");
    auto q = require_partial_latin(doc, doc.q, "Q");
    const auto verdict = check_orthogonal_partial(p, q);
    if (!verdict.ok()) {
        out << "orthogonal=no\n" << verdict.summary() << '\n';
        throw CommandError{kNotOrthogonalPair, "P and Q are not an orthogonal pair"};
    }
    return {std::move(p), std::move(q)};
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const CommandError& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

void write_dense(const Embedding& embedding, const std::string& path, bool square_a) {
    auto out = open_output(path);
    std::vector<Symbol> row(embedding.order());
    for (Index r = 0; r < embedding.order(); ++r) {
        if (square_a) {
            embedding.row_a(r, row);
        } else {
            embedding.row_b(r, row);
        }
        write_grid_row(out, row);
    }
    if (!out) {
        throw CommandError{kFailure, "write failed for " + path};
    }
}

void print_verdict(std::ostream& out, const char* name, const Verdict& verdict) {
    out << name << '=' << (verdict.ok() ? "ok" : "fail") << '\n';
    if (!verdict.ok()) {
        out << verdict.summary() << '\n';
    }
}

int exit_for(EmbeddingFailure failure) {
    switch (failure) {
    case EmbeddingFailure::None: return kOk;
    case EmbeddingFailure::Latin: return kLatinViolation;
    case EmbeddingFailure::Orthogonality: return kOrthogonalityViolation;
    case EmbeddingFailure::Containment: return kContainmentViolation;
    }
    return kFailure;
}

Embedding read_manifest(const std::string& path) {
    const auto text = read_file(path);
    try {
        return load_manifest(text);
    } catch (const ParseError& e) {
        throw CommandError{kParseError, path + ": " + e.what()};
    } catch (const InvalidInput& e) {
        throw CommandError{kParseError, path + ": invalid manifest: " + e.what()};
    }
}

/// Next non-blank line, or false at end of input.
bool next_row(std::istream& in, std::size_t& line_number, std::string& line) {
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            return true;
        }
    }
    return false;
}

EmbeddingVerification verify_grid_files(const std::string& path_a, const std::string& path_b,
                                        const LoadedPair& pair) {
    std::ifstream in_a(path_a, std::ios::binary);
    std::ifstream in_b(path_b, std::ios::binary);
    if (!in_a) {
        throw CommandError{kFailure, "cannot read " + path_a};
    }
    if (!in_b) {
        throw CommandError{kFailure, "cannot read " + path_b};
    }
    std::size_t line_a = 0;
    std::size_t line_b = 0;
    std::string text_a;
    std::string text_b;
    auto parse_row = [](const std::string& path, const std::string& text, std::size_t line) {
        try {
            return parse_grid_row(text, line);
        } catch (const ParseError& e) {
            throw CommandError{kParseError, path + ": " + e.what()};
        }
    };

    if (!next_row(in_a, line_a, text_a)) {
        throw CommandError{kParseError, path_a + ": empty grid"};
    }
    auto row_a = parse_row(path_a, text_a, line_a);
    const auto order = static_cast<Index>(row_a.size());
    StreamingVerifier verifier(order, pair.p.triples(), pair.q.triples());
    bool have_a = true;
    while (true) {
        const bool have_b = next_row(in_b, line_b, text_b);
        if (!have_a && !have_b) {
            break;
        }
        const auto row_b = have_b ? parse_row(path_b, text_b, line_b) : std::vector<Symbol>{};
        verifier.feed(row_a, row_b);
        have_a = next_row(in_a, line_a, text_a);
        row_a = have_a ? parse_row(path_a, text_a, line_a) : std::vector<Symbol>{};
    }
    return verifier.finish();
}

} // namespace

int cmd_verify_pair(const std::string& pair_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto pair = load_pair(pair_path, out);
        out << "order=" << pair.p.order() << '\n'
            << "volume=" << pair.p.volume() << '\n'
            << "orthogonal=yes\n";
        return int{kOk};
    });
}

int cmd_embed(const EmbedOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (options.exponent && !options.basic) {
            throw CommandError{kFailure, "--exponent applies only with --basic"};
        }
        if (options.lazy && options.manifest.empty()) {
            throw CommandError{kFailure, "--lazy needs --manifest"};
        }
        const auto pair = load_pair(options.pair_path, err);
        const auto embedding =
            options.basic ? embed_pair_basic(pair.p, pair.q, options.exponent) : embed_pair(pair.p, pair.q);
        const bool dense_requested = !options.out_a.empty() || !options.out_b.empty();
        if (embedding.order() > kDenseOrderLimit && (dense_requested || !options.lazy)) {
            throw CommandError{kFailure, "order " + std::to_string(embedding.order()) + " exceeds the dense limit " +
                                             std::to_string(kDenseOrderLimit) +
                                             "; use --lazy --manifest and no grid outputs"};
        }
        if (!options.out_a.empty()) {
            write_dense(embedding, options.out_a, true);
        }
        if (!options.out_b.empty()) {
            write_dense(embedding, options.out_b, false);
        }
        if (!options.manifest.empty()) {
            write_file(options.manifest, emit_manifest(embedding));
        }
        if (!options.dump_trades.empty()) {
            write_file(options.dump_trades, emit_trade_audit(embedding));
        }
        const auto report = options.json ? emit_report_json(embedding.report(), options.timings)
                                         : embedding.report().to_text(options.timings);
        if (!options.report.empty()) {
            write_file(options.report, report);
        }
        out << report;
        return int{kOk};
    });
}

int cmd_verify_embedding(const VerifyEmbeddingOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const bool grids = !options.square_a.empty() || !options.square_b.empty();
        if (grids == !options.manifest.empty()) {
            throw CommandError{kFailure, "give either two square files or --manifest"};
        }
        if (grids && (options.square_a.empty() || options.square_b.empty())) {
            throw CommandError{kFailure, "two square files are needed"};
        }
        const auto pair = load_pair(options.pair_path, err);
        EmbeddingVerification result;
        Index order = 0;
        if (grids) {
            result = verify_grid_files(options.square_a, options.square_b, pair);
        } else {
            const auto embedding = read_manifest(options.manifest);
            order = embedding.order();
            result = verify_embedding(embedding, pair.p.triples(), pair.q.triples());
        }
        if (order != 0) {
            out << "order=" << order << '\n';
        }
        print_verdict(out, "latin", result.latin);
        print_verdict(out, "orthogonality", result.orthogonality);
        print_verdict(out, "containment", result.containment);
        return exit_for(result.first_failure());
    });
}

int cmd_cell(const CellOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto embedding = read_manifest(options.manifest);
        if (options.row >= embedding.order() || options.col >= embedding.order()) {
            throw CommandError{kFailure, "index out of range for order " + std::to_string(embedding.order())};
        }
        const auto r = static_cast<Index>(options.row);
        const auto c = static_cast<Index>(options.col);
        out << (options.square == 'a' ? embedding.cell_a(r, c) : embedding.cell_b(r, c)) << '\n';
        return int{kOk};
    });
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Embed orthogonal partial latin squares in orthogonal latin squares", "olsembed"};
    app.require_subcommand(1);

    std::string verify_pair_path;
    auto* verify_pair = app.add_subcommand("verify-pair", "Check that a pair file holds orthogonal partial squares");
    verify_pair->add_option("pair", verify_pair_path, "pair JSON file")->required();

    EmbedOptions embed_options;
    unsigned exponent = 0;
    auto* embed = app.add_subcommand("embed", "Embed a pair in orthogonal latin squares");
    embed->add_option("pair", embed_options.pair_path, "pair JSON file")->required();
    embed->add_flag("--basic", embed_options.basic, "product construction only (P without repeated symbols)");
    auto* exponent_option = embed->add_option("--exponent", exponent, "group exponent M for --basic")
                                ->check(CLI::Range(1u, 15u));
    embed->add_flag("--lazy", embed_options.lazy, "allow orders above the dense limit (manifest only)");
    embed->add_option("--out-a", embed_options.out_a, "grid file for the first square");
    embed->add_option("--out-b", embed_options.out_b, "grid file for the second square");
    embed->add_option("--manifest", embed_options.manifest, "manifest JSON file");
    embed->add_option("--dump-trades", embed_options.dump_trades, "trade audit JSON file");
    embed->add_option("--report", embed_options.report, "also write the report to this file");
    embed->add_flag("--json", embed_options.json, "report as JSON");
    embed->add_flag("--timings", embed_options.timings, "include stage timings in the report");

    VerifyEmbeddingOptions verify_options;
    auto* verify = app.add_subcommand("verify-embedding", "Check an embedding against its pair");
    verify->add_option("pair", verify_options.pair_path, "pair JSON file")->required();
    verify->add_option("square-a", verify_options.square_a, "grid file of the first square");
    verify->add_option("square-b", verify_options.square_b, "grid file of the second square");
    verify->add_option("--manifest", verify_options.manifest, "manifest JSON file");

    CellOptions cell_options;
    std::string square_name = "a";
    auto* cell = app.add_subcommand("cell", "Evaluate one cell of a manifest");
    cell->add_option("manifest", cell_options.manifest, "manifest JSON file")->required();
    cell->add_option("row", cell_options.row, "row index")->required();
    cell->add_option("col", cell_options.col, "column index")->required();
    cell->add_option("--square", square_name, "a or b")->check(CLI::IsMember({"a", "b"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    if (verify_pair->parsed()) {
        return cmd_verify_pair(verify_pair_path, out, err);
    }
    if (embed->parsed()) {
        if (exponent_option->count() > 0) {
            embed_options.exponent = exponent;
        }
        return cmd_embed(embed_options, out, err);
    }
    if (verify->parsed()) {
        return cmd_verify_embedding(verify_options, out, err);
    }
    cell_options.square = square_name[0];
    return cmd_cell(cell_options, out, err);
}

} // namespace olsembed::cli
