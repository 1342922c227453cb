#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "olsembed/io.hpp"
#include "oracles.hpp"

using namespace olsembed;

TEST(ParseGrid, Figure1) {
    const auto p = parse_grid(fixtures::text(fixtures::kFigure1P));
    EXPECT_EQ(p.order(), 4u);
    EXPECT_EQ(p.volume(), 11u);
    EXPECT_EQ(gen::entries(p.triples()), fixtures::from_rows(fixtures::kFigure1P));
}

TEST(ParseGrid, OrderOne) {
    const auto p = parse_grid("0");
    EXPECT_EQ(p.order(), 1u);
    EXPECT_EQ(std::vector<Triple>(p.triples().begin(), p.triples().end()), (std::vector<Triple>{{0, 0, 0}}));
}

TEST(ParseGrid, RoundTripToCanonicalForm) {
    const std::string messy = "\n 0   .\t \r\n\n1  0\n";
    const auto p = parse_grid(messy);
    EXPECT_EQ(emit_grid(p), "0 .\n1 0\n");
    EXPECT_EQ(parse_grid(emit_grid(p)), p);
    const auto fig = fixtures::text(fixtures::kFigure1P);
    EXPECT_EQ(emit_grid(parse_grid(fig)), fig);
}

TEST(ParseGrid, Diagnostics) {
    try {
        parse_grid("0 1\n1\n");
        FAIL() << "ragged grid accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    try {
        parse_grid("0 x\n1 0\n");
        FAIL() << "bad token accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 3u);
    }
    try {
        parse_grid("0 .\n0 1\n");
        FAIL() << "column repeat accepted";
    } catch (const NotPartialLatin& e) {
        EXPECT_NE(std::string(e.what()).find("line 2, column 1"), std::string::npos);
    }
    EXPECT_THROW(parse_grid("0 0\n. .\n"), NotPartialLatin);
    EXPECT_THROW(parse_grid("2 .\n. .\n"), NotPartialLatin);
    EXPECT_THROW(parse_grid(". .\n. .\n"), EmptySquare);
    EXPECT_THROW(parse_grid("\n\n"), ParseError);
}

TEST(ParseLatinGrid, RequiresFullLatinSquare) {
    const auto l = parse_latin_grid("0 1\n1 0\n");
    EXPECT_EQ(l, LatinSquare::xor_square(1));
    EXPECT_THROW(parse_latin_grid("0 .\n1 0\n"), ParseError);
    EXPECT_THROW(parse_latin_grid("0 1\n0 1\n"), InvalidInput);
    EXPECT_EQ(emit_grid(l), "0 1\n1 0\n");
}

TEST(ParseGridRow, TokensAndErrors) {
    EXPECT_EQ(parse_grid_row("3 1  2", 1), (std::vector<Symbol>{3, 1, 2}));
    EXPECT_THROW(parse_grid_row("3 . 2", 1), ParseError);
    EXPECT_THROW(parse_grid_row("3 -1", 1), ParseError);
}

TEST(PairDocument, RoundTrip) {
    const auto p = gen::square(4, fixtures::from_rows(fixtures::kFigure1P));
    const auto q = gen::square(4, fixtures::from_rows(fixtures::kFigure1Q));
    const auto text = emit_pair_document(p, q);
    const auto doc = parse_pair_document(text);
    EXPECT_EQ(doc.order, 4u);
    EXPECT_EQ(doc.p, std::vector<Triple>(p.triples().begin(), p.triples().end()));
    EXPECT_EQ(doc.q, std::vector<Triple>(q.triples().begin(), q.triples().end()));
    EXPECT_EQ(emit_pair_document(PartialLatinSquare(4, doc.p), PartialLatinSquare(4, doc.q)), text);
}

TEST(PairDocument, Errors) {
    EXPECT_THROW(parse_pair_document("{"), ParseError);
    EXPECT_THROW(parse_pair_document(R"({"P": [], "Q": []})"), ParseError);
    EXPECT_THROW(parse_pair_document(R"({"order": 0, "P": [], "Q": []})"), ParseError);
    EXPECT_THROW(parse_pair_document(R"({"order": 2, "P": [[0, 0]], "Q": []})"), ParseError);
    EXPECT_THROW(parse_pair_document(R"({"order": 2, "P": [[0, 0, -1]], "Q": []})"), ParseError);
    EXPECT_THROW(parse_pair_document(R"({"order": 2, "P": [[0, 0, "a"]], "Q": []})"), ParseError);
}

TEST(Manifest, RoundTripReproducesEveryCell) {
    const auto p = gen::square(4, fixtures::from_rows(fixtures::kFigure1P));
    const auto q = gen::square(4, fixtures::from_rows(fixtures::kFigure1Q));
    const auto e = embed_pair(p, q);
    const auto text = emit_manifest(e);
    const auto loaded = load_manifest(text);
    EXPECT_EQ(emit_manifest(loaded), text);
    EXPECT_EQ(loaded.report().to_text(false), e.report().to_text(false));
    for (Index r = 0; r < e.order(); ++r) {
        for (Index c = 0; c < e.order(); ++c) {
            ASSERT_EQ(loaded.cell_a(r, c), e.cell_a(r, c));
            ASSERT_EQ(loaded.cell_b(r, c), e.cell_b(r, c));
        }
    }
}

TEST(Manifest, RejectsTampering) {
    const auto p = gen::square(4, fixtures::from_rows(fixtures::kFigure1P));
    const auto q = gen::square(4, fixtures::from_rows(fixtures::kFigure1Q));
    const auto text = emit_manifest(embed_pair(p, q));
    EXPECT_THROW(load_manifest("[]"), ParseError);
    auto wrong_format = text;
    wrong_format.replace(wrong_format.find("olsembed-manifest"), 8, "otherfmt");
    EXPECT_THROW(load_manifest(wrong_format), ParseError);
    // Swapping one trade's quasigroup entries makes it disagree with B.
    auto doc = text;
    const auto pos = doc.find("\"trades\":[[");
    ASSERT_NE(pos, std::string::npos);
    const auto end = doc.find(']', pos);
    auto first = doc.substr(pos + 11, end - pos - 11);
    auto comma = first.rfind(',');
    auto comma2 = first.rfind(',', comma - 1);
    const auto a = first.substr(comma2 + 1, comma - comma2 - 1);
    const auto b = first.substr(comma + 1);
    const auto swapped = first.substr(0, comma2 + 1) + b + "," + a;
    doc.replace(pos + 11, end - pos - 11, swapped);
    EXPECT_THROW(load_manifest(doc), InvalidInput);
}

TEST(TradeAudit, SevenRecordsOfEightCells) {
    const auto p = gen::square(4, fixtures::from_rows(fixtures::kFigure1P));
    const auto q = gen::square(4, fixtures::from_rows(fixtures::kFigure1Q));
    const auto e = embed_pair(p, q);
    const auto records = e.audit_records();
    ASSERT_EQ(records.size(), 7u);
    for (const auto& record : records) {
        for (const auto& cell : record.cells) {
            EXPECT_EQ(e.cell_a(cell.row, cell.col), cell.after);
            EXPECT_NE(cell.before, cell.after);
        }
    }
    const auto audit = emit_trade_audit(e);
    std::size_t count = 0;
    for (auto pos = audit.find("\"trade\""); pos != std::string::npos; pos = audit.find("\"trade\"", pos + 1)) {
        ++count;
    }
    EXPECT_EQ(count, 7u);
}

TEST(ReportJson, OmitsTimingsUnlessAsked) {
    const PartialLatinSquare one(1, {{0, 0, 0}});
    const auto e = embed_pair(one, one);
    const auto plain = emit_report_json(e.report(), false);
    EXPECT_EQ(plain.find("timings"), std::string::npos);
    EXPECT_NE(plain.find("\"order\": 16"), std::string::npos);
    EXPECT_NE(emit_report_json(e.report(), true).find("timings"), std::string::npos);
}
