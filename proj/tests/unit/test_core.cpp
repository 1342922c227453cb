#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "olsembed/core.hpp"
#include "olsembed/product.hpp"
#include "oracles.hpp"

using namespace olsembed;

namespace {

PartialLatinSquare figure1_p() { return gen::square(4, fixtures::from_rows(fixtures::kFigure1P)); }
PartialLatinSquare figure1_q() { return gen::square(4, fixtures::from_rows(fixtures::kFigure1Q)); }

} // namespace

TEST(Group, XorExamples) {
    EXPECT_EQ(xor_mul(5, 5), 0u);
    EXPECT_EQ(xor_mul(0, 7), 7u);
    EXPECT_EQ(xor_mul(3, 5), 6u);
}

TEST(Group, AbelianGroupAxiomsExhaustive) {
    for (GroupElement x = 0; x < 256; ++x) {
        EXPECT_EQ(xor_mul(x, x), 0u);
        EXPECT_EQ(xor_mul(x, 0), x);
        for (GroupElement y = 0; y < 256; ++y) {
            ASSERT_EQ(xor_mul(x, y), xor_mul(y, x));
        }
    }
    for (GroupElement x = 0; x < 32; ++x) {
        for (GroupElement y = 0; y < 32; ++y) {
            for (GroupElement z = 0; z < 32; ++z) {
                ASSERT_EQ(xor_mul(xor_mul(x, y), z), xor_mul(x, xor_mul(y, z)));
            }
        }
    }
}

TEST(EncodePair, Examples) {
    EXPECT_EQ(encode_pair({0, 5}, 3), 5u);
    EXPECT_EQ(encode_pair({2, 3}, 2), 11u);
    EXPECT_EQ(decode_pair(11, 2), (PairIndex{2, 3}));
    EXPECT_THROW(encode_pair({4, 0}, 2), InvalidInput);
    EXPECT_THROW(encode_pair({0, 4}, 2), InvalidInput);
    EXPECT_THROW(decode_pair(16, 2), InvalidInput);
}

TEST(EncodePair, BijectionExhaustive) {
    for (unsigned m = 1; m <= 6; ++m) {
        const Index side = Index{1} << m;
        std::vector<bool> hit(side * side);
        for (GroupElement p = 0; p < side; ++p) {
            for (GroupElement r = 0; r < side; ++r) {
                const auto v = encode_pair({p, r}, m);
                ASSERT_LT(v, side * side);
                ASSERT_FALSE(hit[v]);
                hit[v] = true;
                ASSERT_EQ(decode_pair(v, m), (PairIndex{p, r}));
            }
        }
    }
}

TEST(PartialLatin, Examples) {
    const auto p = fixtures::from_rows(fixtures::kFigure1P);
    EXPECT_TRUE(is_partial_latin(4, gen::triples(p)));
    const std::vector<Triple> same_cell = {{0, 0, 0}, {0, 0, 1}};
    EXPECT_FALSE(is_partial_latin(2, same_cell));
    const std::vector<Triple> row_repeat = {{0, 0, 0}, {0, 1, 0}};
    EXPECT_FALSE(is_partial_latin(2, row_repeat));
    const std::vector<Triple> col_repeat = {{0, 0, 1}, {1, 0, 1}};
    EXPECT_FALSE(is_partial_latin(2, col_repeat));
    const std::vector<Triple> out_of_range = {{0, 0, 2}};
    EXPECT_FALSE(is_partial_latin(2, out_of_range));
}

TEST(PartialLatin, VerdictNamesViolations) {
    const std::vector<Triple> bad = {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}};
    const auto verdict = check_partial_latin(2, bad);
    EXPECT_FALSE(verdict.ok());
    EXPECT_EQ(verdict.total(), 2u);
    EXPECT_EQ(verdict.violations()[0].kind, ViolationKind::RowRepeat);
}

TEST(PartialLatin, EmptyRejectedDistinctly) {
    EXPECT_THROW(PartialLatinSquare(3, {}), EmptySquare);
    EXPECT_THROW(PartialLatinSquare(2, {{0, 0, 0}, {0, 1, 0}}), InvalidInput);
}

TEST(PartialLatin, StoresSortedTriples) {
    PartialLatinSquare p(3, {{2, 1, 0}, {0, 2, 1}, {0, 0, 0}});
    const auto t = p.triples();
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0], (Triple{0, 0, 0}));
    EXPECT_EQ(t[1], (Triple{0, 2, 1}));
    EXPECT_EQ(t[2], (Triple{2, 1, 0}));
    EXPECT_EQ(p.at(0, 2), 1u);
    EXPECT_FALSE(p.at(1, 1).has_value());
    EXPECT_EQ(p.distinct_symbols(), 2u);
}

TEST(PartialLatin, AgreesWithOracleOnRandomLists) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto n = 1 + gen::below(rng, 5);
        const auto k = 1 + gen::below(rng, 6);
        std::vector<oracle::Entry> entries;
        for (std::uint32_t i = 0; i < k; ++i) {
            entries.emplace_back(gen::below(rng, n), gen::below(rng, n), gen::below(rng, n));
        }
        // Exact duplicates are the same triple in a set; drop them.
        std::sort(entries.begin(), entries.end());
        entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
        ASSERT_EQ(is_partial_latin(n, gen::triples(entries)), oracle::partial_latin(n, entries));
    }
}

TEST(Orthogonality, Figure1PairIsOrthogonal) { EXPECT_TRUE(are_orthogonal_partial(figure1_p(), figure1_q())); }

TEST(Orthogonality, SquareWithRepeatedSymbolIsNotSelfOrthogonal) {
    const auto p = figure1_p();
    EXPECT_FALSE(are_orthogonal_partial(p, p));
}

TEST(Orthogonality, TamperedFigure1Fails) {
    auto q = fixtures::from_rows(fixtures::kFigure1Q);
    for (auto& [r, c, s] : q) {
        if (r == 0 && c == 1) {
            s = 1;
        }
    }
    const auto p = fixtures::from_rows(fixtures::kFigure1P);
    EXPECT_FALSE(oracle::orthogonal_partial(p, q) && oracle::partial_latin(4, q));
    EXPECT_FALSE(check_orthogonal_partial(4, gen::triples(p), gen::triples(q)).ok());
}

TEST(Orthogonality, CellSetMismatchIsNamed) {
    const std::vector<Triple> p = {{0, 0, 0}, {1, 1, 0}};
    const std::vector<Triple> q = {{0, 0, 0}, {1, 0, 1}};
    const auto verdict = check_orthogonal_partial(2, p, q);
    ASSERT_FALSE(verdict.ok());
    EXPECT_NE(verdict.summary().find("cell-set mismatch"), std::string::npos);
}

TEST(Orthogonality, PartialAgreesWithOracle) {
    gen::Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = 2 + gen::below(rng, 4);
        auto pair = gen::random_orthogonal_pair(rng, n, 0.5);
        ASSERT_TRUE(oracle::orthogonal_partial(pair.p, pair.q));
        ASSERT_TRUE(are_orthogonal_partial(gen::square(n, pair.p), gen::square(n, pair.q)));
        // Perturb one Q symbol; both checks must still agree.
        auto q = pair.q;
        auto& [r, c, s] = q[gen::below(rng, static_cast<std::uint32_t>(q.size()))];
        s = gen::below(rng, n);
        const bool expected = oracle::partial_latin(n, q) && oracle::orthogonal_partial(pair.p, q);
        ASSERT_EQ(check_orthogonal_partial(n, gen::triples(pair.p), gen::triples(q)).ok(), expected);
    }
}

TEST(Orthogonality, OrderOnePairAndSelfPairs) {
    const auto one = LatinSquare::from_rows({{0}});
    EXPECT_TRUE(are_orthogonal_latin(one, one));
    gen::Rng rng(13);
    for (Index t = 2; t <= 6; ++t) {
        const LatinSquare l(t, gen::flat(gen::random_latin(rng, t)));
        EXPECT_FALSE(are_orthogonal_latin(l, l));
    }
}

TEST(Orthogonality, ProductPairAtM1) {
    ProductSquarePair pair(SymbolArray(1, {0, 1, 2, 3}), LatinSquare::xor_square(1));
    const auto [a, b] = pair.materialize();
    EXPECT_TRUE(are_orthogonal_latin(a, b));
    EXPECT_TRUE(oracle::orthogonal(gen::grid(a), gen::grid(b)));
}

TEST(Orthogonality, LatinAndPartialChecksAgreeOnFullSquares) {
    gen::Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const Index t = 2 + gen::below(rng, 4);
        const LatinSquare a(t, gen::flat(gen::random_latin(rng, t)));
        const LatinSquare b(t, gen::flat(gen::random_latin(rng, t)));
        const auto ta = a.triples();
        const auto tb = b.triples();
        ASSERT_TRUE(is_partial_latin(t, ta));
        ASSERT_EQ(are_orthogonal_latin(a, b), check_orthogonal_partial(t, ta, tb).ok());
        ASSERT_EQ(are_orthogonal_latin(a, b), oracle::orthogonal(gen::grid(a), gen::grid(b)));
    }
}

TEST(Latin, RejectsNonLatinGrids) {
    EXPECT_THROW(LatinSquare(2, {0, 1, 0, 1}), InvalidInput);
    EXPECT_THROW(LatinSquare(2, {0, 0, 1, 1}), InvalidInput);
    EXPECT_THROW(LatinSquare(2, {0, 1, 1}), InvalidInput);
    EXPECT_THROW(LatinSquare(2, {0, 2, 2, 0}), InvalidInput);
    EXPECT_NO_THROW(LatinSquare(2, {1, 0, 0, 1}));
}

TEST(Latin, CheckAgreesWithOracle) {
    gen::Rng rng(15);
    for (int trial = 0; trial < 1000; ++trial) {
        const Index t = 1 + gen::below(rng, 5);
        auto g = gen::random_latin(rng, t);
        if (gen::below(rng, 2)) {
            g[gen::below(rng, t)][gen::below(rng, t)] = gen::below(rng, t);
        }
        ASSERT_EQ(check_latin(t, gen::flat(g)).ok(), oracle::is_latin(g));
    }
}

TEST(Transversal, Examples) {
    const auto x = LatinSquare::xor_square(1);
    const std::vector<Triple> diagonal = {{0, 0, 0}, {1, 1, 0}};
    EXPECT_FALSE(is_transversal(x, diagonal));
    const std::vector<Triple> wrong_cell = {{0, 0, 0}, {1, 1, 1}};
    EXPECT_THROW(is_transversal(x, wrong_cell), InvalidInput);
    const std::vector<Triple> anti = {{0, 1, 1}, {1, 0, 1}};
    EXPECT_FALSE(is_transversal(x, anti));
    const auto c3 = LatinSquare::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    const std::vector<Triple> anti3 = {{0, 2, 2}, {1, 1, 2}, {2, 0, 2}};
    EXPECT_FALSE(is_transversal(c3, anti3));
    const std::vector<Triple> diag3 = {{0, 0, 0}, {1, 1, 2}, {2, 2, 1}};
    EXPECT_TRUE(is_transversal(c3, diag3));
}

TEST(Contains, Examples) {
    const auto l = LatinSquare::from_rows({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    const PartialLatinSquare p(4, {{0, 0, 0}, {1, 2, 3}, {3, 3, 0}});
    EXPECT_TRUE(contains(p, l));
    const PartialLatinSquare altered(4, {{0, 0, 0}, {1, 2, 2}, {3, 3, 0}});
    EXPECT_FALSE(contains(altered, l));
    const PartialLatinSquare small(2, {{0, 0, 0}, {1, 1, 0}});
    const std::vector<Index> rows = {2, 3};
    const std::vector<Index> cols = {2, 3};
    const std::vector<Index> syms = {0, 1};
    EXPECT_TRUE(contains(small, l, {rows, cols, syms}));
    const std::vector<Index> wrong_cols = {0, 1};
    EXPECT_FALSE(contains(small, l, {rows, wrong_cols, syms}));
    const std::vector<Index> not_injective = {2, 2};
    EXPECT_THROW(contains(small, l, {not_injective, cols, syms}), InvalidInput);
}

TEST(Isotopy, IdentityAndInvolution) {
    const auto x = LatinSquare::xor_square(2);
    const auto id = identity_permutation(4);
    EXPECT_EQ(apply_isotopy(x, id, id, id), x);
    const std::vector<Index> swap = {1, 0, 2, 3};
    EXPECT_EQ(apply_isotopy(apply_isotopy(x, swap, id, id), swap, id, id), x);
    const std::vector<Index> reverse = {3, 2, 1, 0};
    const auto r = apply_isotopy(x, reverse, id, id);
    EXPECT_TRUE(oracle::is_latin(gen::grid(r)));
    EXPECT_EQ(r(3, 0), x(0, 0));
}

TEST(Isotopy, PreservesLatinRandomized) {
    gen::Rng rng(16);
    for (int trial = 0; trial < 500; ++trial) {
        const Index t = 1 + gen::below(rng, 6);
        const LatinSquare l(t, gen::flat(gen::random_latin(rng, t)));
        const auto rp = gen::permutation(rng, t);
        const auto cp = gen::permutation(rng, t);
        const auto sp = gen::permutation(rng, t);
        const auto out = apply_isotopy(l, rp, cp, sp);
        ASSERT_TRUE(oracle::is_latin(gen::grid(out)));
        for (Index r = 0; r < t; ++r) {
            for (Index c = 0; c < t; ++c) {
                ASSERT_EQ(out(rp[r], cp[c]), sp[l(r, c)]);
            }
        }
    }
}

TEST(Isotopy, PreservesLatinExhaustiveOrder3RowPermutations) {
    const auto c3 = LatinSquare::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    std::vector<Index> p = {0, 1, 2};
    do {
        std::vector<Index> q = {0, 1, 2};
        do {
            EXPECT_TRUE(oracle::is_latin(gen::grid(apply_isotopy(c3, p, q, p))));
        } while (std::next_permutation(q.begin(), q.end()));
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST(Permutations, InverseAndValidation) {
    const std::vector<Index> p = {2, 0, 1};
    EXPECT_TRUE(is_permutation(p));
    EXPECT_EQ(inverse_permutation(p), (std::vector<Index>{1, 2, 0}));
    const std::vector<Index> bad = {0, 0, 1};
    EXPECT_FALSE(is_permutation(bad));
    EXPECT_THROW(inverse_permutation(bad), InvalidInput);
}
