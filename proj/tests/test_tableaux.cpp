#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace supercrystal;

namespace {

Word W(const GradedAlphabet& a, const char* s) { return parse_word(a, s); }

std::string entries(const GradedAlphabet& a, const Tableau& t) { return format_word(a, t.entries()); }

/// Everything reachable from w by f operators alone.
std::set<Word> f_closure(const GradedAlphabet& a, const Word& w) {
    std::set<Word> seen{w};
    std::vector<Word> todo{w};
    while (!todo.empty()) {
        Word x = todo.back();
        todo.pop_back();
        for (const auto& r : a.roots())
            if (auto y = apply(a, Op::F, r, x); y && seen.insert(*y).second) todo.push_back(*y);
    }
    return seen;
}

}  // namespace

TEST(Shapes, SubsetsAndCompositions) {
    EXPECT_EQ(comp_from_subset({1}, 3), Composition({1, 2}));
    EXPECT_EQ(subset_from_comp({1, 1, 3, 4, 1, 2}), (std::set<int>{1, 2, 5, 9, 10}));
    EXPECT_EQ(comp_from_subset({}, 4), Composition({4}));
    for (int r = 1; r <= 6; ++r)
        for (const auto& c : compositions_of(r)) EXPECT_EQ(comp_from_subset(subset_from_comp(c), r), c);
    EXPECT_EQ(compositions_of(5).size(), 16u);
}

TEST(Shapes, Corners) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(corners(zigzag(n)), 2 * n - 1);
    EXPECT_EQ(corners({1}), 1);
    EXPECT_EQ(corners({1, 1, 3, 4, 1, 2}), 6);
}

TEST(Shapes, KiteValidation) {
    EXPECT_THROW((KiteShape{{1}, {1}, 2}.validate()), InputError);
    EXPECT_THROW((KiteShape{{1, 1, 1}, {}, 2}.validate()), InputError);
    EXPECT_NO_THROW((KiteShape{{2, 1}, {1}, 2}.validate()));
    EXPECT_NO_THROW((KiteShape{{}, {2}, 0}.validate()));
    EXPECT_THROW(Partition({1, 2}), InputError);
    EXPECT_THROW(Composition({1, 0}), InputError);
}

TEST(Shapes, RibbonGeometry) {
    Diagram d = Diagram::of(Shape::ribbon({1, 1, 3, 4, 1, 2}));
    std::vector<std::pair<int, int>> expect{{1, 1}, {2, 1}, {3, 1}, {3, 2}, {3, 3}, {4, 3},
                                            {4, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 6}, {6, 7}};
    EXPECT_EQ(d.cells, expect);
    EXPECT_EQ(oracle::ribbon_cells({1, 1, 3, 4, 1, 2}).rc, expect);
}

TEST(Tableaux, HighestRibbonFromFigure) {
    auto a = parse_alphabet("half:3");
    auto h = highest_tableau(Shape::ribbon({1, 1, 3, 4, 1, 2}), a);
    EXPECT_EQ(entries(a, h), "1/2 1/2 1/2 1 1 3/2 2 2 2 5/2 5/2 3");
    EXPECT_TRUE(validate(a, h).ok);
    EXPECT_TRUE(is_highest(a, h.reading_word()));
}

TEST(Tableaux, HighestYoung) {
    auto a = parse_alphabet("mn:2,1");
    auto h = highest_tableau(Shape::young({2, 1}), a);
    Weight w = weight_of(h.reading_word());
    EXPECT_EQ(w, Weight::unit(a.parse_letter("-2")) + Weight::unit(a.parse_letter("-2")) +
                     Weight::unit(a.parse_letter("-1")));
    auto b = parse_alphabet("mn:2,2");
    // lambda = (3,2,2,1): mu = transpose of (2,1) = (2,1)
    auto h2 = highest_tableau(Shape::young({3, 2, 2, 1}), b);
    EXPECT_EQ(entries(b, h2), "-2 -2 -2 -1 -1 1 2 1");
    EXPECT_TRUE(is_highest(b, h2.reading_word()));
    EXPECT_EQ(entries(parse_alphabet("half:1"), highest_tableau(Shape::ribbon({1}), parse_alphabet("half:1"))),
              "1/2");
}

TEST(Tableaux, HighestInadmissible) {
    EXPECT_THROW(highest_tableau(Shape::young({2, 2}), parse_alphabet("mn:1,1")), InputError);
    // (1,2,1) has 4 corners; N^{<=1} allows 2
    EXPECT_THROW(highest_tableau(Shape::ribbon({1, 2, 1}), parse_alphabet("half:1")), InputError);
}

TEST(Tableaux, ReadingWords) {
    auto a = parse_alphabet("half:3");
    EXPECT_EQ(format_word(a, highest_tableau(Shape::ribbon({2}), a).reading_word()), "1 1/2");
    auto p = Tableau(Shape::ribbon({1, 2, 3}), W(a, "1/2 1 1 2 2 5/2"));
    EXPECT_EQ(format_word(a, p.reading_word()), "1/2 1 1 5/2 2 2");
    EXPECT_EQ(format_word(a, Tableau(Shape::ribbon({1}), W(a, "3")).reading_word()), "3");
    EXPECT_EQ(Tableau::from_reading(Shape::ribbon({1, 2, 3}), p.reading_word()), p);
}

TEST(Tableaux, Validate) {
    auto a = parse_alphabet("half:2");
    auto v = validate(a, Tableau(Shape::ribbon({2}), W(a, "1/2 1/2")));
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.row, 1);
    v = validate(a, Tableau(Shape::ribbon({1, 1}), W(a, "1 1")));
    EXPECT_FALSE(v.ok);
    EXPECT_FALSE(v.violation.empty());
    EXPECT_TRUE(validate(a, Tableau(Shape::ribbon({1, 1}), W(a, "1/2 1/2"))).ok);
    EXPECT_FALSE(validate(a, Tableau(Shape::ribbon({2}), W(a, "1 1/2"))).ok);
}

TEST(Tableaux, ValidateKiteJoint) {
    auto a = parse_alphabet("mixed:1,1");
    Shape k = Shape::kite({{1}, {1}, 1});
    // joint 1/2 odd: body entries weakly below
    EXPECT_TRUE(validate(a, Tableau(k, W(a, "-1 1/2"))).ok);
    // joint 1 even: body entries strictly below
    EXPECT_TRUE(validate(a, Tableau(k, W(a, "1/2 1"))).ok);
    EXPECT_FALSE(validate(a, Tableau(k, W(a, "1 1"))).ok);
}

TEST(Tableaux, EnumerateSmall) {
    auto a = parse_alphabet("half:1");
    auto t = enumerate(Shape::ribbon({2}), a);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(entries(a, t[0]), "1/2 1");
    EXPECT_EQ(entries(a, t[1]), "1 1");
    EXPECT_EQ(enumerate(Shape::ribbon({2, 1}), parse_alphabet("half:2")).size(), 8u);
    EXPECT_TRUE(enumerate(Shape::young({2, 2}), parse_alphabet("mn:1,1")).empty());
}

TEST(Tableaux, EnumerationOrderIsByReadingWord) {
    auto a = parse_alphabet("half:2");
    auto ws = enumerate_words(Shape::ribbon({1, 2}), a);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
}

TEST(Tableaux, Operators) {
    auto a = parse_alphabet("half:2");
    auto h = highest_tableau(Shape::ribbon({2, 1}), a);
    for (const auto& r : a.roots()) {
        EXPECT_FALSE(tableau_apply(a, Op::E, r, h));
        auto f = tableau_apply(a, Op::F, r, h);
        ASSERT_TRUE(f);
        EXPECT_TRUE(validate(a, *f).ok);
    }
    auto b = parse_alphabet("half:1");
    auto one = tableau_apply(b, Op::F, b.roots()[0], highest_tableau(Shape::ribbon({1}), b));
    ASSERT_TRUE(one);
    EXPECT_EQ(entries(b, *one), "1");
}

TEST(Tableaux, StandardYoung) {
    auto st = standard_tableaux({2, 1});
    ASSERT_EQ(st.size(), 2u);
    std::set<Composition> alphas{st[0].descent_composition, st[1].descent_composition};
    EXPECT_EQ(alphas, (std::set<Composition>{{2, 1}, {1, 2}}));
    ASSERT_EQ(standard_tableaux({1}).size(), 1u);
    EXPECT_EQ(standard_tableaux({1})[0].descent_composition, Composition({1}));
    ASSERT_EQ(standard_tableaux({3}).size(), 1u);
    EXPECT_EQ(standard_tableaux({3})[0].descent_composition, Composition({3}));
    EXPECT_EQ(standard_tableaux({3, 2}).size(), 5u);
    EXPECT_EQ(standard_tableaux({3, 2}, {1}).size(), 5u);
    EXPECT_EQ(standard_tableaux({2, 2}, {2}).size(), 1u);
}

TEST(Tableaux, StandardRibbon) {
    auto col = standard_ribbon_tableaux({1, 1, 1});
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(col[0].numbers, (std::vector<int>{1, 2, 3}));
    auto row = standard_ribbon_tableaux({2});
    ASSERT_EQ(row.size(), 1u);
    EXPECT_EQ(row[0].numbers, (std::vector<int>{2, 1}));
    StandardRibbonTableau q{{1, 2, 3}, {2, 3, 1, 6, 5, 4}};
    EXPECT_TRUE(is_standard_ribbon(q));
    auto all = standard_ribbon_tableaux({1, 2, 3});
    EXPECT_NE(std::find(all.begin(), all.end(), q), all.end());
}

// ---------------------------------------------------------------------------

TEST(TableauxProperty, EnumerationMatchesOracle) {
    for (const char* s : {"half:2", "half:3/2", "mn:2,1", "mn:1,2"}) {
        auto a = parse_alphabet(s);
        for (int r = 1; r <= 4; ++r) {
            for (const auto& c : compositions_of(r))
                EXPECT_EQ(enumerate_words(Shape::ribbon(c), a), oracle::fillings(a, oracle::ribbon_cells(c)))
                    << s << " " << c.to_string();
            for (const auto& l : partitions_of(r))
                EXPECT_EQ(enumerate_words(Shape::young(l), a), oracle::fillings(a, oracle::young_cells(l)))
                    << s << " " << l.to_string();
        }
    }
    for (int m = 0; m <= 2; ++m) {
        auto a = build_alphabet(MixedTruncSpec{m, 3});
        for (int r = 1; r <= 4; ++r)
            for (const auto& k : kite_shapes_of(m, r))
                EXPECT_EQ(enumerate_words(Shape::kite(k), a), oracle::fillings(a, oracle::kite_cells(k)))
                    << k.to_string();
    }
}

TEST(TableauxProperty, ClosedUnderOperators) {
    auto a = parse_alphabet("mixed:1,3/2");
    for (int r = 1; r <= 4; ++r)
        for (const auto& k : kite_shapes_of(1, r))
            for (const auto& t : enumerate(Shape::kite(k), a))
                for (const auto& rt : a.roots())
                    for (Op x : {Op::E, Op::F})
                        if (auto u = tableau_apply(a, x, rt, t)) EXPECT_TRUE(validate(a, *u).ok);
}

TEST(TableauxProperty, RibbonCrystalsConnected) {
    auto a = parse_alphabet("half:3");
    for (int r = 1; r <= 5; ++r)
        for (const auto& c : compositions_of(r)) {
            auto ws = enumerate_words(Shape::ribbon(c), a);
            auto comps = oracle::components(a, ws);
            ASSERT_EQ(comps.size(), 1u) << c.to_string();
            Word h = highest_tableau(Shape::ribbon(c), a).reading_word();
            int top = 0;
            for (const auto& w : ws) top += oracle::is_highest(a, w);
            EXPECT_EQ(top, 1);
            EXPECT_TRUE(oracle::is_highest(a, h));
            for (const auto& w : ws) EXPECT_TRUE(weight_order_geq(weight_of(h), weight_of(w), a));
        }
}

TEST(TableauxProperty, KiteCrystalsConnected) {
    for (int m = 1; m <= 2; ++m) {
        auto a = build_alphabet(MixedTruncSpec{m, 4});
        for (int r = 1; r <= 4; ++r)
            for (const auto& k : kite_shapes_of(m, r)) {
                auto ws = enumerate_words(Shape::kite(k), a);
                if (ws.empty()) continue;
                ASSERT_EQ(oracle::components(a, ws).size(), 1u) << k.to_string();
                int top = 0;
                for (const auto& w : ws) top += oracle::is_highest(a, w);
                EXPECT_EQ(top, 1) << k.to_string();
                EXPECT_TRUE(oracle::is_highest(a, highest_word(k, a)));
            }
    }
}

TEST(TableauxProperty, YoungCrystalsOverMn) {
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            auto a = build_alphabet(MnSpec{m, n});
            for (int r = 1; r <= 5; ++r)
                for (const auto& l : partitions_of(r)) {
                    auto ws = enumerate_words(Shape::young(l), a);
                    ASSERT_EQ(ws.empty(), !l.is_hook(m, n));
                    if (ws.empty()) continue;
                    auto comps = decompose(a, ws);
                    ASSERT_EQ(comps.size(), 1u) << a.spec() << " " << l.to_string();
                    Word h = highest_tableau(Shape::young(l), a).reading_word();
                    EXPECT_TRUE(is_highest(a, h));
                    // with at most one odd letter every element lies below H by f operators
                    // alone; with two or more that fails (see FOperatorsAloneFallShort)
                    if (n <= 1) EXPECT_EQ(f_closure(a, h).size(), ws.size()) << a.spec() << " " << l.to_string();
                }
        }
}

TEST(TableauxProperty, FakeHighestWeights) {
    // elements killed by every e that are not H_lambda, over |lambda| <= 6
    auto count = [](const GradedAlphabet& a) {
        int fake = 0;
        for (int r = 1; r <= 6; ++r)
            for (const auto& l : partitions_of(r)) {
                auto ws = enumerate_words(Shape::young(l), a);
                if (ws.empty()) continue;
                Word h = highest_tableau(Shape::young(l), a).reading_word();
                for (const auto& w : ws) fake += w != h && is_highest(a, w);
            }
        return fake;
    };
    // none over [2|1]; the search is recorded rather than asserted to succeed
    auto a21 = parse_alphabet("mn:2,1");
    EXPECT_EQ(count(a21), 0);
    EXPECT_TRUE(enumerate(Shape::young({2, 2}), a21).size() == 4u);
    RecordProperty("fake_highest_mn_2_1", count(a21));

    // over [1|2] the tableau of shape (2,1) with rows (-1 2),(1) is one
    auto a12 = parse_alphabet("mn:1,2");
    Word t = W(a12, "2 -1 1");
    EXPECT_TRUE(validate(a12, Tableau::from_reading(Shape::young({2, 1}), t)).ok);
    EXPECT_TRUE(is_highest(a12, t));
    EXPECT_TRUE(oracle::is_highest(a12, t));
    EXPECT_NE(t, highest_tableau(Shape::young({2, 1}), a12).reading_word());
    EXPECT_EQ(count(a12), 13);
    EXPECT_EQ(count(parse_alphabet("mn:2,2")), 11);
}

TEST(TableauxProperty, ColumnReadingGivesSameCrystal) {
    for (const char* s : {"mn:2,1", "mn:1,2", "half:2", "mixed:1,1"}) {
        auto a = parse_alphabet(s);
        for (int r = 1; r <= 4; ++r)
            for (const auto& l : partitions_of(r)) {
                Shape sh = Shape::young(l);
                for (const auto& t : enumerate(sh, a)) {
                    Word row = t.reading_word(), col = column_reading_word(t);
                    EXPECT_EQ(from_column_reading(sh, col), t);
                    EXPECT_TRUE(equivalent(a, row, col)) << s << " " << format_word(a, row);
                    for (const auto& rt : a.roots())
                        for (Op x : {Op::E, Op::F}) {
                            auto u = apply(a, x, rt, row);
                            auto v = apply(a, x, rt, col);
                            ASSERT_EQ(u.has_value(), v.has_value());
                            if (u) EXPECT_EQ(Tableau::from_reading(sh, *u), from_column_reading(sh, *v));
                        }
                }
            }
    }
}

TEST(TableauxProperty, FOperatorsAloneFallShort) {
    auto a = build_alphabet(MnSpec{1, 2});
    auto ws = enumerate_words(Shape::young({2, 1}), a);
    Word h = highest_tableau(Shape::young({2, 1}), a).reading_word();
    EXPECT_EQ(ws.size(), 8u);
    EXPECT_EQ(f_closure(a, h).size(), 6u);
    EXPECT_EQ(oracle::component(a, h).size(), 8u);
}
