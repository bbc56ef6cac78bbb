#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rdes/errors.hpp"
#include "rdes/language.hpp"
#include "rdes/model_io.hpp"

#include "support/oracle.hpp"
#include "support/random_models.hpp"
#include "support/test_util.hpp"

using namespace rdes;
using namespace rdes::test;

namespace {

ExtendedWord example_word() {
    return {{in_ev({"x1"}), InternalEvent("s1"), out_ev({"y1"})},
            {in_ev({"x1"}), InternalEvent("su"), out_ev({"y2"})}};
}

} // namespace

TEST_CASE("projections extract components") {
    ExtendedWord w = example_word();

    IoWord xy = project_xy(w);
    REQUIRE(xy.size() == 2);
    CHECK(xy[0] == IoStep{in_ev({"x1"}), out_ev({"y1"})});
    CHECK(xy[1] == IoStep{in_ev({"x1"}), out_ev({"y2"})});

    XpWord xp = project_xp(w);
    CHECK(xp.size() == 2);
    CHECK(xp[1].event == InternalEvent("su"));

    ExtendedWord two_inputs = {
        {in_ev({"x1"}), InternalEvent("s1"), out_ev({"y1"})},
        {in_ev({"x2"}), InternalEvent("s2"), out_ev({"y1"})}};
    CHECK(project_x(two_inputs) ==
          std::vector<InputEvent>{in_ev({"x1"}), in_ev({"x2"})});

    SUBCASE("empty word projects to empty everywhere") {
        ExtendedWord empty;
        CHECK(project_xy(empty).empty());
        CHECK(project_xp(empty).empty());
        CHECK(project_x(empty).empty());
        CHECK(project_y(empty).empty());
    }

    SUBCASE("silent components vanish from concatenating projections") {
        ExtendedWord with_stutter = {
            {in_ev({"x1"}), InternalEvent::stutter(), OutputEvent::silent()}};
        CHECK(project_x(with_stutter) == std::vector<InputEvent>{in_ev({"x1"})});
        CHECK(project_y(with_stutter).empty());
        CHECK(project_p(with_stutter).empty());
        // but they keep their positions in the pairwise projections
        CHECK(project_xy(with_stutter).size() == 1);
    }
}

TEST_CASE("word serialization") {
    CHECK(to_string(example_word()) == "({x1}|s1|{y1})({x1}|su|{y2})");
    CHECK(to_string(ExtendedWord{}) == "()");
    CHECK(to_string(IoWord{{in_ev({"x1"}), OutputEvent::silent()}}) ==
          "({x1}|eps)");
}

TEST_CASE("bounded extended language of the demo plant") {
    OpenDes plant = complete_inputs(load_plant("demo_plant.json"));

    auto depth2 = enumerate_extended(plant, 2, false);
    std::set<ExtendedWord> set2(depth2.begin(), depth2.end());
    CHECK(set2.count(example_word()) == 1);

    SUBCASE("depth zero is the empty word alone") {
        auto depth0 = enumerate_extended(plant, 0, false);
        REQUIRE(depth0.size() == 1);
        CHECK(depth0[0].empty());
    }

    SUBCASE("marked variant keeps only runs ending marked") {
        auto marked1 = enumerate_extended(plant, 1, true);
        std::set<ExtendedWord> set1(marked1.begin(), marked1.end());
        ExtendedWord to_q2 = {{in_ev({"x2"}), InternalEvent("s2"), out_ev({"y2"})}};
        ExtendedWord to_q1 = {{in_ev({"x1"}), InternalEvent("s1"), out_ev({"y1"})}};
        CHECK(set1.count(to_q2) == 1);
        CHECK(set1.count(to_q1) == 0);
    }

    SUBCASE("agrees with the brute-force oracle") {
        for (int depth = 0; depth <= 4; ++depth) {
            auto got = enumerate_extended(plant, depth, false);
            std::set<ExtendedWord> got_set(got.begin(), got.end());
            CHECK(got_set == oracle_extended(plant, depth, false));
            CHECK(got.size() == got_set.size()); // no duplicates in output

            auto got_marked = enumerate_extended(plant, depth, true);
            std::set<ExtendedWord> marked_set(got_marked.begin(),
                                              got_marked.end());
            CHECK(marked_set == oracle_extended(plant, depth, true));
        }
    }

    SUBCASE("depth above the cap is a limit error") {
        CHECK_THROWS_AS(enumerate_extended(plant, kMaxEnumerationDepth + 1, false),
                        LimitError);
    }
}

TEST_CASE("io language of the demo plant") {
    OpenDes plant = complete_inputs(load_plant("demo_plant.json"));

    auto io2 = io_language(plant, 2, false);
    std::set<IoWord> io2_set(io2.begin(), io2.end());
    IoWord example = {{in_ev({"x1"}), out_ev({"y1"})},
                      {in_ev({"x1"}), out_ev({"y2"})}};
    CHECK(io2_set.count(example) == 1);

    SUBCASE("depth-1 marked language reaches q2") {
        auto io1 = io_language(plant, 1, true);
        std::set<IoWord> io1_set(io1.begin(), io1.end());
        CHECK(io1_set.count({{in_ev({"x2"}), out_ev({"y2"})}}) == 1);
    }

    SUBCASE("depth-2 marked language contains the four specification words") {
        auto io = io_language(plant, 2, true);
        std::set<IoWord> got(io.begin(), io.end());
        auto word = [](const char* a, const char* oa, const char* b,
                       const char* ob) {
            return IoWord{{InputEvent({a}), OutputEvent({oa})},
                          {InputEvent({b}), OutputEvent({ob})}};
        };
        CHECK(got.count(word("x1", "y1", "x2", "y1")) == 1);
        CHECK(got.count(word("x1", "y1", "x1", "y2")) == 1);
        CHECK(got.count(word("x2", "y2", "x2", "y1")) == 1);
        CHECK(got.count(word("x2", "y2", "x1", "y2")) == 1);
    }

    SUBCASE("merging duplicates keeps the language prefix-closed") {
        auto io3 = io_language(plant, 3, false);
        std::set<IoWord> io3_set(io3.begin(), io3.end());
        CHECK(is_prefix_closed(io3_set));
    }
}

TEST_CASE("prefix closure") {
    IoWord w = {{in_ev({"x1"}), out_ev({"y1"})}, {in_ev({"x2"}), out_ev({"y1"})}};
    std::set<IoWord> language{w};
    auto closed = prefix_closure(language);
    CHECK(closed.size() == 3);
    CHECK(closed.count({}) == 1);
    CHECK(closed.count({w[0]}) == 1);
    CHECK(closed.count(w) == 1);

    CHECK(prefix_closure(closed) == closed);
    CHECK(is_prefix_closed(closed));
    CHECK_FALSE(is_prefix_closed(language));
}

TEST_CASE("sequential relation holds on the completed demo plant") {
    OpenDes plant = load_plant("demo_plant.json");
    OpenDes completed = complete_inputs(plant);

    RelationReport report = check_sequential_relation(completed, 3);
    CHECK(report.c1);
    CHECK(report.c2);
    CHECK(report.c3);
    CHECK_FALSE(report.witness.has_value());

    SUBCASE("skipping completion breaks realizability of input words") {
        RelationReport raw = check_sequential_relation(plant, 3);
        CHECK_FALSE(raw.c1);
        REQUIRE(raw.witness.has_value());
        // the witness is an input word that no run realizes
        CHECK(raw.witness->find("x1") != std::string::npos);
    }

    SUBCASE("depth zero holds vacuously") {
        RelationReport zero = check_sequential_relation(plant, 0);
        CHECK(zero.ok());
    }
}

TEST_CASE("enumeration properties over random plants") {
    std::mt19937_64 rng(811524);
    RandomPlantConfig cfg;
    cfg.max_states = 4;

    for (int i = 0; i < 120; ++i) {
        OpenDes plant = complete_inputs(random_plant(rng, cfg));
        CAPTURE(i);

        auto words3 = enumerate_extended(plant, 3, false);
        std::set<ExtendedWord> set3(words3.begin(), words3.end());

        // prefix-closedness
        for (const auto& w : set3) {
            if (w.empty())
                continue;
            ExtendedWord prefix(w.begin(), w.end() - 1);
            CHECK(set3.count(prefix) == 1);
        }

        // monotonicity in depth
        auto words2 = enumerate_extended(plant, 2, false);
        for (const auto& w : words2)
            CHECK(set3.count(w) == 1);

        // marked subset of unmarked
        auto marked3 = enumerate_extended(plant, 3, true);
        for (const auto& w : marked3)
            CHECK(set3.count(w) == 1);

        // projection lengths are positionwise
        for (const auto& w : words3) {
            CHECK(project_xy(w).size() == w.size());
            CHECK(project_xp(w).size() == w.size());
        }
    }
}
