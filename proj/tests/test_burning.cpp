#include "burn/burning.hpp"

#include "burn/heuristics.hpp"
#include "util.hpp"

#include <doctest.h>

#include <cmath>

using namespace burn;
using testutil::by_label;
using testutil::fixture;

namespace {
BurningSequence seq_of(std::vector<std::string> sources, int budget) {
    return BurningSequence{std::move(sources), budget};
}
}  // namespace

TEST_CASE("coverage and strict validation on known fig3 sequences") {
    const Graph fig3 = fixture("fig3");
    CHECK(is_valid_burning_sequence(fig3, seq_of({"4", "7", "1"}, 3)));
    CHECK(!is_valid_burning_sequence(fig3, seq_of({"7", "4", "1"}, 3)));
    CHECK(is_valid_burning_sequence(fig3, seq_of({"3", "6", "8"}, 3)));
    CHECK(is_valid_burning_sequence(fig3, seq_of({"7", "4", "2", "1"}, 4)));

    SUBCASE("strict mode") {
        CHECK(is_valid_burning_sequence(fig3, seq_of({"4", "7", "1"}, 3), true));
        // strict also rejects a source burned before its turn
        const Graph p4 = testutil::path_graph(4);
        CHECK(is_valid_burning_sequence(p4, seq_of({"2", "4", "3"}, 3)));
        CHECK(!is_valid_burning_sequence(p4, seq_of({"2", "4", "3"}, 3), true));
    }

    SUBCASE("bad input") {
        CHECK_THROWS_AS(is_valid_burning_sequence(fig3, seq_of({"4", "99"}, 2)),
                        std::invalid_argument);
        CHECK(!is_valid_burning_sequence(fig3, seq_of({"4", "4", "1"}, 3)));   // repeat
        CHECK(!is_valid_burning_sequence(fig3, seq_of({"4", "7", "1"}, 2)));   // too long
    }

    SUBCASE("shorter than budget uses budget radii") {
        const Graph p5 = testutil::path_graph(5);
        CHECK(is_valid_burning_sequence(p5, seq_of({"3"}, 3)));
        CHECK(!is_valid_burning_sequence(p5, seq_of({"3"}, 2)));
    }
}

TEST_CASE("burn_graph driver") {
    CHECK(burn_graph(Graph{}, 3, bbgh_selector())->sources.empty());
    CHECK_THROWS_AS(burn_graph(testutil::path_graph(2), 0, bbgh_selector()),
                    std::invalid_argument);

    const Graph fig4 = fixture("fig4");
    CHECK(!burn_graph(fig4, 3, bbgh_selector()));  // bn(fig4) = 4
    CHECK(!burn_graph(fig4, 3, icch_selector()));

    const Graph t1 = fixture("t1");
    const auto seq = burn_graph(t1, 4, bbgh_selector());
    REQUIRE(seq);
    CHECK(seq->sources == std::vector<std::string>{"10", "3", "15", "6"});
    CHECK(is_valid_burning_sequence(t1, *seq));
}

TEST_CASE("burning upper bound") {
    CHECK(burning_upper_bound(testutil::complete_graph(5)) == 2);
    CHECK(burning_upper_bound(testutil::path_graph(9)) == 5);
    CHECK(burning_upper_bound(fixture("fig5")) == 5);  // (2+1) + (1+1)
}

TEST_CASE("estimates on degenerate graphs") {
    const Graph one = graph_from_labeled_edges(1, {});
    CHECK(estimate_burning_number(one, bbgh_selector()).first == 1);
    for (int n = 2; n <= 6; ++n) {
        const Graph k = testutil::complete_graph(n);
        CHECK(estimate_burning_number(k, bbgh_selector()).first == 2);
        CHECK(estimate_burning_number(k, icch_selector()).first == 2);
    }
}

TEST_CASE("exact oracle on fixtures and small derived cases") {
    CHECK(exact_burning_number(fixture("fig3")).first == 3);
    CHECK(exact_burning_number(fixture("fig5")).first == 3);

    const Graph p4 = testutil::path_graph(4);
    CHECK(testutil::brute_force_burning_number(p4) == 2);
    auto [b, seq] = exact_burning_number(p4);
    CHECK(b == 2);
    CHECK(is_valid_burning_sequence(p4, seq));

    // size cap refusal
    const Graph big = testutil::path_graph(33);
    CHECK_THROWS_AS(exact_burning_number(big, 32), OracleSizeError);
    CHECK(exact_burning_number(big, 40).first == 6);  // ceil(sqrt(33))
}

TEST_CASE("oracle agrees with exhaustive enumeration on random graphs") {
    testutil::GraphGen gen(41);
    for (int i = 0; i < 400; ++i) {
        const Graph g = gen.sparse(8);
        const int expect = testutil::brute_force_burning_number(g);
        auto [b, seq] = exact_burning_number(g, 8);
        CHECK(b == expect);
        CHECK(is_valid_burning_sequence(g, seq));
    }
}

TEST_CASE("oracle path law sample") {
    for (int n : {1, 2, 5, 9, 10, 16, 17}) {
        const int expect = static_cast<int>(std::ceil(std::sqrt(double(n))));
        CHECK(exact_burning_number(testutil::path_graph(n)).first == expect);
    }
}

TEST_CASE("driver sequences stay coverage-valid and dominate the oracle") {
    testutil::GraphGen gen(43);
    for (int i = 0; i < 40; ++i) {
        const Graph g = gen.sparse(60);
        for (const Selector& sel : {bbgh_selector(), icch_selector()}) {
            auto [b, seq] = estimate_burning_number(g, sel);
            CHECK(is_valid_burning_sequence(g, seq));
            CHECK(static_cast<int>(seq.sources.size()) <= seq.budget);
            // success replayed at a larger budget keeps coverage
            BurningSequence wider = seq;
            wider.budget += 1 + i % 2;
            CHECK(is_valid_burning_sequence(g, wider));
            if (g.vertex_count() <= 10)
                CHECK(b >= exact_burning_number(g, 10).first);
        }
    }
}

TEST_CASE("linear scan mode finds a (possibly smaller) successful budget") {
    testutil::GraphGen gen(47);
    for (int i = 0; i < 10; ++i) {
        const Graph g = gen.sparse(40);
        auto [b_bin, seq_bin] = estimate_burning_number(g, bbgh_selector());
        auto [b_lin, seq_lin] =
            estimate_burning_number(g, bbgh_selector(), SearchMode::Linear);
        CHECK(b_lin <= b_bin);
        CHECK(is_valid_burning_sequence(g, seq_lin));
    }
}
