#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "rr/errors.hpp"
#include "rr/parse.hpp"
#include "rr/render.hpp"

using rr::Int;
using rr::Monomial;
using rr::MonomialIdeal;
using rr::parse_ideal;
using rrtest::MI;

TEST_CASE("parse_ideal monomial form") {
    CHECK(parse_ideal("y^7, x^2*y^5, x^5*y^2, x^7") ==
          MI({{0, 7}, {2, 5}, {5, 2}, {7, 0}}));
    CHECK(parse_ideal("1") == MonomialIdeal::unit());
    CHECK(parse_ideal("x") == MI({{1, 0}}));
    CHECK(parse_ideal("x*y") == MI({{1, 1}}));
    CHECK(parse_ideal("x*x^2*y") == MI({{3, 1}}));
    CHECK(parse_ideal("x^0") == MonomialIdeal::unit());
    CHECK(parse_ideal("1*y^3") == MI({{0, 3}}));
    CHECK(parse_ideal("  y ^ 7 ,x ^2* y^5,x^7  ") == MI({{0, 7}, {2, 5}, {7, 0}}));
    CHECK(parse_ideal("y^3, x*y, x*y, x^3") == MI({{0, 3}, {1, 1}, {3, 0}}));
}

TEST_CASE("parse_ideal tuple form") {
    CHECK(parse_ideal("(0,3),(3,0)") == MI({{0, 3}, {3, 0}}));
    CHECK(parse_ideal(" ( 0 , 3 ) , ( 3 , 0 ) ") == MI({{0, 3}, {3, 0}}));
    CHECK(parse_ideal("(0,0)") == MonomialIdeal::unit());
    CHECK(parse_ideal("(2,5),(0,7),(7,0),(5,2)") == MI({{0, 7}, {2, 5}, {5, 2}, {7, 0}}));
}

TEST_CASE("parse_ideal rejections carry a position") {
    auto expect_fail = [](const std::string& text, std::size_t pos) {
        CAPTURE(text);
        try {
            parse_ideal(text);
            FAIL_CHECK("expected ParseError");
        } catch (const rr::ParseError& e) {
            CHECK(e.position == pos);
        }
    };
    expect_fail("x^2 + y", 4);
    expect_fail("", 0);
    expect_fail("   ", 3);
    expect_fail("x^", 2);
    expect_fail("x^-2", 2);
    expect_fail("z", 0);
    expect_fail(",", 0);
    expect_fail("x*", 2);
    expect_fail("x^2 y", 4);
    expect_fail("(1,2", 4);
    expect_fail("(1 2)", 3);
    expect_fail("(1,2),x", 6);
    // The overflow guard trips on the 16th digit.
    expect_fail("x^99999999999999999999", 17);
}

TEST_CASE("to_text") {
    CHECK(rr::to_text(Monomial{0, 0}) == "1");
    CHECK(rr::to_text(Monomial{1, 1}) == "x*y");
    CHECK(rr::to_text(Monomial{2, 0}) == "x^2");
    CHECK(rr::to_text(Monomial{0, 1}) == "y");
    CHECK(rr::to_text(Monomial{3, 7}) == "x^3*y^7");
    CHECK(rr::to_text(MonomialIdeal()) == "0");
    CHECK(rr::to_text(MonomialIdeal::unit()) == "1");
    CHECK(rr::to_text(MI({{0, 7}, {2, 5}, {5, 2}, {7, 0}})) ==
          "y^7, x^2*y^5, x^5*y^2, x^7");
    CHECK(rr::to_text(rr::IdealClass::equal_degree(7)) == "equal-degree (d = 7)");
    CHECK(rr::to_text(rr::IdealClass::slanted_line(18, 12)) ==
          "slanted-line (a_r = 18, b_0 = 12)");
    CHECK(rr::to_text(rr::IdealClass::general()) == "general");
}

TEST_CASE("render round-trips through the parser") {
    std::vector<MonomialIdeal> corpus{
        MI({{0, 7}, {2, 5}, {5, 2}, {7, 0}}),
        MI({{0, 12}, {6, 8}, {9, 6}, {15, 2}, {18, 0}}),
        MonomialIdeal::unit(),
        MI({{3, 0}}),
        MI({{0, 2}}),
        MI({{1, 1}}),
    };
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 30; ++it) corpus.push_back(rrtest::random_primary(rng, 20));
    for (const MonomialIdeal& I : corpus) {
        CHECK(parse_ideal(rr::to_text(I)) == I);
        std::string tuples;
        for (const Monomial& g : I.generators()) {
            if (!tuples.empty()) tuples += ",";
            tuples += "(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
        }
        CHECK(parse_ideal(tuples) == I);
    }
}

TEST_CASE("json shapes") {
    nlohmann::json j = rr::to_json(MI({{0, 7}, {2, 5}, {5, 2}, {7, 0}}));
    CHECK(j == nlohmann::json::parse(R"({"generators":[[0,7],[2,5],[5,2],[7,0]]})"));

    CHECK(rr::to_json(rr::IdealClass::equal_degree(4)) ==
          nlohmann::json::parse(R"({"class":"equal_degree","d":4})"));
    CHECK(rr::to_json(rr::IdealClass::slanted_line(18, 12)) ==
          nlohmann::json::parse(R"({"class":"slanted_line","a_r":18,"b_0":12})"));
    CHECK(rr::to_json(rr::IdealClass::general()) ==
          nlohmann::json::parse(R"({"class":"general"})"));

    MonomialIdeal I7 = MI({{0, 7}, {2, 5}, {5, 2}, {7, 0}});
    nlohmann::json closed = rr::to_json(rr::closure_closed_form(I7));
    CHECK(closed["method"] == "closed_form");
    CHECK(closed["certified"] == true);
    CHECK(closed["reduction_number"] == 1);
    CHECK(closed["l_used"] == 0);
    CHECK(closed["closure"]["generators"] ==
          nlohmann::json::parse(R"([[0,7],[2,5],[4,4],[5,2],[7,0]])"));

    MonomialIdeal gen = MI({{0, 3}, {1, 1}, {3, 0}});
    nlohmann::json loose = rr::to_json(rr::closure_brute_force(gen, 3));
    CHECK(loose["method"] == "brute_force");
    CHECK(loose["certified"] == false);
    CHECK(loose["reduction_number"].is_null());
    CHECK(loose["l_used"] == 3);
}

TEST_CASE("staircase diagram") {
    MonomialIdeal J = MI({{0, 4}, {1, 3}, {3, 1}, {4, 0}});
    MonomialIdeal tilde = rr::closure_closed_form(J).closure;
    std::string grid = rr::staircase(J, &tilde);
    const std::string expected =
        "  4 | G # # # #\n"
        "  3 | . G # # #\n"
        "  2 | . . + # #\n"
        "  1 | . . . G #\n"
        "  0 | . . . . G\n"
        "    +----------\n"
        "     x = 0..4\n";
    CHECK(grid == expected);

    std::string plain = rr::staircase(J);
    CHECK(plain.find('+') >= plain.find("    +"));  // no highlight cells without `added`
    CHECK(plain.find('G') != std::string::npos);

    std::string big = rr::staircase(MI({{0, 100}, {100, 0}}));
    CHECK(big.find("(clipped to 60x60)") != std::string::npos);
    CHECK(big.find("x = 0..59") != std::string::npos);
}
