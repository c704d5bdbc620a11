#include <doctest.h>

#include "support/statesum.hpp"
#include "twobridge/conway.hpp"
#include "twobridge/enumerate.hpp"
#include "twobridge/exactalg.hpp"
#include "twobridge/jones.hpp"

using tb::ConwayForm;
using tb::Int;
using tb::Laurent;
using tb::Rat;

TEST_SUITE("jones") {

TEST_CASE("writhe counts the all-positive crossings") {
    CHECK(tb::writhe(ConwayForm::parse("2,-2")) == 4);
    CHECK(tb::writhe(ConwayForm::parse("4,-2,2,-4")) == 12);
}

TEST_CASE("kauffman bracket pins") {
    const Laurent tre = tb::kauffman_bracket(ConwayForm::parse("2,-2"));
    CHECK(tre.coeff(-4) == -1);
    CHECK(tre.coeff(0) == 1);
    CHECK(tre.coeff(8) == 1);
    CHECK(tre.term_count() == 3);

    const Laurent five2 = tb::kauffman_bracket(ConwayForm::parse("2,-4"));
    CHECK(five2.coeff(-6) == -1);
    CHECK(five2.coeff(6) == 2);
    CHECK(five2.coeff(14) == 1);
    CHECK(five2.term_count() == 6);
}

TEST_CASE("state-sum oracle agrees with the transfer evaluation") {
    // Spot pins first, then the full small corpus.
    CHECK(tb::testsupport::statesum_bracket(ConwayForm::parse("2,-2")) ==
          tb::kauffman_bracket(ConwayForm::parse("2,-2")));
    tb::EnumerationSpec spec;
    spec.max_complexity = 7;
    int n = 0;
    tb::enumerate(spec, [&](const ConwayForm& k) {
        ++n;
        CHECK(tb::testsupport::statesum_bracket(k) == tb::kauffman_bracket(k));
    });
    CHECK(n == 63);
}

TEST_CASE("jones polynomial pins") {
    CHECK(tb::jones_polynomial(ConwayForm::parse("2,-2")).to_string("t") ==
          "t + t^3 - t^4");
    CHECK(tb::jones_polynomial(ConwayForm::parse("2,-4")).to_string("t") ==
          "t - t^2 + 2*t^3 - t^4 + t^5 - t^6");
    CHECK(tb::jones_polynomial(ConwayForm::parse("2,-2,2,-2")).to_string("t") ==
          "t^2 + t^4 - t^5 + t^6 - t^7");
}

TEST_CASE("jones polynomial of a knot evaluates to 1 at t = 1") {
    for (const char* text : {"2,-2", "4,-2", "2,-6", "4,-2,2,-4", "2,-2,4,-2"}) {
        CHECK(tb::jones_polynomial(ConwayForm::parse(text)).eval_at_one() == 1);
    }
}

TEST_CASE("jones polynomial at t = -1 gives the determinant up to sign") {
    for (const char* text : {"2,-2", "2,-4", "4,-2,2,-4", "2,-2,8,-2"}) {
        const ConwayForm k = ConwayForm::parse(text);
        CHECK(abs(tb::jones_polynomial(k).eval_at_minus_one()) == k.determinant());
    }
}

TEST_CASE("v3 pins and integrality") {
    CHECK(tb::four_v3_from_jones(ConwayForm::parse("2,-2")) == 1);
    CHECK(tb::v3_from_jones(ConwayForm::parse("2,-2")) == Rat(1, 4));
    CHECK(tb::four_v3_from_jones(ConwayForm::parse("2,-4")) == 3);
    CHECK(tb::four_v3_from_jones(ConwayForm::parse("2,-2,2,-2")) == 5);
    CHECK(tb::four_v3_from_jones(ConwayForm::parse("2,-2,2,-2,2,-2")) == 14);
    CHECK(tb::four_v3_from_jones(ConwayForm::parse("4,-2,2,-4")) == 22);
}

TEST_CASE("the form symmetry presents the same knot") {
    // C[2b_g,...,2c_1] and its reversal describe one knot, so every
    // invariant must agree across the pair.
    for (const char* text : {"4,-2", "2,-4,2,-4", "4,-2,2,-6", "6,-2,4,-2"}) {
        const ConwayForm a = ConwayForm::parse(text);
        const ConwayForm b = a.mirror_symmetry();
        CHECK(tb::jones_polynomial(a) == tb::jones_polynomial(b));
        CHECK(tb::four_v3_from_jones(a) == tb::four_v3_from_jones(b));
    }
}

}  // TEST_SUITE
