#include "twobridge/jones.hpp"

namespace tb {

namespace {

const Laurent kDelta = Laurent(Int(-1), 2) + Laurent(Int(-1), -2);  // -A^2 - A^{-2}

// Transfer operators on (f, g) over the {0, infinity} tangle basis. The
// A/A^{-1} placement and the twist-to-parameter assignment below are pinned
// by the gates V(1) = 1, |V(-1)| = det and 4v3(C[2,-2]) = +1; see tests.
void apply_c_twist(BracketState& s) {
    // (f, g) -> (x f, y f + (x + y delta) g) with x = A^{-1}, y = A
    const Laurent x(Int(1), -1), y(Int(1), 1);
    Laurent nf = x * s.f;
    Laurent ng = y * s.f + (x + y * kDelta) * s.g;
    s.f = std::move(nf);
    s.g = std::move(ng);
}

void apply_b_twist(BracketState& s) {
    // (f, g) -> ((x delta + y) f + x g, y g) with x = A, y = A^{-1}
    const Laurent x(Int(1), 1), y(Int(1), -1);
    Laurent nf = (x * kDelta + y) * s.f + x * s.g;
    Laurent ng = y * s.g;
    s.f = std::move(nf);
    s.g = std::move(ng);
}

}  // namespace

Laurent kauffman_bracket(const ConwayForm& k) {
    BracketState s{Laurent(Int(1)), Laurent()};
    for (int i = 1; i <= k.genus(); ++i) {
        for (std::int64_t t = 0; t < -2 * k.c(i); ++t) apply_c_twist(s);
        for (std::int64_t t = 0; t < 2 * k.b(i); ++t) apply_b_twist(s);
    }
    return s.f + kDelta * s.g;
}

std::int64_t writhe(const ConwayForm& k) { return k.crossing_count(); }

Laurent jones_polynomial(const ConwayForm& k) {
    const Laurent bracket = kauffman_bracket(k);
    const std::int64_t w = writhe(k);
    // f_K = (-A^3)^{-w} <D>
    const Int sign = (w % 2 == 0) ? Int(1) : Int(-1);
    const Laurent fk = bracket.shifted(sign, static_cast<long>(-3 * w));
    Laurent v;
    for (const auto& [e, co] : fk.terms()) {
        if (e % 4 != 0)
            throw std::logic_error("jones_polynomial: A-exponent not divisible by 4");
        v += Laurent(co, -e / 4);  // A = t^{-1/4}
    }
    return v;
}

Rat v3_from_jones(const ConwayForm& k) {
    const Laurent v = jones_polynomial(k);
    Int v2 = 0, v3 = 0;
    for (const auto& [e, co] : v.terms()) {
        v2 += co * Int(e) * Int(e - 1);
        v3 += co * Int(e) * Int(e - 1) * Int(e - 2);
    }
    return make_rat(-v3, Int(144)) + make_rat(-v2, Int(48));
}

Int four_v3_from_jones(const ConwayForm& k) {
    const Rat v = 4 * v3_from_jones(k);
    if (v.get_den() != 1) throw std::logic_error("4 v3 must be an integer");
    return v.get_num();
}

}  // namespace tb
