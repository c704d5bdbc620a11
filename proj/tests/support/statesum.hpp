#pragma once
/**
 * @file statesum.hpp
 * @brief Brute-force Kauffman bracket oracle for tests: enumerate all 2^n
 *        smoothing states of the assembled twist diagram and count loops
 *        with union-find.  Exponential in the crossing number; intended for
 *        forms with s(K) <= 8 or so.
 */
#include "twobridge/conway.hpp"
#include "twobridge/exactalg.hpp"

namespace tb::testsupport {

/// <D> of the Conway twist diagram, independent of the transfer-matrix
/// evaluation in the library (shares only the diagram description).
Laurent statesum_bracket(const ConwayForm& k);

}  // namespace tb::testsupport
