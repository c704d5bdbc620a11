#pragma once
/**
 * @file conway.hpp
 * @brief Conway normal forms C[2b_g, 2c_g, ..., 2b_1, 2c_1] of positive
 *        2-bridge knots: parsing, validation, symmetry, fraction recurrence.
 *
 * Storage is index-1-innermost: b[0] = b_1, c[0] = c_1. Text input/output is
 * outermost-first, matching the bracket notation.
 */
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/exactalg.hpp"

namespace tb {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class MoveKind { b_plus, c_minus };

/// d_j/p_j of the continued-fraction recurrence; d_j = det of the j-th truncate.
struct Fraction {
    Int d;
    Int p;
};

class ConwayForm {
  public:
    /// b must be positive, c negative, equal lengths >= 1 (index 0 = innermost).
    ConwayForm(std::vector<std::int64_t> b, std::vector<std::int64_t> c);

    /// Comma-separated even integers, outermost first: "2b_g,2c_g,...,2b_1,2c_1".
    /// An optional surrounding "C[...]" is accepted.
    static ConwayForm parse(const std::string& text);

    int genus() const { return static_cast<int>(b_.size()); }
    std::int64_t b(int i) const { return b_.at(i - 1); }  ///< 1-based
    std::int64_t c(int i) const { return c_.at(i - 1); }  ///< 1-based
    const std::vector<std::int64_t>& b_all() const { return b_; }
    const std::vector<std::int64_t>& c_all() const { return c_; }

    std::int64_t complexity() const;      ///< s(K) = sum(b_i - c_i)
    std::int64_t crossing_count() const;  ///< 2*sum b_i + 2*sum(-c_i) = 2 s(K)
    std::int64_t delta() const;           ///< sum b_i + sum(-c_i) - 2g
    bool is_torus_2k() const;             ///< all b_i = 1, all c_i = -1

    ConwayForm mirror_symmetry() const;  ///< C[-2c_1, -2b_1, ..., -2c_g, -2b_g]
    ConwayForm truncate(int j) const;    ///< innermost j pairs
    ConwayForm neighbor(int i, MoveKind kind) const;

    Fraction fraction(int j) const;                 ///< (d_j, p_j), 1 <= j <= g
    std::vector<Fraction> fraction_sequence() const;  ///< (d_0,p_0) .. (d_g,p_g)
    Int determinant() const;                        ///< d_g

    /// Compact report key "g=<g>;b=<b_1,..>;c=<c_1,..>".
    std::string key() const;
    /// Bracket notation, outermost first: "C[4,-2,2,-4]".
    std::string bracket_text() const;
    /// Lexicographic minimum of the display tuples of this form and its
    /// mirror image; equal for forms identified by the symmetry.
    std::string canonical_key() const;

    bool operator==(const ConwayForm& o) const { return b_ == o.b_ && c_ == o.c_; }
    bool operator!=(const ConwayForm& o) const { return !(*this == o); }

  private:
    std::vector<std::int64_t> b_;
    std::vector<std::int64_t> c_;
};

}  // namespace tb
