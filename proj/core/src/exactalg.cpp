#include "twobridge/exactalg.hpp"

#include <sstream>

namespace tb {

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, co] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, co);
        } else {
            it->second += co;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, co] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, -co);
        } else {
            it->second -= co;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, co] : c_) r.c_.emplace(e, -co);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            long e = ea + eb;
            auto it = r.c_.find(e);
            if (it == r.c_.end()) {
                r.c_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    for (auto it = r.c_.begin(); it != r.c_.end();) {
        if (it->second == 0)
            it = r.c_.erase(it);
        else
            ++it;
    }
    return r;
}

Laurent Laurent::shifted(const Int& coeff, long exponent) const {
    Laurent r;
    if (coeff == 0) return r;
    for (const auto& [e, co] : c_) r.c_.emplace(e + exponent, co * coeff);
    return r;
}

Laurent Laurent::pow(unsigned long e) const {
    Laurent r(Int(1));
    Laurent base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Laurent Laurent::derivative() const {
    Laurent r;
    for (const auto& [e, co] : c_) {
        if (e == 0) continue;
        r.c_.emplace(e - 1, co * Int(e));
    }
    return r;
}

Int Laurent::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, co] : c_) s += co;
    return s;
}

Int Laurent::eval_at_minus_one() const {
    Int s = 0;
    for (const auto& [e, co] : c_) {
        if (e % 2 == 0)
            s += co;
        else
            s -= co;
    }
    return s;
}

Int Laurent::eval_even_square(const Int& square_value) const {
    Int s = 0;
    for (const auto& [e, co] : c_) {
        if (e % 2 != 0) throw std::domain_error("eval_even_square: odd exponent present");
        long h = e / 2;
        if (h < 0) throw std::domain_error("eval_even_square: negative exponent");
        s += co * pow_int(square_value, static_cast<unsigned long>(h));
    }
    return s;
}

Laurent Laurent::substitute(const Laurent& q) const {
    Laurent r;
    for (const auto& [e, co] : c_) {
        if (e < 0) {
            // q must be a unit (single invertible monomial) for negative powers
            if (q.term_count() != 1) throw std::domain_error("substitute: negative exponent needs monomial image");
            auto [qe, qc] = *q.terms().begin();
            if (qc != 1 && qc != -1) throw std::domain_error("substitute: non-invertible monomial image");
            Int cc = (e % 2 != 0 && qc == -1) ? Int(-co) : co;
            r += Laurent(cc, qe * e);
        } else {
            r += q.pow(static_cast<unsigned long>(e)).shifted(co, 0);
        }
    }
    return r;
}

Laurent Laurent::divide_exact(const Laurent& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (is_zero()) return Laurent();
    Laurent rem = *this;
    Laurent quot;
    const long dmax = divisor.max_exp();
    const Int dlead = divisor.coeff(dmax);
    // In a Laurent ring lowest exponents of factors add, so an exact quotient
    // never needs exponents below this bound; hitting it means inexact.
    const long qe_min = min_exp() - divisor.min_exp();
    while (!rem.is_zero()) {
        const long rmax = rem.max_exp();
        const Int rlead = rem.coeff(rmax);
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rlead.get_mpz_t(), dlead.get_mpz_t());
        if (r != 0) throw std::domain_error("divide_exact: inexact leading coefficient");
        const long qe = rmax - dmax;
        if (qe < qe_min) throw std::domain_error("divide_exact: nonzero remainder");
        quot += Laurent(q, qe);
        rem -= divisor.shifted(q, qe);
        if (!rem.is_zero() && rem.max_exp() >= rmax)
            throw std::domain_error("divide_exact: no degree progress");
    }
    return quot;
}

std::string Laurent::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, co] : c_) {
        Int a = co;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace tb
