#include "twobridge/conway.hpp"

#include <algorithm>
#include <sstream>

namespace tb {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::string body = text;
    // trim
    auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
    body.erase(body.begin(), std::find_if(body.begin(), body.end(), notspace));
    body.erase(std::find_if(body.rbegin(), body.rend(), notspace).base(), body.end());
    if (body.size() >= 3 && (body[0] == 'C' || body[0] == 'c') && body[1] == '[' && body.back() == ']')
        body = body.substr(2, body.size() - 3);
    std::vector<std::int64_t> out;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw parse_error("malformed entry '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw parse_error("malformed entry '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw parse_error("empty twist list");
    return out;
}

}  // namespace

ConwayForm::ConwayForm(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
    : b_(std::move(b)), c_(std::move(c)) {
    if (b_.empty() || b_.size() != c_.size())
        throw validation_error("need equally many b and c parameters, at least one pair");
    for (auto v : b_)
        if (v < 1) throw validation_error("every b_i must be >= 1");
    for (auto v : c_)
        if (v > -1) throw validation_error("every c_i must be <= -1");
}

ConwayForm ConwayForm::parse(const std::string& text) {
    const auto vals = parse_int_list(text);
    if (vals.size() % 2 != 0) throw validation_error("need an even number of twist entries");
    const int g = static_cast<int>(vals.size() / 2);
    std::vector<std::int64_t> b(g), c(g);
    for (int i = 0; i < g; ++i) {
        // text order: 2b_g, 2c_g, ..., 2b_1, 2c_1
        const std::int64_t tb2 = vals[2 * (g - 1 - i)];
        const std::int64_t tc2 = vals[2 * (g - 1 - i) + 1];
        if (tb2 == 0 || tc2 == 0) throw validation_error("zero twist entry forbidden");
        if (tb2 % 2 != 0 || tc2 % 2 != 0) throw validation_error("twist entries must be even");
        if (tb2 < 0 || tc2 > 0) throw validation_error("sign pattern must alternate +,- starting positive");
        b[i] = tb2 / 2;
        c[i] = tc2 / 2;
    }
    return ConwayForm(std::move(b), std::move(c));
}

std::int64_t ConwayForm::complexity() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < b_.size(); ++i) s += b_[i] - c_[i];
    return s;
}

std::int64_t ConwayForm::crossing_count() const { return 2 * complexity(); }

std::int64_t ConwayForm::delta() const { return complexity() - 2 * genus(); }

bool ConwayForm::is_torus_2k() const {
    return std::all_of(b_.begin(), b_.end(), [](std::int64_t v) { return v == 1; }) &&
           std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == -1; });
}

ConwayForm ConwayForm::mirror_symmetry() const {
    const int g = genus();
    std::vector<std::int64_t> b(g), c(g);
    for (int i = 0; i < g; ++i) {
        b[i] = -c_[g - 1 - i];
        c[i] = -b_[g - 1 - i];
    }
    return ConwayForm(std::move(b), std::move(c));
}

ConwayForm ConwayForm::truncate(int j) const {
    if (j < 1 || j > genus()) throw std::out_of_range("truncate index");
    return ConwayForm(std::vector<std::int64_t>(b_.begin(), b_.begin() + j),
                      std::vector<std::int64_t>(c_.begin(), c_.begin() + j));
}

ConwayForm ConwayForm::neighbor(int i, MoveKind kind) const {
    if (i < 1 || i > genus()) throw std::out_of_range("neighbor index");
    std::vector<std::int64_t> b = b_, c = c_;
    if (kind == MoveKind::b_plus)
        b[i - 1] += 1;
    else
        c[i - 1] -= 1;
    return ConwayForm(std::move(b), std::move(c));
}

std::vector<Fraction> ConwayForm::fraction_sequence() const {
    std::vector<Fraction> out;
    out.reserve(b_.size() + 1);
    Int d = 1, p = 0;
    out.push_back({d, p});
    for (std::size_t i = 0; i < b_.size(); ++i) {
        const Int bi = b_[i], ci = c_[i];
        Int dn = (-4 * bi * ci - 1) * d - 2 * bi * p;
        Int pn = -2 * ci * d - p;
        d = std::move(dn);
        p = std::move(pn);
        out.push_back({d, p});
    }
    return out;
}

Fraction ConwayForm::fraction(int j) const {
    if (j < 1 || j > genus()) throw std::out_of_range("fraction index");
    return fraction_sequence()[static_cast<std::size_t>(j)];
}

Int ConwayForm::determinant() const { return fraction_sequence().back().d; }

std::string ConwayForm::key() const {
    std::ostringstream os;
    os << "g=" << genus() << ";b=";
    for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
    os << ";c=";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

std::string ConwayForm::bracket_text() const {
    std::ostringstream os;
    os << "C[";
    for (int i = genus(); i >= 1; --i) {
        os << 2 * b(i) << "," << 2 * c(i);
        if (i > 1) os << ",";
    }
    os << "]";
    return os.str();
}

std::string ConwayForm::canonical_key() const {
    const ConwayForm m = mirror_symmetry();
    auto tuple_of = [](const ConwayForm& k) {
        std::vector<std::int64_t> t;
        for (int i = 0; i < k.genus(); ++i) {
            t.push_back(k.b_all()[i]);
            t.push_back(-k.c_all()[i]);
        }
        return t;
    };
    return (tuple_of(*this) <= tuple_of(m) ? *this : m).key();
}

}  // namespace tb
