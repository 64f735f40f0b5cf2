#include "schurkit/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "schurkit/checked_int.hpp"
#include "schurkit/errors.hpp"

namespace schurkit {

MonomialPolynomial::MonomialPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1)
        throw ArityMismatch("number of variables must be positive, got " + std::to_string(nvars));
}

MonomialPolynomial MonomialPolynomial::monomial(int nvars, Exponents e, std::int64_t coeff) {
    MonomialPolynomial p(nvars);
    p.add_term(e, coeff);
    return p;
}

MonomialPolynomial MonomialPolynomial::variable(int nvars, int index) {
    if (index < 1 || index > nvars)
        throw ArityMismatch("variable x" + std::to_string(index) + " outside x1..x" +
                            std::to_string(nvars));
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(nvars, std::move(e));
}

std::int64_t MonomialPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void MonomialPolynomial::add_term(const Exponents& e, std::int64_t c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw ArityMismatch("exponent tuple of length " + std::to_string(e.size()) + " in a " +
                            std::to_string(nvars_) + "-variable polynomial");
    for (int x : e)
        if (x < 0)
            throw EntryOutOfRange("negative exponent " + std::to_string(x));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::int64_t MonomialPolynomial::coefficient_mass() const {
    std::int64_t total = 0;
    for (const auto& [e, c] : terms_)
        total = checked_add(total, c);
    return total;
}

std::optional<int> MonomialPolynomial::homogeneous_degree() const {
    std::optional<int> degree;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (degree && *degree != d)
            return std::nullopt;
        degree = d;
    }
    return degree;
}

namespace {

void require_same_arity(const MonomialPolynomial& p, const MonomialPolynomial& q) {
    if (p.nvars() != q.nvars())
        throw ArityMismatch("polynomials in " + std::to_string(p.nvars()) + " and " +
                            std::to_string(q.nvars()) + " variables");
}

}  // namespace

MonomialPolynomial poly_add(const MonomialPolynomial& p, const MonomialPolynomial& q) {
    require_same_arity(p, q);
    MonomialPolynomial out = p;
    for (const auto& [e, c] : q.terms())
        out.add_term(e, c);
    return out;
}

MonomialPolynomial poly_scale(const MonomialPolynomial& p, std::int64_t c) {
    MonomialPolynomial out(p.nvars());
    if (c == 0)
        return out;
    for (const auto& [e, coeff] : p.terms())
        out.add_term(e, checked_mul(coeff, c));
    return out;
}

MonomialPolynomial poly_mul(const MonomialPolynomial& p, const MonomialPolynomial& q) {
    require_same_arity(p, q);
    MonomialPolynomial out(p.nvars());
    Exponents e(static_cast<std::size_t>(p.nvars()));
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) {
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = ep[v] + eq[v];
            out.add_term(e, checked_mul(cp, cq));
        }
    return out;
}

std::string monomial_to_string(const Exponents& e) {
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += 'x' + std::to_string(v + 1);
        if (e[v] != 1)
            out += '^' + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const MonomialPolynomial& p) {
    if (p.is_zero())
        return "0\n";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out += std::to_string(it->second) + " * " + monomial_to_string(it->first) + '\n';
    return out;
}

namespace {

template <class Int>
Int parse_int(std::string_view s, std::string_view what) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

struct ParsedTerm {
    std::int64_t coeff;
    std::vector<std::pair<int, int>> powers;  // (variable index, exponent)
};

ParsedTerm parse_term(std::string_view line) {
    auto star = line.find('*');
    if (star == std::string_view::npos)
        throw ParseError("term '" + std::string(line) + "' lacks 'coefficient * monomial'");
    std::istringstream coeff_in{std::string(line.substr(0, star))};
    std::string coeff_tok, extra;
    coeff_in >> coeff_tok;
    if (coeff_in >> extra)
        throw ParseError("malformed coefficient in '" + std::string(line) + "'");
    ParsedTerm t{parse_int<std::int64_t>(coeff_tok, "coefficient"), {}};

    std::istringstream mono_in{std::string(line.substr(star + 1))};
    std::string factor;
    bool constant = false;
    while (mono_in >> factor) {
        if (factor == "1") {
            constant = true;
            continue;
        }
        if (factor.size() < 2 || factor[0] != 'x')
            throw ParseError("malformed factor '" + factor + "'");
        auto caret = factor.find('^');
        std::string_view f(factor);
        int index = parse_int<int>(f.substr(1, caret == std::string::npos ? std::string_view::npos : caret - 1),
                                   "variable index");
        int power = caret == std::string::npos ? 1 : parse_int<int>(f.substr(caret + 1), "exponent");
        if (index < 1 || power < 0)
            throw ParseError("malformed factor '" + factor + "'");
        t.powers.emplace_back(index, power);
    }
    if (constant && !t.powers.empty())
        throw ParseError("constant marker mixed with variables in '" + std::string(line) + "'");
    if (!constant && t.powers.empty())
        throw ParseError("term '" + std::string(line) + "' has no monomial");
    return t;
}

}  // namespace

MonomialPolynomial parse_polynomial(std::string_view text, int nvars) {
    std::vector<ParsedTerm> terms;
    int largest = 1;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string_view body = std::string_view(line).substr(first, last - first + 1);
        if (body == "0")
            continue;
        terms.push_back(parse_term(body));
        for (auto [idx, pw] : terms.back().powers)
            largest = std::max(largest, idx);
    }
    if (nvars == 0)
        nvars = largest;
    else if (largest > nvars)
        throw ArityMismatch("variable x" + std::to_string(largest) + " in a " +
                            std::to_string(nvars) + "-variable polynomial");
    MonomialPolynomial p(nvars);
    for (const auto& t : terms) {
        Exponents e(static_cast<std::size_t>(nvars), 0);
        for (auto [idx, pw] : t.powers)
            e[static_cast<std::size_t>(idx - 1)] += pw;
        p.add_term(e, t.coeff);
    }
    return p;
}

}  // namespace schurkit
