#include "schurkit/schur.hpp"

#include <algorithm>

#include "schurkit/checked_int.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/tableau.hpp"

namespace schurkit {

MonomialPolynomial schur_polynomial(const Partition& shape, int nvars) {
    MonomialPolynomial out(nvars);
    SsytEnumerator tableaux(shape, nvars);
    Exponents e(static_cast<std::size_t>(nvars));
    while (tableaux.advance()) {
        std::fill(e.begin(), e.end(), 0);
        for (auto v : tableaux.current())
            ++e[static_cast<std::size_t>(v - 1)];
        out.add_term(e, 1);
    }
    return out;
}

bool is_symmetric(const MonomialPolynomial& p) {
    Exponents swapped;
    for (int v = 0; v + 1 < p.nvars(); ++v) {
        for (const auto& [e, c] : p.terms()) {
            swapped = e;
            std::swap(swapped[static_cast<std::size_t>(v)], swapped[static_cast<std::size_t>(v) + 1]);
            if (p.coefficient(swapped) != c)
                return false;
        }
    }
    return true;
}

void SchurExpansion::add(const Partition& shape, std::int64_t coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(shape, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::int64_t SchurExpansion::coefficient(const Partition& shape) const {
    auto it = terms_.find(shape);
    return it == terms_.end() ? 0 : it->second;
}

SchurExpansion schur_decompose(const MonomialPolynomial& p) {
    SchurExpansion out;
    if (p.is_zero())
        return out;
    if (!p.is_homogeneous())
        throw NotHomogeneous("polynomial mixes several total degrees");
    if (!is_symmetric(p))
        throw NotSymmetric("polynomial is not invariant under permutations of its variables");

    MonomialPolynomial rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().rbegin();
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
            throw NotSymmetric("leading monomial " + monomial_to_string(lead) +
                               " has no weakly decreasing exponents");
        std::vector<Partition::value_type> parts(lead.begin(), lead.end());
        Partition shape(parts);
        const std::int64_t coeff = c;
        out.add(shape, coeff);
        // s_lambda has leading monomial x^lambda with coefficient 1, so the
        // leading term strictly drops every round.
        rest = rest - poly_scale(schur_polynomial(shape, p.nvars()), coeff);
    }
    return out;
}

MonomialPolynomial reconstruct(const SchurExpansion& e, int nvars) {
    MonomialPolynomial out(nvars);
    for (const auto& [shape, c] : e.terms())
        out = out + poly_scale(schur_polynomial(shape, nvars), c);
    return out;
}

std::vector<Exponents> plethysm_alphabet(const Partition& inner, int nvars) {
    auto s = schur_polynomial(inner, nvars);
    std::vector<Exponents> alphabet;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
        for (std::int64_t k = 0; k < it->second; ++k)
            alphabet.push_back(it->first);
    return alphabet;
}

MonomialPolynomial plethysm(const Partition& outer, const Partition& inner, int nvars) {
    MonomialPolynomial out(nvars);
    const auto alphabet = plethysm_alphabet(inner, nvars);
    const auto m = static_cast<std::int64_t>(alphabet.size());
    const auto width = static_cast<std::size_t>(nvars);

    // The outer Schur function in m variables is never built: each outer
    // tableau contributes the product of the alphabet letters it selects.
    SsytEnumerator tableaux(outer, m);
    Exponents e(width);
    while (tableaux.advance()) {
        std::fill(e.begin(), e.end(), 0);
        for (auto letter : tableaux.current()) {
            const auto& mono = alphabet[static_cast<std::size_t>(letter - 1)];
            for (std::size_t v = 0; v < width; ++v)
                e[v] += mono[v];
        }
        out.add_term(e, 1);
    }
    return out;
}

std::string to_string(const SchurExpansion& e) {
    std::string out;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        out += std::to_string(it->second) + " s[" + to_string(it->first) + "]\n";
    return out;
}

}  // namespace schurkit
