#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schurkit {

/// Exponent tuple of a monomial, one entry per variable.
using Exponents = std::vector<int>;

/// Sparse polynomial in x1..x_nvars with 64-bit integer coefficients.
/// Zero coefficients are never stored; overflow throws OverflowError.
class MonomialPolynomial {
public:
    using Terms = std::map<Exponents, std::int64_t>;

    /// Zero polynomial. Throws ArityMismatch unless nvars >= 1.
    explicit MonomialPolynomial(int nvars);

    static MonomialPolynomial monomial(int nvars, Exponents e, std::int64_t coeff = 1);
    /// x_{index}, 1-based.
    static MonomialPolynomial variable(int nvars, int index);

    int nvars() const noexcept { return nvars_; }
    /// Sorted lexicographically ascending; iterate in reverse for the
    /// leading-term-first order.
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coefficient(const Exponents& e) const;

    /// Adds c * x^e. Throws ArityMismatch on a wrong tuple length and
    /// EntryOutOfRange on a negative exponent.
    void add_term(const Exponents& e, std::int64_t c);

    /// Sum of all coefficients.
    std::int64_t coefficient_mass() const;
    /// Common total degree; nullopt for the zero polynomial or when the
    /// terms differ in degree.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    friend bool operator==(const MonomialPolynomial&, const MonomialPolynomial&) = default;

private:
    int nvars_;
    Terms terms_;
};

MonomialPolynomial poly_add(const MonomialPolynomial& p, const MonomialPolynomial& q);
MonomialPolynomial poly_scale(const MonomialPolynomial& p, std::int64_t c);
MonomialPolynomial poly_mul(const MonomialPolynomial& p, const MonomialPolynomial& q);

inline MonomialPolynomial operator+(const MonomialPolynomial& p, const MonomialPolynomial& q) {
    return poly_add(p, q);
}
inline MonomialPolynomial operator-(const MonomialPolynomial& p, const MonomialPolynomial& q) {
    return poly_add(p, poly_scale(q, -1));
}
inline MonomialPolynomial operator*(const MonomialPolynomial& p, const MonomialPolynomial& q) {
    return poly_mul(p, q);
}
inline MonomialPolynomial operator*(std::int64_t c, const MonomialPolynomial& p) {
    return poly_scale(p, c);
}

/// "x1^2 x2" style rendering of a monomial; "1" for the constant monomial.
std::string monomial_to_string(const Exponents& e);

/// One term per line, leading term first: `c * x1^a1 x2^a2 ...` with unit
/// exponents and zero powers elided. The zero polynomial renders as "0".
std::string to_string(const MonomialPolynomial& p);

/// Parses the text produced by to_string. When nvars is 0 the arity is the
/// largest variable index that appears (at least 1).
MonomialPolynomial parse_polynomial(std::string_view text, int nvars = 0);

}  // namespace schurkit
