#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schurkit/partition.hpp"
#include "schurkit/polynomial.hpp"

namespace schurkit {

/// s_lambda(x1..x_nvars): the sum of x^T over semi-standard tableaux T of
/// the shape with entries at most nvars. Zero when l(shape) > nvars.
MonomialPolynomial schur_polynomial(const Partition& shape, int nvars);

/// Fixed by every adjacent transposition x_i <-> x_{i+1}.
bool is_symmetric(const MonomialPolynomial& p);

/// A linear combination of Schur functions with nonzero integer
/// coefficients.
class SchurExpansion {
public:
    using Terms = std::map<Partition, std::int64_t>;

    void add(const Partition& shape, std::int64_t coeff);
    std::int64_t coefficient(const Partition& shape) const;
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    Terms terms_;
};

/// Writes a symmetric homogeneous polynomial in the Schur basis by
/// repeatedly peeling off the lexicographically leading monomial.
/// Throws NotHomogeneous or NotSymmetric.
SchurExpansion schur_decompose(const MonomialPolynomial& p);

/// sum of c * s_lambda(x1..x_nvars).
MonomialPolynomial reconstruct(const SchurExpansion& e, int nvars);

/// Monomials of s_inner(x1..x_nvars), leading first, each repeated by its
/// coefficient: the alphabet substituted into the outer Schur function.
std::vector<Exponents> plethysm_alphabet(const Partition& inner, int nvars);

/// s_outer[s_inner] in nvars variables: s_outer evaluated at the monomials
/// of s_inner, streamed tableau by tableau.
MonomialPolynomial plethysm(const Partition& outer, const Partition& inner, int nvars);

/// One term per line, largest partition first: `c s[3,2,1]`.
std::string to_string(const SchurExpansion& e);

}  // namespace schurkit
