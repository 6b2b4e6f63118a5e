#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holseries/errors.hpp"
#include "holseries/rational.hpp"

namespace holseries {

// A square-free monomial in e_1..e_{2g}, encoded as a bitmask over 2g bits
// (bit i-1 set means e_i is present). Degree is the popcount, and the
// numeric order on masks is the canonical basis order used everywhere.
using Mask = std::uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

// Sign of sorting the concatenation (a ascending, b ascending) into one
// ascending sequence; 0 when the index sets overlap.
inline int koszul_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int inversions = 0;
    Mask bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

std::string mask_to_string(Mask m);

// Masks of given degree over two_g generators, ascending numeric order.
std::vector<Mask> monomials_of_degree(int two_g, int degree);

// Exact rational linear combination of square-free monomials in
// e_1..e_{2g}. Zero coefficients are never stored.
class ExteriorElement {
  public:
    explicit ExteriorElement(int generator_count = 0) : gens_(generator_count) {}

    static ExteriorElement monomial(int generator_count, Mask m,
                                    const Rational& c = Rational(1));

    int generator_count() const { return gens_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Mask m) const;
    const std::map<Mask, Rational>& terms() const { return terms_; }

    void add_term(Mask m, const Rational& c);
    ExteriorElement homogeneous_part(int degree) const;
    // -1 when zero; throws if the element is not homogeneous
    int degree() const;

    ExteriorElement operator+(const ExteriorElement& o) const;
    ExteriorElement operator-(const ExteriorElement& o) const;
    ExteriorElement scaled(const Rational& c) const;

    bool operator==(const ExteriorElement& o) const {
        return gens_ == o.gens_ && terms_ == o.terms_;
    }

    std::string to_string() const;

  private:
    int gens_;
    std::map<Mask, Rational> terms_;
};

// Bilinear product with the Koszul sign; e_i e_i = 0, e_i e_j = -e_j e_i.
ExteriorElement ext_mul(const ExteriorElement& a, const ExteriorElement& b);

}  // namespace holseries
