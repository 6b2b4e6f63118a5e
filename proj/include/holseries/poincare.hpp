#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "holseries/errors.hpp"

namespace holseries {

// Finite table degree -> dimension with no stored zeros and no negative
// entries. The universal output currency of the library.
class PoincarePolynomial {
  public:
    PoincarePolynomial() = default;

    static PoincarePolynomial one() {
        PoincarePolynomial p;
        p.set(0, 1);
        return p;
    }
    // 1 + x^2 + ... + x^{2m}, the series of a complex projective m-space.
    static PoincarePolynomial projective_space(int m);
    // (1 + x)^e
    static PoincarePolynomial one_plus_x_pow(int e);

    std::int64_t coeff(int degree) const {
        auto it = c_.find(degree);
        return it == c_.end() ? 0 : it->second;
    }

    void set(int degree, std::int64_t dim);
    void add_to(int degree, std::int64_t dim);

    bool is_zero() const { return c_.empty(); }
    int max_degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    int min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
    std::int64_t total() const;

    const std::map<int, std::int64_t>& coefficients() const { return c_; }

    PoincarePolynomial shifted(int degree_shift) const;

    friend PoincarePolynomial poly_add(const PoincarePolynomial& p,
                                       const PoincarePolynomial& q);
    friend PoincarePolynomial poly_mul(const PoincarePolynomial& p,
                                       const PoincarePolynomial& q);
    // p - q; throws consistency_error if any coefficient goes negative.
    friend PoincarePolynomial poly_sub_checked(const PoincarePolynomial& p,
                                               const PoincarePolynomial& q);
    friend PoincarePolynomial poly_truncate(const PoincarePolynomial& p,
                                            int degree_bound);
    // coefficientwise p <= q through the max degree of either argument
    friend bool poly_leq(const PoincarePolynomial& p, const PoincarePolynomial& q);

    bool operator==(const PoincarePolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const PoincarePolynomial& o) const { return c_ != o.c_; }

    // lowest degree first, explicit powers: "1 + 2x + x^2"
    std::string to_text() const;

  private:
    std::map<int, std::int64_t> c_;
};

PoincarePolynomial poly_add(const PoincarePolynomial& p, const PoincarePolynomial& q);
PoincarePolynomial poly_mul(const PoincarePolynomial& p, const PoincarePolynomial& q);
PoincarePolynomial poly_sub_checked(const PoincarePolynomial& p,
                                    const PoincarePolynomial& q);
PoincarePolynomial poly_truncate(const PoincarePolynomial& p, int degree_bound);
bool poly_leq(const PoincarePolynomial& p, const PoincarePolynomial& q);

}  // namespace holseries
