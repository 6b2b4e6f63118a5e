#include "holseries/poincare.hpp"

#include <sstream>

namespace holseries {

PoincarePolynomial PoincarePolynomial::projective_space(int m) {
    PoincarePolynomial p;
    for (int i = 0; i <= m; ++i) p.set(2 * i, 1);
    return p;
}

PoincarePolynomial PoincarePolynomial::one_plus_x_pow(int e) {
    PoincarePolynomial base;
    base.set(0, 1);
    base.set(1, 1);
    PoincarePolynomial r = one();
    for (int i = 0; i < e; ++i) r = poly_mul(r, base);
    return r;
}

void PoincarePolynomial::set(int degree, std::int64_t dim) {
    if (degree < 0) throw parameter_error("negative degree in PoincarePolynomial");
    if (dim < 0) throw consistency_error("negative dimension in PoincarePolynomial");
    if (dim == 0)
        c_.erase(degree);
    else
        c_[degree] = dim;
}

void PoincarePolynomial::add_to(int degree, std::int64_t dim) {
    set(degree, coeff(degree) + dim);
}

std::int64_t PoincarePolynomial::total() const {
    std::int64_t t = 0;
    for (auto& [d, v] : c_) t += v;
    return t;
}

PoincarePolynomial PoincarePolynomial::shifted(int degree_shift) const {
    PoincarePolynomial r;
    for (auto& [d, v] : c_) r.set(d + degree_shift, v);
    return r;
}

PoincarePolynomial poly_add(const PoincarePolynomial& p, const PoincarePolynomial& q) {
    PoincarePolynomial r = p;
    for (auto& [d, v] : q.c_) r.add_to(d, v);
    return r;
}

PoincarePolynomial poly_mul(const PoincarePolynomial& p, const PoincarePolynomial& q) {
    PoincarePolynomial r;
    for (auto& [d1, v1] : p.c_)
        for (auto& [d2, v2] : q.c_) r.add_to(d1 + d2, v1 * v2);
    return r;
}

PoincarePolynomial poly_sub_checked(const PoincarePolynomial& p,
                                    const PoincarePolynomial& q) {
    PoincarePolynomial r = p;
    for (auto& [d, v] : q.c_) {
        std::int64_t nv = r.coeff(d) - v;
        if (nv < 0)
            throw consistency_error("negative coefficient at degree " +
                                    std::to_string(d) + " in checked difference");
        r.set(d, nv);
    }
    return r;
}

PoincarePolynomial poly_truncate(const PoincarePolynomial& p, int degree_bound) {
    PoincarePolynomial r;
    for (auto& [d, v] : p.c_)
        if (d <= degree_bound) r.set(d, v);
    return r;
}

bool poly_leq(const PoincarePolynomial& p, const PoincarePolynomial& q) {
    for (auto& [d, v] : p.c_)
        if (v > q.coeff(d)) return false;
    return true;
}

std::string PoincarePolynomial::to_text() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, v] : c_) {
        if (!first) os << " + ";
        first = false;
        if (d == 0) {
            os << v;
        } else {
            if (v != 1) os << v;
            os << "x";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

}  // namespace holseries
