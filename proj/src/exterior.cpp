#include "holseries/exterior.hpp"

#include <sstream>

namespace holseries {

std::string mask_to_string(Mask m) {
    if (m == 0) return "1";
    std::ostringstream os;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        os << "e" << (i + 1);
    }
    return os.str();
}

std::vector<Mask> monomials_of_degree(int two_g, int degree) {
    std::vector<Mask> out;
    if (degree < 0 || degree > two_g) return out;
    Mask top = (two_g >= 32) ? ~Mask(0) : ((Mask(1) << two_g) - 1);
    for (Mask m = 0; m <= top; ++m) {
        if (mask_degree(m) == degree) out.push_back(m);
        if (m == top) break;
    }
    return out;
}

ExteriorElement ExteriorElement::monomial(int generator_count, Mask m,
                                          const Rational& c) {
    ExteriorElement e(generator_count);
    e.add_term(m, c);
    return e;
}

Rational ExteriorElement::coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorElement::add_term(Mask m, const Rational& c) {
    if (gens_ < 32 && (m >> gens_) != 0)
        throw parameter_error("monomial index beyond generator count");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!is_zero(c)) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

ExteriorElement ExteriorElement::homogeneous_part(int degree) const {
    ExteriorElement r(gens_);
    for (auto& [m, c] : terms_)
        if (mask_degree(m) == degree) r.add_term(m, c);
    return r;
}

int ExteriorElement::degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) {
        int md = mask_degree(m);
        if (d == -1)
            d = md;
        else if (d != md)
            throw consistency_error("degree() on a non-homogeneous element");
    }
    return d;
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
    if (gens_ != o.gens_) throw parameter_error("mismatched generator counts");
    ExteriorElement r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const {
    if (gens_ != o.gens_) throw parameter_error("mismatched generator counts");
    ExteriorElement r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ExteriorElement ExteriorElement::scaled(const Rational& c) const {
    ExteriorElement r(gens_);
    if (is_zero(c)) return r;
    for (auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

ExteriorElement ext_mul(const ExteriorElement& a, const ExteriorElement& b) {
    if (a.generator_count() != b.generator_count())
        throw parameter_error("ext_mul: mismatched generator counts");
    ExteriorElement r(a.generator_count());
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            int s = koszul_sign(ma, mb);
            if (s == 0) continue;
            r.add_term(ma | mb, ca * cb * s);
        }
    }
    return r;
}

std::string ExteriorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != Rational(1) || m == 0) os << rational_to_string(c);
        if (m != 0) {
            if (c != Rational(1)) os << "*";
            os << mask_to_string(m);
        }
    }
    return os.str();
}

}  // namespace holseries
