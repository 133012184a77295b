#include "fsq/poly.hpp"

namespace fsq {

Polynomial Polynomial::monomial(std::size_t nvars, const Exponents& exps, Scalar coeff) {
    if (exps.size() != nvars) throw std::invalid_argument("exponent count mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial p(nvars);
    p.add_term(exps, coeff);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return monomial(nvars, e);
}

Polynomial Polynomial::constant(std::size_t nvars, Scalar c) {
    return monomial(nvars, Exponents(nvars, 0), std::move(c));
}

void Polynomial::add_term(const Exponents& exps, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial out(nvars_);
    Exponents sum(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs,
                                  std::size_t target_nvars) const {
    if (subs.size() != nvars_) throw std::invalid_argument("substitution count mismatch");
    Polynomial out(target_nvars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target_nvars, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * subs[i];
        out = out + term;
    }
    return out;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
    Scalar total(0);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

int Polynomial::homogeneous_degree(const std::vector<std::size_t>& vars, int fallback) const {
    if (terms_.empty()) return fallback;
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (auto v : vars) d += e[v];
        if (deg == -1)
            deg = d;
        else if (deg != d)
            throw std::domain_error("polynomial is not homogeneous in the given variables");
    }
    return deg;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += scalar_to_string(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            out += "*" + var_names.at(i);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace fsq
