#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsq/rational.hpp"

namespace fsq {

using Exponents = std::vector<int>;

// Polynomial in a fixed number of variables, exact rational coefficients.
// Exponents are nonnegative; terms with zero coefficient are never stored.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial monomial(std::size_t nvars, const Exponents& exps, Scalar coeff = Scalar(1));
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial constant(std::size_t nvars, Scalar c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    void add_term(const Exponents& exps, const Scalar& coeff);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(const Scalar& c) const;
    bool operator==(const Polynomial& rhs) const = default;

    // Substitutes subs[i] (a polynomial in the target variable set) for variable i.
    Polynomial substitute(const std::vector<Polynomial>& subs, std::size_t target_nvars) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Sum of exponents of the given variables, identical across all terms
    // (throws otherwise); `fallback` for the zero polynomial.
    int homogeneous_degree(const std::vector<std::size_t>& vars, int fallback = 0) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    std::size_t nvars_;
    std::map<Exponents, Scalar> terms_;
};

}  // namespace fsq
