#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace piezonode {

/// Real polynomial with coefficients stored in descending powers:
/// coeffs()[0] is the leading coefficient. The zero polynomial is
/// represented as the single coefficient 0.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> c) : coeffs_(c) { trim(); }
    explicit Polynomial(std::vector<double> c) : coeffs_(std::move(c)) { trim(); }

    const std::vector<double>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    double leading() const { return coeffs_.front(); }
    /// Coefficient of s^0, i.e. the value at s = 0.
    double constant_term() const { return coeffs_.back(); }
    /// Coefficient of s^k (0 for k beyond the degree).
    double coeff(std::size_t k) const;

    double operator()(double s) const;
    std::complex<double> operator()(std::complex<double> s) const;

    Polynomial derivative() const;
    double max_abs_coeff() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double k, const Polynomial& p);
    friend Polynomial operator-(const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<double> coeffs_;
    void trim();
};

}  // namespace piezonode
