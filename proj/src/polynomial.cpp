#include "piezonode/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace piezonode {

void Polynomial::trim() {
    if (coeffs_.empty()) {
        coeffs_ = {0.0};
        return;
    }
    std::size_t lead = 0;
    while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0.0) ++lead;
    if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
}

double Polynomial::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) return 0.0;
    return coeffs_[coeffs_.size() - 1 - k];
}

double Polynomial::operator()(double s) const {
    double acc = 0.0;
    for (double c : coeffs_) acc = acc * s + c;
    return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (double c : coeffs_) acc = acc * s + c;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    const auto n = coeffs_.size() - 1;  // degree
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
        d[i] = coeffs_[i] * static_cast<double>(n - i);
    return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto na = a.coeffs_.size();
    const auto nb = b.coeffs_.size();
    std::vector<double> out(std::max(na, nb), 0.0);
    const auto n = out.size();
    for (std::size_t i = 0; i < na; ++i) out[n - na + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < nb; ++i) out[n - nb + i] += b.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& p) {
    std::vector<double> out(p.coeffs_.size());
    std::transform(p.coeffs_.begin(), p.coeffs_.end(), out.begin(), [](double c) { return -c; });
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(double k, const Polynomial& p) {
    std::vector<double> out(p.coeffs_.size());
    std::transform(p.coeffs_.begin(), p.coeffs_.end(), out.begin(), [k](double c) { return k * c; });
    return Polynomial(std::move(out));
}

}  // namespace piezonode
