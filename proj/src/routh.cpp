#include "piezonode/routh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "piezonode/format.hpp"

namespace piezonode {

namespace {

double entry(const std::vector<std::vector<double>>& rows, std::size_t i, std::size_t j) {
    return j < rows[i].size() ? rows[i][j] : 0.0;
}

bool all_zero(const std::vector<double>& row) {
    return std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; });
}

int count_sign_changes(const std::vector<double>& column, std::size_t from) {
    int changes = 0;
    for (std::size_t i = from; i + 1 < column.size(); ++i)
        if ((column[i] > 0.0) != (column[i + 1] > 0.0)) ++changes;
    return changes;
}

}  // namespace

std::vector<double> RouthTable::first_column() const {
    std::vector<double> col;
    col.reserve(rows.size());
    for (const auto& row : rows) col.push_back(row.empty() ? 0.0 : row[0]);
    return col;
}

std::string RouthTable::to_text() const {
    std::ostringstream out;
    const std::size_t n = degree;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string label = "s^" + std::to_string(n - i);
        out << label << (label.size() < 4 ? std::string(4 - label.size(), ' ') : " ") << "|";
        for (double v : rows[i]) {
            std::string cell = fmt_sig(v, 6);
            out << ' ' << cell << std::string(cell.size() < 13 ? 13 - cell.size() : 1, ' ');
        }
        out << '\n';
    }
    for (const auto& note : special_case_notes) out << "note: " << note << '\n';
    return out.str();
}

RouthTable routh_table(const Polynomial& charpoly) {
    if (charpoly.is_zero()) throw std::invalid_argument("Routh table of the zero polynomial is undefined");
    const std::size_t n = charpoly.degree();
    if (n < 1) throw std::invalid_argument("Routh table needs degree >= 1");

    const Polynomial p = charpoly.leading() < 0.0 ? -charpoly : charpoly;
    const double eps = 1e-9 * p.max_abs_coeff();

    RouthTable table;
    table.degree = n;
    table.rows.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) table.rows[i].assign((n - i) / 2 + 1, 0.0);

    for (std::size_t j = 0; j < table.rows[0].size(); ++j) table.rows[0][j] = p.coeff(n - 2 * j);
    for (std::size_t j = 0; j < table.rows[1].size(); ++j) table.rows[1][j] = p.coeff(n - 1 - 2 * j);

    // Zero-row and zero-pivot remedies, applied to each row as it is formed.
    auto resolve = [&](std::size_t i) {
        if (all_zero(table.rows[i])) {
            // Replace with the derivative of the auxiliary polynomial formed
            // from the row above (powers s^{n-i+1}, s^{n-i-1}, ...).
            const std::size_t aux_degree = n - i + 1;
            std::vector<double> aux_coeffs(aux_degree + 1, 0.0);
            for (std::size_t j = 0; j < table.rows[i - 1].size(); ++j) aux_coeffs[2 * j] = table.rows[i - 1][j];
            Polynomial aux(std::move(aux_coeffs));
            const Polynomial daux = aux.derivative();
            for (std::size_t j = 0; j < table.rows[i].size(); ++j) table.rows[i][j] = daux.coeff(n - i - 2 * j);
            table.special_case_notes.push_back("row s^" + std::to_string(n - i) +
                                               " was all zero; replaced by the derivative of the auxiliary "
                                               "polynomial formed from the row above");
            table.auxiliary_polynomials.push_back(std::move(aux));
            table.auxiliary_row_powers.push_back(n - i);
        }
        if (table.rows[i][0] == 0.0) {
            table.rows[i][0] = eps;
            table.epsilon_used = true;
            table.special_case_notes.push_back("zero pivot in row s^" + std::to_string(n - i) +
                                               " replaced by epsilon = " + fmt_sig(eps, 6) +
                                               "; the verdict is marginal-adjacent");
        }
    };

    resolve(1);
    for (std::size_t i = 2; i <= n; ++i) {
        const double pivot = table.rows[i - 1][0];
        for (std::size_t j = 0; j < table.rows[i].size(); ++j)
            table.rows[i][j] =
                (pivot * entry(table.rows, i - 2, j + 1) - entry(table.rows, i - 2, 0) * entry(table.rows, i - 1, j + 1)) /
                pivot;
        resolve(i);
    }
    return table;
}

StabilityVerdict is_stable(const Polynomial& charpoly) {
    const RouthTable table = routh_table(charpoly);

    StabilityVerdict v;
    v.first_column = table.first_column();
    v.epsilon_used = table.epsilon_used;
    v.notes = table.special_case_notes;
    v.sign_changes = count_sign_changes(v.first_column, 0);

    if (std::any_of(v.first_column.begin(), v.first_column.end(), [](double x) { return x == 0.0; })) {
        v.kind = StabilityKind::Marginal;
        v.notes.push_back("unresolved zero in the first column");
        return v;
    }

    // An auxiliary polynomial's roots are symmetric about the origin; those
    // not accounted for as right-half-plane roots (by the sign changes from
    // its row downward) sit on the imaginary axis.
    bool axis_roots = false;
    for (std::size_t k = 0; k < table.auxiliary_polynomials.size(); ++k) {
        const std::size_t zero_row = table.degree - table.auxiliary_row_powers[k];
        const int rhp = count_sign_changes(v.first_column, zero_row - 1);
        const auto aux_degree = static_cast<int>(table.auxiliary_polynomials[k].degree());
        if (aux_degree - 2 * rhp > 0) axis_roots = true;
    }

    if (axis_roots) {
        v.kind = StabilityKind::Marginal;
        v.notes.push_back("auxiliary polynomial has imaginary-axis roots");
    } else if (v.sign_changes > 0) {
        v.kind = StabilityKind::Unstable;
    } else {
        v.kind = StabilityKind::Stable;
        v.stable = true;
    }
    return v;
}

}  // namespace piezonode
