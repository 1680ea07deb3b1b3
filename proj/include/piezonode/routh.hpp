#pragma once

#include <string>
#include <vector>

#include "piezonode/polynomial.hpp"

namespace piezonode {

/// Routh array of a characteristic polynomial, one row per power of s down
/// to s^0. Special-case handling (epsilon substitution for a lone zero
/// pivot, auxiliary-polynomial replacement of an all-zero row) is annotated,
/// never applied silently.
struct RouthTable {
    std::size_t degree = 0;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> special_case_notes;
    bool epsilon_used = false;
    std::vector<Polynomial> auxiliary_polynomials;
    // Power of s at the row where each auxiliary polynomial was formed.
    std::vector<std::size_t> auxiliary_row_powers;

    std::vector<double> first_column() const;
    std::string to_text() const;  // aligned plain-text rendering
};

enum class StabilityKind { Stable, Unstable, Marginal };

struct StabilityVerdict {
    StabilityKind kind = StabilityKind::Marginal;
    bool stable = false;
    int sign_changes = 0;  // right-half-plane root count
    std::vector<double> first_column;
    bool epsilon_used = false;  // verdict rests on an epsilon substitution ("marginal-adjacent")
    std::vector<std::string> notes;
};

/// Builds the Routh array. Requires degree >= 1; a negative leading
/// coefficient is handled by negating the whole polynomial first.
RouthTable routh_table(const Polynomial& charpoly);

/// Verdict from the first-column sign changes. Imaginary-axis roots
/// (detected through the auxiliary polynomial of a zero row) yield the
/// Marginal verdict rather than stable/unstable.
StabilityVerdict is_stable(const Polynomial& charpoly);

}  // namespace piezonode
