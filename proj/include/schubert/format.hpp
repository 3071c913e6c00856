#ifndef SCHUBERT_FORMAT_HPP
#define SCHUBERT_FORMAT_HPP

#include "schubert/diagram.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace schubert {

/// Maps a 1-based variable index to its display name.
using VariableNamer = std::function<std::string(int)>;

/// "x1", "x2", ...
std::string default_variable_name(int index);

/// Plain-text polynomial: terms in ascending total degree, descending
/// lexicographic within a degree, e.g. "x1 + x2 - x1*x2".
std::string to_text(const MultiPoly& p, const VariableNamer& namer = default_variable_name);

/// Plain-text univariate polynomial in ascending degree, e.g. "1 - t^2".
std::string to_text(const UniPoly& p, std::string_view var = "t");

/// Plain-text rational-coefficient polynomial, e.g. "1/2*k + 1/2*k^2".
std::string to_text(const RatUniPoly& p, std::string_view var = "k");

/// n x n grid: 'o' marks the permutation dots, '#' the Rothe diagram boxes,
/// essential boxes show their rank value (single digit; '#' past 9), '.'
/// everything else.
std::string diagram_grid(const Permutation& w, int n);

} // namespace schubert

#endif
