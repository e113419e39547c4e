#pragma once

#include <string>
#include <vector>

#include "cyq/rational.hpp"

namespace cyq::reference {

/// A printed normalized series scale·t_var = c_0 + c_1 q + ... and the constant that
/// the positivity conjecture subtracts from it.
struct NormalizedTable {
    std::string label;
    int var;
    Rational scale;
    std::vector<Rational> coeffs;
    Rational shift;
};

/// Seven normalized quintic series through q^10.
const std::vector<NormalizedTable> &quintic_tables();

/// Yukawa constant term followed by n_1 .. n_10.
const std::vector<Rational> &instanton_list();

/// 3125·j = 1/q + c_0 + c_1 q + ... + c_9 q^9: returns c_0 .. c_9.
const std::vector<Rational> &j_coefficients();

} // namespace cyq::reference
