#pragma once

#include <stdexcept>
#include <string>

namespace qhowe {

// Exact division in Z[q,q^-1] (or QQ[z]) was requested but no exact quotient
// exists. In this library that always signals a violated integrality
// property, never a recoverable condition.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// A matrix/fraction inversion failed (zero determinant, zero denominator).
struct Singular : std::runtime_error {
    explicit Singular(const std::string& what) : std::runtime_error(what) {}
};

// A lattice does not satisfy the chart membership conditions required by the
// requested coordinate extraction.
struct NotInChart : std::runtime_error {
    explicit NotInChart(const std::string& what) : std::runtime_error(what) {}
};

// The Demazure-Lusztig calibration search exhausted its candidate set without
// finding parameters that satisfy the relation battery. Seeing this thrown
// from the documented candidate set would falsify the realization claim.
struct NoValidParams : std::runtime_error {
    explicit NoValidParams(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qhowe
