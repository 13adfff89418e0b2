#pragma once

#include <stdexcept>
#include <string>

namespace riffle {

// Exhaustive enumeration was asked for a deck larger than the configured limit.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested state cannot occur (no shuffle outcome is consistent with it).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// A series operation left the representable class (prefactor mismatch,
// unrepresentable product, ansatz that cannot cancel all orders, ...).
class series_error : public std::runtime_error {
public:
    explicit series_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riffle
