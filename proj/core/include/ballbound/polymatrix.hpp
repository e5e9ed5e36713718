#pragma once

#include "ballbound/intpoly.hpp"

#include <cstddef>
#include <vector>

namespace ballbound {

/// Square matrix with IntPoly entries (row-major).
struct PolyMatrix {
    std::size_t size = 0;
    std::vector<IntPoly> entries;

    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : size(n), entries(n * n) {}

    static PolyMatrix identity(std::size_t n);

    IntPoly& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }
    const IntPoly& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const Int& c) const;
    bool operator==(const PolyMatrix& o) const;

    IntPoly trace() const;

    int max_entry_bitsize() const;
    int max_degree_in(const std::string& var) const;
    /// Max joint total degree of the entries restricted to the given variables.
    int max_total_degree_in(const std::vector<std::string>& vars) const;
};

}  // namespace ballbound
