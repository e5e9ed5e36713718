#include "ballbound/polymatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ballbound {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = IntPoly::constant(1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (size != o.size) throw std::invalid_argument("matrix size mismatch");
    PolyMatrix out(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t l = 0; l < size; ++l) {
            const IntPoly& a = at(i, l);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < size; ++j) {
                const IntPoly& b = o.at(l, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (size != o.size) throw std::invalid_argument("matrix size mismatch");
    PolyMatrix out(size);
    for (std::size_t i = 0; i < entries.size(); ++i) out.entries[i] = entries[i] + o.entries[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (size != o.size) throw std::invalid_argument("matrix size mismatch");
    PolyMatrix out(size);
    for (std::size_t i = 0; i < entries.size(); ++i) out.entries[i] = entries[i] - o.entries[i];
    return out;
}

PolyMatrix PolyMatrix::scaled(const Int& c) const {
    PolyMatrix out(size);
    for (std::size_t i = 0; i < entries.size(); ++i) out.entries[i] = entries[i] * c;
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (size != o.size) return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!(entries[i] == o.entries[i])) return false;
    return true;
}

IntPoly PolyMatrix::trace() const {
    IntPoly t;
    for (std::size_t i = 0; i < size; ++i) t += at(i, i);
    return t;
}

int PolyMatrix::max_entry_bitsize() const {
    int b = 0;
    for (const auto& e : entries) b = std::max(b, bitsize(e));
    return b;
}

int PolyMatrix::max_degree_in(const std::string& var) const {
    int d = -1;
    for (const auto& e : entries) d = std::max(d, e.degree_in(var));
    return d;
}

int PolyMatrix::max_total_degree_in(const std::vector<std::string>& vars) const {
    int best = -1;
    for (const auto& e : entries) {
        if (e.is_zero()) continue;
        std::vector<std::size_t> idx;
        for (const auto& v : vars) {
            auto it = std::find(e.variables().begin(), e.variables().end(), v);
            if (it != e.variables().end())
                idx.push_back(static_cast<std::size_t>(it - e.variables().begin()));
        }
        for (const auto& [exps, c] : e.terms()) {
            int s = 0;
            for (std::size_t i : idx) s += static_cast<int>(exps[i]);
            best = std::max(best, s);
        }
    }
    return best;
}

}  // namespace ballbound
