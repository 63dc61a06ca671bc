#ifndef STEENROD_LINALG_HPP
#define STEENROD_LINALG_HPP

#include <cstddef>
#include <vector>

#include "steenrod/galois.hpp"

namespace steenrod {

/// Dense matrix over F_q, just big enough for rank computations on the
/// desk-scale systems that show up in basis and embedding checks.
class FqMatrix {
public:
    FqMatrix(Field field, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const FieldElement& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const FieldElement& value);

    /// Rank by Gaussian elimination (exact).
    std::size_t rank() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

}  // namespace steenrod

#endif
