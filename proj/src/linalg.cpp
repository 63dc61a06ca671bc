#include "steenrod/linalg.hpp"

namespace steenrod {

FqMatrix::FqMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    a_.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i)
        a_.push_back(field_.zero());
}

const FieldElement& FqMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw IndexRangeError("matrix index out of range");
    return a_[i * cols_ + j];
}

void FqMatrix::set(std::size_t i, std::size_t j, const FieldElement& value) {
    if (i >= rows_ || j >= cols_)
        throw IndexRangeError("matrix index out of range");
    if (value.field() != field_)
        throw FieldMismatchError();
    a_[i * cols_ + j] = value;
}

std::size_t FqMatrix::rank() const {
    std::vector<FieldElement> w = a_;
    auto at = [&](std::size_t i, std::size_t j) -> FieldElement& {
        return w[i * cols_ + j];
    };
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && at(pivot, col).is_zero())
            ++pivot;
        if (pivot == rows_)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(at(r, j), at(pivot, j));
        const FieldElement inv = at(r, col).inv();
        for (std::size_t j = col; j < cols_; ++j)
            at(r, j) = at(r, j) * inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, col).is_zero())
                continue;
            const FieldElement factor = at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                at(i, j) = at(i, j) - factor * at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace steenrod
