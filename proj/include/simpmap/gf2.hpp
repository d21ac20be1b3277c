#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace simpmap {

// Dense bit matrix over Z2, rows packed into 64-bit words. Only what the
// rank computations need.
class gf2_matrix {
public:
    gf2_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c) {
        data_[r * words_ + c / 64] |= (std::uint64_t{1} << (c % 64));
    }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }

    // destructive Gaussian elimination
    std::size_t rank() {
        std::size_t rk = 0;
        for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
            std::size_t pivot = rk;
            while (pivot < rows_ && !get(pivot, c)) ++pivot;
            if (pivot == rows_) continue;
            swap_rows(pivot, rk);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rk && get(r, c)) xor_rows(r, rk);
            ++rk;
        }
        return rk;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < words_; ++w)
            std::swap(data_[a * words_ + w], data_[b * words_ + w]);
    }
    void xor_rows(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words_; ++w)
            data_[dst * words_ + w] ^= data_[src * words_ + w];
    }

    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace simpmap
