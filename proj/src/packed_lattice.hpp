#pragma once

// Packed integer-lattice representation used by the sparse product kernels.
// A vector x with x * denom integral and inside the box [lo, hi] is encoded as
// sum_i (x_i*denom - lo_i) << shift_i. The encoding is additive modulo 2^64
// (code(a+b) = code(a) + code(b) - code(0)), so partial sums can be formed
// without unpacking as long as every final result stays inside the box.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rootchar/exact.hpp"

namespace rootchar::detail {

class PackedFrame {
public:
    /// lo/hi are box corners in scaled (integer) coordinates. Returns nullopt
    /// when the box does not fit 64 bits.
    static std::optional<PackedFrame> build(std::int64_t denom, const std::vector<Integer>& lo,
                                            const std::vector<Integer>& hi);

    std::size_t dim() const { return lo_.size(); }
    std::uint64_t zero() const { return zero_; }

    /// Scaled coordinates of v (v * denom), nullopt if they are not int64.
    std::optional<std::vector<std::int64_t>> scale(const Vector& v) const;
    std::uint64_t encode_scaled(std::span<const std::int64_t> x) const;
    std::uint64_t encode(const Vector& v) const;
    Vector decode(std::uint64_t code) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b - zero_; }

private:
    std::int64_t denom_ = 1;
    std::vector<std::int64_t> lo_;
    std::vector<unsigned> shift_;
    std::vector<std::uint64_t> mask_;
    std::uint64_t zero_ = 0;
};

std::optional<std::int64_t> small_denominator(std::span<const Vector> vectors);

}  // namespace rootchar::detail
