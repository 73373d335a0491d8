#include "packed_lattice.hpp"

#include <bit>

namespace rootchar::detail {

std::optional<std::int64_t> small_denominator(std::span<const Vector> vectors) {
    const Integer d = common_denominator(vectors);
    if (!d.fits_slong_p()) return std::nullopt;
    return d.get_si();
}

std::optional<PackedFrame> PackedFrame::build(std::int64_t denom, const std::vector<Integer>& lo,
                                              const std::vector<Integer>& hi) {
    PackedFrame f;
    f.denom_ = denom;
    unsigned used = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!lo[i].fits_slong_p() || !hi[i].fits_slong_p()) return std::nullopt;
        const Integer span = hi[i] - lo[i];
        if (!span.fits_ulong_p()) return std::nullopt;
        const unsigned width = span == 0 ? 0 : static_cast<unsigned>(std::bit_width(span.get_ui()));
        if (used + width > 64) return std::nullopt;
        f.lo_.push_back(lo[i].get_si());
        f.shift_.push_back(used);
        f.mask_.push_back(width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1));
        used += width;
    }
    std::vector<std::int64_t> origin(lo.size(), 0);
    f.zero_ = f.encode_scaled(origin);
    return f;
}

std::optional<std::vector<std::int64_t>> PackedFrame::scale(const Vector& v) const {
    std::vector<std::int64_t> x(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const Rational s = v[i] * Rational(static_cast<long>(denom_));
        if (!s.is_integer() || !s.numerator().fits_slong_p()) return std::nullopt;
        x[i] = s.numerator().get_si();
    }
    return x;
}

std::uint64_t PackedFrame::encode_scaled(std::span<const std::int64_t> x) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto field = static_cast<std::uint64_t>(x[i]) - static_cast<std::uint64_t>(lo_[i]);
        code += shift_[i] >= 64 ? 0 : (field << shift_[i]);
    }
    return code;
}

std::uint64_t PackedFrame::encode(const Vector& v) const {
    auto x = scale(v);
    if (!x) throw InternalInconsistency("packed lattice: vector outside the frame");
    return encode_scaled(*x);
}

Vector PackedFrame::decode(std::uint64_t code) const {
    Vector v(lo_.size());
    const Rational d(static_cast<long>(denom_));
    for (std::size_t i = 0; i < lo_.size(); ++i) {
        const std::uint64_t field = shift_[i] >= 64 ? 0 : ((code >> shift_[i]) & mask_[i]);
        const std::int64_t x = static_cast<std::int64_t>(field) + lo_[i];
        v[i] = d == 1 ? Rational(static_cast<long>(x)) : Rational(static_cast<long>(x)) / d;
    }
    return v;
}

}  // namespace rootchar::detail
