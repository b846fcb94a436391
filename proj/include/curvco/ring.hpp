#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvco {

// Exact coefficient ring: the integers or a prime field Z/p with p < 2^16.
// All arithmetic is exact; integer overflow raises instead of wrapping.
class CoeffRing {
  public:
    enum class Kind { Integers, PrimeField };

    static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
    static CoeffRing prime_field(int64_t p);

    Kind kind() const { return kind_; }
    int64_t modulus() const { return p_; }
    bool is_field() const { return kind_ == Kind::PrimeField; }

    int64_t normalize(int64_t v) const {
        if (kind_ == Kind::Integers) return v;
        int64_t r = v % p_;
        return r < 0 ? r + p_ : r;
    }

    int64_t add(int64_t a, int64_t b) const;
    int64_t sub(int64_t a, int64_t b) const;
    int64_t mul(int64_t a, int64_t b) const;
    int64_t neg(int64_t a) const;
    // Multiplicative inverse; over Z only +-1 are invertible.
    int64_t inv(int64_t a) const;

    bool operator==(const CoeffRing& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const CoeffRing& o) const { return !(*this == o); }

    std::string describe() const;

  private:
    CoeffRing(Kind k, int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    int64_t p_;
};

bool is_prime_u16(int64_t p);

} // namespace curvco
