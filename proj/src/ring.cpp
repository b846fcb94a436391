#include "curvco/ring.hpp"

namespace curvco {

bool is_prime_u16(int64_t p) {
    if (p < 2 || p >= (1 << 16)) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CoeffRing CoeffRing::prime_field(int64_t p) {
    if (!is_prime_u16(p))
        throw std::invalid_argument("prime_field: p must be a prime < 2^16, got " + std::to_string(p));
    return CoeffRing(Kind::PrimeField, p);
}

namespace {
[[noreturn]] void overflow() { throw std::overflow_error("integer coefficient overflow"); }
} // namespace

int64_t CoeffRing::add(int64_t a, int64_t b) const {
    if (kind_ == Kind::PrimeField) return normalize(a + b);
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

int64_t CoeffRing::sub(int64_t a, int64_t b) const {
    if (kind_ == Kind::PrimeField) return normalize(a - b);
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow();
    return r;
}

int64_t CoeffRing::mul(int64_t a, int64_t b) const {
    if (kind_ == Kind::PrimeField) return normalize(normalize(a) * normalize(b));
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

int64_t CoeffRing::neg(int64_t a) const {
    if (kind_ == Kind::PrimeField) return normalize(-a);
    int64_t r;
    if (__builtin_sub_overflow(int64_t(0), a, &r)) overflow();
    return r;
}

int64_t CoeffRing::inv(int64_t a) const {
    if (kind_ == Kind::Integers) {
        if (a == 1 || a == -1) return a;
        throw std::domain_error("inv: not a unit in Z");
    }
    a = normalize(a);
    if (a == 0) throw std::domain_error("inv: zero in Z/p");
    // extended Euclid
    int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return normalize(t);
}

std::string CoeffRing::describe() const {
    return kind_ == Kind::Integers ? "Z" : "Z/" + std::to_string(p_);
}

} // namespace curvco
