#pragma once

#include <cstdint>
#include <stdexcept>

namespace tb {

/// Arithmetic in the prime field F_p.  The prime is a process-wide setting
/// (default 32003), configurable once at startup via the CLI flag or the
/// CCC_FIELD_PRIME environment variable.
class field {
public:
    static std::int64_t prime() { return prime_; }

    static void set_prime(std::int64_t p) {
        if (p < 2) throw std::invalid_argument("field prime must be >= 2");
        for (std::int64_t q = 2; q * q <= p; ++q)
            if (p % q == 0) throw std::invalid_argument("field characteristic must be prime");
        prime_ = p;
    }

    static std::int64_t norm(std::int64_t x) {
        std::int64_t r = x % prime_;
        return r < 0 ? r + prime_ : r;
    }
    static std::int64_t add(std::int64_t a, std::int64_t b) { return norm(a + b); }
    static std::int64_t sub(std::int64_t a, std::int64_t b) { return norm(a - b); }
    static std::int64_t mul(std::int64_t a, std::int64_t b) { return norm(norm(a) * norm(b)); }
    static std::int64_t neg(std::int64_t a) { return norm(-a); }

    static std::int64_t pow(std::int64_t a, std::int64_t e) {
        a = norm(a);
        std::int64_t r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    static std::int64_t inv(std::int64_t a) {
        a = norm(a);
        if (a == 0) throw std::domain_error("division by zero in F_p");
        return pow(a, prime_ - 2);
    }

private:
    static inline std::int64_t prime_ = 32003;
};

} // namespace tb
