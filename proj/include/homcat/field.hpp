#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcat {

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint32_t p);

// Throws InputError unless p is a prime below 2^15.
void check_modulus(std::uint32_t p);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Element of F_p carrying its modulus.
class Fp {
  public:
    Fp(std::int64_t v, std::uint32_t p) : v_(reduce(v, p)), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    Fp operator+(Fp o) const { check(o); return {std::int64_t(v_) + o.v_, p_}; }
    Fp operator-(Fp o) const { check(o); return {std::int64_t(v_) - o.v_, p_}; }
    Fp operator*(Fp o) const { check(o); return {std::int64_t(std::uint64_t(v_) * o.v_ % p_), p_}; }
    Fp operator-() const { return {-std::int64_t(v_), p_}; }
    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
        return {inv_mod(v_, p_), p_};
    }
    Fp operator/(Fp o) const { return *this * o.inverse(); }
    bool operator==(const Fp &o) const { return v_ == o.v_ && p_ == o.p_; }

  private:
    void check(const Fp &o) const {
        if (o.p_ != p_) throw std::invalid_argument("mixed moduli");
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

} // namespace homcat
