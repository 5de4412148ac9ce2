#pragma once

#include <cstdint>

#include "bicat/errors.hpp"

namespace bicat {

// Arithmetic in F_p for a small prime p. All residues are kept in [0, p).
class PrimeField {
public:
  explicit PrimeField(unsigned p) : p_(p) {
    if (p < 2) throw ValidationFailure("field modulus must be >= 2, got " + std::to_string(p));
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw ValidationFailure("field modulus " + std::to_string(p) + " is not prime");
  }

  unsigned modulus() const { return p_; }

  unsigned reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<unsigned>(r);
  }

  unsigned add(unsigned a, unsigned b) const { return (a + b) % p_; }
  unsigned sub(unsigned a, unsigned b) const { return (a + p_ - b) % p_; }
  unsigned mul(unsigned a, unsigned b) const {
    return static_cast<unsigned>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  unsigned neg(unsigned a) const { return a == 0 ? 0 : p_ - a; }

  unsigned inv(unsigned a) const {
    if (a == 0) throw ValidationFailure("division by zero in F_" + std::to_string(p_));
    // Fermat: a^(p-2); p is tiny so the loop is fine.
    unsigned result = 1, base = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
      e >>= 1u;
    }
    return result;
  }

  bool operator==(const PrimeField&) const = default;

private:
  unsigned p_;
};

}  // namespace bicat
