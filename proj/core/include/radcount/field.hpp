#pragma once

// Small finite fields F_q for prime powers q <= 32, backed by dense lookup
// tables. Extension fields use fixed Conway polynomials so that element
// encodings are stable across runs: an element is the base-p digit string of
// its polynomial representative, i.e. sum c_i p^i with 0 <= c_i < p.

#include <cstdint>
#include <vector>

namespace radcount {

using Fq = std::uint8_t;

class FieldTable {
public:
    explicit FieldTable(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }

    Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
    Fq sub(Fq a, Fq b) const { return add_[a * q_ + neg_[b]]; }
    Fq mul(Fq a, Fq b) const { return mul_[a * q_ + b]; }
    Fq neg(Fq a) const { return neg_[a]; }
    Fq inv(Fq a) const;            // throws std::domain_error on a == 0
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    // Raw table access for hot loops: row a of the multiplication table.
    const Fq* mul_row(Fq a) const { return mul_.data() + a * q_; }
    const Fq* add_row(Fq a) const { return add_.data() + a * q_; }

private:
    int q_, p_, k_;
    std::vector<Fq> add_, mul_, neg_, inv_;
};

// The prime powers this build supports, ascending: 2,3,4,5,7,...,32.
const std::vector<int>& supported_prime_powers();
bool is_supported_prime_power(int q);

// Construct (and cache) the table for q; throws std::invalid_argument for
// unsupported q.
const FieldTable& make_field(int q);

} // namespace radcount
