#include "radcount/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace radcount {
namespace {

struct PrimePower {
    int q, p, k;
};

// q = p^k factorizations for every supported q.
const PrimePower kPrimePowers[] = {
    {2, 2, 1},  {3, 3, 1},  {4, 2, 2},  {5, 5, 1},  {7, 7, 1},  {8, 2, 3},
    {9, 3, 2},  {11, 11, 1}, {13, 13, 1}, {16, 2, 4}, {17, 17, 1}, {19, 19, 1},
    {23, 23, 1}, {25, 5, 2}, {27, 3, 3}, {29, 29, 1}, {31, 31, 1}, {32, 2, 5},
};

// Conway polynomials, ascending coefficients, degree k monic (leading 1
// included). These are the standard Conway polynomials, pinned so that
// element encodings never change between builds.
//   GF(4):  x^2 + x + 1
//   GF(8):  x^3 + x + 1
//   GF(9):  x^2 + 2x + 2
//   GF(16): x^4 + x + 1
//   GF(25): x^2 + 4x + 2
//   GF(27): x^3 + 2x + 1
//   GF(32): x^5 + x^2 + 1
const std::map<int, std::vector<int>>& conway_polys() {
    static const std::map<int, std::vector<int>> polys = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {9, {2, 2, 1}},
        {16, {1, 1, 0, 0, 1}},
        {25, {2, 4, 1}},
        {27, {1, 2, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
    };
    return polys;
}

const PrimePower* find_prime_power(int q) {
    for (const auto& pp : kPrimePowers)
        if (pp.q == q) return &pp;
    return nullptr;
}

std::vector<int> digits_base_p(int e, int p, int k) {
    std::vector<int> d(k, 0);
    for (int i = 0; i < k; ++i) {
        d[i] = e % p;
        e /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int e = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) e = e * p + d[i];
    return e;
}

} // namespace

FieldTable::FieldTable(int q) : q_(q) {
    const PrimePower* pp = find_prime_power(q);
    if (!pp)
        throw std::invalid_argument("unsupported field size q=" + std::to_string(q) +
                                    " (supported: prime powers up to 32)");
    p_ = pp->p;
    k_ = pp->k;

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    if (k_ == 1) {
        for (int a = 0; a < q_; ++a) {
            neg_[a] = static_cast<Fq>((q_ - a) % q_);
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = static_cast<Fq>((a + b) % q_);
                mul_[a * q_ + b] = static_cast<Fq>((a * b) % q_);
            }
        }
    } else {
        const std::vector<int>& conway = conway_polys().at(q_);
        for (int a = 0; a < q_; ++a) {
            auto da = digits_base_p(a, p_, k_);
            for (int& c : da) c = (p_ - c) % p_;
            neg_[a] = static_cast<Fq>(from_digits(da, p_));
        }
        for (int a = 0; a < q_; ++a) {
            auto da = digits_base_p(a, p_, k_);
            for (int b = 0; b < q_; ++b) {
                auto db = digits_base_p(b, p_, k_);
                std::vector<int> s(k_);
                for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = static_cast<Fq>(from_digits(s, p_));

                // Polynomial product reduced modulo the Conway polynomial.
                std::vector<int> prod(2 * k_ - 1, 0);
                for (int i = 0; i < k_; ++i)
                    for (int j = 0; j < k_; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int d = 2 * k_ - 2; d >= k_; --d) {
                    int c = prod[d];
                    if (c == 0) continue;
                    prod[d] = 0;
                    // x^d = x^(d-k) * (x^k mod conway); conway is monic.
                    for (int i = 0; i < k_; ++i)
                        prod[d - k_ + i] = ((prod[d - k_ + i] - c * conway[i]) % p_ + p_ * p_) % p_;
                }
                prod.resize(k_);
                mul_[a * q_ + b] = static_cast<Fq>(from_digits(prod, p_));
            }
        }
    }

    // Inverses by exhaustive search. Failure to find one would mean the
    // modulus is reducible, so treat it as a hard error.
    for (int a = 1; a < q_; ++a) {
        int found = -1;
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                found = b;
                break;
            }
        if (found < 0)
            throw std::logic_error("field table construction failed: no inverse for " +
                                   std::to_string(a) + " in F_" + std::to_string(q_));
        inv_[a] = static_cast<Fq>(found);
    }
}

Fq FieldTable::inv(Fq a) const {
    if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
    return inv_[a];
}

const std::vector<int>& supported_prime_powers() {
    static const std::vector<int> qs = [] {
        std::vector<int> v;
        for (const auto& pp : kPrimePowers) v.push_back(pp.q);
        return v;
    }();
    return qs;
}

bool is_supported_prime_power(int q) { return find_prime_power(q) != nullptr; }

const FieldTable& make_field(int q) {
    static std::map<int, FieldTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, FieldTable(q)).first;
    return it->second;
}

} // namespace radcount
