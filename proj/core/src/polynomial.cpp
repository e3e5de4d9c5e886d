#include "radcount/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace radcount {

mpq_class PolyQ::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void PolyQ::set(long exponent, mpq_class coeff) {
    if (coeff == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(coeff);
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    PolyQ r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    PolyQ r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) - c);
    return r;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    PolyQ r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

PolyQ PolyQ::shifted(long by) const {
    PolyQ r;
    for (const auto& [e, c] : terms_) r.terms_[e + by] = c;
    return r;
}

PolyQ PolyQ::scaled(const mpq_class& s) const {
    PolyQ r;
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
}

mpq_class PolyQ::eval(const mpq_class& at) const {
    // Horner over descending exponents with gap-sized power steps.
    mpq_class acc = 0;
    long prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0) {
            mpz_class gap;
            mpz_class num = at.get_num(), den = at.get_den();
            mpq_class step;
            mpz_pow_ui(gap.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(prev - it->first));
            mpz_class dpow;
            mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(prev - it->first));
            step = mpq_class(gap, dpow);
            step.canonicalize();
            acc *= step;
        }
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) {
        mpz_class num = at.get_num(), den = at.get_den(), npow, dpow;
        mpz_pow_ui(npow.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(prev));
        mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(prev));
        mpq_class p(npow, dpow);
        p.canonicalize();
        acc *= p;
    }
    return acc;
}

mpz_class PolyQ::eval_z(const mpz_class& at) const {
    mpq_class v = eval(mpq_class(at));
    if (v.get_den() != 1) throw std::domain_error("polynomial value is not an integer");
    return v.get_num();
}

bool PolyQ::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

bool PolyQ::nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

namespace {

std::string coeff_magnitude_str(const mpq_class& c) {
    mpq_class a = c < 0 ? mpq_class(-c) : c;
    if (a.get_den() == 1) return a.get_num().get_str();
    return "(" + a.get_num().get_str() + "/" + a.get_den().get_str() + ")";
}

} // namespace

std::string PolyQ::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long e = it->first;
        const mpq_class& c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mag = coeff_magnitude_str(c);
        if (e == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag;
            out += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

std::map<std::string, std::string> PolyQ::to_json_terms() const {
    std::map<std::string, std::string> out;
    for (const auto& [e, c] : terms_) {
        std::string v = c.get_num().get_str();
        if (c.get_den() != 1) v += "/" + c.get_den().get_str();
        out[std::to_string(e)] = v;
    }
    return out;
}

PolyQ gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) return PolyQ();
    // Rolling q-Pascal row: C[j] holds [i choose j]_q.
    std::vector<PolyQ> row(n + 1);
    row[0] = PolyQ::constant(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            PolyQ shifted = row[j - 1].shifted(i - j);
            row[j] = (j > i - 1 ? PolyQ() : row[j]) + shifted;
        }
    }
    return row[k];
}

PolyQ a3_count_poly(long l, long d, long m) {
    if (l < 0 || d < 0 || m < 0)
        throw std::invalid_argument("a3_count_poly: multiplicities must be nonnegative");
    PolyQ total;
    long lo = std::max(0L, 2 * d - l);
    for (long i = lo; i <= 2 * d; ++i) {
        PolyQ term = gaussian_binomial(static_cast<int>(2 * d), static_cast<int>(i)).shifted(m * i);
        // Number of surjections onto a fixed (2d-i)-dimensional quotient:
        // prod_{j=0}^{2d-i-1} (q^l - q^j). Vanishes as a polynomial when the
        // needed rank 2d-i exceeds l, matching the empty count.
        for (long j = 0; j <= 2 * d - i - 1; ++j)
            term *= PolyQ::q_power(l) - PolyQ::q_power(j);
        total += term;
    }
    return total.shifted(2 * l * m);
}

std::string Classification::label() const {
    switch (kind) {
        case LeafKind::point:
            return "point";
        case LeafKind::rad_square_zero:
            return "rad-square-zero(D=" + std::to_string(dim_rad) + ")";
        case LeafKind::a3_shape:
            return "a3-shape(" + std::to_string(l) + "," + std::to_string(d) + "," +
                   std::to_string(m) + ")";
        case LeafKind::irreducible:
            return "irreducible";
    }
    return "?";
}

PolyQ base_count_poly(const Classification& c) {
    switch (c.kind) {
        case LeafKind::point:
            return PolyQ::constant(1);
        case LeafKind::rad_square_zero:
            return PolyQ::q_power(2 * c.dim_rad);
        case LeafKind::a3_shape:
            return a3_count_poly(c.l, c.d, c.m);
        case LeafKind::irreducible:
            throw std::invalid_argument("base_count_poly: irreducible leaves have no closed form");
    }
    throw std::invalid_argument("base_count_poly: bad classification");
}

} // namespace radcount
