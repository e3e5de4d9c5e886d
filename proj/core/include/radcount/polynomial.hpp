#pragma once

// Exact polynomials in q with rational coefficients, plus the closed forms:
// Gaussian binomials through the q-Pascal recurrence (no polynomial division
// anywhere) and the commuting-pair count for the three-vertex chain shape
// with multiplicities (l, d, m).

#include <gmpxx.h>

#include <map>
#include <string>

namespace radcount {

class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long exponent, mpq_class coeff) { set(exponent, std::move(coeff)); }
    static PolyQ constant(mpq_class c) { return PolyQ(0, std::move(c)); }
    static PolyQ q_power(long e) { return PolyQ(e, 1); }

    bool is_zero() const { return terms_.empty(); }
    long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    mpq_class coeff(long exponent) const;
    void set(long exponent, mpq_class coeff);
    const std::map<long, mpq_class>& terms() const { return terms_; }

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ& operator+=(const PolyQ& o) { return *this = *this + o; }
    PolyQ& operator-=(const PolyQ& o) { return *this = *this - o; }
    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }
    bool operator==(const PolyQ& o) const { return terms_ == o.terms_; }

    PolyQ shifted(long by) const; // multiply by q^by
    PolyQ scaled(const mpq_class& c) const;

    mpq_class eval(const mpq_class& at) const;
    // Evaluation at an integer point; throws std::domain_error if the result
    // is not an integer (it always is for the counts this library produces).
    mpz_class eval_z(const mpz_class& at) const;

    bool integer_coefficients() const;
    bool nonnegative_coefficients() const;

    // Normative ASCII form: descending exponents, " + "/" - " separators,
    // coefficient 1 suppressed, exponent 1 as "q", exponent 0 omits q.
    // Examples: "q^5 + q^4 - q^3", "2q^8 - q^6", "1", "0".
    std::string to_string() const;
    // Exponent -> coefficient map with decimal string values, for --json.
    std::map<std::string, std::string> to_json_terms() const;

private:
    std::map<long, mpq_class> terms_; // exponent -> nonzero coefficient
};

// Gaussian binomial [n choose k]_q via [n k] = [n-1 k] + q^(n-k) [n-1 k-1].
// Zero polynomial for k < 0 or k > n.
PolyQ gaussian_binomial(int n, int k);

// Commuting-pair count for the chain with source multiplicity l, middle d,
// sink m (all >= 0):
//   q^(2lm) * sum_{i=max(0,2d-l)}^{2d} q^(mi) [2d choose i]_q
//                                      prod_{j=0}^{2d-i-1} (q^l - q^j).
PolyQ a3_count_poly(long l, long d, long m);

// Leaf classifications produced by the reduction engine; the closed-form side
// only needs the parameters, not the quivers.
enum class LeafKind { point, rad_square_zero, a3_shape, irreducible };

struct Classification {
    LeafKind kind = LeafKind::irreducible;
    long dim_rad = 0;      // rad_square_zero
    long l = 0, d = 0, m = 0; // a3_shape
    std::string label() const;
};

// Exact count polynomial for a classified leaf; throws std::invalid_argument
// for irreducible leaves (those have no closed form and fall back to brute
// counting).
PolyQ base_count_poly(const Classification& c);

} // namespace radcount
