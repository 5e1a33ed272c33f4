#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gausscat/numtheory.hpp"

namespace gausscat {

using Integer = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};
struct NotCoprime : std::domain_error {
    explicit NotCoprime(const std::string& what) : std::domain_error(what) {}
};

// Certified complex enclosure: |z - (re + i*im)| <= radius.
// Midpoints are MPFR values at the working precision; the radius is a
// conservative double upper bound accumulated through every operation.
class ComplexBall {
public:
    explicit ComplexBall(long prec_bits = 128);
    ComplexBall(const ComplexBall& o);
    ComplexBall(ComplexBall&& o) noexcept;
    ComplexBall& operator=(ComplexBall o);
    ~ComplexBall();

    static ComplexBall from_rational(const Rational& q, long prec_bits);
    static ComplexBall root_of_unity(int64_t n, int64_t e, long prec_bits);

    ComplexBall operator+(const ComplexBall& o) const;
    ComplexBall operator*(const ComplexBall& o) const;
    void scale_radius_add(double extra) { radius_ += extra; }

    double re() const;
    double im() const;
    double radius() const { return radius_; }
    long precision() const { return prec_; }

    double abs_upper() const;   // upper bound for |z|
    double abs_lower() const;   // lower bound for |z| (0 if enclosure hits 0)
    bool contains_zero() const { return abs_lower() <= 0.0; }
    // Sign of the real part when the enclosure decides it; 0 = undecided.
    int real_sign() const;

private:
    mpfr_t re_, im_;
    double radius_;
    long prec_;
    double ulp_bound() const;
    friend class CycloNum;
};

// Exact root of unity zeta_M^e, stored with (M, e) reduced so that the
// conductor M equals the exact multiplicative order.
class RootOfUnity {
public:
    RootOfUnity() : order_(1), exp_(0) {}
    RootOfUnity(int64_t conductor, int64_t exponent);

    static RootOfUnity one() { return RootOfUnity(); }
    // e^{2 pi i * num/den}
    static RootOfUnity from_exponent(const Rational& turns);

    int64_t order() const { return order_; }
    int64_t exponent() const { return exp_; }
    bool is_one() const { return order_ == 1; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity pow(int64_t n) const;
    RootOfUnity inverse() const { return pow(-1); }
    RootOfUnity conj() const { return pow(-1); }
    bool operator==(const RootOfUnity& o) const = default;

    std::string to_string() const;

private:
    int64_t order_;  // conductor = exact order
    int64_t exp_;    // 0 <= exp < order, gcd(exp, order) = 1 unless order = 1
};

// Galois automorphism zeta_N -> zeta_N^k of Q(zeta_N), gcd(k, N) = 1.
class GaloisAut {
public:
    GaloisAut(int64_t conductor, int64_t k);
    int64_t conductor() const { return conductor_; }
    int64_t k() const { return k_; }
    GaloisAut compose(const GaloisAut& inner) const;

private:
    int64_t conductor_;
    int64_t k_;
};

// Primitive integer polynomial (content 1, positive leading coefficient),
// low-degree-first coefficients.
struct IntPolynomial {
    std::vector<Integer> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    const Integer& leading() const { return coeffs.back(); }
    const Integer& constant() const { return coeffs.front(); }
    bool operator==(const IntPolynomial& o) const = default;
    std::string to_string() const;
};

// Exact element of Q(zeta_N): a polynomial in zeta_N reduced modulo the
// N-th cyclotomic polynomial, so the coefficient vector has length
// phi(N). Values are immutable after construction.
class CycloNum {
public:
    CycloNum() : conductor_(1), coeffs_(1, Rational(0)) {}
    CycloNum(long v) : CycloNum(Rational(v)) {}
    explicit CycloNum(const Rational& q) : conductor_(1), coeffs_(1, q) {}

    static CycloNum make(int64_t conductor,
                         const std::vector<std::pair<int64_t, Rational>>& terms);
    static CycloNum zeta(int64_t conductor, int64_t exponent = 1);
    static CycloNum from_root(const RootOfUnity& r);

    int64_t conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<Rational> as_rational() const;

    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator-() const;
    CycloNum inverse() const;
    CycloNum operator/(const CycloNum& o) const;
    CycloNum conj() const;
    CycloNum pow(int64_t n) const;
    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    // Rewrite over conductor M (requires conductor() | M).
    CycloNum lifted_to(int64_t M) const;
    // Rewrite over the smallest cyclotomic subfield containing the value.
    CycloNum compressed() const;

    ComplexBall embed(long prec_bits) const;
    std::string to_string() const;

private:
    int64_t conductor_;
    std::vector<Rational> coeffs_;
    CycloNum(int64_t N, std::vector<Rational> c)
        : conductor_(N), coeffs_(std::move(c)) {}
    friend CycloNum galois_apply(const GaloisAut&, const CycloNum&);
};

CycloNum galois_apply(const GaloisAut& sigma, const CycloNum& a);

// Minimal polynomial over Q, from the Galois orbit with duplicate
// conjugates merged, cleared of denominators.
IntPolynomial minimal_polynomial(const CycloNum& a);
CycloNum evaluate(const IntPolynomial& p, const CycloNum& x);

bool is_algebraic_integer(const CycloNum& a);
std::optional<RootOfUnity> is_root_of_unity(const CycloNum& a);
// Algebraic integer generating a Galois-invariant principal ideal.
bool is_d_number(const CycloNum& a);

// Sign of a conj-fixed (real) value, decided exactly: 0 for the exact
// zero, otherwise by interval evaluation with escalating precision.
int exact_sign_of_real(const CycloNum& a, long start_bits = 64);
bool is_totally_positive(const CycloNum& a);

}  // namespace gausscat
