#include "gausscat/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gausscat {

namespace {

// ---------------------------------------------------------------------
// Per-conductor data: the cyclotomic polynomial Phi_N and the reductions
// x^j mod Phi_N for every exponent that arithmetic can produce.

struct ConductorData {
    int64_t N = 1;
    int64_t phi = 1;
    std::vector<Integer> cyclo;                 // Phi_N, monic, degree phi
    std::vector<std::vector<Integer>> powers;   // x^j mod Phi_N, j < max(N, 2*phi-1)
};

// Exact division of integer polynomials, divisor monic.
std::vector<Integer> poly_divide_exact(std::vector<Integer> num,
                                       const std::vector<Integer>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<Integer> quot(dn - dd + 1);
    for (int j = dn; j >= dd; --j) {
        Integer c = num[j];
        if (c == 0) continue;
        quot[j - dd] = c;
        for (int i = 0; i <= dd; ++i) num[j - dd + i] -= c * den[i];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

std::vector<Integer> cyclotomic_polynomial(int64_t N) {
    std::map<int64_t, std::vector<Integer>> table;
    for (int64_t d : divisors(N)) {
        std::vector<Integer> poly(d + 1);
        poly[0] = -1;
        poly[d] = 1;  // x^d - 1
        for (int64_t e : divisors(d))
            if (e < d) poly = poly_divide_exact(std::move(poly), table[e]);
        table[d] = std::move(poly);
    }
    return table[N];
}

const ConductorData& conductor_data(int64_t N) {
    static std::map<int64_t, std::unique_ptr<ConductorData>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return *it->second;

    auto cd = std::make_unique<ConductorData>();
    cd->N = N;
    cd->phi = euler_phi(N);
    cd->cyclo = cyclotomic_polynomial(N);
    int64_t phi = cd->phi;
    int64_t count = std::max<int64_t>(N, 2 * phi - 1);
    cd->powers.resize(count);
    for (int64_t j = 0; j < std::min(count, phi); ++j) {
        cd->powers[j].assign(phi, Integer(0));
        cd->powers[j][j] = 1;
    }
    for (int64_t j = phi; j < count; ++j) {
        const auto& prev = cd->powers[j - 1];
        std::vector<Integer> row(phi);
        Integer carry = prev[phi - 1];
        for (int64_t i = phi - 1; i >= 1; --i) row[i] = prev[i - 1];
        row[0] = 0;
        if (carry != 0)
            for (int64_t i = 0; i < phi; ++i) row[i] -= carry * cd->cyclo[i];
        cd->powers[j] = std::move(row);
    }
    auto& slot = cache[N];
    slot = std::move(cd);
    return *slot;
}

std::vector<int64_t> units_mod(int64_t N) {
    std::vector<int64_t> ks;
    for (int64_t k = 1; k <= N; ++k)
        if (gcd64(k, N) == 1) ks.push_back(k % N);
    if (N == 1) ks = {0};
    return ks;
}

// Split a rational vector into an integer vector over a common denominator.
Integer extract_integers(const std::vector<Rational>& coeffs, std::vector<Integer>& out) {
    Integer den(1);
    for (const auto& c : coeffs) den = lcm(den, c.get_den());
    out.resize(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        out[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    return den;
}

}  // namespace

// ---------------------------------------------------------------------
// ComplexBall

ComplexBall::ComplexBall(long prec_bits) : radius_(0.0), prec_(prec_bits) {
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
}

ComplexBall::ComplexBall(const ComplexBall& o) : radius_(o.radius_), prec_(o.prec_) {
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
}

ComplexBall::ComplexBall(ComplexBall&& o) noexcept : radius_(o.radius_), prec_(o.prec_) {
    mpfr_init2(re_, 2);
    mpfr_init2(im_, 2);
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
}

ComplexBall& ComplexBall::operator=(ComplexBall o) {
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
    std::swap(radius_, o.radius_);
    std::swap(prec_, o.prec_);
    return *this;
}

ComplexBall::~ComplexBall() {
    mpfr_clear(re_);
    mpfr_clear(im_);
}

double ComplexBall::ulp_bound() const {
    double mag = std::fabs(mpfr_get_d(re_, MPFR_RNDA)) + std::fabs(mpfr_get_d(im_, MPFR_RNDA));
    double eps = std::ldexp(1.0, static_cast<int>(2 - prec_));
    if (eps == 0.0) eps = 5e-324;
    return (mag + 1e-300) * eps + 5e-324;
}

ComplexBall ComplexBall::from_rational(const Rational& q, long prec_bits) {
    ComplexBall b(prec_bits);
    mpfr_set_q(b.re_, q.get_mpq_t(), MPFR_RNDN);
    b.radius_ = b.ulp_bound();
    return b;
}

ComplexBall ComplexBall::root_of_unity(int64_t n, int64_t e, long prec_bits) {
    ComplexBall b(prec_bits);
    e = mod_reduce(e, n);
    mpfr_t angle;
    mpfr_init2(angle, prec_bits + 16);
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_si(angle, angle, 2 * e, MPFR_RNDN);
    mpfr_div_si(angle, angle, n, MPFR_RNDN);
    mpfr_sin_cos(b.im_, b.re_, angle, MPFR_RNDN);
    mpfr_clear(angle);
    double eps = std::ldexp(1.0, static_cast<int>(6 - prec_bits));
    b.radius_ = (eps == 0.0 ? 5e-324 : eps);
    return b;
}

ComplexBall ComplexBall::operator+(const ComplexBall& o) const {
    ComplexBall b(std::max(prec_, o.prec_));
    mpfr_add(b.re_, re_, o.re_, MPFR_RNDN);
    mpfr_add(b.im_, im_, o.im_, MPFR_RNDN);
    b.radius_ = radius_ + o.radius_ + b.ulp_bound();
    return b;
}

ComplexBall ComplexBall::operator*(const ComplexBall& o) const {
    long p = std::max(prec_, o.prec_);
    ComplexBall b(p);
    mpfr_t t1, t2;
    mpfr_init2(t1, p);
    mpfr_init2(t2, p);
    mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
    mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
    mpfr_sub(b.re_, t1, t2, MPFR_RNDN);
    mpfr_mul(t1, re_, o.im_, MPFR_RNDN);
    mpfr_mul(t2, im_, o.re_, MPFR_RNDN);
    mpfr_add(b.im_, t1, t2, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    double ma = std::fabs(mpfr_get_d(re_, MPFR_RNDA)) + std::fabs(mpfr_get_d(im_, MPFR_RNDA));
    double mb = std::fabs(mpfr_get_d(o.re_, MPFR_RNDA)) + std::fabs(mpfr_get_d(o.im_, MPFR_RNDA));
    ma = ma * (1.0 + 1e-12) + 1e-300;
    mb = mb * (1.0 + 1e-12) + 1e-300;
    b.radius_ = ma * o.radius_ + mb * radius_ + radius_ * o.radius_ + 4 * b.ulp_bound();
    return b;
}

double ComplexBall::re() const { return mpfr_get_d(re_, MPFR_RNDN); }
double ComplexBall::im() const { return mpfr_get_d(im_, MPFR_RNDN); }

double ComplexBall::abs_upper() const {
    double m = std::fabs(mpfr_get_d(re_, MPFR_RNDA)) + std::fabs(mpfr_get_d(im_, MPFR_RNDA));
    return m * (1.0 + 1e-12) + radius_ + 1e-300;
}

double ComplexBall::abs_lower() const {
    double m = std::max(std::fabs(mpfr_get_d(re_, MPFR_RNDZ)),
                        std::fabs(mpfr_get_d(im_, MPFR_RNDZ)));
    double lo = m * (1.0 - 1e-12) - radius_ - 1e-300;
    return lo > 0.0 ? lo : 0.0;
}

int ComplexBall::real_sign() const {
    double r = mpfr_get_d(re_, MPFR_RNDN);
    double slack = radius_ + std::fabs(r) * 1e-12 + 1e-300;
    if (r - slack > 0.0) return 1;
    if (r + slack < 0.0) return -1;
    return 0;
}

// ---------------------------------------------------------------------
// RootOfUnity

RootOfUnity::RootOfUnity(int64_t conductor, int64_t exponent) {
    if (conductor < 1) throw std::domain_error("RootOfUnity: conductor must be positive");
    int64_t e = mod_reduce(exponent, conductor);
    if (e == 0) {
        order_ = 1;
        exp_ = 0;
    } else {
        int64_t g = gcd64(e, conductor);
        order_ = conductor / g;
        exp_ = e / g;
    }
}

RootOfUnity RootOfUnity::from_exponent(const Rational& turns) {
    Rational t(turns);
    t.canonicalize();
    if (!t.get_den().fits_slong_p() || !t.get_num().fits_slong_p())
        throw std::domain_error("RootOfUnity::from_exponent: exponent too large");
    return RootOfUnity(t.get_den().get_si(), t.get_num().get_si());
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    int64_t L = lcm64(order_, o.order_);
    return RootOfUnity(L, exp_ * (L / order_) + o.exp_ * (L / o.order_));
}

RootOfUnity RootOfUnity::pow(int64_t n) const {
    return RootOfUnity(order_, mul_mod(exp_, mod_reduce(n, order_), order_));
}

std::string RootOfUnity::to_string() const {
    if (order_ == 1) return "1";
    if (order_ == 2) return "-1";
    std::ostringstream os;
    os << "zeta" << order_;
    if (exp_ != 1) os << "^" << exp_;
    return os.str();
}

// ---------------------------------------------------------------------
// GaloisAut

GaloisAut::GaloisAut(int64_t conductor, int64_t k) : conductor_(conductor) {
    if (conductor < 1) throw std::domain_error("GaloisAut: conductor must be positive");
    k_ = mod_reduce(k, conductor);
    if (gcd64(k_, conductor) != 1)
        throw NotCoprime("GaloisAut: exponent not coprime to conductor");
}

GaloisAut GaloisAut::compose(const GaloisAut& inner) const {
    int64_t L = lcm64(conductor_, inner.conductor_);
    int64_t a = lift_exponent(k_, conductor_, L);
    int64_t b = lift_exponent(inner.k_, inner.conductor_, L);
    return GaloisAut(L, mul_mod(a, b, L));
}

// ---------------------------------------------------------------------
// IntPolynomial

std::string IntPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Integer a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------
// CycloNum

CycloNum CycloNum::make(int64_t conductor,
                        const std::vector<std::pair<int64_t, Rational>>& terms) {
    if (conductor < 1) throw std::domain_error("CycloNum::make: conductor must be positive");
    const ConductorData& cd = conductor_data(conductor);
    std::vector<Rational> out(cd.phi, Rational(0));
    for (const auto& [e, q] : terms) {
        if (q == 0) continue;
        const auto& row = cd.powers[mod_reduce(e, conductor)];
        for (int64_t i = 0; i < cd.phi; ++i)
            if (row[i] != 0) out[i] += q * row[i];
    }
    return CycloNum(conductor, std::move(out));
}

CycloNum CycloNum::zeta(int64_t conductor, int64_t exponent) {
    return make(conductor, {{exponent, Rational(1)}});
}

CycloNum CycloNum::from_root(const RootOfUnity& r) {
    return zeta(r.order(), r.exponent());
}

bool CycloNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_one() const {
    auto r = as_rational();
    return r && *r == 1;
}

std::optional<Rational> CycloNum::as_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

CycloNum CycloNum::lifted_to(int64_t M) const {
    if (M == conductor_) return *this;
    if (M % conductor_ != 0)
        throw std::domain_error("CycloNum::lifted_to: target not a multiple of conductor");
    const ConductorData& cd = conductor_data(M);
    int64_t stride = M / conductor_;
    std::vector<Rational> out(cd.phi, Rational(0));
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        const auto& row = cd.powers[static_cast<int64_t>(e) * stride];
        for (int64_t i = 0; i < cd.phi; ++i)
            if (row[i] != 0) out[i] += coeffs_[e] * row[i];
    }
    return CycloNum(M, std::move(out));
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    int64_t L = lcm64(conductor_, o.conductor_);
    CycloNum a = lifted_to(L), b = o.lifted_to(L);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
    int64_t L = lcm64(conductor_, o.conductor_);
    CycloNum a = lifted_to(L), b = o.lifted_to(L);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

CycloNum CycloNum::operator-() const {
    CycloNum a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    int64_t L = lcm64(conductor_, o.conductor_);
    CycloNum a = lifted_to(L), b = o.lifted_to(L);
    const ConductorData& cd = conductor_data(L);
    int64_t phi = cd.phi;

    std::vector<Integer> A, B;
    Integer da = extract_integers(a.coeffs_, A);
    Integer db = extract_integers(b.coeffs_, B);

    std::vector<Integer> prod(2 * phi - 1);
    for (int64_t i = 0; i < phi; ++i) {
        if (A[i] == 0) continue;
        for (int64_t j = 0; j < phi; ++j)
            if (B[j] != 0) prod[i + j] += A[i] * B[j];
    }
    // reduce mod Phi_L (monic)
    for (int64_t j = 2 * phi - 2; j >= phi; --j) {
        if (prod[j] == 0) continue;
        Integer c = prod[j];
        for (int64_t i = 0; i < phi; ++i)
            if (cd.cyclo[i] != 0) prod[j - phi + i] -= c * cd.cyclo[i];
    }
    Integer den = da * db;
    std::vector<Rational> out(phi);
    for (int64_t i = 0; i < phi; ++i) {
        out[i] = Rational(prod[i], den);
        out[i].canonicalize();
    }
    return CycloNum(L, std::move(out));
}

bool CycloNum::operator==(const CycloNum& o) const {
    if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
    int64_t L = lcm64(conductor_, o.conductor_);
    return lifted_to(L).coeffs_ == o.lifted_to(L).coeffs_;
}

CycloNum CycloNum::conj() const {
    if (conductor_ == 1) return *this;
    return galois_apply(GaloisAut(conductor_, conductor_ - 1), *this);
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (auto r = as_rational()) return CycloNum(Rational(1) / *r);
    CycloNum prod(Rational(1));
    for (int64_t k : units_mod(conductor_)) {
        if (k == 1) continue;
        prod = prod * galois_apply(GaloisAut(conductor_, k), *this);
    }
    CycloNum norm = *this * prod;
    auto nr = norm.as_rational();
    if (!nr) throw std::logic_error("CycloNum::inverse: norm is not rational");
    if (*nr == 0) throw DivisionByZero();
    CycloNum out = prod;
    Rational scale = Rational(1) / *nr;
    for (auto& c : out.coeffs_) c *= scale;
    return out;
}

CycloNum CycloNum::operator/(const CycloNum& o) const { return *this * o.inverse(); }

CycloNum CycloNum::pow(int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    CycloNum acc(Rational(1));
    CycloNum base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

CycloNum galois_apply(const GaloisAut& sigma, const CycloNum& a) {
    int64_t L = lcm64(sigma.conductor(), a.conductor());
    int64_t k = lift_exponent(sigma.k(), sigma.conductor(), L);
    CycloNum lifted = a.lifted_to(L);
    if (k == 1) return lifted;
    const ConductorData& cd = conductor_data(L);
    std::vector<Rational> out(cd.phi, Rational(0));
    for (size_t e = 0; e < lifted.coeffs_.size(); ++e) {
        if (lifted.coeffs_[e] == 0) continue;
        const auto& row = cd.powers[mul_mod(static_cast<int64_t>(e), k, L)];
        for (int64_t i = 0; i < cd.phi; ++i)
            if (row[i] != 0) out[i] += lifted.coeffs_[e] * row[i];
    }
    return CycloNum(L, std::move(out));
}

CycloNum CycloNum::compressed() const {
    for (int64_t d : divisors(conductor_)) {
        if (d == conductor_) return *this;
        bool invariant = true;
        for (int64_t k = 1 + d; k < conductor_ && invariant; k += d) {
            if (gcd64(k, conductor_) != 1) continue;
            if (galois_apply(GaloisAut(conductor_, k), *this) != *this) invariant = false;
        }
        if (!invariant) continue;

        // solve sum_j x_j zeta_d^j = a over the basis of Q(zeta_d)
        const ConductorData& big = conductor_data(conductor_);
        const ConductorData& small = conductor_data(d);
        int64_t rows = big.phi, cols = small.phi;
        int64_t stride = conductor_ / d;
        std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1, Rational(0)));
        for (int64_t j = 0; j < cols; ++j) {
            const auto& lift = big.powers[j * stride];
            for (int64_t i = 0; i < rows; ++i) aug[i][j] = Rational(lift[i]);
        }
        for (int64_t i = 0; i < rows; ++i) aug[i][cols] = coeffs_[i];

        std::vector<Rational> sol(cols, Rational(0));
        int64_t r = 0;
        std::vector<int64_t> pivot_col(rows, -1);
        for (int64_t c = 0; c < cols && r < rows; ++c) {
            int64_t p = -1;
            for (int64_t i = r; i < rows; ++i)
                if (aug[i][c] != 0) { p = i; break; }
            if (p < 0) continue;
            std::swap(aug[p], aug[r]);
            Rational inv = Rational(1) / aug[r][c];
            for (int64_t j = c; j <= cols; ++j) aug[r][j] *= inv;
            for (int64_t i = 0; i < rows; ++i) {
                if (i == r || aug[i][c] == 0) continue;
                Rational f = aug[i][c];
                for (int64_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
            }
            pivot_col[r] = c;
            ++r;
        }
        bool consistent = true;
        for (int64_t i = r; i < rows; ++i)
            if (aug[i][cols] != 0) consistent = false;
        if (!consistent)
            throw std::logic_error("CycloNum::compressed: inconsistent subfield system");
        for (int64_t i = 0; i < r; ++i) sol[pivot_col[i]] = aug[i][cols];
        return CycloNum(d, std::move(sol));
    }
    return *this;
}

ComplexBall CycloNum::embed(long prec_bits) const {
    if (prec_bits < 32) prec_bits = 32;
    ComplexBall acc(prec_bits);
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        ComplexBall term = ComplexBall::from_rational(coeffs_[e], prec_bits) *
                           ComplexBall::root_of_unity(conductor_, static_cast<int64_t>(e), prec_bits);
        acc = acc + term;
    }
    return acc;
}

std::string CycloNum::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        const Rational& c = coeffs_[e];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << conductor_;
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------
// Algebraic predicates

IntPolynomial minimal_polynomial(const CycloNum& a) {
    int64_t N = a.conductor();
    std::vector<CycloNum> orbit;
    for (int64_t k : units_mod(N)) {
        CycloNum img = (k == 1 || N == 1) ? a : galois_apply(GaloisAut(N, k), a);
        bool seen = false;
        for (const auto& v : orbit)
            if (v == img) { seen = true; break; }
        if (!seen) orbit.push_back(std::move(img));
    }
    std::vector<CycloNum> poly{CycloNum(1L)};
    for (const auto& root : orbit) {
        std::vector<CycloNum> next(poly.size() + 1);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - root * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<Rational> rat(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        auto r = poly[i].as_rational();
        if (!r) throw std::logic_error("minimal_polynomial: orbit product not rational");
        rat[i] = *r;
    }
    Integer den(1);
    for (const auto& r : rat) den = lcm(den, r.get_den());
    IntPolynomial out;
    out.coeffs.resize(rat.size());
    for (size_t i = 0; i < rat.size(); ++i)
        out.coeffs[i] = rat[i].get_num() * (den / rat[i].get_den());
    Integer content(0);
    for (const auto& c : out.coeffs) content = gcd(content, c);
    if (content > 1)
        for (auto& c : out.coeffs) c /= content;
    if (out.coeffs.back() < 0)
        for (auto& c : out.coeffs) c = -c;
    return out;
}

CycloNum evaluate(const IntPolynomial& p, const CycloNum& x) {
    CycloNum acc;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + CycloNum(Rational(p.coeffs[i]));
    return acc;
}

bool is_algebraic_integer(const CycloNum& a) {
    return minimal_polynomial(a).is_monic();
}

std::optional<RootOfUnity> is_root_of_unity(const CycloNum& a) {
    if (a.is_zero()) return std::nullopt;
    if (auto r = a.as_rational()) {
        if (*r == 1) return RootOfUnity::one();
        if (*r == -1) return RootOfUnity(2, 1);
        return std::nullopt;
    }
    if (!(a * a.conj()).is_one()) return std::nullopt;
    if (!is_algebraic_integer(a)) return std::nullopt;

    int64_t N = a.conductor();
    int64_t order = 0;
    for (int64_t m : divisors(2 * N)) {
        if (a.pow(m).is_one()) { order = m; break; }
    }
    if (order == 0)
        throw std::logic_error("is_root_of_unity: Kronecker criterion met but no order found");

    int64_t L = lcm64(N, order);
    CycloNum al = a.lifted_to(L);
    CycloNum z = CycloNum::zeta(order).lifted_to(L);
    CycloNum p = z;
    for (int64_t e = 1; e < order; ++e) {
        if (gcd64(e, order) == 1 && p == al) return RootOfUnity(order, e);
        p = p * z;
    }
    throw std::logic_error("is_root_of_unity: exponent search failed");
}

bool is_d_number(const CycloNum& a) {
    if (a.is_zero()) return true;
    if (auto r = a.as_rational()) return r->get_den() == 1;
    if (!is_algebraic_integer(a)) return false;
    CycloNum inv_a = a.inverse();
    int64_t N = a.conductor();
    for (int64_t k : units_mod(N)) {
        if (k == 1) continue;
        CycloNum ratio = galois_apply(GaloisAut(N, k), a) * inv_a;
        IntPolynomial mp = minimal_polynomial(ratio);
        if (!mp.is_monic() || abs(mp.constant()) != 1) return false;
    }
    return true;
}

int exact_sign_of_real(const CycloNum& a, long start_bits) {
    if (a.is_zero()) return 0;
    if (auto r = a.as_rational()) return sgn(*r);
    if (a.conj() != a) throw std::domain_error("exact_sign_of_real: value is not real");
    for (long bits = std::max(32L, start_bits); bits <= (1L << 22); bits *= 2) {
        int s = a.embed(bits).real_sign();
        if (s != 0) return s;
    }
    throw std::runtime_error("exact_sign_of_real: precision limit exceeded");
}

bool is_totally_positive(const CycloNum& a) {
    int64_t N = a.conductor();
    for (int64_t k : units_mod(N)) {
        CycloNum img = (k == 1 || N == 1) ? a : galois_apply(GaloisAut(N, k), a);
        if (exact_sign_of_real(img) <= 0) return false;
    }
    return true;
}

}  // namespace gausscat
