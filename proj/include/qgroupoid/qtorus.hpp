#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace qg {

using BigInt = boost::multiprecision::cpp_int;
using Json = nlohmann::json;

struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent polynomial in q^{1/4}: exponent (in quarters) -> integer coefficient.
class QCoeff {
public:
    using Term = std::pair<int, BigInt>;

    QCoeff() = default;
    QCoeff(long c); // NOLINT: integers are constants

    static QCoeff monomial(int qexp4, const BigInt &c = 1);
    // q^{e} for a half-integer e given as e2/2
    static QCoeff qhalf(int e2, const BigInt &c = 1) { return monomial(2 * e2, c); }

    bool is_zero() const { return t_.empty(); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_unit() const; // +-q^{k/4}
    const std::vector<Term> &terms() const { return t_; }

    QCoeff shifted(int qexp4) const;
    QCoeff star() const;
    QCoeff operator-() const;

    QCoeff &operator+=(const QCoeff &o);
    QCoeff &operator-=(const QCoeff &o);
    friend QCoeff operator+(QCoeff a, const QCoeff &b) { return a += b; }
    friend QCoeff operator-(QCoeff a, const QCoeff &b) { return a -= b; }
    friend QCoeff operator*(const QCoeff &a, const QCoeff &b);
    friend bool operator==(const QCoeff &a, const QCoeff &b) { return a.t_ == b.t_; }

    double eval(double q) const;
    std::complex<double> eval(std::complex<double> q) const;

    std::string str() const;
    Json to_json() const;

private:
    void normalize();
    std::vector<Term> t_; // sorted by exponent, no zero coefficients
};

// Exponent vectors are stored doubled so half-integer exponents stay exact.
using Lattice = std::vector<int>;

Lattice lattice_add(const Lattice &a, const Lattice &b);
Lattice lattice_sub(const Lattice &a, const Lattice &b);
Lattice lattice_scale(const Lattice &a, int s);
bool lattice_is_zero(const Lattice &a);

// Skew pairing scaled by 4: pairing4[a][b] = 4 <e_a, e_b>.
class SkewForm {
public:
    SkewForm(int n, std::vector<int> pairing4);

    int dim() const { return n_; }
    int at4(int a, int b) const { return p_[static_cast<size_t>(a) * n_ + b]; }
    const std::vector<int> &raw() const { return p_; }

    // <l, m> in quarter units, for doubled vectors
    int pair4(const Lattice &l, const Lattice &m) const;
    // row vector l^T P (doubled l), reused across many products
    std::vector<long> row(const Lattice &l) const;
    int pair4_row(const std::vector<long> &row, const Lattice &m) const;

    bool operator==(const SkewForm &o) const { return n_ == o.n_ && p_ == o.p_; }

private:
    int n_;
    std::vector<int> p_;
};

using FormPtr = std::shared_ptr<const SkewForm>;

class TorusElement {
public:
    using Terms = std::map<Lattice, QCoeff>;

    TorusElement() = default;
    explicit TorusElement(FormPtr f) : form_(std::move(f)) {}

    static TorusElement constant(FormPtr f, const QCoeff &c);
    static TorusElement monomial(FormPtr f, Lattice doubled, const QCoeff &c = QCoeff(1));
    static TorusElement generator(FormPtr f, int index);

    const FormPtr &form() const { return form_; }
    const Terms &terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int dim() const;

    TorusElement &operator+=(const TorusElement &o);
    TorusElement &operator-=(const TorusElement &o);
    friend TorusElement operator+(TorusElement a, const TorusElement &b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement &b) { return a -= b; }
    TorusElement operator-() const;
    friend TorusElement operator*(const TorusElement &a, const TorusElement &b);
    friend TorusElement operator*(const QCoeff &c, const TorusElement &a);
    friend bool operator==(const TorusElement &a, const TorusElement &b) { return a.terms_ == b.terms_; }

    // returns an element with the given form attached, or throws on mismatch
    TorusElement with_form(const FormPtr &f) const;

    // add c*Z_l (doubled l) in place
    void add_term(const Lattice &l, const QCoeff &c);

    Json to_json() const;
    std::string str() const;

private:
    FormPtr form_;
    Terms terms_;
};

TorusElement mul(const TorusElement &a, const TorusElement &b);

// Z_{sum e_{g}} with coefficient 1; equals q^{-sum_{j<k}<e_j,e_k>} times the ordered product
TorusElement weyl_order(const FormPtr &f, const std::vector<int> &gens);

TorusElement star(const TorusElement &a);

TorusElement invert_monomial(const TorusElement &a);

double specialize(const TorusElement &a, double q, const std::vector<double> &z);
long double specialize(const TorusElement &a, long double q, const std::vector<long double> &z);

// 50 significant digits, used where double eigen solves are too sensitive
using HighReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;
HighReal specialize(const TorusElement &a, HighReal q, const std::vector<HighReal> &z);

// complex evaluation; only integer exponents are accepted (no branch choice needed)
std::complex<double> evaluate(const TorusElement &a, std::complex<double> q,
                              const std::vector<std::complex<double>> &z);

FormPtr form_of(const TorusElement &a, const TorusElement &b);

} // namespace qg
