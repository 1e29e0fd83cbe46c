#include "qgroupoid/qtorus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qg {

QCoeff::QCoeff(long c)
{
    if (c != 0)
        t_.emplace_back(0, BigInt(c));
}

QCoeff QCoeff::monomial(int qexp4, const BigInt &c)
{
    QCoeff r;
    if (c != 0)
        r.t_.emplace_back(qexp4, c);
    return r;
}

bool QCoeff::is_unit() const
{
    return t_.size() == 1 && (t_[0].second == 1 || t_[0].second == -1);
}

void QCoeff::normalize()
{
    std::sort(t_.begin(), t_.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto &t : t_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second == 0)
            out.pop_back();
    }
    t_ = std::move(out);
}

QCoeff QCoeff::shifted(int qexp4) const
{
    QCoeff r = *this;
    for (auto &t : r.t_)
        t.first += qexp4;
    return r;
}

QCoeff QCoeff::star() const
{
    QCoeff r;
    r.t_.reserve(t_.size());
    for (auto it = t_.rbegin(); it != t_.rend(); ++it)
        r.t_.emplace_back(-it->first, it->second);
    return r;
}

QCoeff QCoeff::operator-() const
{
    QCoeff r = *this;
    for (auto &t : r.t_)
        t.second = -t.second;
    return r;
}

QCoeff &QCoeff::operator+=(const QCoeff &o)
{
    if (o.t_.empty())
        return *this;
    if (t_.empty()) {
        t_ = o.t_;
        return *this;
    }
    // the common case is a single term on both sides
    if (t_.size() == 1 && o.t_.size() == 1 && t_[0].first == o.t_[0].first) {
        t_[0].second += o.t_[0].second;
        if (t_[0].second == 0)
            t_.clear();
        return *this;
    }
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
            out.push_back(t_[i++]);
        } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
            out.push_back(o.t_[j++]);
        } else {
            BigInt s = t_[i].second + o.t_[j].second;
            if (s != 0)
                out.emplace_back(t_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    t_ = std::move(out);
    return *this;
}

QCoeff &QCoeff::operator-=(const QCoeff &o)
{
    return *this += -o;
}

QCoeff operator*(const QCoeff &a, const QCoeff &b)
{
    QCoeff r;
    if (a.t_.empty() || b.t_.empty())
        return r;
    r.t_.reserve(a.t_.size() * b.t_.size());
    for (const auto &x : a.t_)
        for (const auto &y : b.t_)
            r.t_.emplace_back(x.first + y.first, x.second * y.second);
    r.normalize();
    return r;
}

double QCoeff::eval(double q) const
{
    double s = 0;
    for (const auto &t : t_)
        s += t.second.convert_to<double>() * std::pow(q, t.first / 4.0);
    return s;
}

std::complex<double> QCoeff::eval(std::complex<double> q) const
{
    std::complex<double> s = 0;
    for (const auto &t : t_) {
        std::complex<double> p = t.first % 4 == 0 ? std::pow(q, t.first / 4) : std::pow(q, t.first / 4.0);
        s += t.second.convert_to<double>() * p;
    }
    return s;
}

std::string QCoeff::str() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : t_) {
        if (!first)
            os << (t.second < 0 ? " - " : " + ");
        else if (t.second < 0)
            os << "-";
        first = false;
        BigInt a = abs(t.second);
        if (t.first == 0) {
            os << a;
            continue;
        }
        if (a != 1)
            os << a << "*";
        os << "q";
        if (t.first != 4) {
            if (t.first % 4 == 0)
                os << "^" << t.first / 4;
            else if (t.first % 2 == 0)
                os << "^(" << t.first / 2 << "/2)";
            else
                os << "^(" << t.first << "/4)";
        }
    }
    return os.str();
}

Json QCoeff::to_json() const
{
    Json a = Json::array();
    for (const auto &t : t_)
        a.push_back({{"qexp4", t.first}, {"c", t.second.str()}});
    return a;
}

Lattice lattice_add(const Lattice &a, const Lattice &b)
{
    Lattice r(a);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Lattice lattice_sub(const Lattice &a, const Lattice &b)
{
    Lattice r(a);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Lattice lattice_scale(const Lattice &a, int s)
{
    Lattice r(a);
    for (auto &x : r)
        x *= s;
    return r;
}

bool lattice_is_zero(const Lattice &a)
{
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

SkewForm::SkewForm(int n, std::vector<int> pairing4) : n_(n), p_(std::move(pairing4))
{
    if (static_cast<int>(p_.size()) != n * n)
        throw StructuralError("skew form: wrong number of entries");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (at4(a, b) != -at4(b, a))
                throw StructuralError("skew form: pairing is not antisymmetric");
}

std::vector<long> SkewForm::row(const Lattice &l) const
{
    std::vector<long> r(n_, 0);
    for (int a = 0; a < n_; ++a) {
        if (l[a] == 0)
            continue;
        const int *pa = &p_[static_cast<size_t>(a) * n_];
        for (int b = 0; b < n_; ++b)
            r[b] += static_cast<long>(l[a]) * pa[b];
    }
    return r;
}

int SkewForm::pair4_row(const std::vector<long> &row, const Lattice &m) const
{
    long s = 0;
    for (int b = 0; b < n_; ++b)
        s += row[b] * m[b];
    // doubled vectors: 4<l,m> = (l2 . P4 . m2) / 4
    if (s % 4 != 0)
        throw StructuralError("pairing is finer than q^{1/4}");
    return static_cast<int>(s / 4);
}

int SkewForm::pair4(const Lattice &l, const Lattice &m) const
{
    return pair4_row(row(l), m);
}

FormPtr form_of(const TorusElement &a, const TorusElement &b)
{
    const FormPtr &fa = a.form();
    const FormPtr &fb = b.form();
    if (!fa)
        return fb;
    if (!fb || fa == fb)
        return fa;
    if (!(*fa == *fb))
        throw StructuralError("torus elements live on different skew forms");
    return fa;
}

TorusElement TorusElement::constant(FormPtr f, const QCoeff &c)
{
    TorusElement r(f);
    if (!c.is_zero())
        r.terms_.emplace(Lattice(f->dim(), 0), c);
    return r;
}

TorusElement TorusElement::monomial(FormPtr f, Lattice doubled, const QCoeff &c)
{
    if (static_cast<int>(doubled.size()) != f->dim())
        throw StructuralError("monomial: lattice vector has wrong length");
    TorusElement r(f);
    if (!c.is_zero())
        r.terms_.emplace(std::move(doubled), c);
    return r;
}

TorusElement TorusElement::generator(FormPtr f, int index)
{
    if (index < 0 || index >= f->dim())
        throw std::out_of_range("generator index out of range");
    Lattice l(f->dim(), 0);
    l[index] = 2;
    return monomial(std::move(f), std::move(l));
}

int TorusElement::dim() const
{
    return form_ ? form_->dim() : 0;
}

void TorusElement::add_term(const Lattice &l, const QCoeff &c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(l);
    if (it == terms_.end()) {
        terms_.emplace(l, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

TorusElement &TorusElement::operator+=(const TorusElement &o)
{
    form_ = form_of(*this, o);
    for (const auto &[l, c] : o.terms_)
        add_term(l, c);
    return *this;
}

TorusElement &TorusElement::operator-=(const TorusElement &o)
{
    form_ = form_of(*this, o);
    for (const auto &[l, c] : o.terms_)
        add_term(l, -c);
    return *this;
}

TorusElement TorusElement::operator-() const
{
    TorusElement r(form_);
    for (const auto &[l, c] : terms_)
        r.terms_.emplace(l, -c);
    return r;
}

TorusElement operator*(const TorusElement &a, const TorusElement &b)
{
    FormPtr f = form_of(a, b);
    TorusElement r(f);
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    const int n = f->dim();
    Lattice sum(n);
    for (const auto &[la, ca] : a.terms_) {
        std::vector<long> row = f->row(la);
        for (const auto &[lb, cb] : b.terms_) {
            int e = f->pair4_row(row, lb);
            for (int i = 0; i < n; ++i)
                sum[i] = la[i] + lb[i];
            r.add_term(sum, (ca * cb).shifted(e));
        }
    }
    return r;
}

TorusElement operator*(const QCoeff &c, const TorusElement &a)
{
    TorusElement r(a.form_);
    if (c.is_zero())
        return r;
    for (const auto &[l, x] : a.terms_)
        r.add_term(l, c * x);
    return r;
}

TorusElement mul(const TorusElement &a, const TorusElement &b)
{
    return a * b;
}

TorusElement TorusElement::with_form(const FormPtr &f) const
{
    TorusElement r = *this;
    if (!form_) {
        r.form_ = f;
        return r;
    }
    if (form_ != f && !(*form_ == *f))
        throw StructuralError("torus element belongs to a different skew form");
    r.form_ = f;
    return r;
}

Json TorusElement::to_json() const
{
    Json a = Json::array();
    for (const auto &[l, c] : terms_)
        a.push_back({{"exponents", l}, {"coeff", c.to_json()}});
    return a;
}

std::string TorusElement::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[l, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < l.size(); ++i) {
            if (l[i] == 0)
                continue;
            os << "*Z" << i;
            if (l[i] != 2) {
                if (l[i] % 2 == 0)
                    os << "^" << l[i] / 2;
                else
                    os << "^(" << l[i] << "/2)";
            }
        }
    }
    return os.str();
}

TorusElement weyl_order(const FormPtr &f, const std::vector<int> &gens)
{
    if (gens.empty())
        throw std::invalid_argument("weyl_order: empty word");
    Lattice l(f->dim(), 0);
    for (int g : gens) {
        if (g < 0 || g >= f->dim())
            throw std::out_of_range("weyl_order: generator index out of range");
        l[g] += 2;
    }
    return TorusElement::monomial(f, std::move(l));
}

TorusElement star(const TorusElement &a)
{
    TorusElement r(a.form());
    for (const auto &[l, c] : a.terms())
        r.add_term(l, c.star());
    return r;
}

TorusElement invert_monomial(const TorusElement &a)
{
    if (!a.is_monomial())
        throw NotInvertible("only monomials are invertible");
    const auto &[l, c] = *a.terms().begin();
    if (!c.is_unit())
        throw NotInvertible("coefficient is not a unit +-q^{k/4}");
    const auto &t = c.terms()[0];
    // (c Z_l)^{-1} = c^{-1} Z_{-l}, since Z_l Z_{-l} = 1
    return TorusElement::monomial(a.form(), lattice_scale(l, -1), QCoeff::monomial(-t.first, t.second));
}

namespace {

template <class Real>
Real specialize_impl(const TorusElement &a, Real q, const std::vector<Real> &z)
{
    if (a.is_zero())
        return 0;
    if (static_cast<int>(z.size()) != a.dim())
        throw EvaluationError("specialize: wrong number of generator values");
    for (Real v : z)
        if (!(v > 0))
            throw EvaluationError("specialize: generator values must be positive");
    if (!(q > 0))
        throw EvaluationError("specialize: q must be positive");
    using std::exp;
    using std::log;
    std::vector<Real> lz(z.size());
    for (size_t i = 0; i < z.size(); ++i)
        lz[i] = log(z[i]);
    const Real lq = log(q);
    Real s = 0;
    for (const auto &[l, c] : a.terms()) {
        Real e = 0;
        for (size_t i = 0; i < l.size(); ++i)
            if (l[i])
                e += Real(0.5) * l[i] * lz[i];
        for (const auto &[qe, coeff] : c.terms())
            s += static_cast<Real>(coeff) * exp(e + Real(0.25) * qe * lq);
    }
    return s;
}

} // namespace

double specialize(const TorusElement &a, double q, const std::vector<double> &z)
{
    return specialize_impl<double>(a, q, z);
}

long double specialize(const TorusElement &a, long double q, const std::vector<long double> &z)
{
    return specialize_impl<long double>(a, q, z);
}

HighReal specialize(const TorusElement &a, HighReal q, const std::vector<HighReal> &z)
{
    return specialize_impl<HighReal>(a, q, z);
}

std::complex<double> evaluate(const TorusElement &a, std::complex<double> q,
                              const std::vector<std::complex<double>> &z)
{
    if (a.is_zero())
        return 0.0;
    if (static_cast<int>(z.size()) != a.dim())
        throw EvaluationError("evaluate: wrong number of generator values");
    std::complex<double> s = 0;
    for (const auto &[l, c] : a.terms()) {
        std::complex<double> p = 1;
        for (size_t i = 0; i < l.size(); ++i) {
            if (l[i] == 0)
                continue;
            if (l[i] % 2 != 0)
                throw EvaluationError("evaluate: half-integer exponent needs positive values");
            if (z[i] == 0.0 && l[i] < 0)
                throw EvaluationError("evaluate: zero value with negative exponent");
            p *= std::pow(z[i], l[i] / 2);
        }
        s += c.eval(q) * p;
    }
    return s;
}

} // namespace qg
