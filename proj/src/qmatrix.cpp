#include "qgroupoid/qmatrix.hpp"

#include <stdexcept>

namespace qg {

ClassicalMatrix ClassicalMatrix::identity(int n)
{
    ClassicalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = QCoeff(1);
    return m;
}

ClassicalMatrix ClassicalMatrix::diagonal(const std::vector<QCoeff> &d)
{
    int n = static_cast<int>(d.size());
    ClassicalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = d[i];
    return m;
}

ClassicalMatrix ClassicalMatrix::transpose() const
{
    ClassicalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

ClassicalMatrix ClassicalMatrix::star() const
{
    ClassicalMatrix t(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(i, j) = at(i, j).star();
    return t;
}

ClassicalMatrix operator*(const ClassicalMatrix &a, const ClassicalMatrix &b)
{
    if (a.cols_ != b.rows_)
        throw StructuralError("classical product: shape mismatch");
    ClassicalMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const QCoeff &x = a.at(i, k);
            if (x.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero())
                    r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

QMatrix::QMatrix(int rows, int cols, FormPtr f)
    : rows_(rows), cols_(cols), form_(std::move(f)), d_(static_cast<size_t>(rows) * cols, TorusElement(form_))
{
}

QMatrix QMatrix::from_classical(const ClassicalMatrix &c, FormPtr f)
{
    QMatrix m(c.rows(), c.cols(), f);
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            m.at(i, j) = TorusElement::constant(f, c.at(i, j));
    return m;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_, form_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::map(const std::function<TorusElement(const TorusElement &)> &f) const
{
    QMatrix r = *this;
    for (auto &x : r.d_)
        x = f(x);
    if (!r.d_.empty())
        r.form_ = r.d_[0].form() ? r.d_[0].form() : form_;
    return r;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b)
{
    if (a.cols_ != b.rows_)
        throw StructuralError("matrix product: shape mismatch");
    FormPtr f = a.form_ ? a.form_ : b.form_;
    QMatrix r(a.rows_, b.cols_, f);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const TorusElement &x = a.at(i, k);
            if (x.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j) {
                const TorusElement &y = b.at(k, j);
                if (!y.is_zero())
                    r.at(i, j) += x * y;
            }
        }
    return r;
}

QMatrix operator*(const ClassicalMatrix &c, const QMatrix &a)
{
    if (c.cols() != a.rows_)
        throw StructuralError("classical-quantum product: shape mismatch");
    QMatrix r(c.rows(), a.cols_, a.form_);
    for (int i = 0; i < c.rows(); ++i)
        for (int k = 0; k < c.cols(); ++k) {
            if (c.at(i, k).is_zero())
                continue;
            for (int j = 0; j < a.cols_; ++j)
                if (!a.at(k, j).is_zero())
                    r.at(i, j) += c.at(i, k) * a.at(k, j);
        }
    return r;
}

QMatrix operator*(const QMatrix &a, const ClassicalMatrix &c)
{
    if (a.cols_ != c.rows())
        throw StructuralError("quantum-classical product: shape mismatch");
    QMatrix r(a.rows_, c.cols(), a.form_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (int j = 0; j < c.cols(); ++j)
                if (!c.at(k, j).is_zero())
                    r.at(i, j) += c.at(k, j) * a.at(i, k);
        }
    return r;
}

QMatrix operator+(const QMatrix &a, const QMatrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw StructuralError("matrix sum: shape mismatch");
    QMatrix r = a;
    for (size_t i = 0; i < r.d_.size(); ++i)
        r.d_[i] += b.d_[i];
    return r;
}

QMatrix operator-(const QMatrix &a, const QMatrix &b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw StructuralError("matrix difference: shape mismatch");
    QMatrix r = a;
    for (size_t i = 0; i < r.d_.size(); ++i)
        r.d_[i] -= b.d_[i];
    return r;
}

bool operator==(const QMatrix &a, const QMatrix &b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
}

QMatrix QMatrix::stack(const QMatrix &a, const QMatrix &b)
{
    if (a.cols_ != b.cols_)
        throw StructuralError("stack: column mismatch");
    QMatrix r(a.rows_ + b.rows_, a.cols_, a.form_ ? a.form_ : b.form_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j)
            r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

Json QMatrix::to_json() const
{
    Json rows = Json::array();
    for (int i = 0; i < rows_; ++i) {
        Json row = Json::array();
        for (int j = 0; j < cols_; ++j)
            row.push_back(at(i, j).to_json());
        rows.push_back(row);
    }
    return rows;
}

QMatrix dagger(const QMatrix &a)
{
    return a.transpose().map([](const TorusElement &x) { return star(x); });
}

TensorOperator TensorOperator::classical(const ClassicalMatrix &c, int d1, int d2, FormPtr f)
{
    if (c.rows() != d1 * d2 || c.cols() != d1 * d2)
        throw StructuralError("classical operator: shape mismatch");
    TensorOperator t(d1, d2, d1, d2, f);
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            if (!c.at(i, j).is_zero())
                t.e_[{i, j}] = TorusElement::constant(f, c.at(i, j));
    return t;
}

void TensorOperator::add(int row, int col, const TorusElement &x)
{
    if (x.is_zero())
        return;
    auto it = e_.find({row, col});
    if (it == e_.end()) {
        e_.emplace(std::make_pair(row, col), x);
        return;
    }
    it->second += x;
    if (it->second.is_zero())
        e_.erase(it);
}

TorusElement TensorOperator::get(int row, int col) const
{
    auto it = e_.find({row, col});
    return it == e_.end() ? TorusElement(form_) : it->second;
}

TensorOperator operator*(const TensorOperator &a, const TensorOperator &b)
{
    if (a.c1_ != b.r1_ || a.c2_ != b.r2_)
        throw StructuralError("operator product: leg dimensions do not match");
    TensorOperator r(a.r1_, a.r2_, b.c1_, b.c2_, a.form_ ? a.form_ : b.form_);
    std::vector<std::vector<std::pair<int, const TorusElement *>>> rowsb(b.rows());
    for (const auto &[key, x] : b.e_)
        rowsb[key.first].emplace_back(key.second, &x);
    for (const auto &[key, x] : a.e_)
        for (const auto &[col, y] : rowsb[key.second])
            r.add(key.first, col, x * *y);
    return r;
}

bool operator==(const TensorOperator &a, const TensorOperator &b)
{
    return TensorOperator::first_difference(a, b).first < 0;
}

std::pair<int, int> TensorOperator::first_difference(const TensorOperator &a, const TensorOperator &b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return {0, 0};
    auto ia = a.e_.begin();
    auto ib = b.e_.begin();
    while (ia != a.e_.end() || ib != b.e_.end()) {
        if (ib == b.e_.end() || (ia != a.e_.end() && ia->first < ib->first))
            return ia->first;
        if (ia == a.e_.end() || ib->first < ia->first)
            return ib->first;
        if (!(ia->second == ib->second))
            return ia->first;
        ++ia;
        ++ib;
    }
    return {-1, -1};
}

TensorOperator sheet(const QMatrix &m, int leg, int other_dim)
{
    if (leg == 1) {
        TensorOperator t(m.rows(), other_dim, m.cols(), other_dim, m.form());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m.at(i, j).is_zero())
                    continue;
                for (int k = 0; k < other_dim; ++k)
                    t.add(i * other_dim + k, j * other_dim + k, m.at(i, j));
            }
        return t;
    }
    if (leg == 2) {
        TensorOperator t(other_dim, m.rows(), other_dim, m.cols(), m.form());
        for (int i = 0; i < other_dim; ++i)
            for (int k = 0; k < m.rows(); ++k)
                for (int l = 0; l < m.cols(); ++l)
                    if (!m.at(k, l).is_zero())
                        t.add(i * m.rows() + k, i * m.cols() + l, m.at(k, l));
        return t;
    }
    throw std::invalid_argument("sheet: leg must be 1 or 2");
}

} // namespace qg
