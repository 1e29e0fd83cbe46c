#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qgroupoid/qtorus.hpp"

namespace qg {

// Matrix over Z[q^{+-1/4}]; entries commute with every torus element.
class ClassicalMatrix {
public:
    ClassicalMatrix() = default;
    ClassicalMatrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols) {}

    static ClassicalMatrix identity(int n);
    static ClassicalMatrix diagonal(const std::vector<QCoeff> &d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    QCoeff &at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
    const QCoeff &at(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

    ClassicalMatrix transpose() const;
    ClassicalMatrix star() const;
    friend ClassicalMatrix operator*(const ClassicalMatrix &a, const ClassicalMatrix &b);
    friend bool operator==(const ClassicalMatrix &a, const ClassicalMatrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<QCoeff> d_;
};

// Matrix over the quantum torus; products keep the written order of factors.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols, FormPtr f);

    static QMatrix from_classical(const ClassicalMatrix &c, FormPtr f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FormPtr &form() const { return form_; }
    TorusElement &at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
    const TorusElement &at(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

    QMatrix transpose() const;
    QMatrix map(const std::function<TorusElement(const TorusElement &)> &f) const;

    friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator*(const ClassicalMatrix &c, const QMatrix &a);
    friend QMatrix operator*(const QMatrix &a, const ClassicalMatrix &c);
    friend QMatrix operator+(const QMatrix &a, const QMatrix &b);
    friend QMatrix operator-(const QMatrix &a, const QMatrix &b);
    friend bool operator==(const QMatrix &a, const QMatrix &b);

    // vertical stack [a; b]
    static QMatrix stack(const QMatrix &a, const QMatrix &b);

    Json to_json() const;

private:
    int rows_ = 0, cols_ = 0;
    FormPtr form_;
    std::vector<TorusElement> d_;
};

// entrywise star followed by transposition
QMatrix dagger(const QMatrix &a);

// Sparse operator on C^{d1} (x) C^{d2} (x) W. Row index (i,k) is stored as
// i*d2 + k, where i belongs to the first tensor leg.
class TensorOperator {
public:
    TensorOperator() = default;
    TensorOperator(int r1, int r2, int c1, int c2, FormPtr f)
        : r1_(r1), r2_(r2), c1_(c1), c2_(c2), form_(std::move(f))
    {
    }

    static TensorOperator classical(const ClassicalMatrix &c, int d1, int d2, FormPtr f);

    int rows() const { return r1_ * r2_; }
    int cols() const { return c1_ * c2_; }
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    int c1() const { return c1_; }
    int c2() const { return c2_; }
    const FormPtr &form() const { return form_; }

    const std::map<std::pair<int, int>, TorusElement> &entries() const { return e_; }
    void add(int row, int col, const TorusElement &x);
    TorusElement get(int row, int col) const;

    friend TensorOperator operator*(const TensorOperator &a, const TensorOperator &b);
    friend bool operator==(const TensorOperator &a, const TensorOperator &b);

    // first (row,col) where the two differ, or (-1,-1)
    static std::pair<int, int> first_difference(const TensorOperator &a, const TensorOperator &b);

private:
    int r1_ = 0, r2_ = 0, c1_ = 0, c2_ = 0;
    FormPtr form_;
    std::map<std::pair<int, int>, TorusElement> e_;
};

// M acting on leg 1 (other leg of dimension d2), or on leg 2 (other leg d1)
TensorOperator sheet(const QMatrix &m, int leg, int other_dim);

} // namespace qg
