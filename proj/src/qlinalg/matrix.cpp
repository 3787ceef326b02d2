#include "sseq/qlinalg.hpp"

#include <sstream>

namespace sseq {

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q)
{
    return q.get_str(10);
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows)
{
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionError("ragged matrix row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_ints(const std::vector<std::vector<long>>& rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionError("ragged matrix row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::select_rows(const std::vector<std::size_t>& idx) const
{
    RatMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(idx[i], j);
    return m;
}

RatMatrix RatMatrix::select_cols(const std::vector<std::size_t>& idx) const
{
    RatMatrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m(i, j) = (*this)(i, idx[j]);
    return m;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionError("block out of range");
    RatMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

void RatMatrix::append_row(std::span<const Rational> r)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = r.size();
    if (r.size() != cols_)
        throw DimensionError("appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

RatMatrix RatMatrix::vstack(const RatMatrix& top, const RatMatrix& bottom)
{
    if (top.rows_ == 0 && top.cols_ != bottom.cols_)
        return bottom.rows_ == 0 ? RatMatrix(0, std::max(top.cols_, bottom.cols_)) : bottom;
    if (bottom.rows_ == 0 && top.cols_ != bottom.cols_)
        return top;
    if (top.cols_ != bottom.cols_)
        throw DimensionError("vstack: column counts differ");
    RatMatrix m(top.rows_ + bottom.rows_, top.cols_);
    m.set_block(0, 0, top);
    m.set_block(top.rows_, 0, bottom);
    return m;
}

RatMatrix RatMatrix::hstack(const RatMatrix& left, const RatMatrix& right)
{
    if (left.rows_ != right.rows_)
        throw DimensionError("hstack: row counts differ");
    RatMatrix m(left.rows_, left.cols_ + right.cols_);
    m.set_block(0, 0, left);
    m.set_block(0, left.cols_, right);
    return m;
}

std::string RatMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << format_rational((*this)(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                             " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0)
                    c(i, j) += x * b(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix sum: shapes differ");
    RatMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] += b.data_[i];
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference: shapes differ");
    RatMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

RatMatrix operator-(const RatMatrix& a)
{
    RatMatrix c = a;
    for (auto& x : c.data_)
        x = -x;
    return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a)
{
    RatMatrix c = a;
    for (auto& x : c.data_)
        x *= s;
    return c;
}

LinearMap::LinearMap(std::size_t source_dim, std::size_t target_dim, RatMatrix matrix)
    : source_(source_dim), target_(target_dim), m_(std::move(matrix))
{
    if (m_.rows() == 0 && m_.cols() == 0)
        m_ = RatMatrix(target_, source_);
    if (m_.rows() != target_ || m_.cols() != source_)
        throw DimensionError("linear map " + std::to_string(source_) + " -> " + std::to_string(target_) +
                             " given a " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) + " matrix");
}

LinearMap::LinearMap(RatMatrix matrix)
    : source_(matrix.cols()), target_(matrix.rows()), m_(std::move(matrix))
{
}

LinearMap LinearMap::zero(std::size_t source_dim, std::size_t target_dim)
{
    return LinearMap(source_dim, target_dim, RatMatrix(target_dim, source_dim));
}

LinearMap LinearMap::identity(std::size_t n)
{
    return LinearMap(n, n, RatMatrix::identity(n));
}

RatMatrix LinearMap::apply_rows(const RatMatrix& v) const
{
    if (v.rows() == 0)
        return RatMatrix(0, target_);
    if (v.cols() != source_)
        throw DimensionError("apply: vector length " + std::to_string(v.cols()) + ", map source " +
                             std::to_string(source_));
    return v * m_.transpose();
}

std::size_t LinearMap::rank() const
{
    return sseq::rank(m_);
}

LinearMap operator+(const LinearMap& a, const LinearMap& b)
{
    return LinearMap(a.source_, a.target_, a.m_ + b.m_);
}

LinearMap operator-(const LinearMap& a, const LinearMap& b)
{
    return LinearMap(a.source_, a.target_, a.m_ - b.m_);
}

LinearMap operator*(const Rational& s, const LinearMap& a)
{
    return LinearMap(a.source_, a.target_, s * a.m_);
}

LinearMap compose(const LinearMap& g, const LinearMap& f)
{
    if (g.source_dim() != f.target_dim())
        throw DimensionError("compose: " + std::to_string(f.target_dim()) + " does not match " +
                             std::to_string(g.source_dim()));
    return LinearMap(f.source_dim(), g.target_dim(), g.matrix() * f.matrix());
}

LinearMap direct_sum(const LinearMap& a, const LinearMap& b)
{
    RatMatrix m(a.target_dim() + b.target_dim(), a.source_dim() + b.source_dim());
    m.set_block(0, 0, a.matrix());
    m.set_block(a.target_dim(), a.source_dim(), b.matrix());
    return LinearMap(std::move(m));
}

}  // namespace sseq
