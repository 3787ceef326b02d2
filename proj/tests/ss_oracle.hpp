#pragma once

// Filtered-cohomology dimensions by direct span computations on top of the naive
// elimination in oracle.hpp.

#include "oracle.hpp"
#include "sseq/homalg.hpp"

namespace ss_oracle {

using namespace sseq;

inline oracle::Mat rows_of(const RatMatrix& m)
{
    oracle::Mat out(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

// images of the rows of v under d (row convention: v d^T)
inline oracle::Mat push(const oracle::Mat& v, const LinearMap& d)
{
    return oracle::multiply(v, rows_of(d.matrix().transpose()), d.source_dim(), d.target_dim());
}

inline oracle::Mat step(const FilteredComplex& fc, int p, int n)
{
    return rows_of(fc.step(p, n).basis());
}

// dim F^p H^n = dim(F^p cap Z) - dim(F^p cap B)
inline std::size_t naive_fh(const FilteredComplex& fc, int p, int n)
{
    const CochainComplex& c = fc.total();
    const std::size_t dn = c.dim(n);
    if (dn == 0)
        return 0;
    const LinearMap d = c.d(n);
    oracle::Mat z = oracle::naive_kernel(rows_of(d.matrix()), dn);
    oracle::Mat b;
    if (c.dim(n - 1) > 0)
        b = push(rows_of(RatMatrix::identity(c.dim(n - 1))), c.d(n - 1));
    const oracle::Mat f = step(fc, p, n);
    return oracle::meet_dim(f, z, dn) - oracle::meet_dim(f, b, dn);
}

// dim H^n(F^p / F^{p+1})
inline std::size_t naive_e1(const FilteredComplex& fc, int p, int n)
{
    const CochainComplex& c = fc.total();
    auto quotient_dim = [&](int k) {
        return oracle::span_dim({step(fc, p, k)}, c.dim(k)) - oracle::span_dim({step(fc, p + 1, k)}, c.dim(k));
    };
    auto bar_rank = [&](int k) -> std::size_t {
        if (c.dim(k) == 0 || c.dim(k + 1) == 0)
            return 0;
        oracle::Mat img = push(step(fc, p, k), c.d(k));
        const oracle::Mat next = step(fc, p + 1, k + 1);
        return oracle::span_dim({img, next}, c.dim(k + 1)) - oracle::span_dim({next}, c.dim(k + 1));
    };
    return quotient_dim(n) - bar_rank(n) - bar_rank(n - 1);
}

}  // namespace ss_oracle
