#pragma once

#include "hjj/linalg.hpp"

#include <vector>

namespace hjj {

/// A k-linear map J^k -> V stored densely on basis tuples.  Cochains use
/// vdim = dim V; scalar forms use vdim = 1.
class Multilinear {
public:
    Multilinear() = default;
    Multilinear(std::size_t degree, std::size_t dim, std::size_t vdim);

    std::size_t degree() const { return degree_; }
    std::size_t dim() const { return dim_; }
    std::size_t vdim() const { return vdim_; }

    Scalar& at(const std::vector<std::size_t>& args, std::size_t component = 0);
    const Scalar& at(const std::vector<std::size_t>& args, std::size_t component = 0) const;
    Vector value(const std::vector<std::size_t>& args) const;
    void set(const std::vector<std::size_t>& args, const Vector& v);
    /// Sets the value at every permutation of `args`.
    void set_symmetric(const std::vector<std::size_t>& args, const Vector& v);
    /// Evaluates on arbitrary elements of J.
    Vector eval(const std::vector<Vector>& xs) const;

    bool is_zero() const;
    bool is_symmetric() const;
    /// Symmetric under swapping the first two arguments.
    bool is_symmetric_in_first_two() const;

    /// All basis tuples in lexicographic order.
    std::vector<std::vector<std::size_t>> tuples() const;
    const std::vector<Scalar>& data() const { return data_; }
    std::vector<Scalar>& data() { return data_; }

    Multilinear& operator+=(const Multilinear& o);
    Multilinear& operator-=(const Multilinear& o);
    friend Multilinear operator+(Multilinear a, const Multilinear& b) { return a += b; }
    friend Multilinear operator-(Multilinear a, const Multilinear& b) { return a -= b; }
    friend Multilinear operator*(const Scalar& s, Multilinear a) {
        for (auto& x : a.data_)
            x *= s;
        return a;
    }
    friend bool operator==(const Multilinear& a, const Multilinear& b) = default;

private:
    std::size_t offset(const std::vector<std::size_t>& args) const;

    std::size_t degree_ = 0;
    std::size_t dim_ = 0;
    std::size_t vdim_ = 0;
    std::vector<Scalar> data_;
};

using Cochain = Multilinear;
using ScalarForm = Multilinear;

inline ScalarForm make_form(std::size_t degree, std::size_t dim) {
    return Multilinear(degree, dim, 1);
}

/// Nondecreasing index tuples of length k over 0..n-1, lexicographic.
std::vector<std::vector<std::size_t>> sorted_tuples(std::size_t n, std::size_t k);

}  // namespace hjj
